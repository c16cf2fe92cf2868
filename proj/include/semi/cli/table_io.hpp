#pragma once

// Text format for Cayley tables:
//
//   # comment lines start with '#'
//   2
//   0 1
//   1 0
//
// The first token is the order n, followed by exactly n*n entries in
// [0, n), row-major. Line breaks inside the table are not significant.
// Indices are 0-based.

#include <filesystem>
#include <string>
#include <string_view>

#include "semi/cayley_table.hpp"
#include "semi/errors.hpp"

namespace semi::cli {

enum class ParseErrorKind {
  Io,
  MissingOrder,
  MalformedToken,
  ZeroOrder,
  OrderTooLarge,
  WrongCount,
  OutOfRange,
};

std::string_view parse_error_name(ParseErrorKind kind);

class ParseError : public Error {
 public:
  // line and column are 1-based positions in the text; 0 when there is no
  // sensible position (I/O failure, missing entries at end of input).
  ParseError(ParseErrorKind kind, std::string source, std::size_t line,
             std::size_t column, const std::string& message);

  ParseErrorKind kind() const { return kind_; }
  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ParseErrorKind kind_;
  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

// The returned table has had associativity validated; a non-associative
// table parses successfully and reports AssocStatus::Invalid.
CayleyTable parse_table(std::string_view text,
                        const std::string& source = "<input>");
CayleyTable parse_table_file(const std::filesystem::path& path);

}  // namespace semi::cli
