#include "semi/cli/table_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace semi::cli {

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto body = text.substr(pos, end - pos);
    const auto first = body.find_first_not_of(" \t\r\f\v");
    if (first != std::string_view::npos && body[first] != '#') {
      std::size_t i = first;
      while (i < body.size()) {
        if (std::isspace(static_cast<unsigned char>(body[i]))) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < body.size() && !std::isspace(static_cast<unsigned char>(body[j]))) {
          ++j;
        }
        out.push_back({body.substr(i, j - i), line, i + 1});
        i = j;
      }
    }
    pos = end + 1;
    ++line;
  }
  return out;
}

std::string where(const std::string& source, std::size_t line, std::size_t column) {
  if (line == 0) return source;
  return source + ":" + std::to_string(line) + ":" + std::to_string(column);
}

// Decimal integer with optional leading '-'. Returns false when the token is
// not of that shape; `overflow` reports values beyond 64 bits.
bool read_integer(std::string_view s, long long& value, bool& overflow) {
  overflow = false;
  if (s.empty()) return false;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (*begin == '+') return false;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ptr != end) return false;
  if (ec == std::errc::result_out_of_range) {
    overflow = true;
    return true;
  }
  return ec == std::errc();
}

}  // namespace

std::string_view parse_error_name(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Io:
      return "io";
    case ParseErrorKind::MissingOrder:
      return "missing order";
    case ParseErrorKind::MalformedToken:
      return "malformed token";
    case ParseErrorKind::ZeroOrder:
      return "zero order";
    case ParseErrorKind::OrderTooLarge:
      return "order too large";
    case ParseErrorKind::WrongCount:
      return "wrong count";
    case ParseErrorKind::OutOfRange:
      return "out of range";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::string source, std::size_t line,
                       std::size_t column, const std::string& message)
    : Error(where(source, line, column) + ": " + message),
      kind_(kind),
      source_(std::move(source)),
      line_(line),
      column_(column) {}

CayleyTable parse_table(std::string_view text, const std::string& source) {
  const auto tokens = tokenize(text);
  if (tokens.empty()) {
    throw ParseError(ParseErrorKind::MissingOrder, source, 0, 0,
                     "no table order found");
  }

  long long value = 0;
  bool overflow = false;
  const auto& head = tokens.front();
  if (!read_integer(head.text, value, overflow) || head.text.front() == '-') {
    throw ParseError(ParseErrorKind::MalformedToken, source, head.line, head.column,
                     "expected a table order, got '" + std::string(head.text) + "'");
  }
  if (!overflow && value == 0) {
    throw ParseError(ParseErrorKind::ZeroOrder, source, head.line, head.column,
                     "table order must be positive");
  }
  if (overflow || value > static_cast<long long>(kMaxOrder)) {
    throw ParseError(ParseErrorKind::OrderTooLarge, source, head.line, head.column,
                     "table order " + std::string(head.text) + " exceeds " +
                         std::to_string(kMaxOrder));
  }
  const auto n = static_cast<std::size_t>(value);
  const std::size_t expected = n * n;
  const std::size_t found = tokens.size() - 1;

  std::vector<Element> entries;
  entries.reserve(expected);
  for (std::size_t k = 0; k < std::min(found, expected); ++k) {
    const auto& tok = tokens[k + 1];
    if (!read_integer(tok.text, value, overflow)) {
      throw ParseError(ParseErrorKind::MalformedToken, source, tok.line, tok.column,
                       "expected an integer entry, got '" + std::string(tok.text) + "'");
    }
    if (overflow || value < 0 || value >= static_cast<long long>(n)) {
      throw ParseError(ParseErrorKind::OutOfRange, source, tok.line, tok.column,
                       "entry " + std::string(tok.text) + " at row " +
                           std::to_string(k / n) + ", col " + std::to_string(k % n) +
                           " is outside [0, " + std::to_string(n) + ")");
    }
    entries.push_back(static_cast<Element>(value));
  }
  if (found != expected) {
    const bool extra = found > expected;
    const auto& tok = extra ? tokens[expected + 1] : tokens.back();
    throw ParseError(ParseErrorKind::WrongCount, source,
                     extra ? tok.line : 0, extra ? tok.column : 0,
                     "expected " + std::to_string(expected) + " entries for order " +
                         std::to_string(n) + ", found " + std::to_string(found));
  }
  return CayleyTable::make(n, std::move(entries));
}

CayleyTable parse_table_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(ParseErrorKind::Io, path.string(), 0, 0, "cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw ParseError(ParseErrorKind::Io, path.string(), 0, 0, "read failed");
  }
  return parse_table(buffer.str(), path.string());
}

}  // namespace semi::cli
