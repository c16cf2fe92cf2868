#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "semi/cayley_table.hpp"

namespace semi {

struct Violation {
  std::string table;    // compact rows, e.g. "[[0,0],[1,1]]"
  std::string theorem;  // claim identifier
  std::string witness;

  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct FirstRowCount {
  std::vector<Element> row;
  std::uint64_t count = 0;
};

struct EnumerationReport {
  std::size_t order = 0;
  std::uint64_t labeled_count = 0;
  // Search nodes examined, partial tables included; >= labeled_count.
  std::uint64_t tables_visited = 0;
  std::vector<Violation> violations;
  std::vector<FirstRowCount> first_rows;  // sorted by row
  std::chrono::duration<double> elapsed{};
};

// Called once per associative table. Appends any findings to `violations`.
// With jobs > 1 it runs concurrently on several threads.
using Visitor =
    std::function<void(const CayleyTable& table, std::vector<Violation>& violations)>;

struct EnumerationOptions {
  // Order 5 (183732 tables) is refused unless set.
  bool allow_long = false;
  unsigned jobs = 1;
  // Invoked (serialised) as each first-row class completes.
  std::function<void(const FirstRowCount&)> on_first_row;
};

inline constexpr std::size_t kMaxEnumerationOrder = 5;

// Visits every associative table on {0..n-1} exactly once, filling cells in
// row-major order and rejecting a partial table as soon as a fully
// determined triple fails to associate. Single-threaded runs visit tables in
// lexicographic order. Throws DomainError for n outside [1, 5] (or n = 5
// without allow_long).
EnumerationReport enumerate_semigroups(std::size_t n, const Visitor& visitor,
                                       const EnumerationOptions& options = {});

// "[[0,1],[1,0]]"
std::string compact_table(const CayleyTable& t);

}  // namespace semi
