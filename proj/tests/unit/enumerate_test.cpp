#include <doctest.h>

#include <set>

#include "../oracles.hpp"
#include "semi/enumerate.hpp"
#include "semi/errors.hpp"

using namespace semi;

TEST_CASE("small orders match the naive scan table for table") {
  for (int n = 1; n <= 3; ++n) {
    std::set<oracle::Table> expected;
    for (const auto& t : oracle::all_semigroups_naive(n)) expected.insert(t);
    std::set<oracle::Table> found;
    const auto report = enumerate_semigroups(
        n, [&](const CayleyTable& t, std::vector<Violation>&) {
          CHECK(t.is_semigroup());
          found.insert(oracle::from_table(t));
        });
    CHECK(found == expected);
    CHECK(report.labeled_count == expected.size());
    CHECK(report.tables_visited >= report.labeled_count);
  }
}

TEST_CASE("order 4 count and table validity") {
  std::uint64_t checked = 0;
  const auto report = enumerate_semigroups(4, [&](const CayleyTable& t, auto&) {
    if (oracle::associative(oracle::from_table(t))) ++checked;
  });
  CHECK(report.labeled_count == 3492);
  CHECK(checked == 3492);
  std::uint64_t sum = 0;
  for (const auto& c : report.first_rows) sum += c.count;
  CHECK(sum == 3492);
}

TEST_CASE("parallel runs agree with serial") {
  const auto serial = enumerate_semigroups(4, nullptr);
  EnumerationOptions options;
  options.jobs = 3;
  const auto parallel = enumerate_semigroups(4, nullptr, options);
  CHECK(parallel.labeled_count == serial.labeled_count);
  CHECK(parallel.tables_visited == serial.tables_visited);
  REQUIRE(parallel.first_rows.size() == serial.first_rows.size());
  for (std::size_t i = 0; i < serial.first_rows.size(); ++i) {
    CHECK(parallel.first_rows[i].row == serial.first_rows[i].row);
    CHECK(parallel.first_rows[i].count == serial.first_rows[i].count);
  }
}

TEST_CASE("first-row progress callback") {
  std::uint64_t total = 0;
  EnumerationOptions options;
  options.on_first_row = [&](const FirstRowCount& c) { total += c.count; };
  enumerate_semigroups(3, nullptr, options);
  CHECK(total == 113);
}

TEST_CASE("order limits") {
  CHECK_THROWS_AS(enumerate_semigroups(0, nullptr), DomainError);
  CHECK_THROWS_AS(enumerate_semigroups(5, nullptr), DomainError);
  CHECK_THROWS_AS(enumerate_semigroups(6, nullptr, {.allow_long = true}), DomainError);
}

TEST_CASE("compact_table") {
  CHECK(compact_table(CayleyTable::from_rows({{0, 1}, {1, 0}})) == "[[0,1],[1,0]]");
}
