#include <doctest.h>

#include <random>

#include "../fixtures.hpp"
#include "../oracles.hpp"
#include "semi/errors.hpp"
#include "semi/theorems.hpp"

using namespace semi;

TEST_CASE("fixtures have no violations") {
  for (const auto& t : {fixtures::l2(), fixtures::r2(), fixtures::c2(), fixtures::rb4(),
                        fixtures::rg4(), fixtures::semilattice2()}) {
    CHECK(check_all_theorems(t).empty());
  }
}

TEST_CASE("claim ids are unique") {
  auto ids = theorem_ids();
  CHECK(ids.size() >= 15);
  std::sort(ids.begin(), ids.end());
  CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
}

TEST_CASE("non-associative input is refused") {
  CHECK_THROWS_AS(check_all_theorems(CayleyTable::from_rows({{1, 0}, {0, 0}})),
                  PreconditionError);
}

// Larger random semigroups, where the subset scans are partly switched off.
TEST_CASE("property: no violations on random semigroups") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 60; ++round) {
    const auto t = oracle::to_table(oracle::random_semigroup(rng, 27));
    const auto violations = check_all_theorems(t);
    for (const auto& v : violations) {
      FAIL_CHECK(v.theorem << " on " << v.table << ": " << v.witness);
    }
  }
}
