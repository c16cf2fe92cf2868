#include <doctest.h>

#include <random>

#include "../fixtures.hpp"
#include "../oracles.hpp"
#include "semi/errors.hpp"
#include "semi/kernels.hpp"

using namespace semi;

TEST_CASE("construction rejects bad shapes") {
  CHECK_THROWS_AS(CayleyTable::make(0, {}), DomainError);
  CHECK_THROWS_AS(CayleyTable::make(2, {0, 0, 0}), DomainError);
  CHECK_THROWS_WITH_AS(CayleyTable::make(2, {0, 2, 1, 1}),
                       "entry 2 at row 0, col 1 is outside [0, 2)", DomainError);
}

TEST_CASE("associativity status and witness") {
  CHECK(fixtures::l2().is_semigroup());
  CHECK(fixtures::rg4().is_semigroup());
  const auto bad = CayleyTable::from_rows({{1, 0}, {0, 0}});
  CHECK(bad.associativity() == AssocStatus::Invalid);
  REQUIRE(bad.witness());
  CHECK(*bad.witness() == AssocWitness{0, 0, 1});
  CHECK_THROWS_AS(bad.require_semigroup("test"), PreconditionError);
  const auto u = CayleyTable::unchecked(2, {0, 0, 1, 1});
  CHECK(u.associativity() == AssocStatus::Unchecked);
  CHECK_THROWS_AS(u.require_semigroup("test"), PreconditionError);
}

TEST_CASE("opposite") {
  const auto op = fixtures::l2().opposite();
  CHECK(op == fixtures::r2());
  CHECK(op.is_semigroup());
  CHECK(fixtures::rb4().opposite().opposite() == fixtures::rb4());
}

TEST_CASE("product_sets and closure") {
  const auto rb4 = fixtures::rb4();
  CHECK(product_sets(rb4, ElementSet(4, {0, 2}), ElementSet(4, {0, 1})) ==
        rb4.all());
  const auto c2 = fixtures::c2();
  CHECK(closure(c2, ElementSet(2, {1})) == c2.all());
  CHECK(closure(rb4, ElementSet(4, {1, 2})) == rb4.all());
  CHECK(closure(rb4, ElementSet(4, {0})) == ElementSet(4, {0}));
  CHECK_THROWS_AS(closure(rb4, ElementSet(4)), EmptySetError);
  CHECK_THROWS_AS(product_sets(rb4, ElementSet(3, {0}), ElementSet(4, {0})),
                  UniverseMismatch);
}

TEST_CASE("induced subtable") {
  const auto rg4 = fixtures::rg4();
  const auto h = induced_subtable(rg4, ElementSet(4, {0, 2}));
  REQUIRE(h);
  CHECK(h->table == fixtures::c2());
  CHECK(h->members == std::vector<Element>{0, 2});
  CHECK_FALSE(induced_subtable(rg4, ElementSet(4, {1, 2})));
}

// validate_associativity agrees with the naive triple loop, witness
// included, under both kernel variants.
TEST_CASE("property: associativity matches naive oracle") {
  std::mt19937_64 rng(3);
  const auto before = kernels::active().isa;
  std::vector<kernels::Isa> isas{kernels::Isa::Scalar};
  if (kernels::avx2_kernels() && kernels::cpu_supports(kernels::Isa::Avx2)) {
    isas.push_back(kernels::Isa::Avx2);
  }
  for (auto isa : isas) {
    kernels::force_isa(isa);
    for (int round = 0; round < 400; ++round) {
      oracle::Table t;
      if (round % 2) {
        t = oracle::random_semigroup(rng, 30);
        // Occasionally break one cell.
        if (round % 4 == 1) {
          const int n = oracle::order(t);
          t[rng() % n][rng() % n] = static_cast<int>(rng() % n);
        }
      } else {
        t = oracle::random_magma(1 + static_cast<int>(rng() % 6), rng);
      }
      const auto table = oracle::to_table(t);
      const auto expected = oracle::assoc_witness(t);
      CHECK(table.is_semigroup() == !expected.has_value());
      if (expected) {
        REQUIRE(table.witness());
        const auto [i, j, k] = *expected;
        CHECK(*table.witness() == AssocWitness{static_cast<Element>(i),
                                               static_cast<Element>(j),
                                               static_cast<Element>(k)});
      }
    }
  }
  kernels::force_isa(before);
}

TEST_CASE("property: closure matches fixed-point oracle") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    const auto t = oracle::random_semigroup(rng, 20);
    const int n = oracle::order(t);
    const auto table = oracle::to_table(t);
    oracle::Mask a = 0;
    while (a == 0) a = rng() & oracle::full(n);
    const auto c = closure(table, oracle::from_mask(n, a));
    CHECK(oracle::to_mask(c) == oracle::closure(t, a));
    CHECK(closure(table, c) == c);
  }
}
