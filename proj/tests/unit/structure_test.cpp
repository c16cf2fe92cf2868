#include <doctest.h>

#include <random>

#include "../fixtures.hpp"
#include "../oracles.hpp"
#include "semi/errors.hpp"
#include "semi/set_ops.hpp"
#include "semi/structure.hpp"

using namespace semi;

TEST_CASE("RB4 profile of 0") {
  const auto rb4 = fixtures::rb4();
  const auto p = idempotent_profile(rb4, 0);
  CHECK(p.lz == ElementSet(4, {0, 2}));
  CHECK(p.rz == ElementSet(4, {0, 1}));
  CHECK(p.local_monoid == ElementSet(4, {0}));
  CHECK(p.h == ElementSet(4, {0}));
  CHECK(p.rg == ElementSet(4, {0, 1}));
  CHECK(p.lg == ElementSet(4, {0, 2}));
  CHECK(p.left_monoid == ElementSet(4, {0, 2}));
  CHECK(p.right_monoid == ElementSet(4, {0, 1}));
}

TEST_CASE("RG4 profile of 0") {
  const auto rg4 = fixtures::rg4();
  CHECK(idempotents(rg4) == ElementSet(4, {0, 1}));
  const auto p = idempotent_profile(rg4, 0);
  CHECK(p.local_monoid == ElementSet(4, {0, 2}));
  CHECK(p.h == ElementSet(4, {0, 2}));
  CHECK(p.rz == ElementSet(4, {0, 1}));
  CHECK(p.lz == ElementSet(4, {0}));
  CHECK(p.rg == rg4.all());
  CHECK(p.lg == ElementSet(4, {0, 2}));
}

TEST_CASE("semilattice zero-maximal subsemigroup") {
  const auto sl = fixtures::semilattice2();
  CHECK(zero_maximal_subsemigroup(sl, 0) == sl.all());
  CHECK(zero_maximal_subsemigroup(sl, 1) == ElementSet(2, {1}));
}

TEST_CASE("partitions") {
  const auto rb4 = fixtures::rb4();
  const auto lz = lz_partition(rb4);
  CHECK(lz.classes == std::vector<ElementSet>{ElementSet(4, {0, 2}), ElementSet(4, {1, 3})});
  CHECK_FALSE(lz.non_idempotent_class);
  CHECK(rz_partition(rb4).classes ==
        std::vector<ElementSet>{ElementSet(4, {0, 1}), ElementSet(4, {2, 3})});

  const auto l2 = fixtures::l2();
  CHECK(lz_partition(l2).classes == std::vector<ElementSet>{l2.all()});
  CHECK(rz_partition(l2).classes ==
        std::vector<ElementSet>{ElementSet(2, {0}), ElementSet(2, {1})});

  const auto c2 = lz_partition(fixtures::c2());
  CHECK(c2.classes == std::vector<ElementSet>{ElementSet(2, {0}), ElementSet(2, {1})});
  CHECK(c2.non_idempotent_class == 1);
}

TEST_CASE("preconditions") {
  const auto c2 = fixtures::c2();
  CHECK_THROWS_AS(max_left_zero(c2, 1), NotIdempotentError);
  const auto bad = CayleyTable::from_rows({{1, 0}, {0, 0}});
  CHECK_THROWS_AS(max_left_zero(bad, 0), PreconditionError);
  CHECK_THROWS_AS(max_left_zero(c2, 7), Error);
}

// Every profile field against an independent brute-force computation.
TEST_CASE("property: profile matches brute force") {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 150; ++round) {
    const auto t = oracle::random_semigroup(rng, 10);
    const int n = oracle::order(t);
    const auto table = oracle::to_table(t);
    for (int e : oracle::idempotents(t)) {
      const auto single = oracle::Mask{1} << e;
      const auto p = idempotent_profile(table, static_cast<Element>(e));
      CHECK(oracle::to_mask(p.lz) == (oracle::ridentity(t, single) & oracle::lzero(t, single)));
      CHECK(oracle::to_mask(p.rz) == (oracle::lidentity(t, single) & oracle::rzero(t, single)));
      CHECK(oracle::to_mask(p.local_monoid) ==
            oracle::product(t, oracle::product(t, single, oracle::full(n)), single));
      CHECK(oracle::to_mask(p.left_monoid) == oracle::product(t, oracle::full(n), single));
      CHECK(oracle::to_mask(p.right_monoid) == oracle::product(t, single, oracle::full(n)));

      const auto groups = oracle::maximal_through(
          t, e, [&](oracle::Mask m) { return oracle::group_sub(t, m); });
      REQUIRE(groups.size() == 1);
      CHECK(oracle::to_mask(p.h) == groups.front());
      const auto rgs = oracle::maximal_through(
          t, e, [&](oracle::Mask m) { return oracle::right_group_sub(t, m); });
      REQUIRE(rgs.size() == 1);
      CHECK(oracle::to_mask(p.rg) == rgs.front());
      const auto lgs = oracle::maximal_through(
          t, e, [&](oracle::Mask m) { return oracle::left_group_sub(t, m); });
      REQUIRE(lgs.size() == 1);
      CHECK(oracle::to_mask(p.lg) == lgs.front());
    }
  }
}

// Relabelling the table relabels every structure accordingly, and the
// opposite semigroup swaps left and right.
TEST_CASE("property: relabelling and opposite") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 150; ++round) {
    const auto t = oracle::random_semigroup(rng, 14);
    const int n = oracle::order(t);
    const auto perm = oracle::random_permutation(n, rng);
    const auto table = oracle::to_table(t);
    const auto moved = oracle::to_table(oracle::relabel(t, perm));
    const auto op = table.opposite();
    auto image = [&](const ElementSet& s) {
      ElementSet out(n);
      for (auto x : s) out.insert(perm[x]);
      return out;
    };
    for (auto e : idempotents(table)) {
      const auto p = idempotent_profile(table, e);
      const auto q = idempotent_profile(moved, static_cast<Element>(perm[e]));
      CHECK(image(p.lz) == q.lz);
      CHECK(image(p.rz) == q.rz);
      CHECK(image(p.h) == q.h);
      CHECK(image(p.rg) == q.rg);
      CHECK(image(p.zero_maximal) == q.zero_maximal);
      const auto o = idempotent_profile(op, e);
      CHECK(o.lz == p.rz);
      CHECK(o.rz == p.lz);
      CHECK(o.rg == p.lg);
      CHECK(o.h == p.h);
      CHECK(o.local_monoid == p.local_monoid);
    }
    CHECK(lz_partition(op).classes == rz_partition(table).classes);
  }
}
