#include <doctest.h>

#include <random>

#include "../fixtures.hpp"
#include "../oracles.hpp"
#include "semi/errors.hpp"
#include "semi/factor.hpp"
#include "semi/structure.hpp"

using namespace semi;

namespace {

std::vector<ElementSet> products(const std::vector<Factorization>& list) {
  std::vector<ElementSet> out;
  for (const auto& f : list) out.push_back(f.product);
  return out;
}

}  // namespace

TEST_CASE("rectangular bands through 0 in RB4") {
  const auto rb4 = fixtures::rb4();
  const auto list = enumerate_rect_bands(rb4, 0);
  REQUIRE(list.size() == 4);
  CHECK(products(list) ==
        std::vector<ElementSet>{ElementSet(4, {0}), ElementSet(4, {0, 1}),
                                ElementSet(4, {0, 2}), rb4.all()});
  CHECK(list.back().left == ElementSet(4, {0, 2}));
  CHECK(list.back().right == ElementSet(4, {0, 1}));

  const auto f = rect_band_factorize(rb4, rb4.all(), 0);
  CHECK(f.left == ElementSet(4, {0, 2}));
  CHECK(f.right == ElementSet(4, {0, 1}));
}

TEST_CASE("rectangular bands in L2 and C2") {
  const auto l2 = fixtures::l2();
  const auto list = enumerate_rect_bands(l2, 0);
  REQUIRE(list.size() == 2);
  CHECK(list[0].left == ElementSet(2, {0}));
  CHECK(list[0].right == ElementSet(2, {0}));
  CHECK(list[1].left == l2.all());
  CHECK(list[1].right == ElementSet(2, {0}));
  CHECK(enumerate_rect_bands(fixtures::c2(), 0).size() == 1);
}

TEST_CASE("right subgroups") {
  CHECK(products(enumerate_right_subgroups(fixtures::c2(), 0)) ==
        std::vector<ElementSet>{ElementSet(2, {0}), ElementSet(2, {0, 1})});
  CHECK(products(enumerate_right_subgroups(fixtures::l2(), 0)) ==
        std::vector<ElementSet>{ElementSet(2, {0})});
  const auto rg4 = fixtures::rg4();
  CHECK(products(enumerate_right_subgroups(rg4, 0)) ==
        std::vector<ElementSet>{ElementSet(4, {0}), ElementSet(4, {0, 1}),
                                ElementSet(4, {0, 2}), rg4.all()});
  CHECK(max_right_subgroup(rg4, 0) == rg4.all());
  const auto f = right_group_factorize(rg4, rg4.all(), 0);
  CHECK(f.left == ElementSet(4, {0, 2}));
  CHECK(f.right == ElementSet(4, {0, 1}));
}

TEST_CASE("overlap criteria") {
  const auto rb4 = fixtures::rb4();
  CHECK(overlap_criterion_rg(rb4, 0, 1));
  CHECK_FALSE(overlap_criterion_rg(rb4, 0, 2));
  CHECK(overlap_criterion_lz(rb4, 0, 2));
  CHECK_THROWS_AS(overlap_criterion_rg(fixtures::c2(), 0, 1), NotIdempotentError);
}

TEST_CASE("factorize rejects bad input") {
  const auto rb4 = fixtures::rb4();
  CHECK_THROWS_AS(rect_band_factorize(rb4, ElementSet(4, {1, 2}), 1), DomainError);
  CHECK_THROWS_AS(rect_band_factorize(rb4, ElementSet(4, {0, 1}), 2), DomainError);
  CHECK_THROWS_AS(right_group_factorize(fixtures::rg4(), ElementSet(4, {0, 3}), 0),
                  DomainError);
}

TEST_CASE("budget") {
  FactorLimits tight;
  tight.max_pairs = 2;
  CHECK_THROWS_AS(enumerate_rect_bands(fixtures::rb4(), 0, tight), BudgetExceeded);
}

// Enumerated rectangular bands and right subgroups are exactly those found
// by subset scan, and each scan hit has exactly one admissible pair.
TEST_CASE("property: enumeration matches subset scan") {
  std::mt19937_64 rng(37);
  for (int round = 0; round < 120; ++round) {
    const auto t = oracle::random_semigroup(rng, 12);
    const int n = oracle::order(t);
    const auto table = oracle::to_table(t);
    for (int e : oracle::idempotents(t)) {
      std::vector<oracle::Mask> rect, right;
      for (oracle::Mask m = 1; m <= oracle::full(n); ++m) {
        if (!oracle::has(m, e)) continue;
        if (oracle::rect_band_sub(t, m)) rect.push_back(m);
        if (oracle::right_group_sub(t, m)) right.push_back(m);
      }
      std::vector<oracle::Mask> got_rect, got_right;
      for (const auto& f : enumerate_rect_bands(table, static_cast<Element>(e))) {
        got_rect.push_back(oracle::to_mask(f.product));
      }
      for (const auto& f : enumerate_right_subgroups(table, static_cast<Element>(e))) {
        got_right.push_back(oracle::to_mask(f.product));
      }
      std::sort(got_rect.begin(), got_rect.end());
      std::sort(got_right.begin(), got_right.end());
      CHECK(got_rect == rect);
      CHECK(got_right == right);
    }
  }
}
