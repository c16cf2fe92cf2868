#pragma once

// Product decompositions of subsemigroups through an idempotent e:
//
//   rectangular band  T = T_L T_R   e in T_L <= LZ(e), e in T_R <= RZ(e),
//                                   T_R T_L = {e}
//   right group       T = H' RZ'    H' a subgroup of H(e), e in RZ' <= RZ(e)
//   left group        T = LZ' H'    e in LZ' <= LZ(e), H' a subgroup of H(e)
//
// In each case the pair of factors is unique. RG(e) = H(e) RZ(e) and
// LG(e) = LZ(e) H(e) are the maximum right and left subgroups through e.

#include <cstdint>
#include <string_view>
#include <vector>

#include "semi/cayley_table.hpp"

namespace semi {

enum class FactorizationKind { RectBand, RightGroup, LeftGroup };

std::string_view kind_name(FactorizationKind kind);

struct Factorization {
  FactorizationKind kind = FactorizationKind::RectBand;
  ElementSet left;
  ElementSet right;
  ElementSet product;  // product_sets(left, right)
  Element anchor = 0;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct FactorLimits {
  // Candidate (left, right) pairs an enumeration may examine.
  std::uint64_t max_pairs = std::uint64_t{1} << 20;
  // Largest H(e) whose subgroups are enumerated by subset scan.
  std::size_t max_group_order = 16;
};

// T must contain e and induce a rectangular band (DomainError otherwise).
// Returns (Te, eT) after checking every defining property.
Factorization rect_band_factorize(const CayleyTable& t, const ElementSet& subset,
                                  Element e);
// T must contain e and induce a right (left) group. Returns
// (T & H(e), T & RZ(e)), resp. (T & LZ(e), T & H(e)).
Factorization right_group_factorize(const CayleyTable& t,
                                    const ElementSet& subset, Element e);
Factorization left_group_factorize(const CayleyTable& t,
                                   const ElementSet& subset, Element e);

// Every rectangular band subsemigroup through e, one per admissible pair,
// sorted by (|product|, product members).
std::vector<Factorization> enumerate_rect_bands(const CayleyTable& t, Element e,
                                                const FactorLimits& limits = {});

ElementSet max_right_subgroup(const CayleyTable& t, Element e);
ElementSet max_left_subgroup(const CayleyTable& t, Element e);

// Subgroups of H(e), ascending by (size, members). Each contains e.
std::vector<ElementSet> subgroups_of_max_subgroup(const CayleyTable& t,
                                                  Element e,
                                                  const FactorLimits& limits = {});

std::vector<Factorization> enumerate_right_subgroups(
    const CayleyTable& t, Element e, const FactorLimits& limits = {});
std::vector<Factorization> enumerate_left_subgroups(
    const CayleyTable& t, Element e, const FactorLimits& limits = {});

// ef = f and fe = e: RG(e), RG(f) meet iff RZ(e) = RZ(f) iff RG(e) = RG(f).
bool overlap_criterion_rg(const CayleyTable& t, Element e, Element f);
// ef = e and fe = f: the LZ / LG counterpart.
bool overlap_criterion_lz(const CayleyTable& t, Element e, Element f);

// Sorts by (|product|, product members).
void sort_factorizations(std::vector<Factorization>& list);

}  // namespace semi
