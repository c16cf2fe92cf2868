#pragma once

// Whole-table predicates. Everything except rectangular_band_forms()
// requires an associative table and throws PreconditionError otherwise.

#include <optional>

#include "semi/cayley_table.hpp"

namespace semi {

// Nonempty and closed under the product.
bool is_subsemigroup(const CayleyTable& t, const ElementSet& a);

bool is_band(const CayleyTable& t);
bool is_left_zero(const CayleyTable& t);   // ab = a
bool is_right_zero(const CayleyTable& t);  // ab = b

// aba = a for all a, b. Cross-checked against both one-sided set forms;
// a disagreement throws InconsistencyError.
bool is_rectangular_band(const CayleyTable& t);

// Each characterisation of rectangular bands evaluated on its own.
struct RectangularBandForms {
  bool absorbing = false;        // (ab)a = a for all a, b
  bool band_left_swap = false;   // band, and ab = b iff ba = a
  bool band_right_swap = false;  // band, and ab = a iff ba = b
  // Every a has lidentity(a) = rzero(a) != {} (resp. ridentity/lzero).
  // Only evaluated on semigroups.
  std::optional<bool> lidentity_is_rzero;
  std::optional<bool> ridentity_is_lzero;

  bool all_agree() const;
};
// Total on any table; the element-wise forms read a*b*a as (a*b)*a.
RectangularBandForms rectangular_band_forms(const CayleyTable& t);

bool is_left_cancellative(const CayleyTable& t);   // every row injective
bool is_right_cancellative(const CayleyTable& t);  // every column injective
bool is_right_simple(const CayleyTable& t);        // aS = S for every a
bool is_left_simple(const CayleyTable& t);         // Sa = S for every a
bool is_right_group(const CayleyTable& t);
bool is_left_group(const CayleyTable& t);
bool is_group(const CayleyTable& t);

// Same predicates on the subtable induced by `subset`; false when the
// subset is empty or not closed.
bool induces_left_zero(const CayleyTable& t, const ElementSet& subset);
bool induces_right_zero(const CayleyTable& t, const ElementSet& subset);
bool induces_rectangular_band(const CayleyTable& t, const ElementSet& subset);
bool induces_group(const CayleyTable& t, const ElementSet& subset);
bool induces_right_group(const CayleyTable& t, const ElementSet& subset);
bool induces_left_group(const CayleyTable& t, const ElementSet& subset);

}  // namespace semi
