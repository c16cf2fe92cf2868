#pragma once

// One-sided identity and zero sets of a nonempty subset A of a magma S:
//
//   left_identity_set(A)  = { b : b*a = a for all a in A }
//   right_identity_set(A) = { b : a*b = a for all a in A }
//   left_zero_set(A)      = { b : b*a = b for all a in A }
//   right_zero_set(A)     = { b : a*b = b for all a in A }
//
// Defined for any binary operation; no associativity is required. An empty
// A is rejected with EmptySetError (it would vacuously give all of S).

#include "semi/cayley_table.hpp"
#include "semi/element_set.hpp"

namespace semi {

ElementSet left_identity_set(const CayleyTable& t, const ElementSet& a);
ElementSet right_identity_set(const CayleyTable& t, const ElementSet& a);
ElementSet left_zero_set(const CayleyTable& t, const ElementSet& a);
ElementSet right_zero_set(const CayleyTable& t, const ElementSet& a);

ElementSet left_identity_set(const CayleyTable& t, Element a);
ElementSet right_identity_set(const CayleyTable& t, Element a);
ElementSet left_zero_set(const CayleyTable& t, Element a);
ElementSet right_zero_set(const CayleyTable& t, Element a);

}  // namespace semi
