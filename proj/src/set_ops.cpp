#include "semi/set_ops.hpp"

#include <string>

#include "semi/errors.hpp"
#include "semi/kernels.hpp"

namespace semi {

namespace {

enum class Which { LeftIdentity, RightIdentity, LeftZero, RightZero };

void check_element(const CayleyTable& t, Element a) {
  if (a >= t.order()) {
    throw UniverseMismatch("element " + std::to_string(a) +
                           " outside table of order " +
                           std::to_string(t.order()));
  }
}

// Each singleton set is one contiguous scan:
//   lidentity(a) = { b : column_a[b] == a }   rzero(a) = { b : row_a[b] == b }
//   ridentity(a) = { b : row_a[b] == a }      lzero(a) = { b : column_a[b] == b }
ElementSet singleton_set(const CayleyTable& t, Element a, Which which) {
  check_element(t, a);
  const auto& k = kernels::active();
  const std::size_t n = t.order();
  ElementSet out(n);
  auto* words = out.mutable_words().data();
  switch (which) {
    case Which::LeftIdentity:
      k.match_value(t.column(a).data(), n, a, words);
      break;
    case Which::RightIdentity:
      k.match_value(t.row(a).data(), n, a, words);
      break;
    case Which::LeftZero:
      k.match_iota(t.column(a).data(), n, words);
      break;
    case Which::RightZero:
      k.match_iota(t.row(a).data(), n, words);
      break;
  }
  return out;
}

ElementSet subset_set(const CayleyTable& t, const ElementSet& a, Which which,
                      const char* name) {
  if (a.universe() != t.order()) {
    throw UniverseMismatch(std::string(name) +
                           ": set universe differs from table order");
  }
  if (a.empty()) {
    throw EmptySetError(std::string(name) + " of the empty set");
  }
  // The defining condition is a conjunction over A, so the set is the
  // intersection of the singleton sets.
  auto it = a.begin();
  ElementSet out = singleton_set(t, *it, which);
  for (++it; it != a.end() && !out.empty(); ++it) {
    out &= singleton_set(t, *it, which);
  }
  return out;
}

}  // namespace

ElementSet left_identity_set(const CayleyTable& t, const ElementSet& a) {
  return subset_set(t, a, Which::LeftIdentity, "left_identity_set");
}
ElementSet right_identity_set(const CayleyTable& t, const ElementSet& a) {
  return subset_set(t, a, Which::RightIdentity, "right_identity_set");
}
ElementSet left_zero_set(const CayleyTable& t, const ElementSet& a) {
  return subset_set(t, a, Which::LeftZero, "left_zero_set");
}
ElementSet right_zero_set(const CayleyTable& t, const ElementSet& a) {
  return subset_set(t, a, Which::RightZero, "right_zero_set");
}

ElementSet left_identity_set(const CayleyTable& t, Element a) {
  return singleton_set(t, a, Which::LeftIdentity);
}
ElementSet right_identity_set(const CayleyTable& t, Element a) {
  return singleton_set(t, a, Which::RightIdentity);
}
ElementSet left_zero_set(const CayleyTable& t, Element a) {
  return singleton_set(t, a, Which::LeftZero);
}
ElementSet right_zero_set(const CayleyTable& t, Element a) {
  return singleton_set(t, a, Which::RightZero);
}

}  // namespace semi
