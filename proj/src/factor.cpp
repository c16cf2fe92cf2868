#include "semi/factor.hpp"

#include <algorithm>
#include <string>

#include "semi/errors.hpp"
#include "semi/predicates.hpp"
#include "semi/structure.hpp"

namespace semi {

namespace {

std::uint64_t subset_count(std::size_t free_members) {
  return free_members >= 64 ? ~std::uint64_t{0}
                            : std::uint64_t{1} << free_members;
}

// Calls visit(subset) for every subset of `base` that contains e.
template <typename Visit>
void for_each_subset_with(const ElementSet& base, Element e, Visit&& visit) {
  std::vector<Element> others;
  for (auto x : base) {
    if (x != e) others.push_back(x);
  }
  const std::uint64_t count = std::uint64_t{1} << others.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    ElementSet s = ElementSet::singleton(base.universe(), e);
    for (std::size_t b = 0; b < others.size(); ++b) {
      if ((mask >> b) & 1U) s.insert(others[b]);
    }
    visit(s);
  }
}

void check_membership(const ElementSet& subset, Element e, const char* op) {
  if (!subset.contains(e)) {
    throw DomainError(std::string(op) + ": " + std::to_string(e) +
                      " is not a member of " + subset.to_string());
  }
}

void check(bool ok, const std::string& what) {
  if (!ok) throw InconsistencyError(what);
}

void check_distinct_products(const std::vector<Factorization>& sorted) {
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    check(sorted[i - 1].product != sorted[i].product,
          "two factor pairs produce " + sorted[i].product.to_string());
  }
}

}  // namespace

std::string_view kind_name(FactorizationKind kind) {
  switch (kind) {
    case FactorizationKind::RectBand:
      return "rect-band";
    case FactorizationKind::RightGroup:
      return "right-group";
    case FactorizationKind::LeftGroup:
      return "left-group";
  }
  return "unknown";
}

void sort_factorizations(std::vector<Factorization>& list) {
  std::sort(list.begin(), list.end(),
            [](const Factorization& a, const Factorization& b) {
              if (a.product.size() != b.product.size()) {
                return a.product.size() < b.product.size();
              }
              return a.product < b.product;
            });
}

Factorization rect_band_factorize(const CayleyTable& t, const ElementSet& subset,
                                  Element e) {
  t.require_semigroup("rect_band_factorize");
  check_membership(subset, e, "rect_band_factorize");
  if (!induces_rectangular_band(t, subset)) {
    throw DomainError(subset.to_string() +
                      " is not a rectangular band subsemigroup");
  }
  const auto single = ElementSet::singleton(t.order(), e);
  Factorization f;
  f.kind = FactorizationKind::RectBand;
  f.anchor = e;
  f.left = product_sets(t, subset, single);
  f.right = product_sets(t, single, subset);
  f.product = product_sets(t, f.left, f.right);
  check(f.product == subset, "(Te)(eT) differs from T");
  check(product_sets(t, f.right, f.left) == single, "(eT)(Te) differs from {e}");
  check(f.left.is_subset_of(max_left_zero(t, e)), "Te is not inside LZ(e)");
  check(f.right.is_subset_of(max_right_zero(t, e)), "eT is not inside RZ(e)");
  return f;
}

Factorization right_group_factorize(const CayleyTable& t,
                                    const ElementSet& subset, Element e) {
  t.require_semigroup("right_group_factorize");
  check_membership(subset, e, "right_group_factorize");
  if (!induces_right_group(t, subset)) {
    throw DomainError(subset.to_string() + " is not a right subgroup");
  }
  Factorization f;
  f.kind = FactorizationKind::RightGroup;
  f.anchor = e;
  f.left = subset & max_subgroup(t, e);
  f.right = subset & max_right_zero(t, e);
  f.product = product_sets(t, f.left, f.right);
  check(f.product == subset, "H'RZ' differs from T");
  check(induces_group(t, f.left), "T & H(e) is not a group");
  return f;
}

Factorization left_group_factorize(const CayleyTable& t,
                                   const ElementSet& subset, Element e) {
  t.require_semigroup("left_group_factorize");
  check_membership(subset, e, "left_group_factorize");
  if (!induces_left_group(t, subset)) {
    throw DomainError(subset.to_string() + " is not a left subgroup");
  }
  Factorization f;
  f.kind = FactorizationKind::LeftGroup;
  f.anchor = e;
  f.left = subset & max_left_zero(t, e);
  f.right = subset & max_subgroup(t, e);
  f.product = product_sets(t, f.left, f.right);
  check(f.product == subset, "LZ'H' differs from T");
  check(induces_group(t, f.right), "T & H(e) is not a group");
  return f;
}

std::vector<Factorization> enumerate_rect_bands(const CayleyTable& t, Element e,
                                                const FactorLimits& limits) {
  const auto lz = max_left_zero(t, e);
  const auto rz = max_right_zero(t, e);
  const std::size_t free = lz.size() + rz.size() - 2;
  if (subset_count(free) > limits.max_pairs) {
    throw BudgetExceeded("rectangular band enumeration would examine 2^" +
                         std::to_string(free) + " pairs");
  }
  const auto single = ElementSet::singleton(t.order(), e);
  std::vector<Factorization> out;
  for_each_subset_with(lz, e, [&](const ElementSet& left) {
    for_each_subset_with(rz, e, [&](const ElementSet& right) {
      if (product_sets(t, right, left) != single) return;
      out.push_back({FactorizationKind::RectBand, left, right,
                     product_sets(t, left, right), e});
    });
  });
  sort_factorizations(out);
  check_distinct_products(out);
  return out;
}

ElementSet max_right_subgroup(const CayleyTable& t, Element e) {
  const auto rg = product_sets(t, max_subgroup(t, e), max_right_zero(t, e));
  check(induces_right_group(t, rg), "H(e)RZ(e) is not a right group");
  return rg;
}

ElementSet max_left_subgroup(const CayleyTable& t, Element e) {
  const auto lg = product_sets(t, max_left_zero(t, e), max_subgroup(t, e));
  check(induces_left_group(t, lg), "LZ(e)H(e) is not a left group");
  return lg;
}

std::vector<ElementSet> subgroups_of_max_subgroup(const CayleyTable& t,
                                                  Element e,
                                                  const FactorLimits& limits) {
  const auto h = max_subgroup(t, e);
  if (h.size() > limits.max_group_order) {
    throw BudgetExceeded("H(" + std::to_string(e) + ") has " +
                         std::to_string(h.size()) +
                         " elements; subgroup scan is limited to " +
                         std::to_string(limits.max_group_order));
  }
  std::vector<Element> inverse(t.order(), 0);
  for (auto x : h) {
    for (auto y : h) {
      if (t(x, y) == e && t(y, x) == e) {
        inverse[x] = y;
        break;
      }
    }
  }
  std::vector<ElementSet> out;
  for_each_subset_with(h, e, [&](const ElementSet& s) {
    for (auto x : s) {
      if (!s.contains(inverse[x])) return;
      for (auto y : s) {
        if (!s.contains(t(x, y))) return;
      }
    }
    out.push_back(s);
  });
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<Factorization> enumerate_right_subgroups(const CayleyTable& t,
                                                     Element e,
                                                     const FactorLimits& limits) {
  const auto groups = subgroups_of_max_subgroup(t, e, limits);
  const auto rz = max_right_zero(t, e);
  if (subset_count(rz.size() - 1) > limits.max_pairs) {
    throw BudgetExceeded("RZ(" + std::to_string(e) + ") has too many subsets");
  }
  std::vector<Factorization> out;
  for (const auto& g : groups) {
    for_each_subset_with(rz, e, [&](const ElementSet& r) {
      out.push_back({FactorizationKind::RightGroup, g, r,
                     product_sets(t, g, r), e});
    });
  }
  sort_factorizations(out);
  check_distinct_products(out);
  return out;
}

std::vector<Factorization> enumerate_left_subgroups(const CayleyTable& t,
                                                    Element e,
                                                    const FactorLimits& limits) {
  const auto groups = subgroups_of_max_subgroup(t, e, limits);
  const auto lz = max_left_zero(t, e);
  if (subset_count(lz.size() - 1) > limits.max_pairs) {
    throw BudgetExceeded("LZ(" + std::to_string(e) + ") has too many subsets");
  }
  std::vector<Factorization> out;
  for (const auto& g : groups) {
    for_each_subset_with(lz, e, [&](const ElementSet& l) {
      out.push_back({FactorizationKind::LeftGroup, l, g,
                     product_sets(t, l, g), e});
    });
  }
  sort_factorizations(out);
  check_distinct_products(out);
  return out;
}

bool overlap_criterion_rg(const CayleyTable& t, Element e, Element f) {
  t.require_semigroup("overlap_criterion_rg");
  require_idempotent(t, e);
  require_idempotent(t, f);
  return t(e, f) == f && t(f, e) == e;
}

bool overlap_criterion_lz(const CayleyTable& t, Element e, Element f) {
  t.require_semigroup("overlap_criterion_lz");
  require_idempotent(t, e);
  require_idempotent(t, f);
  return t(e, f) == e && t(f, e) == f;
}

}  // namespace semi
