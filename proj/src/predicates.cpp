#include "semi/predicates.hpp"

#include <algorithm>

#include "semi/errors.hpp"
#include "semi/set_ops.hpp"

namespace semi {

namespace {

bool lines_injective(const CayleyTable& t, bool use_columns) {
  const std::size_t n = t.order();
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    const auto line = use_columns ? t.column(a) : t.row(a);
    for (auto x : line) {
      if (seen[x]) return false;
      seen[x] = 1;
    }
  }
  return true;
}

bool all_idempotent(const CayleyTable& t) {
  for (std::size_t a = 0; a < t.order(); ++a) {
    if (t(a, a) != a) return false;
  }
  return true;
}

template <typename Predicate>
bool on_induced(const CayleyTable& t, const ElementSet& subset,
                Predicate&& pred) {
  t.require_semigroup("induced predicate");
  if (subset.empty()) return false;
  auto induced = induced_subtable(t, subset);
  return induced && pred(induced->table);
}

}  // namespace

bool is_subsemigroup(const CayleyTable& t, const ElementSet& a) {
  t.require_semigroup("is_subsemigroup");
  if (a.universe() != t.order()) {
    throw UniverseMismatch("is_subsemigroup: universe differs from order");
  }
  if (a.empty()) return false;
  for (auto x : a) {
    const auto r = t.row(x);
    for (auto y : a) {
      if (!a.contains(r[y])) return false;
    }
  }
  return true;
}

bool is_band(const CayleyTable& t) {
  t.require_semigroup("is_band");
  return all_idempotent(t);
}

bool is_left_zero(const CayleyTable& t) {
  t.require_semigroup("is_left_zero");
  for (std::size_t a = 0; a < t.order(); ++a) {
    for (auto x : t.row(a)) {
      if (x != a) return false;
    }
  }
  return true;
}

bool is_right_zero(const CayleyTable& t) {
  t.require_semigroup("is_right_zero");
  for (std::size_t a = 0; a < t.order(); ++a) {
    const auto r = t.row(a);
    for (std::size_t b = 0; b < t.order(); ++b) {
      if (r[b] != b) return false;
    }
  }
  return true;
}

bool RectangularBandForms::all_agree() const {
  const bool ref = absorbing;
  if (band_left_swap != ref || band_right_swap != ref) return false;
  if (lidentity_is_rzero && *lidentity_is_rzero != ref) return false;
  if (ridentity_is_lzero && *ridentity_is_lzero != ref) return false;
  return true;
}

RectangularBandForms rectangular_band_forms(const CayleyTable& t) {
  const std::size_t n = t.order();
  RectangularBandForms forms;

  forms.absorbing = true;
  for (std::size_t a = 0; a < n && forms.absorbing; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (t(t(a, b), a) != a) {
        forms.absorbing = false;
        break;
      }
    }
  }

  const bool band = all_idempotent(t);
  forms.band_left_swap = band;
  forms.band_right_swap = band;
  for (std::size_t a = 0; a < n && band; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const bool ab_b = t(a, b) == b;
      const bool ba_a = t(b, a) == a;
      const bool ab_a = t(a, b) == a;
      const bool ba_b = t(b, a) == b;
      if (ab_b != ba_a) forms.band_left_swap = false;
      if (ab_a != ba_b) forms.band_right_swap = false;
    }
  }

  if (t.is_semigroup()) {
    bool left = true;
    bool right = true;
    for (std::size_t a = 0; a < n; ++a) {
      const auto e = static_cast<Element>(a);
      const auto lid = left_identity_set(t, e);
      if (lid.empty() || lid != right_zero_set(t, e)) left = false;
      const auto rid = right_identity_set(t, e);
      if (rid.empty() || rid != left_zero_set(t, e)) right = false;
    }
    forms.lidentity_is_rzero = left;
    forms.ridentity_is_lzero = right;
  }
  return forms;
}

bool is_rectangular_band(const CayleyTable& t) {
  t.require_semigroup("is_rectangular_band");
  const auto forms = rectangular_band_forms(t);
  if (*forms.lidentity_is_rzero != forms.absorbing ||
      *forms.ridentity_is_lzero != forms.absorbing) {
    throw InconsistencyError(
        "rectangular band characterisations disagree: aba=a gives " +
        std::string(forms.absorbing ? "true" : "false") +
        ", lidentity(a)=rzero(a) gives " +
        (*forms.lidentity_is_rzero ? "true" : "false") +
        ", ridentity(a)=lzero(a) gives " +
        (*forms.ridentity_is_lzero ? "true" : "false"));
  }
  return forms.absorbing;
}

bool is_left_cancellative(const CayleyTable& t) {
  t.require_semigroup("is_left_cancellative");
  return lines_injective(t, false);
}

bool is_right_cancellative(const CayleyTable& t) {
  t.require_semigroup("is_right_cancellative");
  return lines_injective(t, true);
}

bool is_right_simple(const CayleyTable& t) {
  t.require_semigroup("is_right_simple");
  const std::size_t n = t.order();
  for (std::size_t a = 0; a < n; ++a) {
    ElementSet image(n);
    for (auto x : t.row(a)) image.insert(x);
    if (image.size() != n) return false;
  }
  return true;
}

bool is_left_simple(const CayleyTable& t) {
  t.require_semigroup("is_left_simple");
  const std::size_t n = t.order();
  for (std::size_t a = 0; a < n; ++a) {
    ElementSet image(n);
    for (auto x : t.column(a)) image.insert(x);
    if (image.size() != n) return false;
  }
  return true;
}

bool is_right_group(const CayleyTable& t) {
  return is_left_cancellative(t) && is_right_simple(t);
}

bool is_left_group(const CayleyTable& t) {
  return is_right_cancellative(t) && is_left_simple(t);
}

bool is_group(const CayleyTable& t) {
  t.require_semigroup("is_group");
  const std::size_t n = t.order();
  const auto all = t.all();
  const auto identities = left_identity_set(t, all) & right_identity_set(t, all);
  if (identities.empty()) return false;
  const Element e = identities.min();
  for (std::size_t x = 0; x < n; ++x) {
    bool has_inverse = false;
    for (std::size_t y = 0; y < n && !has_inverse; ++y) {
      has_inverse = t(x, y) == e && t(y, x) == e;
    }
    if (!has_inverse) return false;
  }
  return true;
}

bool induces_left_zero(const CayleyTable& t, const ElementSet& subset) {
  return on_induced(t, subset, [](const CayleyTable& s) { return is_left_zero(s); });
}
bool induces_right_zero(const CayleyTable& t, const ElementSet& subset) {
  return on_induced(t, subset, [](const CayleyTable& s) { return is_right_zero(s); });
}
bool induces_rectangular_band(const CayleyTable& t, const ElementSet& subset) {
  return on_induced(t, subset,
                    [](const CayleyTable& s) { return is_rectangular_band(s); });
}
bool induces_group(const CayleyTable& t, const ElementSet& subset) {
  return on_induced(t, subset, [](const CayleyTable& s) { return is_group(s); });
}
bool induces_right_group(const CayleyTable& t, const ElementSet& subset) {
  return on_induced(t, subset, [](const CayleyTable& s) { return is_right_group(s); });
}
bool induces_left_group(const CayleyTable& t, const ElementSet& subset) {
  return on_induced(t, subset, [](const CayleyTable& s) { return is_left_group(s); });
}

}  // namespace semi
