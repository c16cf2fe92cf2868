#include "semi/theorems.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "semi/errors.hpp"
#include "semi/factor.hpp"
#include "semi/predicates.hpp"
#include "semi/set_ops.hpp"
#include "semi/structure.hpp"

namespace semi {

namespace {

std::string str(const ElementSet& s) { return s.to_string(); }
std::string str(std::size_t x) { return std::to_string(x); }

class Checker {
 public:
  Checker(const CayleyTable& t, const CheckOptions& options)
      : t_(t), n_(t.order()), all_(t.all()), idem_(idempotents(t)) {
    full_scan_ = n_ <= options.max_subset_scan_order && n_ < 64;
    if (full_scan_) {
      const std::uint64_t count = std::uint64_t{1} << n_;
      for (std::uint64_t m = 1; m < count; ++m) {
        subsets_.push_back(ElementSet::from_mask(n_, m));
      }
    }
    if (n_ <= options.max_pair_scan_order && full_scan_) {
      pair_family_ = subsets_;
    } else {
      for (std::size_t x = 0; x < n_; ++x) {
        pair_family_.push_back(ElementSet::singleton(n_, x));
      }
      if (n_ > 1) pair_family_.push_back(all_);
    }
    profiles_ = idempotent_profiles(t);
  }

  using Claim = void (Checker::*)();
  struct Entry {
    std::string_view id;
    Claim claim;
  };
  static const std::array<Entry, 19>& registry();

  std::vector<Violation> run() {
    for (const auto& entry : registry()) {
      current_ = entry.id;
      try {
        (this->*entry.claim)();
      } catch (const BudgetExceeded&) {
        // Too large to enumerate exhaustively; not evidence either way.
      } catch (const Error& ex) {
        fail(std::string("raised: ") + ex.what());
      }
    }
    return std::move(out_);
  }

 private:
  void fail(std::string witness) {
    out_.push_back({table_text(), std::string(current_), std::move(witness)});
  }

  void expect(bool ok, const std::string& witness) {
    if (!ok) fail(witness);
  }

  const std::string& table_text() {
    if (table_.empty()) table_ = compact_table(t_);
    return table_;
  }

  const IdempotentProfile& profile(Element e) const {
    return *std::find_if(profiles_.begin(), profiles_.end(),
                         [e](const IdempotentProfile& p) { return p.e == e; });
  }

  bool is_left_identity(std::size_t e) const {
    for (std::size_t x = 0; x < n_; ++x) {
      if (t_(e, x) != x) return false;
    }
    return true;
  }
  bool is_right_identity(std::size_t e) const {
    for (std::size_t x = 0; x < n_; ++x) {
      if (t_(x, e) != x) return false;
    }
    return true;
  }
  bool is_left_zero_element(std::size_t z) const {
    for (std::size_t x = 0; x < n_; ++x) {
      if (t_(z, x) != z) return false;
    }
    return true;
  }
  bool is_right_zero_element(std::size_t z) const {
    for (std::size_t x = 0; x < n_; ++x) {
      if (t_(x, z) != z) return false;
    }
    return true;
  }

  // Over all subsemigroups T containing e with pred(T): each lies inside
  // `maximum`, and `maximum` itself qualifies.
  template <typename Pred>
  void expect_maximum(const ElementSet& maximum, Element e, Pred&& pred,
                      const std::string& name) {
    expect(maximum.contains(e) && is_subsemigroup(t_, maximum) && pred(maximum),
           name + "(" + str(e) + ") = " + str(maximum) +
               " is not a qualifying subsemigroup");
    if (!full_scan_) return;
    for (const auto& s : subsets_) {
      if (!s.contains(e) || !is_subsemigroup(t_, s) || !pred(s)) continue;
      expect(s.is_subset_of(maximum), str(s) + " qualifies but is not inside " +
                                          name + "(" + str(e) + ") = " +
                                          str(maximum));
    }
  }

  void duality() {
    for (const auto& a : pair_family_) {
      const auto lid = left_identity_set(t_, a);
      const auto rid = right_identity_set(t_, a);
      for (const auto& b : pair_family_) {
        expect(b.is_subset_of(lid) == a.is_subset_of(right_zero_set(t_, b)),
               "B=" + str(b) + " <= lidentity(A=" + str(a) +
                   ") disagrees with A <= rzero(B)");
        expect(b.is_subset_of(rid) == a.is_subset_of(left_zero_set(t_, b)),
               "B=" + str(b) + " <= ridentity(A=" + str(a) +
                   ") disagrees with A <= lzero(B)");
      }
    }
  }

  void identity_set_subsemigroup() {
    const auto& family = full_scan_ ? subsets_ : pair_family_;
    for (const auto& a : family) {
      for (const auto& s : {left_identity_set(t_, a), right_identity_set(t_, a)}) {
        if (!s.empty()) {
          expect(is_subsemigroup(t_, s),
                 "identity set " + str(s) + " of " + str(a) + " is not closed");
        }
      }
    }
  }

  void zero_set_ideal() {
    const auto& family = full_scan_ ? subsets_ : pair_family_;
    for (const auto& a : family) {
      const auto l = left_zero_set(t_, a);
      if (!l.empty()) {
        expect(product_sets(t_, all_, l).is_subset_of(l),
               "lzero(" + str(a) + ") = " + str(l) + " is not a left ideal");
      }
      const auto r = right_zero_set(t_, a);
      if (!r.empty()) {
        expect(product_sets(t_, r, all_).is_subset_of(r),
               "rzero(" + str(a) + ") = " + str(r) + " is not a right ideal");
      }
    }
  }

  void element_characterizations() {
    const auto lid_s = left_identity_set(t_, all_);
    const auto rid_s = right_identity_set(t_, all_);
    const auto lzero_s = left_zero_set(t_, all_);
    const auto rzero_s = right_zero_set(t_, all_);
    for (std::size_t x = 0; x < n_; ++x) {
      const auto e = static_cast<Element>(x);
      const bool idem = idem_.contains(e);
      const auto lid = left_identity_set(t_, e);
      const auto rid = right_identity_set(t_, e);
      const auto lz = left_zero_set(t_, e);
      const auto rz = right_zero_set(t_, e);
      expect(lid.contains(e) == idem && rid.contains(e) == idem &&
                 lz.contains(e) == idem && rz.contains(e) == idem,
             "membership of " + str(e) + " in its own sets disagrees with e*e=e");
      expect(is_left_identity(e) == lid_s.contains(e) &&
                 is_left_identity(e) == (rz == all_),
             "left identity characterisation fails at " + str(e));
      expect(is_right_identity(e) == rid_s.contains(e) &&
                 is_right_identity(e) == (lz == all_),
             "right identity characterisation fails at " + str(e));
      expect(is_left_zero_element(e) == (rid == all_) &&
                 is_left_zero_element(e) == lzero_s.contains(e),
             "left zero characterisation fails at " + str(e));
      expect(is_right_zero_element(e) == (lid == all_) &&
                 is_right_zero_element(e) == rzero_s.contains(e),
             "right zero characterisation fails at " + str(e));
    }
    const bool rz_semigroup = is_right_zero(t_);
    const bool lz_semigroup = is_left_zero(t_);
    expect((lid_s == all_) == rz_semigroup && (rzero_s == all_) == rz_semigroup,
           "lidentity(S)=S / rzero(S)=S disagree with right zero semigroup");
    expect((rid_s == all_) == lz_semigroup && (lzero_s == all_) == lz_semigroup,
           "ridentity(S)=S / lzero(S)=S disagree with left zero semigroup");
  }

  void global_identity_zero() {
    const auto lid_s = left_identity_set(t_, all_);
    const auto rid_s = right_identity_set(t_, all_);
    const auto lzero_s = left_zero_set(t_, all_);
    const auto rzero_s = right_zero_set(t_, all_);

    ElementSet identities(n_);
    ElementSet zeros(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      if (is_left_identity(x) && is_right_identity(x)) identities.insert(x);
      if (is_left_zero_element(x) && is_right_zero_element(x)) zeros.insert(x);
    }
    const auto both_id = lid_s & rid_s;
    expect(both_id == identities && both_id.size() <= 1,
           "lidentity(S) & ridentity(S) = " + str(both_id) +
               ", identities = " + str(identities));
    for (auto e : both_id) {
      expect(left_zero_set(t_, e) == all_ && right_zero_set(t_, e) == all_,
             "identity " + str(e) + " does not have lzero(e)=rzero(e)=S");
    }
    const auto both_zero = lzero_s & rzero_s;
    expect(both_zero == zeros && both_zero.size() <= 1,
           "lzero(S) & rzero(S) = " + str(both_zero) + ", zeros = " + str(zeros));
    for (auto z : both_zero) {
      expect(left_identity_set(t_, z) == all_ && right_identity_set(t_, z) == all_,
             "zero " + str(z) + " does not have lidentity(z)=ridentity(z)=S");
    }
    const bool trivial = n_ == 1;
    expect(lid_s.intersects(lzero_s) == trivial,
           "lidentity(S) & lzero(S) nonempty disagrees with |S| = 1");
    expect(rid_s.intersects(rzero_s) == trivial,
           "ridentity(S) & rzero(S) nonempty disagrees with |S| = 1");
    expect(lid_s.intersects(rzero_s) == is_right_zero(t_),
           "lidentity(S) & rzero(S) nonempty disagrees with right zero semigroup");
    expect(rid_s.intersects(lzero_s) == is_left_zero(t_),
           "ridentity(S) & lzero(S) nonempty disagrees with left zero semigroup");
  }

  void first_idempotent() {
    for (auto e : idem_) {
      const auto lid = max_subsemigroup_with_right_zero(t_, e);
      expect_maximum(lid, e, [&](const ElementSet& s) {
        for (auto x : s) if (t_(x, e) != e) return false;
        return true;
      }, "lidentity");
      const auto rid = max_subsemigroup_with_left_zero(t_, e);
      expect_maximum(rid, e, [&](const ElementSet& s) {
        for (auto x : s) if (t_(e, x) != e) return false;
        return true;
      }, "ridentity");
      // Both of these check lzero(e) = Se and rzero(e) = eS internally.
      const auto se = max_right_identity_subsemigroup(t_, e);
      expect_maximum(se, e, [&](const ElementSet& s) {
        for (auto x : s) if (t_(x, e) != x) return false;
        return true;
      }, "lzero");
      const auto es = max_left_identity_subsemigroup(t_, e);
      expect_maximum(es, e, [&](const ElementSet& s) {
        for (auto x : s) if (t_(e, x) != x) return false;
        return true;
      }, "rzero");
    }
  }

  void second_idempotent() {
    for (std::size_t x = 0; x < n_; ++x) {
      const auto e = static_cast<Element>(x);
      const bool idem = idem_.contains(e);
      const auto lid = left_identity_set(t_, e);
      const auto rid = right_identity_set(t_, e);
      const auto lz = left_zero_set(t_, e);
      const auto rz = right_zero_set(t_, e);
      const auto single = ElementSet::singleton(n_, e);

      expect((lid & rid).contains(e) == idem, "item 1 membership at " + str(e));
      expect((lz & rz).contains(e) == idem, "item 2 membership at " + str(e));
      expect(lid.intersects(lz) == idem, "lidentity & lzero nonempty at " + str(e));
      expect(rid.intersects(rz) == idem, "ridentity & rzero nonempty at " + str(e));
      expect(lid.intersects(rz) == idem, "lidentity & rzero nonempty at " + str(e));
      expect(rid.intersects(lz) == idem, "ridentity & lzero nonempty at " + str(e));
      if (!idem) continue;

      expect((lid & lz) == single, "lidentity(e) & lzero(e) = " + str(lid & lz));
      expect((rid & rz) == single, "ridentity(e) & rzero(e) = " + str(rid & rz));
      expect(induces_right_zero(t_, lid & rz),
             "lidentity(e) & rzero(e) = " + str(lid & rz) + " is not right zero");
      expect(induces_left_zero(t_, rid & lz),
             "ridentity(e) & lzero(e) = " + str(rid & lz) + " is not left zero");

      const auto& p = profile(e);
      expect_maximum(p.zero_maximal, e, [&](const ElementSet& s) {
        for (auto y : s) if (t_(y, e) != e || t_(e, y) != e) return false;
        return true;
      }, "zero-maximal");
      expect_maximum(p.local_monoid, e, [&](const ElementSet& s) {
        for (auto y : s) if (t_(y, e) != y || t_(e, y) != y) return false;
        return true;
      }, "eSe");
    }
  }

  void lz_rz_maximum() {
    for (auto e : idem_) {
      const auto& p = profile(e);
      expect(p.lz.contains(e) && induces_left_zero(t_, p.lz),
             "LZ(" + str(e) + ") = " + str(p.lz) + " is not left zero");
      expect(p.rz.contains(e) && induces_right_zero(t_, p.rz),
             "RZ(" + str(e) + ") = " + str(p.rz) + " is not right zero");
      if (!full_scan_) continue;
      for (const auto& s : subsets_) {
        const bool through_e = s.contains(e);
        expect((through_e && induces_left_zero(t_, s)) ==
                   (through_e && s.is_subset_of(p.lz)),
               str(s) + ": left zero through " + str(e) +
                   " disagrees with e in T <= LZ(e)");
        expect((through_e && induces_right_zero(t_, s)) ==
                   (through_e && s.is_subset_of(p.rz)),
               str(s) + ": right zero through " + str(e) +
                   " disagrees with e in T <= RZ(e)");
      }
    }
  }

  void lz_rz_overlap() {
    for (auto e : idem_) {
      for (auto f : idem_) {
        const auto& pe = profile(e);
        const auto& pf = profile(f);
        const bool lz_test = t_(e, f) == e && t_(f, e) == f;
        expect(pe.lz.intersects(pf.lz) == lz_test && (pe.lz == pf.lz) == lz_test,
               "LZ overlap chain fails for " + str(e) + ", " + str(f));
        const bool rz_test = t_(e, f) == f && t_(f, e) == e;
        expect(pe.rz.intersects(pf.rz) == rz_test && (pe.rz == pf.rz) == rz_test,
               "RZ overlap chain fails for " + str(e) + ", " + str(f));
      }
    }
  }

  // Inclusion-maximal members of {T : pred(T)} over the subset scan.
  template <typename Pred>
  std::vector<ElementSet> maximal_subsets(Pred&& pred) const {
    std::vector<ElementSet> found;
    for (const auto& s : subsets_) {
      if (pred(s)) found.push_back(s);
    }
    std::vector<ElementSet> maximal;
    for (const auto& s : found) {
      const bool dominated = std::any_of(found.begin(), found.end(),
                                         [&](const ElementSet& o) {
                                           return o != s && s.is_subset_of(o);
                                         });
      if (!dominated) maximal.push_back(s);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
  }

  void check_partition(const Partition& part, bool left) {
    const std::string name = left ? "LZ" : "RZ";
    ElementSet covered(n_);
    for (std::size_t c = 0; c < part.classes.size(); ++c) {
      const auto& cls = part.classes[c];
      expect(!cls.intersects(covered), name + " classes overlap at " + str(cls));
      covered |= cls;
      if (part.non_idempotent_class && *part.non_idempotent_class == c) {
        expect(cls == all_ - idem_, name + " non-idempotent class is " + str(cls));
      } else {
        const auto& p = profile(cls.min());
        expect(cls == (left ? p.lz : p.rz),
               name + " class " + str(cls) + " is not " + name + "(min)");
      }
    }
    expect(covered == all_, name + " classes do not cover S");

    // The relation x ~ y iff (both sets of x) = (both sets of y).
    std::vector<ElementSet> key;
    for (std::size_t x = 0; x < n_; ++x) {
      const auto e = static_cast<Element>(x);
      key.push_back(left ? right_identity_set(t_, e) & left_zero_set(t_, e)
                         : left_identity_set(t_, e) & right_zero_set(t_, e));
    }
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        const bool same = std::any_of(
            part.classes.begin(), part.classes.end(),
            [&](const ElementSet& c) { return c.contains(x) && c.contains(y); });
        expect((key[x] == key[y]) == same,
               name + " relation disagrees with the partition at " + str(x) +
                   ", " + str(y));
      }
    }

    if (!full_scan_) return;
    auto maximal = maximal_subsets([&](const ElementSet& s) {
      return left ? induces_left_zero(t_, s) : induces_right_zero(t_, s);
    });
    std::vector<ElementSet> classes;
    for (std::size_t c = 0; c < part.classes.size(); ++c) {
      if (part.non_idempotent_class != c) classes.push_back(part.classes[c]);
    }
    std::sort(classes.begin(), classes.end());
    expect(maximal == classes,
           "maximal " + name + " subsemigroups differ from the idempotent classes");
  }

  void lz_rz_partition() {
    check_partition(lz_partition(t_), true);
    // The dual statement: RZ classes are the maximal right zero
    // subsemigroups.
    check_partition(rz_partition(t_), false);
  }

  void maximal_subgroup() {
    for (auto e : idem_) {
      const auto& p = profile(e);
      expect(p.h.is_subset_of(p.local_monoid), "H(e) not inside eSe at " + str(e));
      expect(p.h.contains(e) && induces_group(t_, p.h),
             "H(" + str(e) + ") = " + str(p.h) + " is not a group");
      if (full_scan_) {
        for (const auto& s : subsets_) {
          if (s.contains(e) && induces_group(t_, s)) {
            expect(s.is_subset_of(p.h), "subgroup " + str(s) +
                                            " is not inside H(" + str(e) + ")");
          }
        }
      }
      for (auto f : idem_) {
        if (f != e) {
          expect(!p.h.intersects(profile(f).h),
                 "H(" + str(e) + ") meets H(" + str(f) + ")");
        }
      }
    }
    if (!full_scan_) return;
    auto maximal = maximal_subsets(
        [&](const ElementSet& s) { return induces_group(t_, s); });
    std::vector<ElementSet> hs;
    for (const auto& p : profiles_) hs.push_back(p.h);
    std::sort(hs.begin(), hs.end());
    expect(maximal == hs, "maximal subgroups differ from {H(e)}");
  }

  void rect_band_equivalence() {
    const auto forms = rectangular_band_forms(t_);
    expect(forms.all_agree(), "rectangular band characterisations disagree");
    expect(is_rectangular_band(t_) == forms.absorbing,
           "is_rectangular_band disagrees with aba=a");
  }

  void rect_band_factorization() {
    for (auto e : idem_) {
      std::vector<Factorization> list;
      try {
        list = enumerate_rect_bands(t_, e);
      } catch (const BudgetExceeded&) {
        continue;  // other idempotents may still be checkable
      }
      std::vector<ElementSet> products;
      for (const auto& f : list) {
        expect(induces_rectangular_band(t_, f.product),
               "T_L T_R = " + str(f.product) + " is not a rectangular band");
        const auto unique = rect_band_factorize(t_, f.product, e);
        expect(unique.left == f.left && unique.right == f.right,
               "factorization of " + str(f.product) + " is not unique");
        products.push_back(f.product);
      }
      if (!full_scan_) continue;
      std::vector<ElementSet> scanned;
      for (const auto& s : subsets_) {
        if (s.contains(e) && induces_rectangular_band(t_, s)) scanned.push_back(s);
      }
      std::sort(products.begin(), products.end());
      std::sort(scanned.begin(), scanned.end());
      expect(products == scanned,
             "rectangular bands through " + str(e) +
                 " differ from the enumerated factor pairs");
    }
  }

  void rect_band_corollary() {
    if (!is_rectangular_band(t_)) return;
    for (std::size_t x = 0; x < n_; ++x) {
      const auto e = static_cast<Element>(x);
      const auto single = ElementSet::singleton(n_, e);
      const auto se = product_sets(t_, all_, single);
      const auto es = product_sets(t_, single, all_);
      const auto& p = profile(e);
      expect(se == p.lz && es == p.rz,
             "Se / eS differ from LZ(e) / RZ(e) at " + str(e));
      expect(product_sets(t_, se, es) == all_, "S != (Se)(eS) at " + str(e));
      expect(product_sets(t_, es, se) == single, "(eS)(Se) != {e} at " + str(e));
    }
  }

  void right_subgroup_lemma() {
    for (auto e : idem_) {
      for (const auto& f : enumerate_right_subgroups(t_, e)) {
        expect(f.product.contains(e) && induces_right_group(t_, f.product),
               "H'RZ' = " + str(f.product) + " is not a right group");
      }
      for (const auto& f : enumerate_left_subgroups(t_, e)) {
        expect(f.product.contains(e) && induces_left_group(t_, f.product),
               "LZ'H' = " + str(f.product) + " is not a left group");
      }
    }
  }

  void rg_lg_maximum() {
    for (auto e : idem_) {
      const auto& p = profile(e);
      expect(max_right_subgroup(t_, e) == p.rg && max_left_subgroup(t_, e) == p.lg,
             "RG/LG disagree with the profile at " + str(e));
      expect(product_sets(t_, p.rz, p.h) == p.h, "RZ(e)H(e) != H(e) at " + str(e));
      expect(product_sets(t_, p.h, p.lz) == p.h, "H(e)LZ(e) != H(e) at " + str(e));
      if (!full_scan_) continue;
      for (const auto& s : subsets_) {
        if (!s.contains(e)) continue;
        if (induces_right_group(t_, s)) {
          expect(s.is_subset_of(p.rg), "right subgroup " + str(s) +
                                           " is not inside RG(" + str(e) + ")");
        }
        if (induces_left_group(t_, s)) {
          expect(s.is_subset_of(p.lg), "left subgroup " + str(s) +
                                           " is not inside LG(" + str(e) + ")");
        }
      }
    }
  }

  void group_factor_uniqueness() {
    for (auto e : idem_) {
      for (bool right : {true, false}) {
        const auto list = right ? enumerate_right_subgroups(t_, e)
                                : enumerate_left_subgroups(t_, e);
        std::vector<ElementSet> products;
        for (const auto& f : list) {
          const auto unique = right ? right_group_factorize(t_, f.product, e)
                                    : left_group_factorize(t_, f.product, e);
          expect(unique.left == f.left && unique.right == f.right,
                 "factor pair of " + str(f.product) + " is not unique");
          products.push_back(f.product);
        }
        if (!full_scan_) continue;
        std::vector<ElementSet> scanned;
        for (const auto& s : subsets_) {
          if (s.contains(e) && (right ? induces_right_group(t_, s)
                                      : induces_left_group(t_, s))) {
            scanned.push_back(s);
          }
        }
        std::sort(products.begin(), products.end());
        std::sort(scanned.begin(), scanned.end());
        expect(products == scanned, std::string(right ? "right" : "left") +
                                        " subgroups through " + str(e) +
                                        " differ from the enumerated pairs");
      }
    }
  }

  void group_corollary() {
    const bool rg = is_right_group(t_);
    const bool lg = is_left_group(t_);
    for (auto e : idem_) {
      const auto& p = profile(e);
      if (rg) expect(p.rg == all_, "right group S != H(e)RZ(e) at " + str(e));
      if (lg) expect(p.lg == all_, "left group S != LZ(e)H(e) at " + str(e));
    }
  }

  void rg_lg_overlap() {
    for (auto e : idem_) {
      for (auto f : idem_) {
        const auto& pe = profile(e);
        const auto& pf = profile(f);
        const bool rg_test = overlap_criterion_rg(t_, e, f);
        expect(pe.rg.intersects(pf.rg) == rg_test &&
                   (pe.rz == pf.rz) == rg_test && (pe.rg == pf.rg) == rg_test,
               "RG overlap chain fails for " + str(e) + ", " + str(f));
        const bool lz_test = overlap_criterion_lz(t_, e, f);
        expect(pe.lg.intersects(pf.lg) == lz_test &&
                   (pe.lz == pf.lz) == lz_test && (pe.lg == pf.lg) == lz_test,
               "LG overlap chain fails for " + str(e) + ", " + str(f));
      }
    }
  }

  const CayleyTable& t_;
  std::size_t n_;
  ElementSet all_;
  ElementSet idem_;
  bool full_scan_ = false;
  std::vector<ElementSet> subsets_;
  std::vector<ElementSet> pair_family_;
  std::vector<IdempotentProfile> profiles_;
  std::vector<Violation> out_;
  std::string table_;
  std::string_view current_;
};

const std::array<Checker::Entry, 19>& Checker::registry() {
  static const std::array<Entry, 19> entries{{
      {"identity-zero-duality", &Checker::duality},
      {"identity-set-subsemigroup", &Checker::identity_set_subsemigroup},
      {"zero-set-ideal", &Checker::zero_set_ideal},
      {"element-characterizations", &Checker::element_characterizations},
      {"global-identity-zero", &Checker::global_identity_zero},
      {"first-idempotent", &Checker::first_idempotent},
      {"second-idempotent", &Checker::second_idempotent},
      {"lz-rz-maximum", &Checker::lz_rz_maximum},
      {"lz-rz-overlap", &Checker::lz_rz_overlap},
      {"lz-rz-partition", &Checker::lz_rz_partition},
      {"maximal-subgroup", &Checker::maximal_subgroup},
      {"rect-band-equivalence", &Checker::rect_band_equivalence},
      {"rect-band-factorization", &Checker::rect_band_factorization},
      {"rect-band-corollary", &Checker::rect_band_corollary},
      {"right-subgroup-lemma", &Checker::right_subgroup_lemma},
      {"rg-lg-maximum", &Checker::rg_lg_maximum},
      {"group-factor-uniqueness", &Checker::group_factor_uniqueness},
      {"right-left-group-corollary", &Checker::group_corollary},
      {"rg-lg-overlap", &Checker::rg_lg_overlap},
  }};
  return entries;
}

}  // namespace

std::vector<std::string_view> theorem_ids() {
  std::vector<std::string_view> ids;
  for (const auto& entry : Checker::registry()) ids.push_back(entry.id);
  return ids;
}

std::vector<Violation> check_all_theorems(const CayleyTable& t,
                                          const CheckOptions& options) {
  t.require_semigroup("check_all_theorems");
  return Checker(t, options).run();
}

}  // namespace semi
