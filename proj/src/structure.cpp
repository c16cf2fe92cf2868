#include "semi/structure.hpp"

#include <algorithm>
#include <string>

#include "semi/errors.hpp"
#include "semi/set_ops.hpp"

namespace semi {

namespace {

void require_semigroup_idempotent(const CayleyTable& t, Element e,
                                  const char* operation) {
  t.require_semigroup(operation);
  require_idempotent(t, e);
}

void expect_equal(const ElementSet& computed, const ElementSet& other,
                  const std::string& what) {
  if (computed != other) {
    throw InconsistencyError(what + ": " + computed.to_string() + " vs " +
                             other.to_string());
  }
}

Partition partition_by(const CayleyTable& t, PartitionKind kind) {
  t.require_semigroup(kind == PartitionKind::LeftZero ? "lz_partition"
                                                      : "rz_partition");
  const auto idem = idempotents(t);
  Partition p;
  p.kind = kind;
  std::vector<Element> representative;
  ElementSet covered(t.order());
  for (auto e : idem) {
    if (covered.contains(e)) continue;
    auto cls = kind == PartitionKind::LeftZero ? max_left_zero(t, e)
                                               : max_right_zero(t, e);
    if (cls.intersects(covered)) {
      throw InconsistencyError("classes overlap without coinciding at " +
                               std::to_string(e));
    }
    covered |= cls;
    p.classes.push_back(std::move(cls));
    representative.push_back(e);
  }
  if (covered != idem) {
    throw InconsistencyError("idempotent classes do not cover the idempotents");
  }

  // Merge criterion against the pairwise products.
  for (auto e : idem) {
    for (auto f : idem) {
      const bool product_test = kind == PartitionKind::LeftZero
                                    ? (t(e, f) == e && t(f, e) == f)
                                    : (t(e, f) == f && t(f, e) == e);
      const auto same_class = std::any_of(
          p.classes.begin(), p.classes.end(), [&](const ElementSet& c) {
            return c.contains(e) && c.contains(f);
          });
      if (product_test != same_class) {
        throw InconsistencyError("partition merge criterion fails for " +
                                 std::to_string(e) + ", " + std::to_string(f));
      }
    }
  }

  // Classes are generated in order of their least idempotent, which is
  // also their least element.
  auto rest = t.all() - idem;
  if (!rest.empty()) {
    p.non_idempotent_class = p.classes.size();
    p.classes.push_back(std::move(rest));
  }
  return p;
}

}  // namespace

ElementSet idempotents(const CayleyTable& t) {
  ElementSet out(t.order());
  for (std::size_t a = 0; a < t.order(); ++a) {
    if (t(a, a) == a) out.insert(a);
  }
  return out;
}

void require_idempotent(const CayleyTable& t, Element e) {
  if (e >= t.order()) {
    throw UniverseMismatch("element " + std::to_string(e) +
                           " outside table of order " +
                           std::to_string(t.order()));
  }
  if (t(e, e) != e) {
    throw NotIdempotentError(std::to_string(e) + " is not idempotent (" +
                             std::to_string(e) + "*" + std::to_string(e) +
                             " = " + std::to_string(t(e, e)) + ")");
  }
}

ElementSet max_right_identity_subsemigroup(const CayleyTable& t, Element e) {
  require_semigroup_idempotent(t, e, "max_right_identity_subsemigroup");
  auto lz = left_zero_set(t, e);
  ElementSet se(t.order());
  for (auto x : t.column(e)) se.insert(x);
  expect_equal(lz, se, "lzero(e) differs from Se");
  return lz;
}

ElementSet max_left_identity_subsemigroup(const CayleyTable& t, Element e) {
  require_semigroup_idempotent(t, e, "max_left_identity_subsemigroup");
  auto rz = right_zero_set(t, e);
  ElementSet es(t.order());
  for (auto x : t.row(e)) es.insert(x);
  expect_equal(rz, es, "rzero(e) differs from eS");
  return rz;
}

ElementSet max_subsemigroup_with_right_zero(const CayleyTable& t, Element e) {
  require_semigroup_idempotent(t, e, "max_subsemigroup_with_right_zero");
  return left_identity_set(t, e);
}

ElementSet max_subsemigroup_with_left_zero(const CayleyTable& t, Element e) {
  require_semigroup_idempotent(t, e, "max_subsemigroup_with_left_zero");
  return right_identity_set(t, e);
}

ElementSet local_monoid(const CayleyTable& t, Element e) {
  require_semigroup_idempotent(t, e, "local_monoid");
  auto m = left_zero_set(t, e) & right_zero_set(t, e);
  ElementSet ese(t.order());
  const auto column_e = t.column(e);
  for (auto x : t.row(e)) ese.insert(column_e[x]);
  expect_equal(m, ese, "lzero(e) & rzero(e) differs from eSe");
  return m;
}

ElementSet zero_maximal_subsemigroup(const CayleyTable& t, Element e) {
  require_semigroup_idempotent(t, e, "zero_maximal_subsemigroup");
  return left_identity_set(t, e) & right_identity_set(t, e);
}

ElementSet max_left_zero(const CayleyTable& t, Element e) {
  require_semigroup_idempotent(t, e, "max_left_zero");
  return right_identity_set(t, e) & left_zero_set(t, e);
}

ElementSet max_right_zero(const CayleyTable& t, Element e) {
  require_semigroup_idempotent(t, e, "max_right_zero");
  return left_identity_set(t, e) & right_zero_set(t, e);
}

Partition lz_partition(const CayleyTable& t) {
  return partition_by(t, PartitionKind::LeftZero);
}

Partition rz_partition(const CayleyTable& t) {
  return partition_by(t, PartitionKind::RightZero);
}

ElementSet max_subgroup(const CayleyTable& t, Element e) {
  const auto m = local_monoid(t, e);
  ElementSet h(t.order());
  for (auto x : m) {
    for (auto y : m) {
      if (t(x, y) == e && t(y, x) == e) {
        h.insert(x);
        break;
      }
    }
  }
  return h;
}

IdempotentProfile idempotent_profile(const CayleyTable& t, Element e) {
  IdempotentProfile p;
  p.e = e;
  p.lz = max_left_zero(t, e);
  p.rz = max_right_zero(t, e);
  p.local_monoid = local_monoid(t, e);
  p.left_monoid = max_right_identity_subsemigroup(t, e);
  p.right_monoid = max_left_identity_subsemigroup(t, e);
  p.zero_maximal = zero_maximal_subsemigroup(t, e);
  p.h = max_subgroup(t, e);
  p.rg = product_sets(t, p.h, p.rz);
  p.lg = product_sets(t, p.lz, p.h);
  return p;
}

std::vector<IdempotentProfile> idempotent_profiles(const CayleyTable& t) {
  t.require_semigroup("idempotent_profiles");
  const auto idem = idempotents(t);
  if (idem.empty()) {
    throw NoIdempotentError("associative table without an idempotent");
  }
  std::vector<IdempotentProfile> out;
  for (auto e : idem) out.push_back(idempotent_profile(t, e));
  return out;
}

}  // namespace semi
