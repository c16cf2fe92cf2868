#pragma once

// Subsemigroups determined by a single idempotent e of a semigroup S.
//
//   LZ(e) = ridentity(e) & lzero(e)   maximum left zero subsemigroup through e
//   RZ(e) = lidentity(e) & rzero(e)   maximum right zero subsemigroup through e
//   eSe   = lzero(e) & rzero(e)       maximum subsemigroup with identity e
//   H(e)  = units of eSe              maximum subgroup with identity e
//
// All operations below except idempotents() require an associative table
// (PreconditionError) and, where they take e, an idempotent
// (NotIdempotentError).

#include <optional>
#include <vector>

#include "semi/cayley_table.hpp"

namespace semi {

struct IdempotentProfile {
  Element e = 0;
  ElementSet lz;             // LZ(e)
  ElementSet rz;             // RZ(e)
  ElementSet local_monoid;   // eSe
  ElementSet left_monoid;    // Se = lzero(e)
  ElementSet right_monoid;   // eS = rzero(e)
  ElementSet zero_maximal;   // lidentity(e) & ridentity(e)
  ElementSet h;              // H(e)
  ElementSet rg;             // RG(e) = H(e) RZ(e)
  ElementSet lg;             // LG(e) = LZ(e) H(e)

  friend bool operator==(const IdempotentProfile&,
                         const IdempotentProfile&) = default;
};

enum class PartitionKind { LeftZero, RightZero };

struct Partition {
  PartitionKind kind = PartitionKind::LeftZero;
  // Idempotent classes ordered by least element, then the class of all
  // non-idempotents when there are any.
  std::vector<ElementSet> classes;
  std::optional<std::size_t> non_idempotent_class;

  friend bool operator==(const Partition&, const Partition&) = default;
};

ElementSet idempotents(const CayleyTable& t);

// Throws NotIdempotentError unless e*e = e (UniverseMismatch if e >= n).
void require_idempotent(const CayleyTable& t, Element e);

// lzero(e), checked equal to Se: the maximum subsemigroup having e as a
// right identity. max_left_identity_subsemigroup is rzero(e) = eS.
ElementSet max_right_identity_subsemigroup(const CayleyTable& t, Element e);
ElementSet max_left_identity_subsemigroup(const CayleyTable& t, Element e);

// lidentity(e) (maximum subsemigroup with e as a right zero) and
// ridentity(e) (with e as a left zero).
ElementSet max_subsemigroup_with_right_zero(const CayleyTable& t, Element e);
ElementSet max_subsemigroup_with_left_zero(const CayleyTable& t, Element e);

// eSe, checked against { e*x*e }.
ElementSet local_monoid(const CayleyTable& t, Element e);

// lidentity(e) & ridentity(e): maximum subsemigroup with e as its zero.
ElementSet zero_maximal_subsemigroup(const CayleyTable& t, Element e);

ElementSet max_left_zero(const CayleyTable& t, Element e);
ElementSet max_right_zero(const CayleyTable& t, Element e);

// Classes of the LZ / RZ equivalences. Verifies that LZ(e) = LZ(f) exactly
// when ef = e and fe = f (RZ: ef = f and fe = e) and that distinct classes
// are disjoint; throws InconsistencyError otherwise.
Partition lz_partition(const CayleyTable& t);
Partition rz_partition(const CayleyTable& t);

ElementSet max_subgroup(const CayleyTable& t, Element e);

IdempotentProfile idempotent_profile(const CayleyTable& t, Element e);
// One profile per idempotent, ascending. NoIdempotentError if none exist.
std::vector<IdempotentProfile> idempotent_profiles(const CayleyTable& t);

}  // namespace semi
