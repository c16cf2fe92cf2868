#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "semi/cayley_table.hpp"
#include "semi/factor.hpp"
#include "semi/structure.hpp"

namespace semi::cli {

struct GlobalPredicates {
  bool band = false;
  bool left_zero = false;
  bool right_zero = false;
  bool rectangular_band = false;
  bool right_group = false;
  bool left_group = false;

  friend bool operator==(const GlobalPredicates&, const GlobalPredicates&) = default;
};

// Factorizations through one idempotent. A list is absent when its
// enumeration would exceed the configured budget.
struct FactorizationSet {
  Element e = 0;
  std::optional<std::vector<Factorization>> rect_band;
  std::optional<std::vector<Factorization>> right_group;
  std::optional<std::vector<Factorization>> left_group;

  friend bool operator==(const FactorizationSet&, const FactorizationSet&) = default;
};

// Everything `analyze` reports about one table. Fields that need an
// associative table (predicates, profiles, partitions) are empty for a
// non-associative one.
struct AnalysisDocument {
  std::string digest;
  std::size_t order = 0;
  AssocStatus associativity = AssocStatus::Unchecked;
  std::optional<AssocWitness> witness;
  std::optional<GlobalPredicates> predicates;
  ElementSet idempotents;
  std::vector<IdempotentProfile> profiles;
  std::optional<Partition> lz_partition;
  std::optional<Partition> rz_partition;
  std::optional<std::vector<FactorizationSet>> factorizations;

  friend bool operator==(const AnalysisDocument&, const AnalysisDocument&) = default;
};

// "fnv1a64:<16 hex digits>" over the order and row-major entries.
std::string table_digest(const CayleyTable& t);

AnalysisDocument analyze(const CayleyTable& t, bool with_factorizations = false);

nlohmann::json to_json(const AnalysisDocument& doc);
AnalysisDocument from_json(const nlohmann::json& j);

// Pretty-printed with sorted keys, newline-terminated.
std::string dump(const AnalysisDocument& doc);

}  // namespace semi::cli
