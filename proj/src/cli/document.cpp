#include "semi/cli/document.hpp"

#include <cstdio>

#include "semi/errors.hpp"
#include "semi/predicates.hpp"

namespace semi::cli {

using nlohmann::json;

namespace {

json set_json(const ElementSet& s) { return s.members(); }

ElementSet set_from(const json& j, std::size_t n) {
  ElementSet s(n);
  for (const auto& x : j) s.insert(x.get<Element>());
  return s;
}

std::string_view status_name(AssocStatus s) {
  switch (s) {
    case AssocStatus::Valid:
      return "valid";
    case AssocStatus::Invalid:
      return "invalid";
    case AssocStatus::Unchecked:
      break;
  }
  return "unchecked";
}

AssocStatus status_from(const std::string& s) {
  if (s == "valid") return AssocStatus::Valid;
  if (s == "invalid") return AssocStatus::Invalid;
  return AssocStatus::Unchecked;
}

json partition_json(const std::optional<Partition>& p) {
  if (!p) return nullptr;
  json classes = json::array();
  for (const auto& c : p->classes) classes.push_back(set_json(c));
  return {{"classes", classes},
          {"non_idempotent_class",
           p->non_idempotent_class ? json(*p->non_idempotent_class) : json()}};
}

std::optional<Partition> partition_from(const json& j, PartitionKind kind,
                                        std::size_t n) {
  if (j.is_null()) return std::nullopt;
  Partition p;
  p.kind = kind;
  for (const auto& c : j.at("classes")) p.classes.push_back(set_from(c, n));
  if (!j.at("non_idempotent_class").is_null()) {
    p.non_idempotent_class = j.at("non_idempotent_class").get<std::size_t>();
  }
  return p;
}

json factor_list_json(const std::optional<std::vector<Factorization>>& list) {
  if (!list) return nullptr;
  json out = json::array();
  for (const auto& f : *list) {
    out.push_back({{"left", set_json(f.left)},
                   {"right", set_json(f.right)},
                   {"product", set_json(f.product)}});
  }
  return out;
}

std::optional<std::vector<Factorization>> factor_list_from(
    const json& j, FactorizationKind kind, Element e, std::size_t n) {
  if (j.is_null()) return std::nullopt;
  std::vector<Factorization> out;
  for (const auto& f : j) {
    out.push_back({kind, set_from(f.at("left"), n), set_from(f.at("right"), n),
                   set_from(f.at("product"), n), e});
  }
  return out;
}

template <typename F>
std::optional<std::vector<Factorization>> within_budget(F&& enumerate) {
  try {
    return enumerate();
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

}  // namespace

std::string table_digest(const CayleyTable& t) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 2; ++b) {
      h ^= (v >> (8 * b)) & 0xFF;
      h *= 0x100000001b3ULL;
    }
  };
  mix(t.order());
  for (auto x : t.entries()) mix(x);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

AnalysisDocument analyze(const CayleyTable& t, bool with_factorizations) {
  AnalysisDocument doc;
  doc.digest = table_digest(t);
  doc.order = t.order();
  doc.associativity = t.associativity();
  doc.witness = t.witness();
  doc.idempotents = idempotents(t);
  if (!t.is_semigroup()) return doc;

  doc.predicates = GlobalPredicates{is_band(t),
                                    is_left_zero(t),
                                    is_right_zero(t),
                                    is_rectangular_band(t),
                                    is_right_group(t),
                                    is_left_group(t)};
  doc.profiles = idempotent_profiles(t);
  doc.lz_partition = lz_partition(t);
  doc.rz_partition = rz_partition(t);
  if (with_factorizations) {
    doc.factorizations.emplace();
    for (auto e : doc.idempotents) {
      doc.factorizations->push_back(
          {e, within_budget([&] { return enumerate_rect_bands(t, e); }),
           within_budget([&] { return enumerate_right_subgroups(t, e); }),
           within_budget([&] { return enumerate_left_subgroups(t, e); })});
    }
  }
  return doc;
}

json to_json(const AnalysisDocument& doc) {
  json j;
  j["digest"] = doc.digest;
  j["order"] = doc.order;
  j["associativity"] = {
      {"status", status_name(doc.associativity)},
      {"witness", doc.witness ? json{doc.witness->i, doc.witness->j, doc.witness->k}
                              : json()}};
  if (doc.predicates) {
    const auto& p = *doc.predicates;
    j["predicates"] = {{"band", p.band},
                       {"left_zero", p.left_zero},
                       {"right_zero", p.right_zero},
                       {"rectangular_band", p.rectangular_band},
                       {"right_group", p.right_group},
                       {"left_group", p.left_group}};
  } else {
    j["predicates"] = nullptr;
  }
  j["idempotents"] = set_json(doc.idempotents);
  j["profiles"] = json::array();
  for (const auto& p : doc.profiles) {
    j["profiles"].push_back({{"e", p.e},
                             {"lz", set_json(p.lz)},
                             {"rz", set_json(p.rz)},
                             {"local_monoid", set_json(p.local_monoid)},
                             {"left_monoid", set_json(p.left_monoid)},
                             {"right_monoid", set_json(p.right_monoid)},
                             {"zero_maximal", set_json(p.zero_maximal)},
                             {"h", set_json(p.h)},
                             {"rg", set_json(p.rg)},
                             {"lg", set_json(p.lg)}});
  }
  if (doc.lz_partition || doc.rz_partition) {
    j["partitions"] = {{"lz", partition_json(doc.lz_partition)},
                       {"rz", partition_json(doc.rz_partition)}};
  } else {
    j["partitions"] = nullptr;
  }
  if (doc.factorizations) {
    j["factorizations"] = json::array();
    for (const auto& f : *doc.factorizations) {
      j["factorizations"].push_back({{"e", f.e},
                                     {"rect_band", factor_list_json(f.rect_band)},
                                     {"right_group", factor_list_json(f.right_group)},
                                     {"left_group", factor_list_json(f.left_group)}});
    }
  }
  return j;
}

AnalysisDocument from_json(const json& j) {
  AnalysisDocument doc;
  doc.digest = j.at("digest").get<std::string>();
  doc.order = j.at("order").get<std::size_t>();
  const std::size_t n = doc.order;
  const auto& assoc = j.at("associativity");
  doc.associativity = status_from(assoc.at("status").get<std::string>());
  if (!assoc.at("witness").is_null()) {
    const auto& w = assoc.at("witness");
    doc.witness = AssocWitness{w.at(0).get<Element>(), w.at(1).get<Element>(),
                               w.at(2).get<Element>()};
  }
  if (!j.at("predicates").is_null()) {
    const auto& p = j.at("predicates");
    doc.predicates = GlobalPredicates{
        p.at("band").get<bool>(),        p.at("left_zero").get<bool>(),
        p.at("right_zero").get<bool>(),  p.at("rectangular_band").get<bool>(),
        p.at("right_group").get<bool>(), p.at("left_group").get<bool>()};
  }
  doc.idempotents = set_from(j.at("idempotents"), n);
  for (const auto& p : j.at("profiles")) {
    doc.profiles.push_back({p.at("e").get<Element>(),
                            set_from(p.at("lz"), n),
                            set_from(p.at("rz"), n),
                            set_from(p.at("local_monoid"), n),
                            set_from(p.at("left_monoid"), n),
                            set_from(p.at("right_monoid"), n),
                            set_from(p.at("zero_maximal"), n),
                            set_from(p.at("h"), n),
                            set_from(p.at("rg"), n),
                            set_from(p.at("lg"), n)});
  }
  if (!j.at("partitions").is_null()) {
    const auto& parts = j.at("partitions");
    doc.lz_partition = partition_from(parts.at("lz"), PartitionKind::LeftZero, n);
    doc.rz_partition = partition_from(parts.at("rz"), PartitionKind::RightZero, n);
  }
  if (j.contains("factorizations")) {
    doc.factorizations.emplace();
    for (const auto& f : j.at("factorizations")) {
      const auto e = f.at("e").get<Element>();
      doc.factorizations->push_back(
          {e, factor_list_from(f.at("rect_band"), FactorizationKind::RectBand, e, n),
           factor_list_from(f.at("right_group"), FactorizationKind::RightGroup, e, n),
           factor_list_from(f.at("left_group"), FactorizationKind::LeftGroup, e, n)});
    }
  }
  return doc;
}

std::string dump(const AnalysisDocument& doc) { return to_json(doc).dump(2) + "\n"; }

}  // namespace semi::cli
