#include "semi/cayley_table.hpp"

#include <sstream>

#include "semi/errors.hpp"
#include "semi/kernels.hpp"

namespace semi {

CayleyTable::CayleyTable(std::size_t order, std::vector<Element> entries)
    : order_(order) {
  if (order == 0) throw DomainError("table order must be positive");
  if (order > kMaxOrder) {
    throw DomainError("table order " + std::to_string(order) +
                      " exceeds the supported maximum " +
                      std::to_string(kMaxOrder));
  }
  if (entries.size() != order * order) {
    throw DomainError("table of order " + std::to_string(order) + " needs " +
                      std::to_string(order * order) + " entries, got " +
                      std::to_string(entries.size()));
  }
  for (std::size_t p = 0; p < entries.size(); ++p) {
    if (entries[p] >= order) {
      throw DomainError("entry " + std::to_string(entries[p]) + " at row " +
                        std::to_string(p / order) + ", col " +
                        std::to_string(p % order) + " is outside [0, " +
                        std::to_string(order) + ")");
    }
  }
  rows_ = std::move(entries);
  cols_.resize(order * order + 1, 0);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      cols_[j * order + i] = rows_[i * order + j];
    }
  }
  rows_.push_back(0);
}

CayleyTable CayleyTable::unchecked(std::size_t order,
                                   std::vector<Element> entries) {
  return CayleyTable(order, std::move(entries));
}

CayleyTable CayleyTable::assume_associative(std::size_t order,
                                            std::vector<Element> entries) {
  CayleyTable t(order, std::move(entries));
  t.status_ = AssocStatus::Valid;
  return t;
}

CayleyTable CayleyTable::make(std::size_t order, std::vector<Element> entries) {
  CayleyTable t(order, std::move(entries));
  t.witness_ = validate_associativity(t);
  t.status_ = t.witness_ ? AssocStatus::Invalid : AssocStatus::Valid;
  return t;
}

CayleyTable CayleyTable::from_rows(
    std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t n = rows.size();
  std::vector<Element> entries;
  entries.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw DomainError("table rows must have length n");
    for (int x : r) {
      if (x < 0) throw DomainError("negative table entry");
      entries.push_back(static_cast<Element>(x));
    }
  }
  return make(n, std::move(entries));
}

void CayleyTable::require_semigroup(std::string_view operation) const {
  if (status_ == AssocStatus::Valid) return;
  std::string why = status_ == AssocStatus::Invalid
                        ? "the table is not associative"
                        : "associativity has not been validated";
  throw PreconditionError(std::string(operation) + " requires a semigroup: " +
                          why);
}

CayleyTable CayleyTable::opposite() const {
  CayleyTable t(order_, std::vector<Element>(cols_.begin(), cols_.end() - 1));
  t.status_ = status_;
  // The mirrored witness (k, j, i) is not lexicographically first in
  // general, so search again.
  if (witness_) t.witness_ = validate_associativity(t);
  return t;
}

std::string CayleyTable::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) {
      if (j != 0) out << ' ';
      out << (*this)(i, j);
    }
    out << '\n';
  }
  return out.str();
}

std::optional<AssocWitness> validate_associativity(const CayleyTable& t) {
  const auto& k = kernels::active();
  const std::size_t n = t.order();
  const Element* base = t.padded_data();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // (i*j)*k is row (i*j); i*(j*k) gathers row i at the indices of row j.
      const auto left = t.row(t(i, j));
      const std::size_t bad = k.first_gather_mismatch(
          base + i * n, t.row(j).data(), left.data(), n);
      if (bad != n) {
        return AssocWitness{static_cast<Element>(i), static_cast<Element>(j),
                            static_cast<Element>(bad)};
      }
    }
  }
  return std::nullopt;
}

ElementSet product_sets(const CayleyTable& t, const ElementSet& a,
                        const ElementSet& b) {
  if (a.universe() != t.order() || b.universe() != t.order()) {
    throw UniverseMismatch("product_sets: operand universe differs from order " +
                           std::to_string(t.order()));
  }
  ElementSet out(t.order());
  for (auto x : a) {
    const auto r = t.row(x);
    for (auto y : b) out.insert(r[y]);
  }
  return out;
}

ElementSet closure(const CayleyTable& t, const ElementSet& a) {
  t.require_semigroup("closure");
  if (a.universe() != t.order()) {
    throw UniverseMismatch("closure: set universe differs from table order");
  }
  if (a.empty()) throw EmptySetError("closure of the empty set");
  ElementSet out = a;
  std::vector<Element> members = a.members();
  // Every pair is multiplied once: new members against all earlier ones.
  for (std::size_t next = 0; next < members.size(); ++next) {
    const Element x = members[next];
    for (std::size_t m = 0; m <= next; ++m) {
      const Element y = members[m];
      for (Element p : {t(x, y), t(y, x)}) {
        if (!out.contains(p)) {
          out.insert(p);
          members.push_back(p);
        }
      }
    }
  }
  return out;
}

std::optional<InducedTable> induced_subtable(const CayleyTable& t,
                                             const ElementSet& subset) {
  if (subset.universe() != t.order()) {
    throw UniverseMismatch("induced_subtable: universe differs from order");
  }
  if (subset.empty()) throw EmptySetError("induced subtable of the empty set");
  std::vector<Element> members = subset.members();
  std::vector<Element> position(t.order(), 0);
  for (std::size_t p = 0; p < members.size(); ++p) {
    position[members[p]] = static_cast<Element>(p);
  }
  const std::size_t m = members.size();
  std::vector<Element> entries(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const Element p = t(members[a], members[b]);
      if (!subset.contains(p)) return std::nullopt;
      entries[a * m + b] = position[p];
    }
  }
  auto table = t.is_semigroup()
                   ? CayleyTable::assume_associative(m, std::move(entries))
                   : CayleyTable::make(m, std::move(entries));
  return InducedTable{std::move(table), std::move(members)};
}

}  // namespace semi
