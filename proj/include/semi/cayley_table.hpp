#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semi/element_set.hpp"

namespace semi {

// A triple with (i*j)*k != i*(j*k).
struct AssocWitness {
  Element i = 0;
  Element j = 0;
  Element k = 0;

  friend bool operator==(const AssocWitness&, const AssocWitness&) = default;
};

enum class AssocStatus { Unchecked, Valid, Invalid };

// Multiplication table of a finite magma on {0, ..., n-1}, stored row-major
// together with its transpose so that both rows and columns scan
// contiguously. Immutable once built.
class CayleyTable {
 public:
  // Range-checks the entries and validates associativity.
  static CayleyTable make(std::size_t order, std::vector<Element> entries);
  static CayleyTable from_rows(
      std::initializer_list<std::initializer_list<int>> rows);
  // Range-checks only; associativity() stays Unchecked.
  static CayleyTable unchecked(std::size_t order, std::vector<Element> entries);
  // For producers that already guarantee associativity (the enumerator,
  // induced subtables of semigroups). Range-checks only.
  static CayleyTable assume_associative(std::size_t order,
                                        std::vector<Element> entries);

  std::size_t order() const { return order_; }
  Element operator()(std::size_t i, std::size_t j) const {
    return rows_[i * order_ + j];
  }
  std::span<const Element> row(std::size_t i) const {
    return {rows_.data() + i * order_, order_};
  }
  std::span<const Element> column(std::size_t j) const {
    return {cols_.data() + j * order_, order_};
  }
  // Row-major entries, exactly order()^2 of them.
  std::span<const Element> entries() const {
    return {rows_.data(), order_ * order_};
  }
  // Row-major storage followed by one padding entry (for gather kernels).
  const Element* padded_data() const { return rows_.data(); }

  AssocStatus associativity() const { return status_; }
  const std::optional<AssocWitness>& witness() const { return witness_; }
  bool is_semigroup() const { return status_ == AssocStatus::Valid; }
  // Throws PreconditionError naming `operation` unless is_semigroup().
  void require_semigroup(std::string_view operation) const;

  // The opposite magma, a * b := b * a. Preserves associativity status.
  CayleyTable opposite() const;

  ElementSet all() const { return ElementSet::full(order_); }
  ElementSet empty_set() const { return ElementSet(order_); }

  // One row per line, entries separated by single spaces.
  std::string to_string() const;

  friend bool operator==(const CayleyTable& a, const CayleyTable& b) {
    return a.order_ == b.order_ && a.rows_ == b.rows_;
  }

 private:
  CayleyTable(std::size_t order, std::vector<Element> entries);

  std::size_t order_ = 0;
  std::vector<Element> rows_;
  std::vector<Element> cols_;
  AssocStatus status_ = AssocStatus::Unchecked;
  std::optional<AssocWitness> witness_;
};

// nullopt when every triple associates, otherwise the lexicographically
// first violating (i, j, k).
std::optional<AssocWitness> validate_associativity(const CayleyTable& t);

// { x*y : x in a, y in b }.
ElementSet product_sets(const CayleyTable& t, const ElementSet& a,
                        const ElementSet& b);

// Smallest subsemigroup containing a nonempty a.
ElementSet closure(const CayleyTable& t, const ElementSet& a);

// The table induced on a product-closed subset, relabelled 0..|T|-1 in
// ascending order of members.
struct InducedTable {
  CayleyTable table;
  std::vector<Element> members;
};
std::optional<InducedTable> induced_subtable(const CayleyTable& t,
                                             const ElementSet& subset);

}  // namespace semi
