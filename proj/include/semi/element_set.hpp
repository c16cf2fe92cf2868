#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace semi {

// Index of an element of a finite magma, 0-based.
using Element = std::uint16_t;

// Largest table order accepted for analysis.
inline constexpr std::size_t kMaxOrder = 4096;

// A subset of [0, universe) stored as a bit vector. Equality is extensional
// and requires equal universes.
class ElementSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    const_iterator() = default;
    Element operator*() const { return static_cast<Element>(pos_); }
    const_iterator& operator++() {
      advance(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.pos_ == b.pos_;
    }

   private:
    friend class ElementSet;
    const_iterator(const ElementSet* set, std::size_t start) : set_(set) {
      advance(start);
    }
    void advance(std::size_t from);

    const ElementSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  ElementSet(std::size_t universe, std::initializer_list<std::size_t> members);

  static ElementSet full(std::size_t universe);
  static ElementSet singleton(std::size_t universe, std::size_t x);
  // Bit i of mask selects element i. Requires universe <= 64.
  static ElementSet from_mask(std::size_t universe, std::uint64_t mask);
  static ElementSet from_members(std::size_t universe,
                                 std::span<const Element> members);

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const;
  bool contains(std::size_t x) const {
    return x < universe_ && ((words_[x / kWordBits] >> (x % kWordBits)) & 1U);
  }
  void insert(std::size_t x);
  void erase(std::size_t x);
  void clear();

  // Smallest member; the set must be nonempty.
  Element min() const;
  std::vector<Element> members() const;
  std::uint64_t mask() const;

  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator-=(const ElementSet& other);
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  // Lexicographic on the ascending member sequences; a proper prefix sorts
  // first. Universes are compared first.
  friend std::strong_ordering operator<=>(const ElementSet& a,
                                          const ElementSet& b);

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const {
    const_iterator it;
    it.set_ = this;
    it.pos_ = universe_;
    return it;
  }

  std::span<const Word> words() const { return {words_.data(), words_.size()}; }
  std::span<Word> mutable_words() { return {words_.data(), words_.size()}; }

  // "{0, 2, 3}"
  std::string to_string() const;

 private:
  void check_same_universe(const ElementSet& other) const;

  std::size_t universe_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

}  // namespace semi
