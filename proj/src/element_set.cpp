#include "semi/element_set.hpp"

#include <sstream>

#include "semi/errors.hpp"

namespace semi {

namespace {

std::size_t word_count(std::size_t universe) {
  return (universe + ElementSet::kWordBits - 1) / ElementSet::kWordBits;
}

}  // namespace

void ElementSet::const_iterator::advance(std::size_t from) {
  const std::size_t n = set_->universe_;
  pos_ = n;
  if (from >= n) return;
  std::size_t w = from / kWordBits;
  Word bits = set_->words_[w] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (bits != 0) {
      pos_ = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
      return;
    }
    if (++w == set_->words_.size()) return;
    bits = set_->words_[w];
  }
}

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

ElementSet::ElementSet(std::size_t universe,
                       std::initializer_list<std::size_t> members)
    : ElementSet(universe) {
  for (auto x : members) insert(x);
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (auto& w : s.words_) w = ~Word{0};
  if (auto tail = universe % kWordBits; tail != 0) {
    s.words_.back() = (Word{1} << tail) - 1;
  }
  return s;
}

ElementSet ElementSet::singleton(std::size_t universe, std::size_t x) {
  ElementSet s(universe);
  s.insert(x);
  return s;
}

ElementSet ElementSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > kWordBits) {
    throw UniverseMismatch("from_mask requires a universe of at most 64");
  }
  ElementSet s(universe);
  if (universe == 0) return s;
  if (universe < kWordBits) mask &= (Word{1} << universe) - 1;
  s.words_[0] = mask;
  return s;
}

ElementSet ElementSet::from_members(std::size_t universe,
                                    std::span<const Element> members) {
  ElementSet s(universe);
  for (auto x : members) s.insert(x);
  return s;
}

std::size_t ElementSet::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool ElementSet::empty() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

void ElementSet::insert(std::size_t x) {
  if (x >= universe_) {
    throw UniverseMismatch("element " + std::to_string(x) +
                           " outside universe of size " +
                           std::to_string(universe_));
  }
  words_[x / kWordBits] |= Word{1} << (x % kWordBits);
}

void ElementSet::erase(std::size_t x) {
  if (x < universe_) words_[x / kWordBits] &= ~(Word{1} << (x % kWordBits));
}

void ElementSet::clear() {
  for (auto& w : words_) w = 0;
}

Element ElementSet::min() const {
  auto it = begin();
  if (it == end()) throw EmptySetError("min() of an empty set");
  return *it;
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  out.reserve(size());
  for (auto x : *this) out.push_back(x);
  return out;
}

std::uint64_t ElementSet::mask() const {
  if (universe_ > kWordBits) {
    throw UniverseMismatch("mask() requires a universe of at most 64");
  }
  return words_.empty() ? 0 : words_[0];
}

void ElementSet::check_same_universe(const ElementSet& other) const {
  if (universe_ != other.universe_) {
    throw UniverseMismatch("element sets over universes of size " +
                           std::to_string(universe_) + " and " +
                           std::to_string(other.universe_));
  }
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  auto ia = a.begin();
  auto ib = b.begin();
  const auto ea = a.end();
  const auto eb = b.end();
  for (; ia != ea && ib != eb; ++ia, ++ib) {
    if (auto c = *ia <=> *ib; c != 0) return c;
  }
  if (ia == ea && ib == eb) return std::strong_ordering::equal;
  return ia == ea ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string ElementSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto x : *this) {
    if (!first) out << ", ";
    out << x;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace semi
