#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace actbij {

// Elements are 1-based positions in the linear order of the ground set.
using Element = int;

// Hard limit of the bitmask representation.
inline constexpr int kMaxElements = 32;
// Anything that walks 2^n subsets or all bases refuses larger ground sets.
inline constexpr int kMaxEnumeration = 24;

class EnumerationLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

void require_enumerable(int n, const char* what);

// Set of elements stored as a bitmask, bit e-1 for element e.
class ElementSet {
 public:
  using Mask = std::uint32_t;

  constexpr ElementSet() = default;
  static constexpr ElementSet from_mask(Mask m) {
    ElementSet s;
    s.bits_ = m;
    return s;
  }
  static ElementSet of(std::initializer_list<Element> elems);
  static ElementSet of(const std::vector<Element>& elems);
  // {1, ..., n}
  static constexpr ElementSet first(int n) {
    return from_mask(n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1));
  }
  static constexpr ElementSet single(Element e) { return from_mask(Mask{1} << (e - 1)); }

  constexpr Mask mask() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Element e) const { return e >= 1 && e <= 32 && ((bits_ >> (e - 1)) & 1U); }
  // 0 for the empty set
  constexpr Element min() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }
  constexpr Element max() const { return bits_ ? 32 - std::countl_zero(bits_) : 0; }
  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(ElementSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr ElementSet with(Element e) const { return from_mask(bits_ | single(e).bits_); }
  constexpr ElementSet without(Element e) const { return from_mask(bits_ & ~single(e).bits_); }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return from_mask(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return from_mask(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return from_mask(a.bits_ & ~b.bits_); }
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) { return from_mask(a.bits_ ^ b.bits_); }
  ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }
  ElementSet& operator^=(ElementSet o) { bits_ ^= o.bits_; return *this; }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  // mask order, only for use as a map key
  friend constexpr auto operator<=>(ElementSet a, ElementSet b) { return a.bits_ <=> b.bits_; }

  class iterator {
   public:
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    explicit constexpr iterator(Mask m) : rest_(m) {}
    constexpr Element operator*() const { return std::countr_zero(rest_) + 1; }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;
   private:
    Mask rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Element> elements() const;
  // The subset made of the k-th smallest elements for each bit k of selector.
  ElementSet pick(std::uint32_t selector) const;

 private:
  Mask bits_ = 0;
};

// Lexicographic comparison of the ascending element sequences.
bool lex_less(ElementSet a, ElementSet b);

// "1,3,6", or "-" for the empty set.
std::string format_set(ElementSet s);

}  // namespace actbij
