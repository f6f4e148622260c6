#pragma once

#include <compare>
#include <string>

#include "actbij/element_set.hpp"

namespace actbij {

// A signed subset (X+, X-). Used for circuits, cocircuits and their compositions.
struct SignedSet {
  ElementSet positive;
  ElementSet negative;

  static SignedSet make(ElementSet pos, ElementSet neg);

  ElementSet support() const { return positive | negative; }
  bool is_zero() const { return support().empty(); }
  // +1, -1 or 0
  int sign(Element e) const { return positive.contains(e) ? 1 : negative.contains(e) ? -1 : 0; }

  SignedSet opposite() const { return {negative, positive}; }
  SignedSet reoriented(ElementSet a) const {
    return {(positive - a) | (negative & a), (negative - a) | (positive & a)};
  }
  SignedSet restricted(ElementSet f) const { return {positive & f, negative & f}; }
  // representative with the smallest support element positive
  SignedSet canonical() const;
  // same pair, flipped if needed so that e is positive
  SignedSet oriented_positive_on(Element e) const { return sign(e) < 0 ? opposite() : *this; }

  bool all_positive() const { return negative.empty() && !positive.empty(); }
  // either representative is all-positive
  bool positive_up_to_sign() const { return !is_zero() && (negative.empty() || positive.empty()); }

  friend bool operator==(const SignedSet&, const SignedSet&) = default;
  friend auto operator<=>(const SignedSet&, const SignedSet&) = default;
};

// sign of X where nonzero, else sign of Y
SignedSet compose(const SignedSet& x, const SignedSet& y);

// '+', '-', '0' per element of {1..n}
std::string format_signs(const SignedSet& s, int n);

}  // namespace actbij
