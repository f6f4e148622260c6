#include "actbij/element_set.hpp"
#include "actbij/signed_set.hpp"

#include <string>

namespace actbij {

void require_enumerable(int n, const char* what) {
  if (n > kMaxEnumeration)
    throw EnumerationLimit(std::string(what) + ": ground set of size " + std::to_string(n) +
                           " exceeds the enumeration limit of " + std::to_string(kMaxEnumeration));
}

ElementSet ElementSet::of(std::initializer_list<Element> elems) {
  ElementSet s;
  for (Element e : elems) s = s.with(e);
  return s;
}

ElementSet ElementSet::of(const std::vector<Element>& elems) {
  ElementSet s;
  for (Element e : elems) s = s.with(e);
  return s;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (Element e : *this) out.push_back(e);
  return out;
}

ElementSet ElementSet::pick(std::uint32_t selector) const {
  ElementSet out;
  for (Element e : *this) {
    if (selector & 1U) out = out.with(e);
    selector >>= 1;
  }
  return out;
}

bool lex_less(ElementSet a, ElementSet b) {
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
    if (*ia != *ib) return *ia < *ib;
  return ia == a.end() && ib != b.end();
}

std::string format_set(ElementSet s) {
  if (s.empty()) return "-";
  std::string out;
  for (Element e : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

SignedSet SignedSet::make(ElementSet pos, ElementSet neg) {
  if (pos.intersects(neg)) throw std::invalid_argument("signed set with an element of both signs");
  return {pos, neg};
}

SignedSet SignedSet::canonical() const {
  Element m = support().min();
  return (m != 0 && negative.contains(m)) ? opposite() : *this;
}

SignedSet compose(const SignedSet& x, const SignedSet& y) {
  ElementSet free = ElementSet::from_mask(~x.support().mask());
  return {x.positive | (y.positive & free), x.negative | (y.negative & free)};
}

std::string format_signs(const SignedSet& s, int n) {
  std::string out(n, '0');
  for (Element e = 1; e <= n; ++e) out[e - 1] = s.positive.contains(e) ? '+' : s.negative.contains(e) ? '-' : '0';
  return out;
}

}  // namespace actbij
