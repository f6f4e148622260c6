#include "actbij/tutte.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "actbij/activities.hpp"

namespace actbij {

std::uint64_t TuttePolynomial::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? 0 : it->second;
}

void TuttePolynomial::add(int i, int j, std::uint64_t c) {
  if (c) terms_[{i, j}] += c;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::int64_t TuttePolynomial::evaluate(std::int64_t x, std::int64_t y) const {
  std::int64_t sum = 0;
  for (const auto& [ij, c] : terms_) sum += static_cast<std::int64_t>(c) * ipow(x, ij.first) * ipow(y, ij.second);
  return sum;
}

TuttePolynomial TuttePolynomial::times_x() const {
  TuttePolynomial p;
  for (const auto& [ij, c] : terms_) p.add(ij.first + 1, ij.second, c);
  return p;
}

TuttePolynomial TuttePolynomial::times_y() const {
  TuttePolynomial p;
  for (const auto& [ij, c] : terms_) p.add(ij.first, ij.second + 1, c);
  return p;
}

TuttePolynomial TuttePolynomial::operator+(const TuttePolynomial& o) const {
  TuttePolynomial p = *this;
  for (const auto& [ij, c] : o.terms_) p.add(ij.first, ij.second, c);
  return p;
}

std::string TuttePolynomial::to_string() const {
  std::vector<std::pair<int, int>> order;
  for (const auto& [ij, c] : terms_) order.push_back(ij);
  auto rank = [](std::pair<int, int> ij) {
    auto [i, j] = ij;
    int group = j == 0 ? (i == 0 ? 3 : 0) : i == 0 ? 2 : 1;
    return std::tuple(group, group == 2 ? 0 : -i, j);
  };
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return rank(a) < rank(b); });
  auto power = [](const char* var, int k) {
    return k == 0 ? std::string() : k == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(k);
  };
  std::string out;
  for (auto ij : order) {
    std::uint64_t c = terms_.at(ij);
    std::string mono = power("x", ij.first) + power("y", ij.second);
    if (!out.empty()) out += '+';
    out += (c != 1 || mono.empty()) ? std::to_string(c) + mono : mono;
  }
  return out.empty() ? "0" : out;
}

TuttePolynomial tutte_from_bases(const OrientedMatroid& m) {
  TuttePolynomial t;
  for (ElementSet b : bases(m)) {
    auto act = basis_activities(m, b);
    t.add(act.internal.size(), act.external.size(), 1);
  }
  return t;
}

TuttePolynomial tutte_from_orientations(const OrientedMatroid& m) {
  require_enumerable(m.size(), "tutte_from_orientations");
  std::map<std::pair<int, int>, std::uint64_t> counts;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << m.size()); ++s) {
    const ElementSet a = m.ground().pick(s);
    ElementSet dual_active, active;
    for (const auto& d : m.cocircuits())
      if (d.reoriented(a).positive_up_to_sign()) dual_active |= ElementSet::single(d.support().min());
    for (const auto& c : m.circuits())
      if (c.reoriented(a).positive_up_to_sign()) active |= ElementSet::single(c.support().min());
    ++counts[{dual_active.size(), active.size()}];
  }
  TuttePolynomial t;
  for (const auto& [ij, o] : counts) {
    std::uint64_t scale = std::uint64_t{1} << (ij.first + ij.second);
    if (o % scale != 0)
      throw std::logic_error("reorientation count " + std::to_string(o) + " not divisible by " + std::to_string(scale));
    t.add(ij.first, ij.second, o / scale);
  }
  return t;
}

TuttePolynomial tutte_delcon_oracle(const OrientedMatroid& m) {
  std::unordered_map<std::uint64_t, TuttePolynomial> memo;
  auto go = [&](auto&& self, ElementSet deleted, ElementSet contracted) -> TuttePolynomial {
    const ElementSet rest = m.ground() - deleted - contracted;
    if (rest.empty()) {
      TuttePolynomial one;
      one.add(0, 0, 1);
      return one;
    }
    const std::uint64_t key = (std::uint64_t{deleted.mask()} << 32) | contracted.mask();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const Element e = rest.max();
    const ElementSet e_set = ElementSet::single(e);
    const int r_c = rank_of(m, contracted);
    TuttePolynomial result;
    if (rank_of(m, contracted | e_set) == r_c) {
      result = self(self, deleted | e_set, contracted).times_y();
    } else if (rank_of(m, (rest - e_set) | contracted) < rank_of(m, rest | contracted)) {
      result = self(self, deleted, contracted | e_set).times_x();
    } else {
      result = self(self, deleted | e_set, contracted) + self(self, deleted, contracted | e_set);
    }
    memo.emplace(key, result);
    return result;
  };
  return go(go, ElementSet{}, ElementSet{});
}

std::uint64_t beta(const OrientedMatroid& m) { return tutte_from_bases(m).coefficient(1, 0); }

std::uint64_t beta_star(const OrientedMatroid& m) { return tutte_from_bases(m).coefficient(0, 1); }

std::int64_t four_var_subset_sum(const OrientedMatroid& m, std::int64_t x, std::int64_t u, std::int64_t y,
                                 std::int64_t v) {
  require_enumerable(m.size(), "four_var_subset_sum");
  struct Owner {
    Interval iv;
    ElementSet internal, external;
  };
  std::vector<Owner> owners;
  for (ElementSet b : bases(m)) {
    auto act = basis_activities(m, b);
    owners.push_back({{b - act.internal, b | act.external}, act.internal, act.external});
  }
    std::int64_t sum = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << m.size()); ++s) {
    const ElementSet a = m.ground().pick(s);
    const Owner* owner = nullptr;
    for (const auto& o : owners)
      if (o.iv.contains(a)) {
        if (owner) throw std::logic_error("basis intervals overlap at " + format_set(a));
        owner = &o;
      }
    if (!owner) throw std::logic_error("basis intervals miss " + format_set(a));
    sum += ipow(x, (owner->internal & a).size()) * ipow(u, (owner->internal - a).size()) *
           ipow(y, (owner->external - a).size()) * ipow(v, (owner->external & a).size());
  }
  return sum;
}

std::int64_t four_var_reorientation_sum(const OrientedMatroid& ref, std::int64_t x, std::int64_t u, std::int64_t y,
                                        std::int64_t v) {
  require_enumerable(ref.size(), "four_var_reorientation_sum");
    std::int64_t sum = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << ref.size()); ++s) {
    const ElementSet a = ref.ground().pick(s);
    auto p = reorientation_params(ref, a);
    sum += ipow(x, p.theta_star.size()) * ipow(u, p.theta_star_bar.size()) * ipow(y, p.theta.size()) *
           ipow(v, p.theta_bar.size());
  }
  return sum;
}

}  // namespace actbij
