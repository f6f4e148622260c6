#include "actbij/activities.hpp"

#include <algorithm>
#include <stdexcept>

#include "actbij/tutte.hpp"

namespace actbij {

namespace {

bool by_min(ElementSet a, ElementSet b) { return a.min() < b.min(); }

}  // namespace

Filtration::Filtration(std::vector<ElementSet> chain, int cyclic_index)
    : chain_(std::move(chain)), cyclic_index_(cyclic_index) {
  if (chain_.empty() || !chain_.front().empty()) throw std::invalid_argument("filtration must start at the empty set");
  if (cyclic_index_ < 0 || cyclic_index_ >= static_cast<int>(chain_.size()))
    throw std::invalid_argument("cyclic flat index out of range");
  for (size_t k = 0; k + 1 < chain_.size(); ++k)
    if (!chain_[k].subset_of(chain_[k + 1]) || chain_[k] == chain_[k + 1])
      throw std::invalid_argument("filtration chain is not strictly increasing");
  auto p = parts();
  for (int k = 0; k + 1 < static_cast<int>(p.size()); ++k) {
    bool ok = k + 1 < cyclic_index_ ? p[k].min() > p[k + 1].min()
              : k >= cyclic_index_  ? p[k].min() < p[k + 1].min()
                                    : true;
    if (!ok) throw std::invalid_argument("filtration part minima are out of order");
  }
}

std::vector<ElementSet> Filtration::parts() const {
  std::vector<ElementSet> out;
  for (size_t k = 0; k + 1 < chain_.size(); ++k) out.push_back(chain_[k + 1] - chain_[k]);
  return out;
}

Filtration filtration_from_parts(std::vector<ElementSet> cyclic_parts, std::vector<ElementSet> acyclic_parts) {
  std::sort(cyclic_parts.begin(), cyclic_parts.end(), [](ElementSet a, ElementSet b) { return a.min() > b.min(); });
  std::sort(acyclic_parts.begin(), acyclic_parts.end(), by_min);
  std::vector<ElementSet> chain{ElementSet{}};
  for (auto p : cyclic_parts) chain.push_back(chain.back() | p);
  for (auto p : acyclic_parts) chain.push_back(chain.back() | p);
  return Filtration(std::move(chain), static_cast<int>(cyclic_parts.size()));
}

std::string format_chain(const Filtration& f) {
  std::string out;
  for (int k = 0; k < static_cast<int>(f.chain().size()); ++k) {
    if (k) out += '<';
    std::string s = format_set(f.chain()[k]);
    out += k == f.cyclic_index() ? "[" + s + "]" : s;
  }
  return out;
}

std::string format_partition(const Filtration& f) {
  auto parts = f.parts();
  std::vector<ElementSet> cyc(parts.begin(), parts.begin() + f.cyclic_index());
  std::vector<ElementSet> acyc(parts.begin() + f.cyclic_index(), parts.end());
  std::sort(cyc.begin(), cyc.end(), by_min);
  std::string out;
  for (auto p : cyc) out += (out.empty() ? "" : "|") + format_set(p) + "*";
  for (auto p : acyc) out += (out.empty() ? "" : "|") + format_set(p);
  return out.empty() ? "-" : out;
}

BasisActivities basis_activities(const FundamentalTableau& t) {
  BasisActivities act;
  for (Element e : t.ground())
    if (t[e].support().min() == e) (t.basis().contains(e) ? act.internal : act.external) |= ElementSet::single(e);
  return act;
}

BasisActivities basis_activities(const OrientedMatroid& m, ElementSet basis) {
  return basis_activities(FundamentalTableau(m, basis));
}

OrientationActivities orientation_activities(const OrientedMatroid& m) {
  OrientationActivities act;
  for (const auto& d : m.cocircuits())
    if (d.positive_up_to_sign()) act.dual_active |= ElementSet::single(d.support().min());
  for (const auto& c : m.circuits())
    if (c.positive_up_to_sign()) act.active |= ElementSet::single(c.support().min());
  return act;
}

Filtration active_filtration_orientation(const OrientedMatroid& m) {
  const ElementSet ground = m.ground();
  auto act = orientation_activities(m);
  auto pos_circuits = positive_circuits(m);
  auto pos_cocircuits = positive_cocircuits(m);

  // cyclic side: F'_k = union of positive circuits with min >= a'_{k+1}
  std::vector<ElementSet> chain{ElementSet{}};
  auto cyc_thresholds = act.active.elements();
  for (int k = static_cast<int>(cyc_thresholds.size()) - 1; k >= 0; --k) {
    ElementSet f;
    for (const auto& c : pos_circuits)
      if (c.support().min() >= cyc_thresholds[k]) f |= c.support();
    chain.push_back(f);
  }
  const int cyclic_index = static_cast<int>(cyc_thresholds.size());

  // acyclic side: F_k = E - union of positive cocircuits with min >= a_{k+1}
  auto thresholds = act.dual_active.elements();
  ElementSet f0 = ground;
  for (const auto& d : pos_cocircuits) f0 -= d.support();
  if (f0 != chain.back()) throw std::logic_error("union of positive circuits is not the complement of positive cocircuits");
  for (size_t k = 1; k <= thresholds.size(); ++k) {
    ElementSet f = ground;
    if (k < thresholds.size())
      for (const auto& d : pos_cocircuits)
        if (d.support().min() >= thresholds[k]) f -= d.support();
    chain.push_back(f);
  }
  return Filtration(std::move(chain), cyclic_index);
}

std::vector<OrientedMatroid> active_minors(const OrientedMatroid& m, const Filtration& f) {
  std::vector<OrientedMatroid> out;
  const auto& ch = f.chain();
  for (size_t k = 0; k + 1 < ch.size(); ++k) out.push_back(minor(m, ch[k + 1], ch[k]));
  return out;
}

bool is_connected_filtration(const OrientedMatroid& m, const Filtration& f) {
  auto minors = active_minors(m, f);
  for (int k = 0; k < static_cast<int>(minors.size()); ++k) {
    const auto& mi = minors[k];
    if (mi.size() == 1) {
      // upper minors must not be a loop, lower minors not an isthmus
      bool ok = f.part_is_cyclic(k) ? mi.rank() == 0 : mi.rank() == 1;
      if (!ok) return false;
    } else if (!is_connected(mi)) {
      return false;
    }
  }
  return true;
}

bool is_connected_filtration_by_beta(const OrientedMatroid& m, const Filtration& f) {
  auto minors = active_minors(m, f);
  for (int k = 0; k < static_cast<int>(minors.size()); ++k)
    if ((f.part_is_cyclic(k) ? beta_star(minors[k]) : beta(minors[k])) == 0) return false;
  return true;
}

std::vector<Element> part_mapping(const FundamentalTableau& t) {
  std::vector<Element> part(kMaxElements, 0);
  const ElementSet basis = t.basis();
  ElementSet internal_parts, external_parts;  // elements already assigned, by side
  for (Element e : t.ground()) {
    const ElementSet row = t[e].support();
    const bool in_basis = basis.contains(e);
    ElementSet& own_side = in_basis ? internal_parts : external_parts;
    ElementSet& other_side = in_basis ? external_parts : internal_parts;
    if (row.min() == e) {
      part[e - 1] = e;
      own_side |= ElementSet::single(e);
      continue;
    }
    ElementSet earlier = row & ElementSet::first(e - 1);
    // a smaller element of the other side pulls e to that side, into the latest such part
    ElementSet crossing = earlier & other_side;
    if (!crossing.empty()) {
      Element best = 0;
      for (Element c : crossing) best = std::max(best, part[c - 1]);
      part[e - 1] = best;
      other_side |= ElementSet::single(e);
    } else {
      Element best = kMaxElements + 1;
      for (Element c : earlier) best = std::min(best, part[c - 1]);
      part[e - 1] = best;
      own_side |= ElementSet::single(e);
    }
  }
  return part;
}

Filtration filtration_from_part_mapping(ElementSet ground, const std::vector<Element>& part,
                                        ElementSet external_minima) {
  std::vector<ElementSet> cyc, acyc;
  ElementSet minima;
  for (Element e : ground) minima |= ElementSet::single(part[e - 1]);
  for (Element a : minima) {
    ElementSet p;
    for (Element e : ground)
      if (part[e - 1] == a) p |= ElementSet::single(e);
    (external_minima.contains(a) ? cyc : acyc).push_back(p);
  }
  return filtration_from_parts(std::move(cyc), std::move(acyc));
}

Filtration active_filtration_basis(const OrientedMatroid& m, ElementSet basis) {
  FundamentalTableau t(m, basis);
  return filtration_from_part_mapping(m.ground(), part_mapping(t), basis_activities(t).external);
}

std::vector<ElementSet> activity_class(const OrientedMatroid& ref, ElementSet a) {
  auto parts = active_filtration_orientation(reorient(ref, a)).parts();
  std::sort(parts.begin(), parts.end(), by_min);
  require_enumerable(static_cast<int>(parts.size()), "activity_class");
  std::vector<ElementSet> out;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << parts.size()); ++s) {
    ElementSet x = a;
    for (size_t k = 0; k < parts.size(); ++k)
      if ((s >> k) & 1U) x ^= parts[k];
    out.push_back(x);
  }
  return out;
}

Interval interval_of_basis(const OrientedMatroid& m, ElementSet basis) {
  auto act = basis_activities(m, basis);
  return {basis - act.internal, basis | act.external};
}

SubsetParams subset_params(const OrientedMatroid& m, ElementSet a) {
  for (ElementSet b : bases(m)) {
    auto act = basis_activities(m, b);
    Interval iv{b - act.internal, b | act.external};
    if (!iv.contains(a)) continue;
    return {b, act.internal & a, act.internal - a, act.external - a, act.external & a};
  }
  throw std::logic_error("basis intervals do not cover " + format_set(a));
}

ReorientationParams reorientation_params(const OrientedMatroid& ref, ElementSet a) {
  auto act = orientation_activities(reorient(ref, a));
  return {act.dual_active - a, act.dual_active & a, act.active - a, act.active & a};
}

}  // namespace actbij
