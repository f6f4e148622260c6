#include "actbij/bijection.hpp"

#include <stdexcept>

namespace actbij {

namespace {

enum class Side { kBounded, kDualBounded };

Side side_of(const OrientedMatroid& m) {
  const Element p = m.ground().min();
  if (p != 0 && is_bounded(m, p)) return Side::kBounded;
  if (p != 0 && is_dual_bounded(m, p)) return Side::kDualBounded;
  throw std::invalid_argument("matroid is neither bounded nor dual-bounded w.r.t. its smallest element");
}

bool opposite_to_min(const SignedSet& row, Element e) {
  Element m = row.support().min();
  return m != e && row.sign(m) * row.sign(e) < 0;
}

bool sign_criterion(const OrientedMatroid& m, ElementSet basis, Side side) {
  if (!is_basis(m, basis)) return false;
  const Element p = m.ground().min();
  FundamentalTableau t(m, basis);
  for (Element e : m.ground()) {
    bool skip = e == p && (side == Side::kBounded) == basis.contains(e);
    if (!skip && !opposite_to_min(t[e], e)) return false;
  }
  return true;
}

bool composition_conditions(const OrientedMatroid& m, ElementSet basis, Side side) {
  if (!is_basis(m, basis)) return false;
  const Element p = m.ground().min();
  const ElementSet ground = m.ground();
  FundamentalTableau t(m, basis);
  SignedSet covector, vector;
  for (Element b : basis) covector = compose(covector, t[b]);
  for (Element e : ground - basis) vector = compose(vector, t[e]);
  // p lies in no fundamental circuit when it is an isthmus, and in no
  // fundamental cocircuit when it is a loop; it then carries no sign.
  auto positive_but_p = [&](const SignedSet& s) {
    ElementSet rest = ground.without(p);
    return s.positive == rest && (s.negative == ElementSet::single(p) || (s.negative.empty() && ground.size() == 1));
  };
  auto positive = [&](const SignedSet& s) { return s.positive == ground && s.negative.empty(); };
  if (side == Side::kBounded) return positive(covector) && positive_but_p(vector);
  return positive_but_p(covector) && positive(vector);
}

// The compositions alone also accept some bases with several active
// elements (e.g. 12 in the triangle reoriented at 3), so the basis must be
// uniactive on the right side as well.
bool composition_criterion(const OrientedMatroid& m, ElementSet basis, Side side) {
  if (!is_basis(m, basis)) return false;
  auto act = basis_activities(m, basis);
  bool uniactive = side == Side::kBounded ? act.internal.size() == 1 && act.external.empty()
                                          : act.internal.empty() && act.external.size() == 1;
  return uniactive && composition_conditions(m, basis, side);
}

ElementSet scan(const OrientedMatroid& m, bool (*accept)(const OrientedMatroid&, ElementSet)) {
  ElementSet found;
  int count = 0;
  for (ElementSet b : bases(m))
    if (accept(m, b)) {
      found = b;
      ++count;
    }
  if (count != 1)
    throw std::logic_error(std::to_string(count) + " fully optimal bases found on ground set " + format_set(m.ground()));
  return found;
}

ElementSet union_of_positive(const std::vector<SignedSet>& list, auto keep) {
  ElementSet out;
  for (const auto& s : list)
    if (keep(s.support().min())) out |= s.support();
  return out;
}

}  // namespace

bool satisfies_sign_criterion(const OrientedMatroid& m, ElementSet basis) {
  return sign_criterion(m, basis, side_of(m));
}

bool satisfies_composition_criterion(const OrientedMatroid& m, ElementSet basis) {
  return composition_criterion(m, basis, side_of(m));
}

bool composition_conditions_hold(const OrientedMatroid& m, ElementSet basis) {
  return composition_conditions(m, basis, side_of(m));
}

bool is_fully_optimal(const OrientedMatroid& m, ElementSet basis) {
  Side side = side_of(m);
  bool by_sign = sign_criterion(m, basis, side);
  if (by_sign != composition_criterion(m, basis, side))
    throw std::logic_error("full optimality criteria disagree on basis " + format_set(basis));
  return by_sign;
}

ElementSet fully_optimal_basis(const OrientedMatroid& m) { return scan(m, is_fully_optimal); }

ElementSet active_basis(const OrientedMatroid& m) {
  ElementSet out;
  for (const auto& mi : active_minors(m, active_filtration_orientation(m))) out |= fully_optimal_basis(mi);
  return out;
}

ElementSet active_basis_recursive(const OrientedMatroid& m, Induction rule, DualBoundedCase dual_case,
                                  std::mt19937* rng) {
  const ElementSet ground = m.ground();
  if (ground.empty()) return {};
  const Element p = ground.min();
  auto recurse = [&](const OrientedMatroid& n) { return active_basis_recursive(n, rule, dual_case, rng); };

  if (is_bounded(m, p)) return scan(m, satisfies_sign_criterion);
  if (is_dual_bounded(m, p)) {
    switch (dual_case) {
      case DualBoundedCase::kCriterion:
        return scan(m, satisfies_sign_criterion);
      case DualBoundedCase::kActiveDuality:
        if (ground.size() > 1) {
          const Element p2 = ground.without(p).min();
          return recurse(reorient(m, ElementSet::single(p))).without(p).with(p2);
        }
        [[fallthrough]];
      case DualBoundedCase::kDuality:
        return ground - recurse(dual(m));
    }
  }

  const bool on_cocircuits = rule == Induction::kLastDualActive || rule == Induction::kAnyDualActive;
  auto act = orientation_activities(m);
  if ((on_cocircuits ? act.dual_active : act.active).empty()) return ground - recurse(dual(m));

  const auto pos = on_cocircuits ? positive_cocircuits(m) : positive_circuits(m);
  auto split_above = [&](Element e) {  // minima greater than e
    ElementSet u = union_of_positive(pos, [e](Element mn) { return mn > e; });
    return on_cocircuits ? ground - u : u;
  };
  ElementSet f;
  if (rule == Induction::kAnyDualActive || rule == Induction::kAnyActive) {
    std::vector<ElementSet> valid;
    for (Element e : ground) {
      ElementSet cand = split_above(e);
      if (!cand.empty() && cand != ground) valid.push_back(cand);
    }
    if (!valid.empty()) {
      size_t k = 0;
      if (rng) k = std::uniform_int_distribution<size_t>(0, valid.size() - 1)(*rng);
      f = valid[k];
    }
  }
  if (f.empty()) {
    Element last = (on_cocircuits ? act.dual_active : act.active).max();
    ElementSet u = union_of_positive(pos, [last](Element mn) { return mn == last; });
    f = on_cocircuits ? ground - u : u;
  }
  if (f.empty() || f == ground) throw std::logic_error("induction step does not split " + format_set(ground));
  return recurse(contraction(m, f)) | recurse(deletion(m, ground - f));
}

ElementSet reorientation_for_basis(const OrientedMatroid& ref, ElementSet basis, ElementSet flip) {
  FundamentalTableau t(ref, basis);
  const auto part = part_mapping(t);
  ElementSet a;
  for (Element e : ref.ground()) {
    if (part[e - 1] == e) {
      if (flip.contains(e)) a = a.with(e);
      continue;
    }
    const SignedSet& row = t[e];
    // smallest element of the row in the same part as e
    Element first = 0;
    for (Element x : row.support())
      if (part[x - 1] == part[e - 1]) {
        first = x;
        break;
      }
    if (first == 0 || first >= e) throw std::logic_error("part mapping inconsistent at " + std::to_string(e));
    // e is positive in the reference row; make it opposite to the current sign of first
    int current = row.sign(first) * (a.contains(first) ? -1 : 1);
    if (current > 0) a = a.with(e);
  }
  return a;
}

ReorientationClassResult alpha_inverse_class(const OrientedMatroid& ref, ElementSet basis) {
  FundamentalTableau t(ref, basis);
  auto act = basis_activities(t);
  ElementSet actives = act.internal | act.external;
  ReorientationClassResult out;
  out.basis = basis;
  out.filtration = filtration_from_part_mapping(ref.ground(), part_mapping(t), act.external);
  require_enumerable(actives.size(), "alpha_inverse_class");
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << actives.size()); ++s)
    out.class_members.push_back(reorientation_for_basis(ref, basis, actives.pick(s)));
  return out;
}

ElementSet refined_alpha(const OrientedMatroid& ref, ElementSet a) {
  auto m = reorient(ref, a);
  auto act = orientation_activities(m);
  return (active_basis(m) - (a & act.dual_active)) | (a & act.active);
}

ElementSet refined_alpha_inverse(const OrientedMatroid& ref, ElementSet x) {
  auto sp = subset_params(ref, x);
  return reorientation_for_basis(ref, sp.basis, sp.p | sp.q);
}

DualityCheck check_active_duality(const OrientedMatroid& m) {
  const ElementSet ground = m.ground();
  const Element p = ground.min();
  if (ground.size() < 2 || !is_bounded(m, p))
    throw std::invalid_argument("active duality needs a bounded matroid on at least two elements");
  const Element p2 = ground.without(p).min();
  const ElementSet primal = fully_optimal_basis(m);
  const ElementSet shifted = fully_optimal_basis(reorient(dual(m), ElementSet::single(p)));
  DualityCheck c;
  c.active_duality = primal == ((ground - shifted).without(p2).with(p));
  c.plain_duality = fully_optimal_basis(dual(m)) == ground - primal;
  return c;
}

ActivityReport activity_report(const OrientedMatroid& ref, ElementSet a) {
  ActivityReport r;
  auto act = orientation_activities(reorient(ref, a));
  r.active = act.active;
  r.dual_active = act.dual_active;
  auto th = reorientation_params(ref, a);
  r.theta = th.theta;
  r.theta_bar = th.theta_bar;
  r.theta_star = th.theta_star;
  r.theta_star_bar = th.theta_star_bar;
  r.image = refined_alpha(ref, a);
  auto sp = subset_params(ref, r.image);
  r.internal = sp.internal;
  r.p = sp.p;
  r.external = sp.external;
  r.q = sp.q;
  return r;
}

}  // namespace actbij
