#pragma once

#include <random>
#include <vector>

#include "actbij/activities.hpp"
#include "actbij/element_set.hpp"
#include "actbij/oriented_matroid.hpp"

namespace actbij {

// Full optimality of a basis, p = min(E). M must be bounded or
// dual-bounded w.r.t. p, otherwise std::invalid_argument.
//
// Sign form: every basis element but p (all of them in the dual-bounded
// case) has the opposite sign to the minimum of its fundamental cocircuit,
// and likewise every non-basis element (but p in the dual-bounded case)
// in its fundamental circuit.
bool satisfies_sign_criterion(const OrientedMatroid& m, ElementSet basis);
// Composition form: the composition of the fundamental cocircuits in
// increasing order, and that of the fundamental circuits, have the
// prescribed signs (all positive, or positive except p negative).
bool composition_conditions_hold(const OrientedMatroid& m, ElementSet basis);
// The composition form among uniactive internal (bounded case) or
// uniactive external (dual-bounded case) bases.
bool satisfies_composition_criterion(const OrientedMatroid& m, ElementSet basis);
// Both forms; throws std::logic_error if they disagree.
bool is_fully_optimal(const OrientedMatroid& m, ElementSet basis);

// The unique fully optimal basis; std::logic_error unless exactly one passes.
ElementSet fully_optimal_basis(const OrientedMatroid& m);

// Union of the fully optimal bases of the active minors.
ElementSet active_basis(const OrientedMatroid& m);

// The recursive characterization, with the choice of splitting set.
enum class Induction {
  kLastDualActive,  // complement of the positive cocircuits with the greatest minimum
  kLastActive,      // positive circuits with the greatest minimum
  kAnyDualActive,   // complement of the positive cocircuits with minimum above a chosen element
  kAnyActive,       // positive circuits with minimum above a chosen element
};
// What to do once M is dual-bounded.
enum class DualBoundedCase {
  kDuality,        // complement of the fully optimal basis of the dual
  kCriterion,      // direct scan with the dual-bounded criterion
  kActiveDuality,  // shift from the bounded reorientation at min(E)
};
// rng picks the splitting element for the kAny* rules (first valid one if null).
ElementSet active_basis_recursive(const OrientedMatroid& m, Induction rule, DualBoundedCase dual_case,
                                  std::mt19937* rng = nullptr);

struct ReorientationClassResult {
  ElementSet basis;
  std::vector<ElementSet> class_members;
  Filtration filtration;
};

// All reorientations A of ref with active_basis(-_A ref) = B, built by a
// single pass over the fundamental tableau of B. Members are ordered by the
// subset of active elements reoriented (bit k = k-th smallest active element).
ReorientationClassResult alpha_inverse_class(const OrientedMatroid& ref, ElementSet basis);

// The single pass with its free choices fixed: an active element e is
// reoriented iff e is in flip.
ElementSet reorientation_for_basis(const OrientedMatroid& ref, ElementSet basis, ElementSet flip);

// X = alpha(-_A M) - (A & O*) + (A & O)
ElementSet refined_alpha(const OrientedMatroid& ref, ElementSet a);
ElementSet refined_alpha_inverse(const OrientedMatroid& ref, ElementSet x);

struct DualityCheck {
  bool active_duality;  // alpha(M) = (E - alpha(-_p M*)) - p' + p
  bool plain_duality;   // alpha(M*) = E - alpha(M)
  bool ok() const { return active_duality && plain_duality; }
};
// M bounded w.r.t. min(E), |E| > 1; otherwise std::invalid_argument.
DualityCheck check_active_duality(const OrientedMatroid& m);

struct ActivityReport {
  ElementSet active, dual_active;                             // O, O* of -_A M
  ElementSet theta, theta_bar, theta_star, theta_star_bar;    // reorientation side
  ElementSet image;                                           // refined_alpha(A)
  ElementSet internal, p, external, q;                        // subset side, of the image
};
ActivityReport activity_report(const OrientedMatroid& ref, ElementSet a);

}  // namespace actbij
