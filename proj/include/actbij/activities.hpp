#pragma once

#include <string>
#include <vector>

#include "actbij/element_set.hpp"
#include "actbij/oriented_matroid.hpp"

namespace actbij {

// Chain  {} = F'_eps < ... < F'_0 = Fc = F_0 < ... < F_iota = E,
// stored bottom to top with the position of the cyclic flat Fc.
class Filtration {
 public:
  Filtration() = default;
  // Throws std::invalid_argument if the chain is not a filtration.
  Filtration(std::vector<ElementSet> chain, int cyclic_index);

  const std::vector<ElementSet>& chain() const { return chain_; }
  int cyclic_index() const { return cyclic_index_; }
  ElementSet cyclic_flat() const { return chain_[cyclic_index_]; }
  ElementSet ground() const { return chain_.back(); }
  int epsilon() const { return cyclic_index_; }
  int iota() const { return static_cast<int>(chain_.size()) - 1 - cyclic_index_; }

  // Successive differences, bottom to top. Part k (0-based) lies inside the
  // cyclic flat iff k < cyclic_index().
  std::vector<ElementSet> parts() const;
  bool part_is_cyclic(int k) const { return k < cyclic_index_; }

  friend bool operator==(const Filtration&, const Filtration&) = default;

 private:
  std::vector<ElementSet> chain_{ElementSet{}};
  int cyclic_index_ = 0;
};

// Builds the filtration whose parts inside the cyclic flat and outside it
// are the given ones (any order).
Filtration filtration_from_parts(std::vector<ElementSet> cyclic_parts, std::vector<ElementSet> acyclic_parts);

// "[-]<1<1,2,3<1,2,3,4,5,6", cyclic flat in brackets.
std::string format_chain(const Filtration& f);
// "3,5,6*|1,2,4": parts of the cyclic flat first, each group by minima.
std::string format_partition(const Filtration& f);

struct BasisActivities {
  ElementSet internal;
  ElementSet external;
};
BasisActivities basis_activities(const FundamentalTableau& t);
BasisActivities basis_activities(const OrientedMatroid& m, ElementSet basis);

struct OrientationActivities {
  ElementSet dual_active;  // minima of positive cocircuits
  ElementSet active;       // minima of positive circuits
};
OrientationActivities orientation_activities(const OrientedMatroid& m);

Filtration active_filtration_orientation(const OrientedMatroid& m);

// M(chain[k+1]) / chain[k], bottom to top.
std::vector<OrientedMatroid> active_minors(const OrientedMatroid& m, const Filtration& f);

// Minors above the cyclic flat connected and not loops, those below
// connected and not isthmuses.
bool is_connected_filtration(const OrientedMatroid& m, const Filtration& f);
// Same question through the product of beta and beta* invariants.
bool is_connected_filtration_by_beta(const OrientedMatroid& m, const Filtration& f);

// For each element, the smallest element of its part of the active
// partition of the basis (index e-1). Computed in one pass over E.
std::vector<Element> part_mapping(const FundamentalTableau& t);
Filtration filtration_from_part_mapping(ElementSet ground, const std::vector<Element>& part,
                                        ElementSet external_minima);
Filtration active_filtration_basis(const OrientedMatroid& m, ElementSet basis);

// A xor unions of parts of the active partition of -_A M, ordered by the
// rank of the flipped part subset (parts ordered by minima).
std::vector<ElementSet> activity_class(const OrientedMatroid& ref, ElementSet a);

struct Interval {
  ElementSet lower;
  ElementSet upper;
  bool contains(ElementSet x) const { return lower.subset_of(x) && x.subset_of(upper); }
};
Interval interval_of_basis(const OrientedMatroid& m, ElementSet basis);

struct SubsetParams {
  ElementSet basis;     // owner of the interval containing A
  ElementSet internal;  // Int(B) & A
  ElementSet p;         // Int(B) - A
  ElementSet external;  // Ext(B) - A
  ElementSet q;         // Ext(B) & A
};
SubsetParams subset_params(const OrientedMatroid& m, ElementSet a);

struct ReorientationParams {
  ElementSet theta_star;      // O*(-_A M) - A
  ElementSet theta_star_bar;  // O*(-_A M) & A
  ElementSet theta;           // O(-_A M) - A
  ElementSet theta_bar;       // O(-_A M) & A
};
ReorientationParams reorientation_params(const OrientedMatroid& ref, ElementSet a);

}  // namespace actbij
