#pragma once

#include <stdexcept>
#include <vector>

#include "actbij/element_set.hpp"
#include "actbij/signed_set.hpp"

namespace actbij {

class InvalidMatroid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Oriented matroid given by its signed circuits and cocircuits, one
// canonical representative per opposite pair. Minors keep the element
// indices of the matroid they come from, so the ground set is a subset
// of {1..32} rather than always {1..n}.
class OrientedMatroid {
 public:
  OrientedMatroid() = default;

  ElementSet ground() const { return ground_; }
  int size() const { return ground_.size(); }
  int rank() const { return rank_; }
  const std::vector<SignedSet>& circuits() const { return circuits_; }
  const std::vector<SignedSet>& cocircuits() const { return cocircuits_; }

  // Builds without the orthogonality/antichain checks. Lists are
  // canonicalized, deduplicated and sorted.
  static OrientedMatroid assemble(ElementSet ground, std::vector<SignedSet> circuits,
                                  std::vector<SignedSet> cocircuits);

  friend bool operator==(const OrientedMatroid&, const OrientedMatroid&) = default;

 private:
  ElementSet ground_;
  std::vector<SignedSet> circuits_;
  std::vector<SignedSet> cocircuits_;
  int rank_ = 0;
};

// Validated construction on {1..n}. Throws InvalidMatroid.
OrientedMatroid om_from_lists(int n, std::vector<SignedSet> circuits, std::vector<SignedSet> cocircuits);
OrientedMatroid om_from_lists(ElementSet ground, std::vector<SignedSet> circuits,
                              std::vector<SignedSet> cocircuits);

// Throws InvalidMatroid describing the first violated invariant.
void validate(const OrientedMatroid& m);

OrientedMatroid dual(const OrientedMatroid& m);
OrientedMatroid reorient(const OrientedMatroid& m, ElementSet a);
OrientedMatroid deletion(const OrientedMatroid& m, ElementSet a);
OrientedMatroid contraction(const OrientedMatroid& m, ElementSet a);
// M(upper)/lower, for lower ⊆ upper
OrientedMatroid minor(const OrientedMatroid& m, ElementSet upper, ElementSet lower);

std::vector<SignedSet> positive_circuits(const OrientedMatroid& m);
std::vector<SignedSet> positive_cocircuits(const OrientedMatroid& m);
bool is_acyclic(const OrientedMatroid& m);
bool is_totally_cyclic(const OrientedMatroid& m);

bool is_independent(const OrientedMatroid& m, ElementSet x);
int rank_of(const OrientedMatroid& m, ElementSet x);
bool is_loop(const OrientedMatroid& m, Element e);
bool is_isthmus(const OrientedMatroid& m, Element e);

// Lexicographic order of the ascending element sequences.
std::vector<ElementSet> bases(const OrientedMatroid& m);
bool is_basis(const OrientedMatroid& m, ElementSet b);

SignedSet fundamental_circuit(const OrientedMatroid& m, ElementSet basis, Element e);
SignedSet fundamental_cocircuit(const OrientedMatroid& m, ElementSet basis, Element b);

// All fundamental circuits and cocircuits of one basis, looked up by element:
// C*(B;e) for e in B, C(B;e) otherwise, each with e positive.
class FundamentalTableau {
 public:
  FundamentalTableau(const OrientedMatroid& m, ElementSet basis);
  ElementSet basis() const { return basis_; }
  ElementSet ground() const { return ground_; }
  const SignedSet& operator[](Element e) const { return rows_[e - 1]; }

 private:
  ElementSet ground_;
  ElementSet basis_;
  SignedSet rows_[kMaxElements];
};

// Boundedness with respect to p.
bool is_bounded(const OrientedMatroid& m, Element p);
bool is_dual_bounded(const OrientedMatroid& m, Element p);

// Matroid connectivity: every two elements lie in a common circuit.
bool is_connected(const OrientedMatroid& m);

}  // namespace actbij
