#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "actbij/oriented_matroid.hpp"

namespace actbij {

// Sum of b_ij x^i y^j with exact nonnegative coefficients.
class TuttePolynomial {
 public:
  std::uint64_t coefficient(int i, int j) const;
  void add(int i, int j, std::uint64_t c);
  const std::map<std::pair<int, int>, std::uint64_t>& terms() const { return terms_; }

  std::int64_t evaluate(std::int64_t x, std::int64_t y) const;

  TuttePolynomial times_x() const;
  TuttePolynomial times_y() const;
  TuttePolynomial operator+(const TuttePolynomial& o) const;

  // "x^3+3x^2+2x+4xy+2y+3y^2+y^3": pure x powers downwards, mixed terms,
  // then pure y powers upwards.
  std::string to_string() const;

  friend bool operator==(const TuttePolynomial&, const TuttePolynomial&) = default;

 private:
  std::map<std::pair<int, int>, std::uint64_t> terms_;  // zero coefficients never stored
};

// 0^0 = 1
std::int64_t ipow(std::int64_t base, int exp);

TuttePolynomial tutte_from_bases(const OrientedMatroid& m);
// Counts reorientations by (|O*|, |O|) and divides by 2^(i+j).
TuttePolynomial tutte_from_orientations(const OrientedMatroid& m);
// Deletion/contraction on the unsigned matroid. The memo table is local to
// each call, so concurrent calls share nothing.
TuttePolynomial tutte_delcon_oracle(const OrientedMatroid& m);

std::uint64_t beta(const OrientedMatroid& m);
std::uint64_t beta_star(const OrientedMatroid& m);

// Sum over A of x^|Int(A)| u^|P(A)| y^|Ext(A)| v^|Q(A)|.
std::int64_t four_var_subset_sum(const OrientedMatroid& m, std::int64_t x, std::int64_t u, std::int64_t y,
                                 std::int64_t v);
// Sum over A of x^|Theta*| u^|ThetaBar*| y^|Theta| v^|ThetaBar|.
std::int64_t four_var_reorientation_sum(const OrientedMatroid& ref, std::int64_t x, std::int64_t u, std::int64_t y,
                                        std::int64_t v);

}  // namespace actbij
