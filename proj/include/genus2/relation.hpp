#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "genus2/invariants.hpp"

namespace g2 {

// The weight-30 polynomial G with E^2 = G(A,B,C,D): exponents (i,j,k,l) on
// (A,B,C,D) with i + 2j + 3k + 5l = 15 under the halved weights (1,2,3,5).
struct RelationPolynomial {
  std::map<std::array<int, 4>, Rat> coefficients; // nonzero entries only

  Rat eval(const std::array<Rat, 4>& abcd) const;
  // One line per monomial: "i j k l numerator/denominator" (denominator
  // always written), sorted by exponent vector.
  std::string to_text() const;
};

// All (i,j,k,l) >= 0 with i + 2j + 3k + 5l = 15, sorted; 47 of them.
std::vector<std::array<int, 4>> relation_monomial_basis();

// Fits G from random rational-rooted sextics (distinct integer roots, unit
// leading coefficient) and verifies E^2 = G on held-out samples.
// Errors: OutOfRange (sample_count below basis size), RankDeficient,
// VerificationFailed.
RelationPolynomial derive_relation_G(int sample_count, uint64_t seed);

} // namespace g2
