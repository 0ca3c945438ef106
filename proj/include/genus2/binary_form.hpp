#pragma once

#include <array>
#include <optional>
#include <vector>

#include "genus2/rational.hpp"
#include "genus2/unipoly.hpp"

namespace g2 {

// 2x2 rational matrix, row-major.
struct Matrix2 {
  Rat m11, m12, m21, m22;

  static Matrix2 identity() { return {Rat(1), Rat(0), Rat(0), Rat(1)}; }
  static Matrix2 diagonal(const Rat& a, const Rat& d) { return {a, Rat(0), Rat(0), d}; }
  static Matrix2 swap_xy() { return {Rat(0), Rat(1), Rat(1), Rat(0)}; }

  Rat det() const { return m11 * m22 - m12 * m21; }
  Matrix2 operator*(const Matrix2& o) const {
    return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
            m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
  }
  bool operator==(const Matrix2& o) const = default;
};

// Binary sextic in classical coefficients:
//   F = a x^6 + 6b x^5 y + 15c x^4 y^2 + 20d x^3 y^3 + 15e x^2 y^4 + 6f x y^5 + g y^6
struct BinaryForm {
  Rat a, b, c, d, e, f, g;

  bool is_zero() const;
  bool operator==(const BinaryForm& o) const = default;

  // Raw coefficients c0..c6 of x^{6-k} y^k (classical times binomials).
  std::array<Rat, 7> raw() const;
  // F(x, 1) as a univariate polynomial; degree drop encodes roots at [1,0].
  UniPoly dehomogenize() const;
};

// A point of P^1: either a finite rational value or [1,0].
struct ProjPoint {
  bool infinite = false;
  Rat value; // meaningful when !infinite

  static ProjPoint at_infinity() { return {true, Rat(0)}; }
  static ProjPoint finite(const Rat& v) { return {false, v}; }
  bool operator==(const ProjPoint& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
};

// Root description of a sextic: finite roots (with multiplicity, repeats
// allowed) plus a multiplicity for the root at infinity, and the leading
// scalar.
struct RootSpec {
  std::vector<Rat> finite_roots;
  int infinity_multiplicity = 0;
  Rat leading = Rat(1);
};

// Multiset of root multiplicities, sorted descending; sums to 6.
using MultiplicityProfile = std::vector<int>;

// Interprets raw coefficients c_k of x^{6-k} y^k. Errors: AllZero.
BinaryForm form_from_raw(const std::array<Rat, 7>& c);

// leading * y^inf_mult * prod (x - r y), expanded.
BinaryForm form_from_roots(const RootSpec& spec);

// Normalized left action (det M)^{-2} F(x m11 + y m21, x m12 + y m22).
// Composition: act(M1, act(M2, F)) = act(M1*M2, F). Errors: SingularMatrix.
BinaryForm act(const Matrix2& m, const BinaryForm& form);

MultiplicityProfile multiplicity_profile(const BinaryForm& form);

// (F', M) with F' = act(M, F), leading coefficient of F' nonzero, det M = 1.
// M is the identity when possible, else the shear (x,y) -> (x, sx+y) with
// the smallest positive integer s.
std::pair<BinaryForm, Matrix2> normalize_leading(const BinaryForm& form);

// The six roots of F in P^1 when they are all rational and distinct;
// errors: RootsNotDistinct, RootsNotRational.
std::vector<ProjPoint> rational_root_set(const BinaryForm& form);

struct Involution {
  Matrix2 m;                          // primitive integer entries, first nonzero positive
  bool bielliptic = false;            // fixes none of the six roots
  std::vector<std::array<int, 2>> orbit_pairs; // index pairs swapped by m
};

// All nontrivial rational Mobius involutions permuting the root set of F.
// Requires six distinct roots in Q union {infinity}.
std::vector<Involution> involutions_rational(const BinaryForm& form);

// prod (x - a_i y)(a_i x - y): the sextic branched over {[a_i,1],[1,a_i]},
// which admits the involution [x,y] -> [y,x]. Errors: DegeneratePoints.
BinaryForm bielliptic_form(const Rat& a1, const Rat& a2, const Rat& a3);

} // namespace g2
