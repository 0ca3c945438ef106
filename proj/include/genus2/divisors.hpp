#pragma once
// Divisor-class arithmetic on the moduli space of stable genus-2 curves.
//
// The rational class group is free on the two boundary classes Δ0
// (irreducible nodal curves) and Δ1 (two elliptic components); everything
// here is stored as an exact rational pair (q0, q1) in that basis.  The nef
// cone is spanned by Δ0 + Δ1 and Δ0 + 6Δ1, which pins down the
// log-canonical-model thresholds 9/11 and 7/10 checked below.

#include <optional>
#include <string>
#include <vector>

#include "genus2/rational.hpp"

namespace g2 {

struct DivisorClass {
  Rat q0, q1;  // coefficients of Δ0, Δ1

  DivisorClass operator+(const DivisorClass& o) const { return {q0 + o.q0, q1 + o.q1}; }
  DivisorClass operator-(const DivisorClass& o) const { return {q0 - o.q0, q1 - o.q1}; }
  DivisorClass operator-() const { return {-q0, -q1}; }
  bool operator==(const DivisorClass& o) const { return q0 == o.q0 && q1 == o.q1; }
};

inline DivisorClass operator*(const Rat& t, const DivisorClass& d) {
  return {t * d.q0, t * d.q1};
}

// Named classes: the canonical class, the Hodge class, the stacky boundary
// δ = Δ0 + Δ1/2, and the class Ξ of the locus of extra involutions.
DivisorClass canonical_class();       // (-11/5, -16/5)
DivisorClass hodge_class();           // (1/10, 1/10)
DivisorClass stacky_boundary();       // (1, 1/2)
DivisorClass involution_locus();      // (3, 6)

// K + αΔ0 + ((1+α)/2)Δ1 + (1/2)Ξ, which collapses to
// (α - 7/10)Δ0 + (3/10 + α/2)Δ1; both routes are computed and compared.
// Requires 0 <= α <= 1.
DivisorClass log_canonical_divisor(const Rat& alpha);

// Membership in the (closed / open) cone spanned by Δ0+Δ1 and Δ0+6Δ1.
bool is_nef(const DivisorClass& d);
bool is_ample(const DivisorClass& d);

// Whether aλ - bδ is nef; by the slope criterion this is a >= 11b >= 0,
// and the function cross-checks that against the cone test.
bool slope_nef_test(const Rat& a, const Rat& b);

struct LogModelResult {
  enum class Model { ModuliSpace, InvariantQuotientX, SinglePoint, Empty } model;
  bool at_upper_threshold;  // α = 9/11 exactly
  bool at_lower_threshold;  // α = 7/10 exactly
};

// The log canonical model selector: the moduli space itself for
// 9/11 < α <= 1, the invariant-theory quotient P(1,2,3,5) for
// 7/10 < α <= 9/11, a point at α = 7/10, empty below.
// Requires 0 <= α <= 1.
LogModelResult log_model(const Rat& alpha);

std::string to_string(LogModelResult::Model m);

struct IdentityCheck {
  std::string identity;
  bool pass;
  std::string detail;
};

// Replays the intersection-theory bookkeeping as exact identities in the
// (Δ0, Δ1) basis: the canonical-class computation, both contraction
// discrepancy equations, the collapsed log-canonical formula, the Hodge
// class, and the pullback consistency that forces Ξ = 3Δ0 + 6Δ1.  The
// report also re-runs the α-dependent checks with the erroneous variant
// Ξ = 3Δ0 + 12Δ1, which must fail.
std::vector<IdentityCheck> check_divisor_identities();

// Degree of the canonical sheaf of P(weights): -Σw, or with a hypersurface
// degree d, the adjunction degree d - Σw.
long wps_canonical_degree(const std::vector<long>& weights,
                          std::optional<long> hypersurface_degree = std::nullopt);

// Ages of the nontrivial elements of the cyclic group action
// 1/n (w_1, ..., w_k): entry j-1 is Σ_i ((j·w_i mod n) / n).
std::vector<Rat> reid_tai_ages(long n, const std::vector<long>& weights);

// Reid–Tai: the quotient singularity is canonical iff every age is >= 1.
// Throws QuasiReflectionPresent if some nontrivial element fixes a
// hyperplane (fewer than two coordinates moved), OutOfRange on bad input.
bool reid_tai(long n, const std::vector<long>& weights);

}  // namespace g2
