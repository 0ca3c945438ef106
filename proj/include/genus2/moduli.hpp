#pragma once
// GIT stability of binary sextics and the invariant-theoretic moduli map.
//
// A sextic is stable iff every root has multiplicity <= 2, semistable iff
// <= 3.  Stable forms map to points of the weighted projective space
// P(1,2,3,5) via (A, B, C, D); the strictly semistable ones all land on the
// single distinguished point [1 : 0 : 0 : 0].

#include <array>
#include <string>
#include <vector>

#include "genus2/binary_form.hpp"
#include "genus2/invariants.hpp"
#include "genus2/rational.hpp"

namespace g2 {

enum class StabilityClass { Stable, SemistableNonStable, Unstable };

StabilityClass classify_stability(const BinaryForm& form);
StabilityClass classify_stability(const MultiplicityProfile& profile);

// A point of weighted projective space with weights (1, 2, 3, 5),
// stored in the canonical scaling produced by canonicalize().
struct WeightedPoint {
  std::array<Rat, 4> coords;  // (A, B, C, D)

  bool operator==(const WeightedPoint& o) const { return coords == o.coords; }
};

// Rescales (x0,x1,x2,x3) by t^w_i, choosing t so the result is the unique
// canonical representative: integral, not divisible by any p^{w_i} across
// all coordinates simultaneously, and with a sign normalization on the
// first nonzero odd-weight coordinate.
WeightedPoint canonicalize(const std::array<Rat, 4>& coords);

// Scaling-invariant equality test; does not require canonical inputs.
bool point_eq(const std::array<Rat, 4>& lhs, const std::array<Rat, 4>& rhs);

struct ModuliPoint {
  enum class Kind { InteriorOrNodal, SpecialPointP, Undefined } kind;
  WeightedPoint point;  // meaningful only for InteriorOrNodal
};

// The moduli map: stable forms go to their canonical (A,B,C,D) point,
// strictly semistable ones to the distinguished point, unstable ones to
// Undefined.
ModuliPoint moduli_point(const BinaryForm& form);

// Whether two stable sextics define the same point of the moduli space.
// Throws NotStable unless both forms are stable.
bool same_curve(const BinaryForm& lhs, const BinaryForm& rhs);

// Topological type of the stable limit curve attached to a stable sextic:
// each double root contributes a node.
enum class StableModelKind {
  SmoothGenus2,        // six distinct roots
  ConnectedGenus1,     // one node
  ConnectedGenus0,     // two nodes
  TwoGenus0Components  // three nodes
};

struct StableModelInfo {
  StableModelKind kind;
  int node_count;
};

StableModelInfo stable_model(const BinaryForm& form);

std::string to_string(StabilityClass c);
std::string to_string(StableModelKind k);

// Local coordinates near a point with A != 0: the classical absolute
// invariants (144 B/A^2, 1728 (3C - AB)/A^3, 486 D/A^5).  Throws AVanishes
// when A = 0.
std::array<Rat, 3> igusa_local_coords(const InvariantVector& inv);

}  // namespace g2
