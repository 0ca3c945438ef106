#pragma once

#include <array>

#include "genus2/binary_form.hpp"

namespace g2 {

// The five generating invariants; degrees 2, 4, 6, 10, 15 in the
// coefficients (weights 1, 2, 3, 5 for A..D after halving, E is skew).
struct InvariantVector {
  Rat A, B, C, D, E;
  bool operator==(const InvariantVector& o) const = default;
  std::array<Rat, 4> abcd() const { return {A, B, C, D}; }
};

// det of the 4x4 Hankel matrix on rows (a,b,c,d)..(d,e,f,g).
Rat catalecticant(const BinaryForm& form);

// Invariants of a nonzero sextic. A and B come from closed coefficient
// formulas, D from a resultant, C and E from normal-form evaluation of their
// root expressions after a det-1 leading normalization (values unchanged).
InvariantVector invariants_of(const BinaryForm& form);

// All five via the split-algebra route (A = a^2 S_A, ..., E = a^15 S_E);
// an independent path kept separate from invariants_of for cross-checking.
InvariantVector invariants_via_split_algebra(const BinaryForm& form);

// Direct evaluation at explicitly given rational roots; the reference
// oracle. Errors: InfinityNotSupported when infinity_multiplicity > 0.
InvariantVector invariants_from_roots(const RootSpec& spec);

struct FunctionalEquationReport {
  Rat det;
  std::array<bool, 5> matches; // A,B,C,D,E against det^{2,4,6,10,15} scaling
  bool all() const {
    for (bool m : matches)
      if (!m) return false;
    return true;
  }
};

// Checks invariants_of(act(M,F)) == (t^2 A, t^4 B, t^6 C, t^10 D, t^15 E),
// t = det M. Errors: SingularMatrix.
FunctionalEquationReport check_functional_equation(const BinaryForm& form, const Matrix2& m);

// E = 0 on a distinct-root form; errors: NotSmooth on repeated roots.
bool is_bielliptic(const BinaryForm& form);

} // namespace g2
