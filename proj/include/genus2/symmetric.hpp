#pragma once

#include "genus2/multipoly.hpp"

namespace g2 {

// True iff p is fixed by every adjacent transposition (x_i x_{i+1}); these
// generate the full symmetric group, so this certifies symmetry exactly.
bool is_symmetric(const MultiPoly& p);

// Rewrites a symmetric p(r_1..r_n) as q(e_1..e_n) with
// q(e_1(r),...,e_n(r)) = p(r), by classical lexicographic leading-term
// subtraction. Throws NotSymmetric when p is not symmetric.
MultiPoly symmetric_reduce(const MultiPoly& p);

} // namespace g2
