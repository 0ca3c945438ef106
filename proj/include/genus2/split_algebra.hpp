#pragma once

#include <array>

#include "genus2/multipoly.hpp"
#include "genus2/unipoly.hpp"

namespace g2 {

// Evaluation of symmetric expressions at the six roots of a sextic without
// root extraction, by normal-form arithmetic in the 720-dimensional quotient
// Q[r1..r6]/(T1,...,T6), where T_i is the iterated divided difference
// p[r_i,...,r_6] of the monic integer rescaling p of f. The T_i are monic of
// degree i in r_i with pairwise coprime leading terms r_i^i, so normal forms
// live on the reduced basis r1^{k1}...r6^{k6}, k_i < i.
//
// f must have degree exactly 6 and nonzero leading coefficient; callers with
// a root at infinity normalize first (see binary_forms).

// Value of a symmetric expr in r1..r6 at the roots of f. Exact rational
// normal-form arithmetic end to end.
Rat split_algebra_value(const UniPoly& f, const MultiPoly& expr);

// Same, for a product of (jointly symmetric) factors: the product is formed
// inside the algebra, factor by factor, so large expressions such as
// prod_{i<j}(r_i - r_j)^2 never get expanded as polynomials.
Rat split_algebra_value_product(const UniPoly& f, const std::vector<MultiPoly>& factors);

// The five defining root expressions, in order:
//   S_A = sum over 15 matchings of (12)^2(34)^2(56)^2
//   S_B = sum over 10 triple partitions of (12)^2(23)^2(31)^2 (45)^2(56)^2(64)^2
//   S_C = sum over partitions and bijections, as S_B times (14)^2(25)^2(36)^2
//   S_D = prod_{i<j} (ij)^2
//   S_E = prod over 15 matchings of det[[1, s_k, p_k]]_k
// evaluated at the roots of f. Matchings are enumerated lexicographically and
// pairs within a matching are sorted by smallest element; only the sign of
// S_E depends on this. Runs the same normal-form arithmetic over several
// word-size prime fields with CRT reconstruction against a proven bound
// (Fujiwara root bound), so the results are exact.
std::array<Rat, 5> invariant_expressions_split(const UniPoly& f);

// The 15 perfect matchings of {0..5}, lexicographic, pairs sorted.
const std::vector<std::array<std::array<int, 2>, 3>>& six_point_matchings();

// The 10 partitions of {0..5} into unordered triple pairs; first triple
// contains 0.
const std::vector<std::array<std::array<int, 3>, 2>>& six_point_triple_partitions();

} // namespace g2
