#pragma once

#include <map>
#include <vector>

#include "genus2/rational.hpp"

namespace g2 {

// Sparse multivariate polynomial over Q with a fixed number of variables.
// Terms are keyed by exponent vector; map order is lexicographic, so the
// lex-leading term is the last entry.
class MultiPoly {
public:
  using Exp = std::vector<int>;

  explicit MultiPoly(int arity) : arity_(arity) {}
  static MultiPoly variable(int arity, int index, int power = 1);
  static MultiPoly constant(int arity, const Rat& value);
  // e_k(x_1..x_n)
  static MultiPoly elementary_symmetric(int arity, int k);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exp, Rat>& terms() const { return terms_; }
  int total_degree() const;

  void add_term(const Exp& e, const Rat& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rat& s) const;
  bool operator==(const MultiPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

  MultiPoly pow(int e) const;
  // Applies x_i -> x_perm[i].
  MultiPoly permuted(const std::vector<int>& perm) const;
  Rat eval(const std::vector<Rat>& x) const;
  // Substitutes each variable by a polynomial (all of equal arity).
  MultiPoly subst(const std::vector<MultiPoly>& repl) const;

private:
  int arity_;
  std::map<Exp, Rat> terms_;
};

} // namespace g2
