#pragma once

#include <vector>

#include "genus2/rational.hpp"

namespace g2 {

// Dense univariate polynomial over Q, coefficients lowest-degree first.
// The zero polynomial has an empty coefficient vector and degree() == -1.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const Rat& v) { return UniPoly(std::vector<Rat>{v}); }
  // x - r
  static UniPoly linear_root(const Rat& r) { return UniPoly({-r, Rat(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& operator[](size_t i) const { return c_[i]; }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const { return c_.back(); }

  Rat eval(const Rat& x) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rat& s) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  UniPoly derivative() const;
  UniPoly monic() const;
  // Exact division; fails on nonzero remainder (internal use).
  UniPoly divide_exact(const UniPoly& d) const;

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// Monic gcd; gcd(0,0) = 0, gcd(f,0) = monic f.
UniPoly poly_gcd(UniPoly f, UniPoly g);

// Yun's algorithm. Returns pairs (monic squarefree factor, multiplicity),
// ascending multiplicity, such that f = lc(f) * prod factor^mult.
std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& f);

// Res(f,g) = lc(f)^deg(g) * prod g(alpha_i) over the roots of f with
// multiplicity. Computed by a subresultant pseudo-remainder sequence on
// integer-cleared inputs, not by Sylvester expansion.
Rat resultant(const UniPoly& f, const UniPoly& g);

} // namespace g2
