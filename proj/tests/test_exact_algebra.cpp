#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "genus2/errors.hpp"
#include "genus2/multipoly.hpp"
#include "genus2/symmetric.hpp"
#include "genus2/unipoly.hpp"

using namespace g2;

namespace {

UniPoly from_roots(const std::vector<Rat>& roots, const Rat& lead = Rat(1)) {
  UniPoly p = UniPoly::constant(lead);
  for (const Rat& r : roots) p = p * UniPoly::linear_root(r);
  return p;
}

Rat rnd_rat(std::mt19937_64& rng) {
  long n = static_cast<long>(rng() % 21) - 10;
  long d = static_cast<long>(rng() % 4) + 1;
  return rat(n, d);
}

// Sylvester-matrix resultant by fraction-free-ish Gaussian elimination;
// the slow reference the fast path is checked against.
Rat sylvester_resultant(const UniPoly& f, const UniPoly& g) {
  int m = f.degree(), n = g.degree();
  REQUIRE(m >= 1);
  REQUIRE(n >= 1);
  int size = m + n;
  std::vector<std::vector<Rat>> s(static_cast<size_t>(size),
                                  std::vector<Rat>(static_cast<size_t>(size), Rat(0)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + m - k] = f[static_cast<size_t>(k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + n - k] = g[static_cast<size_t>(k)];
  Rat det(1);
  for (int col = 0; col < size; ++col) {
    int pivot = -1;
    for (int r = col; r < size; ++r)
      if (s[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      std::swap(s[pivot], s[col]);
      det = -det;
    }
    det *= s[col][col];
    Rat inv = Rat(1) / s[col][col];
    for (int r = col + 1; r < size; ++r) {
      if (s[r][col] == 0) continue;
      Rat q = s[r][col] * inv;
      for (int c2 = col; c2 < size; ++c2) s[r][c2] -= q * s[col][c2];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(rat(-3, 6)) == "-1/2");
  CHECK(to_string(Rat(7)) == "7");
  CHECK(parse_rat("22/7") == rat(22, 7));
  CHECK(parse_rat("-14/-4") == rat(7, 2));
  CHECK(parse_rat("0") == 0);
  CHECK(is_integer(parse_rat("8/4")));
  CHECK_THROWS_AS(parse_rat("1/0"), G2Error);
  CHECK_THROWS_AS(parse_rat("x"), G2Error);
  CHECK_THROWS_AS(parse_rat(""), G2Error);
  CHECK_THROWS_AS(parse_rat("1/"), G2Error);
  CHECK(pow_rat(rat(-2, 3), 3) == rat(-8, 27));
  CHECK(pow_rat(Rat(0), 0) == 1);
}

TEST_CASE("univariate arithmetic basics") {
  UniPoly p = from_roots({Rat(1), Rat(2)});  // x^2 - 3x + 2
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rat(3)) == 2);
  CHECK(p.eval(rat(1, 2)) == rat(3, 4));
  CHECK(p.derivative() == UniPoly({Rat(-3), Rat(2)}));
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);

  UniPoly q = from_roots({Rat(5)});
  CHECK((p * q).divide_exact(q) == p);
  CHECK_THROWS_AS(p.divide_exact(UniPoly()), G2Error);
  CHECK_THROWS_AS((p + UniPoly::constant(Rat(1))).divide_exact(q), G2Error);
}

TEST_CASE("gcd") {
  UniPoly f = from_roots({Rat(1), Rat(2), Rat(3)}, Rat(6));
  UniPoly g = from_roots({Rat(2), Rat(3), Rat(7)}, rat(-1, 2));
  CHECK(poly_gcd(f, g) == from_roots({Rat(2), Rat(3)}));
  CHECK(poly_gcd(f, UniPoly()) == f.monic());
  CHECK(poly_gcd(UniPoly(), UniPoly()).is_zero());
  CHECK(poly_gcd(f, UniPoly::constant(Rat(4))) == UniPoly::constant(Rat(1)));
}

TEST_CASE("squarefree decomposition") {
  UniPoly x2p1({Rat(1), Rat(0), Rat(1)});
  UniPoly f = x2p1 * x2p1 * x2p1 * from_roots({Rat(5)});
  auto parts = squarefree_decompose(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == from_roots({Rat(5)}));
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == x2p1);
  CHECK(parts[1].second == 3);

  SUBCASE("non-monic non-integer leading") {
    UniPoly g = f * rat(-3, 64);
    auto parts2 = squarefree_decompose(g);
    REQUIRE(parts2.size() == 2);
    CHECK(parts2[0].first == parts[0].first);
    CHECK(parts2[1].first == parts[1].first);
  }

  SUBCASE("multiply-back identity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      UniPoly h = UniPoly::constant(rnd_rat(rng) + rat(1, 5));
      while (h.degree() < 6) {
        Rat root = rnd_rat(rng);
        int mult = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < mult; ++i) h = h * UniPoly::linear_root(root);
      }
      UniPoly rebuilt = UniPoly::constant(h.leading());
      for (const auto& [factor, mult] : squarefree_decompose(h))
        for (int i = 0; i < mult; ++i) rebuilt = rebuilt * factor;
      CHECK(rebuilt == h);
    }
  }

  CHECK(squarefree_decompose(UniPoly::constant(Rat(3))).empty());
  CHECK_THROWS_AS(squarefree_decompose(UniPoly()), G2Error);
}

TEST_CASE("resultant agrees with Sylvester elimination") {
  UniPoly f({Rat(-2), Rat(0), Rat(1)});       // x^2 - 2
  UniPoly g({Rat(-1), Rat(1)});               // x - 1
  CHECK(resultant(f, g) == -1);               // f(1) = -1
  CHECK(resultant(g, f) == -1);
  CHECK(resultant(f, f) == 0);

  // discriminant-style use: Res(f, f') for monic (x-1)(x-2)(x-3)
  UniPoly h = from_roots({Rat(1), Rat(2), Rat(3)});
  CHECK(resultant(h, h.derivative()) == -4);  // -(prod of squared diffs) = -4

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int df = 1 + static_cast<int>(rng() % 4), dg = 1 + static_cast<int>(rng() % 4);
    std::vector<Rat> fc, gc;
    for (int i = 0; i <= df; ++i) fc.push_back(rnd_rat(rng));
    for (int i = 0; i <= dg; ++i) gc.push_back(rnd_rat(rng));
    if (fc.back() == 0) fc.back() = Rat(1);
    if (gc.back() == 0) gc.back() = Rat(1);
    UniPoly a(fc), b(gc);
    CHECK(resultant(a, b) == sylvester_resultant(a, b));
  }

  SUBCASE("multiplicativity in the first argument") {
    UniPoly a = from_roots({Rat(2), rat(1, 3)}, Rat(3));
    UniPoly b = from_roots({rat(-1, 2)}, Rat(5));
    UniPoly c({Rat(1), Rat(1), Rat(2)});
    CHECK(resultant(a * b, c) == resultant(a, c) * resultant(b, c));
  }
}

TEST_CASE("multivariate polynomials") {
  MultiPoly x = MultiPoly::variable(3, 0), y = MultiPoly::variable(3, 1),
            z = MultiPoly::variable(3, 2);
  MultiPoly p = x * x - y * z * Rat(2);
  CHECK(p.eval({Rat(3), Rat(1), Rat(4)}) == 1);
  CHECK(p.total_degree() == 2);
  CHECK(p.permuted({1, 0, 2}) == y * y - x * z * Rat(2));
  CHECK(MultiPoly::elementary_symmetric(3, 2) == x * y + y * z + x * z);
  CHECK(p.subst({y, x, z}) == y * y - x * z * Rat(2));
  CHECK((p - p).is_zero());
}

TEST_CASE("symmetric reduction to elementary symmetric coordinates") {
  MultiPoly r1 = MultiPoly::variable(2, 0), r2 = MultiPoly::variable(2, 1);
  MultiPoly e1 = MultiPoly::variable(2, 0), e2 = MultiPoly::variable(2, 1);

  CHECK(symmetric_reduce(r1 * r1 + r2 * r2) == e1 * e1 - e2 * Rat(2));
  MultiPoly diff = r1 - r2;
  CHECK(symmetric_reduce(diff * diff) == e1 * e1 - e2 * Rat(4));
  CHECK_FALSE(is_symmetric(r1 * r1 + r2));
  CHECK_THROWS_AS(symmetric_reduce(r1 * r1 + r2), G2Error);

  SUBCASE("round trip through the elementary symmetrics") {
    std::mt19937_64 rng(23);
    const int n = 4;
    std::vector<MultiPoly> esym;
    for (int k = 1; k <= n; ++k) esym.push_back(MultiPoly::elementary_symmetric(n, k));
    for (int trial = 0; trial < 8; ++trial) {
      // symmetrize a random monomial
      MultiPoly p(n);
      MultiPoly::Exp e(n);
      for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = static_cast<int>(rng() % 3);
      std::vector<int> perm{0, 1, 2, 3};
      MultiPoly mono(n);
      mono.add_term(e, rnd_rat(rng) + Rat(1));
      do p = p + mono.permuted(perm);
      while (std::next_permutation(perm.begin(), perm.end()));
      REQUIRE(is_symmetric(p));
      CHECK(symmetric_reduce(p).subst(esym) == p);
    }
  }
}
