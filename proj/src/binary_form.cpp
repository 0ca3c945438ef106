#include "genus2/binary_form.hpp"

#include <algorithm>
#include <set>

#include "genus2/intfactor.hpp"
#include "genus2/split_algebra.hpp"

namespace g2 {

namespace {

const long kBinom6[7] = {1, 6, 15, 20, 15, 6, 1};

// Coefficients of (alpha x + beta y)^n on x^{n-i} y^i.
std::vector<Rat> linear_power(const Rat& alpha, const Rat& beta, int n) {
  std::vector<Rat> out(static_cast<size_t>(n) + 1);
  Rat binom(1);
  for (int i = 0; i <= n; ++i) {
    out[static_cast<size_t>(i)] = binom * pow_rat(alpha, static_cast<unsigned long>(n - i)) *
                                  pow_rat(beta, static_cast<unsigned long>(i));
    binom = binom * (n - i) / (i + 1);
  }
  return out;
}

std::vector<Rat> conv(const std::vector<Rat>& u, const std::vector<Rat>& v) {
  std::vector<Rat> out(u.size() + v.size() - 1, Rat(0));
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i + j] += u[i] * v[j];
  return out;
}

std::vector<Int> divisors_of(const Int& n) {
  std::vector<Int> divs{Int(1)};
  for (const auto& [p, e] : factor_integer(n)) {
    size_t base = divs.size();
    Int pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

// All rational roots of f, with multiplicity, by candidate testing on the
// primitive integer model and deflation.
std::vector<Rat> rational_roots(UniPoly f) {
  std::vector<Rat> roots;
  while (f.degree() > 0) {
    if (f[0] == 0) {
      roots.emplace_back(0);
      std::vector<Rat> shifted(f.coeffs().begin() + 1, f.coeffs().end());
      f = UniPoly(shifted);
      continue;
    }
    // clear denominators
    Int L(1);
    for (const auto& c : f.coeffs()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), den(c).get_mpz_t());
    Int a0 = num(f[0] * L);
    Int an = num(f.leading() * L);
    bool found = false;
    for (const Int& p : divisors_of(a0)) {
      for (const Int& q : divisors_of(an)) {
        Int gg;
        mpz_gcd(gg.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        if (gg != 1) continue;
        for (int sign : {1, -1}) {
          Rat cand = rat(sign * p, q);
          if (f.eval(cand) == 0) {
            roots.push_back(cand);
            f = f.divide_exact(UniPoly::linear_root(cand));
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break; // no further rational roots
  }
  return roots;
}

} // namespace

bool BinaryForm::is_zero() const {
  return a == 0 && b == 0 && c == 0 && d == 0 && e == 0 && f == 0 && g == 0;
}

std::array<Rat, 7> BinaryForm::raw() const {
  const Rat* cls[7] = {&a, &b, &c, &d, &e, &f, &g};
  std::array<Rat, 7> out;
  for (int k = 0; k <= 6; ++k) out[static_cast<size_t>(k)] = *cls[k] * kBinom6[k];
  return out;
}

UniPoly BinaryForm::dehomogenize() const {
  auto rw = raw();
  std::vector<Rat> coeffs(rw.rbegin(), rw.rend()); // c6 + c5 x + ... + c0 x^6
  return UniPoly(coeffs);
}

BinaryForm form_from_raw(const std::array<Rat, 7>& c) {
  BinaryForm out;
  Rat* cls[7] = {&out.a, &out.b, &out.c, &out.d, &out.e, &out.f, &out.g};
  for (int k = 0; k <= 6; ++k) *cls[k] = c[static_cast<size_t>(k)] / kBinom6[k];
  if (out.is_zero()) fail(Err::AllZero, "zero binary form");
  return out;
}

BinaryForm form_from_roots(const RootSpec& spec) {
  if (static_cast<int>(spec.finite_roots.size()) + spec.infinity_multiplicity != 6)
    fail(Err::Parse, "root multiplicities must sum to 6");
  if (spec.infinity_multiplicity < 0) fail(Err::Parse, "negative multiplicity");
  if (spec.leading == 0) fail(Err::AllZero, "zero leading coefficient");
  UniPoly p = UniPoly::constant(Rat(1));
  for (const auto& r : spec.finite_roots) p = p * UniPoly::linear_root(r);
  // prod (x - r_i y) * y^m = sum_j p_j x^j y^{6-j}
  std::array<Rat, 7> rawc;
  rawc.fill(Rat(0));
  for (int j = 0; j <= p.degree(); ++j) rawc[static_cast<size_t>(6 - j)] = spec.leading * p[static_cast<size_t>(j)];
  return form_from_raw(rawc);
}

BinaryForm act(const Matrix2& m, const BinaryForm& form) {
  Rat dt = m.det();
  if (dt == 0) fail(Err::SingularMatrix, "action by a singular matrix");
  auto rw = form.raw();
  std::vector<Rat> acc(7, Rat(0));
  for (int k = 0; k <= 6; ++k) {
    if (rw[static_cast<size_t>(k)] == 0) continue;
    // substitute x -> x m11 + y m21, y -> x m12 + y m22 into x^{6-k} y^k
    auto term = conv(linear_power(m.m11, m.m21, 6 - k), linear_power(m.m12, m.m22, k));
    for (int i = 0; i <= 6; ++i) acc[static_cast<size_t>(i)] += rw[static_cast<size_t>(k)] * term[static_cast<size_t>(i)];
  }
  Rat scale = Rat(1) / (dt * dt);
  std::array<Rat, 7> outraw;
  for (int i = 0; i <= 6; ++i) outraw[static_cast<size_t>(i)] = acc[static_cast<size_t>(i)] * scale;
  return form_from_raw(outraw);
}

MultiplicityProfile multiplicity_profile(const BinaryForm& form) {
  if (form.is_zero()) fail(Err::ZeroPolynomial, "zero form has no profile");
  UniPoly f = form.dehomogenize();
  MultiplicityProfile out;
  int inf_mult = 6 - f.degree();
  if (inf_mult > 0) out.push_back(inf_mult);
  for (const auto& [factor, mult] : squarefree_decompose(f))
    for (int i = 0; i < factor.degree(); ++i) out.push_back(mult);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::pair<BinaryForm, Matrix2> normalize_leading(const BinaryForm& form) {
  if (form.is_zero()) fail(Err::ZeroPolynomial, "zero form");
  if (form.a != 0) return {form, Matrix2::identity()};
  auto rw = form.raw();
  for (long s = 1;; ++s) {
    // leading coefficient of F(x, sx + y) is F(1, s)
    Rat value(0);
    for (int k = 0; k <= 6; ++k) value += rw[static_cast<size_t>(k)] * pow_rat(rat(s), static_cast<unsigned long>(k));
    if (value != 0) {
      Matrix2 m{Rat(1), rat(s), Rat(0), Rat(1)};
      return {act(m, form), m};
    }
    require(s <= 6, "no shear with s <= 6 found for a nonzero sextic");
  }
}

std::vector<ProjPoint> rational_root_set(const BinaryForm& form) {
  auto profile = multiplicity_profile(form);
  if (profile.size() != 6) fail(Err::RootsNotDistinct, "form has a repeated root");
  UniPoly f = form.dehomogenize();
  std::vector<ProjPoint> points;
  if (f.degree() < 6) points.push_back(ProjPoint::at_infinity());
  for (const auto& r : rational_roots(f)) points.push_back(ProjPoint::finite(r));
  if (points.size() != 6) fail(Err::RootsNotRational, "form has irrational roots");
  return points;
}

namespace {

// Row of the linear condition "mobius(p) = q" on unknowns (m11,m12,m21,m22),
// where mobius(x) = (m11 x + m21)/(m12 x + m22) and infinity = [1,0].
std::array<Rat, 4> mobius_condition(const ProjPoint& p, const ProjPoint& q) {
  if (p.infinite && q.infinite) return {Rat(0), Rat(1), Rat(0), Rat(0)};
  if (p.infinite) return {Rat(1), -q.value, Rat(0), Rat(0)};
  if (q.infinite) return {Rat(0), p.value, Rat(0), Rat(1)};
  return {p.value, -q.value * p.value, Rat(1), -q.value};
}

// Kernel of a small dense system, exact Gauss. Returns basis vectors.
std::vector<std::array<Rat, 4>> kernel4(std::vector<std::array<Rat, 4>> rows) {
  size_t rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < 4 && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][static_cast<size_t>(col)] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    Rat lead = rows[rank][static_cast<size_t>(col)];
    for (auto& x : rows[rank]) x /= lead;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][static_cast<size_t>(col)] == 0) continue;
      Rat fac = rows[r][static_cast<size_t>(col)];
      for (int cc = 0; cc < 4; ++cc) rows[r][static_cast<size_t>(cc)] -= fac * rows[rank][static_cast<size_t>(cc)];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<std::array<Rat, 4>> basis;
  for (int col = 0; col < 4; ++col) {
    if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) continue;
    std::array<Rat, 4> v{Rat(0), Rat(0), Rat(0), Rat(0)};
    v[static_cast<size_t>(col)] = Rat(1);
    for (size_t r = 0; r < rank; ++r)
      v[static_cast<size_t>(pivot_col[r])] = -rows[r][static_cast<size_t>(col)];
    basis.push_back(v);
  }
  return basis;
}

ProjPoint apply_mobius(const Matrix2& m, const ProjPoint& p) {
  Rat nu, de;
  if (p.infinite) {
    nu = m.m11;
    de = m.m12;
  } else {
    nu = m.m11 * p.value + m.m21;
    de = m.m12 * p.value + m.m22;
  }
  if (de == 0) {
    require(nu != 0, "mobius map sent a point to [0,0]");
    return ProjPoint::at_infinity();
  }
  return ProjPoint::finite(nu / de);
}

Matrix2 primitive_normalize(const Matrix2& m) {
  Int L(1);
  const Rat* xs[4] = {&m.m11, &m.m12, &m.m21, &m.m22};
  for (auto* x : xs) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), den(*x).get_mpz_t());
  Int G(0);
  for (auto* x : xs) {
    Int v = num(*x * Rat(L));
    mpz_gcd(G.get_mpz_t(), G.get_mpz_t(), v.get_mpz_t());
  }
  require(G != 0, "zero matrix");
  Rat scale = rat(L, G);
  Matrix2 out{m.m11 * scale, m.m12 * scale, m.m21 * scale, m.m22 * scale};
  for (auto* x : {&out.m11, &out.m12, &out.m21, &out.m22}) {
    if (*x == 0) continue;
    if (*x < 0) {
      out.m11 = -out.m11;
      out.m12 = -out.m12;
      out.m21 = -out.m21;
      out.m22 = -out.m22;
    }
    break;
  }
  return out;
}

} // namespace

std::vector<Involution> involutions_rational(const BinaryForm& form) {
  std::vector<ProjPoint> roots = rational_root_set(form);
  std::vector<Involution> found;

  // candidate pairings: index pairs to transpose + indices to fix
  struct Pairing {
    std::vector<std::array<int, 2>> pairs;
    std::vector<int> fixed;
  };
  std::vector<Pairing> pairings;
  for (const auto& m : six_point_matchings())
    pairings.push_back({{m[0], m[1], m[2]}, {}});
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      std::vector<int> rest;
      for (int k = 0; k < 6; ++k)
        if (k != i && k != j) rest.push_back(k);
      // the 3 matchings of the remaining 4
      static const int m4[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
      for (const auto& mm : m4)
        pairings.push_back({{{rest[static_cast<size_t>(mm[0])], rest[static_cast<size_t>(mm[1])]},
                             {rest[static_cast<size_t>(mm[2])], rest[static_cast<size_t>(mm[3])]}},
                            {i, j}});
    }

  std::set<std::array<std::string, 4>> seen;
  for (const auto& pairing : pairings) {
    std::vector<std::array<Rat, 4>> rows;
    for (const auto& pr : pairing.pairs) {
      rows.push_back(mobius_condition(roots[static_cast<size_t>(pr[0])], roots[static_cast<size_t>(pr[1])]));
      rows.push_back(mobius_condition(roots[static_cast<size_t>(pr[1])], roots[static_cast<size_t>(pr[0])]));
    }
    for (int fx : pairing.fixed)
      rows.push_back(mobius_condition(roots[static_cast<size_t>(fx)], roots[static_cast<size_t>(fx)]));
    auto basis = kernel4(std::move(rows));
    if (basis.size() != 1) continue;
    Matrix2 m{basis[0][0], basis[0][1], basis[0][2], basis[0][3]};
    if (m.det() == 0) continue;
    if (m.m12 == 0 && m.m21 == 0 && m.m11 == m.m22) continue; // scalar: identity map
    // involution: M^2 must be scalar
    Matrix2 sq = m * m;
    if (!(sq.m12 == 0 && sq.m21 == 0 && sq.m11 == sq.m22)) continue;
    // must permute the root set exactly as the pairing says
    bool ok = true;
    for (const auto& pr : pairing.pairs) {
      ok = ok && apply_mobius(m, roots[static_cast<size_t>(pr[0])]) == roots[static_cast<size_t>(pr[1])] &&
           apply_mobius(m, roots[static_cast<size_t>(pr[1])]) == roots[static_cast<size_t>(pr[0])];
    }
    for (int fx : pairing.fixed) ok = ok && apply_mobius(m, roots[static_cast<size_t>(fx)]) == roots[static_cast<size_t>(fx)];
    if (!ok) continue;
    Matrix2 norm = primitive_normalize(m);
    std::array<std::string, 4> sig{to_string(norm.m11), to_string(norm.m12), to_string(norm.m21), to_string(norm.m22)};
    if (!seen.insert(sig).second) continue;
    Involution inv;
    inv.m = norm;
    inv.bielliptic = pairing.fixed.empty();
    inv.orbit_pairs = pairing.pairs;
    found.push_back(std::move(inv));
  }
  return found;
}

BinaryForm bielliptic_form(const Rat& a1, const Rat& a2, const Rat& a3) {
  const Rat as[3] = {a1, a2, a3};
  for (int i = 0; i < 3; ++i) {
    if (as[i] == 0) fail(Err::DegeneratePoints, "alpha = 0 makes [1,alpha] = [1,0] collide at infinity pairing");
    for (int j = 0; j < 3; ++j) {
      if (as[i] * as[j] == 1) fail(Err::DegeneratePoints, "alpha_i * alpha_j = 1 collapses a branch pair");
      if (i != j && as[i] == as[j]) fail(Err::DegeneratePoints, "repeated branch point");
    }
  }
  // prod (x - a_i y)(a_i x - y), accumulated on x^{n-i} y^i coefficients
  std::vector<Rat> acc{Rat(1)};
  for (int i = 0; i < 3; ++i) {
    acc = conv(acc, {Rat(1), -as[i]});
    acc = conv(acc, {as[i], Rat(-1)});
  }
  std::array<Rat, 7> rawc;
  for (int k = 0; k <= 6; ++k) rawc[static_cast<size_t>(k)] = acc[static_cast<size_t>(k)];
  return form_from_raw(rawc);
}

} // namespace g2
