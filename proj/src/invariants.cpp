#include "genus2/invariants.hpp"

#include "genus2/split_algebra.hpp"

namespace g2 {

namespace {

// ag - 6bf + 15ce - 10d^2, the quadratic seed shared by A and B
Rat quadratic_core(const BinaryForm& F) {
  return F.a * F.g - 6 * F.b * F.f + 15 * F.c * F.e - 10 * F.d * F.d;
}

Rat det4(std::array<std::array<Rat, 4>, 4> m) {
  // exact Gauss with row swaps
  Rat det(1);
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    while (piv < 4 && m[static_cast<size_t>(piv)][static_cast<size_t>(col)] == 0) ++piv;
    if (piv == 4) return Rat(0);
    if (piv != col) {
      std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(col)]);
      det = -det;
    }
    Rat lead = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
    det *= lead;
    for (int r = col + 1; r < 4; ++r) {
      if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] == 0) continue;
      Rat fac = m[static_cast<size_t>(r)][static_cast<size_t>(col)] / lead;
      for (int cc = col; cc < 4; ++cc)
        m[static_cast<size_t>(r)][static_cast<size_t>(cc)] -= fac * m[static_cast<size_t>(col)][static_cast<size_t>(cc)];
    }
  }
  return det;
}

} // namespace

Rat catalecticant(const BinaryForm& F) {
  return det4({{{F.a, F.b, F.c, F.d}, {F.b, F.c, F.d, F.e}, {F.c, F.d, F.e, F.f}, {F.d, F.e, F.f, F.g}}});
}

InvariantVector invariants_of(const BinaryForm& form) {
  if (form.is_zero()) fail(Err::ZeroPolynomial, "zero form has no invariants");
  InvariantVector out;
  Rat core = quadratic_core(form);
  out.A = -240 * core;
  out.B = -162000 * catalecticant(form) + 1620 * core * core;

  auto [norm, m] = normalize_leading(form);
  UniPoly f = norm.dehomogenize();
  Rat a = f.leading();
  out.D = -resultant(f, f.derivative()) / a;

  auto s = invariant_expressions_split(f);
  out.C = pow_rat(a, 6) * s[2];
  out.E = pow_rat(a, 15) * s[4];
  return out;
}

InvariantVector invariants_via_split_algebra(const BinaryForm& form) {
  if (form.is_zero()) fail(Err::ZeroPolynomial, "zero form has no invariants");
  auto [norm, m] = normalize_leading(form);
  UniPoly f = norm.dehomogenize();
  Rat a = f.leading();
  auto s = invariant_expressions_split(f);
  return {pow_rat(a, 2) * s[0], pow_rat(a, 4) * s[1], pow_rat(a, 6) * s[2], pow_rat(a, 10) * s[3],
          pow_rat(a, 15) * s[4]};
}

InvariantVector invariants_from_roots(const RootSpec& spec) {
  if (spec.infinity_multiplicity != 0)
    fail(Err::InfinityNotSupported, "direct root evaluation needs six finite roots");
  if (spec.finite_roots.size() != 6) fail(Err::Parse, "need exactly six roots");
  const auto& r = spec.finite_roots;
  const Rat& a = spec.leading;
  if (a == 0) fail(Err::AllZero, "zero leading coefficient");

  // -> Rat forces evaluation: a deduced return type here would be a GMP
  // expression template referencing the dead local.
  auto sq = [&](int i, int j) -> Rat {
    Rat d = r[static_cast<size_t>(i)] - r[static_cast<size_t>(j)];
    return d * d;
  };

  InvariantVector out{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)};

  const auto& matchings = six_point_matchings();
  for (const auto& mt : matchings) {
    out.A += sq(mt[0][0], mt[0][1]) * sq(mt[1][0], mt[1][1]) * sq(mt[2][0], mt[2][1]);
    // det [[1, r_i + r_j, r_i r_j]] over the three pairs, rows by pair minimum
    std::array<Rat, 3> s, p;
    for (int k = 0; k < 3; ++k) {
      s[static_cast<size_t>(k)] = r[static_cast<size_t>(mt[static_cast<size_t>(k)][0])] + r[static_cast<size_t>(mt[static_cast<size_t>(k)][1])];
      p[static_cast<size_t>(k)] = r[static_cast<size_t>(mt[static_cast<size_t>(k)][0])] * r[static_cast<size_t>(mt[static_cast<size_t>(k)][1])];
    }
    out.E *= (s[1] * p[2] - s[2] * p[1]) - (s[0] * p[2] - s[2] * p[0]) + (s[0] * p[1] - s[1] * p[0]);
  }

  auto tri = [&](const std::array<int, 3>& t) -> Rat {
    return sq(t[0], t[1]) * sq(t[1], t[2]) * sq(t[2], t[0]);
  };
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& [t, c] : six_point_triple_partitions()) {
    Rat tp = tri(t) * tri(c);
    out.B += tp;
    Rat inner(0);
    for (const auto& perm : perms)
      inner += sq(t[0], c[static_cast<size_t>(perm[0])]) * sq(t[1], c[static_cast<size_t>(perm[1])]) * sq(t[2], c[static_cast<size_t>(perm[2])]);
    out.C += tp * inner;
  }

  out.D = Rat(1);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) out.D *= sq(i, j);

  out.A *= pow_rat(a, 2);
  out.B *= pow_rat(a, 4);
  out.C *= pow_rat(a, 6);
  out.D *= pow_rat(a, 10);
  out.E *= pow_rat(a, 15);
  return out;
}

FunctionalEquationReport check_functional_equation(const BinaryForm& form, const Matrix2& m) {
  Rat t = m.det();
  if (t == 0) fail(Err::SingularMatrix, "functional equation needs invertible M");
  InvariantVector before = invariants_of(form);
  InvariantVector after = invariants_of(act(m, form));
  FunctionalEquationReport rep;
  rep.det = t;
  rep.matches = {after.A == pow_rat(t, 2) * before.A, after.B == pow_rat(t, 4) * before.B,
                 after.C == pow_rat(t, 6) * before.C, after.D == pow_rat(t, 10) * before.D,
                 after.E == pow_rat(t, 15) * before.E};
  return rep;
}

bool is_bielliptic(const BinaryForm& form) {
  auto profile = multiplicity_profile(form);
  if (profile.size() != 6)
    fail(Err::NotSmooth, "bielliptic test is defined for forms with six distinct zeros");
  return invariants_of(form).E == 0;
}

} // namespace g2
