#include "genus2/unipoly.hpp"

#include <algorithm>

namespace g2 {

Rat UniPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rat& s) const {
  if (s == 0) return UniPoly();
  std::vector<Rat> r(c_);
  for (auto& v : r) v *= s;
  return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return UniPoly();
  return *this * (Rat(1) / leading());
}

UniPoly UniPoly::divide_exact(const UniPoly& d) const {
  require(!d.is_zero(), "division by zero polynomial");
  if (is_zero()) return UniPoly();
  require(degree() >= d.degree(), "exact division with smaller degree");
  std::vector<Rat> rem = c_;
  std::vector<Rat> quot(static_cast<size_t>(degree() - d.degree()) + 1, Rat(0));
  for (int k = degree() - d.degree(); k >= 0; --k) {
    Rat q = rem[static_cast<size_t>(k + d.degree())] / d.leading();
    quot[static_cast<size_t>(k)] = q;
    if (q == 0) continue;
    for (int i = 0; i <= d.degree(); ++i) rem[static_cast<size_t>(k + i)] -= q * d[static_cast<size_t>(i)];
  }
  for (const auto& v : rem) require(v == 0, "nonzero remainder in exact division");
  return UniPoly(std::move(quot));
}

UniPoly poly_gcd(UniPoly f, UniPoly g) {
  while (!g.is_zero()) {
    // remainder of f by g
    std::vector<Rat> rem = f.coeffs();
    while (static_cast<int>(rem.size()) - 1 >= g.degree() && !rem.empty()) {
      int k = static_cast<int>(rem.size()) - 1 - g.degree();
      Rat q = rem.back() / g.leading();
      for (int i = 0; i <= g.degree(); ++i) rem[static_cast<size_t>(k + i)] -= q * g[static_cast<size_t>(i)];
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    f = g;
    g = UniPoly(std::move(rem));
  }
  return f.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& f) {
  if (f.is_zero()) fail(Err::ZeroPolynomial, "squarefree_decompose of zero");
  std::vector<std::pair<UniPoly, int>> out;
  if (f.degree() == 0) return out;
  // Yun, characteristic zero.  Work with the monic scaling: the b/c/d
  // bookkeeping below assumes gcds and quotients stay monic.
  UniPoly fm = f.monic();
  UniPoly fp = fm.derivative();
  UniPoly a0 = poly_gcd(fm, fp);
  UniPoly b = fm.divide_exact(a0).monic();
  UniPoly c = fp.divide_exact(a0);
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly p = poly_gcd(b, d);
    if (p.degree() > 0) out.emplace_back(p, i);
    b = b.divide_exact(p).monic();
    c = d.divide_exact(p);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

namespace {

// Integer polynomial helpers for the subresultant sequence.
using ZPoly = std::vector<Int>; // lowest first, normalized (no leading zeros)

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

Int zcontent(const ZPoly& p) {
  Int g(0);
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

void zdivide_scalar(ZPoly& p, const Int& s) {
  for (auto& c : p) {
    Int q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
    c = q;
  }
}

// Pseudo-remainder: rem(lc(B)^(deg A - deg B + 1) * A, B), exact over Z.
ZPoly zprem(ZPoly r, const ZPoly& b) {
  const Int& lb = b.back();
  int e = zdeg(r) - zdeg(b) + 1;
  while (!r.empty() && zdeg(r) >= zdeg(b)) {
    int k = zdeg(r) - zdeg(b);
    Int top = r.back();
    for (auto& c : r) c *= lb;
    for (int i = 0; i <= zdeg(b); ++i) r[static_cast<size_t>(k + i)] -= top * b[static_cast<size_t>(i)];
    ztrim(r);
    --e;
  }
  if (e > 0 && !r.empty()) {
    Int m;
    mpz_pow_ui(m.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : r) c *= m;
  }
  return r;
}

} // namespace

Rat resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) fail(Err::ZeroPolynomial, "resultant of zero polynomial");
  if (f.degree() == 0) return pow_rat(f[0], static_cast<unsigned long>(g.degree()));
  if (g.degree() == 0) return pow_rat(g[0], static_cast<unsigned long>(f.degree()));

  // Clear denominators: f = sf*F, g = sg*G with F,G primitive over Z.
  auto to_primitive = [](const UniPoly& p, Rat& scale) {
    Int l(1);
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den(c).get_mpz_t());
    ZPoly z(p.coeffs().size());
    for (size_t i = 0; i < z.size(); ++i) {
      Rat v = p[i] * Rat(l);
      z[i] = num(v);
    }
    Int cont = zcontent(z);
    if (z.back() < 0) cont = -cont;
    zdivide_scalar(z, cont);
    scale = rat(cont, l);
    return z;
  };
  Rat sf, sg;
  ZPoly A = to_primitive(f, sf);
  ZPoly B = to_primitive(g, sg);
  Rat prefactor = pow_rat(sf, static_cast<unsigned long>(g.degree())) *
                  pow_rat(sg, static_cast<unsigned long>(f.degree()));

  int sign = 1;
  if (zdeg(A) < zdeg(B)) {
    std::swap(A, B);
    if ((zdeg(A) % 2) == 1 && (zdeg(B) % 2) == 1) sign = -sign;
  }

  // Subresultant pseudo-remainder sequence (Brown/Traub form).
  Int gcur(1), hcur(1);
  while (zdeg(B) > 0) {
    int delta = zdeg(A) - zdeg(B);
    if ((zdeg(A) % 2) == 1 && (zdeg(B) % 2) == 1) sign = -sign;
    ZPoly R = zprem(A, B);
    A = std::move(B);
    if (R.empty()) return Rat(0); // nonconstant common factor
    // B = R / (g*h^delta)
    Int divisor = gcur;
    for (int i = 0; i < delta; ++i) divisor *= hcur;
    B = std::move(R);
    zdivide_scalar(B, divisor);
    gcur = A.back();
    // h = h^(1-delta) * g^delta
    if (delta > 0) {
      Int hn(1);
      mpz_pow_ui(hn.get_mpz_t(), gcur.get_mpz_t(), static_cast<unsigned long>(delta));
      if (delta > 1) {
        Int hd;
        mpz_pow_ui(hd.get_mpz_t(), hcur.get_mpz_t(), static_cast<unsigned long>(delta - 1));
        Int q;
        mpz_divexact(q.get_mpz_t(), hn.get_mpz_t(), hd.get_mpz_t());
        hn = q;
      }
      hcur = hn;
    }
  }
  // B is a nonzero constant, A nonconstant: Res = s * lc(B)^degA / h^(degA-1)
  Int numr, denr(1);
  mpz_pow_ui(numr.get_mpz_t(), B.back().get_mpz_t(), static_cast<unsigned long>(zdeg(A)));
  if (zdeg(A) > 1) mpz_pow_ui(denr.get_mpz_t(), hcur.get_mpz_t(), static_cast<unsigned long>(zdeg(A) - 1));
  Rat res = rat(numr, denr);
  require(is_integer(res), "subresultant sequence produced a non-integer");
  return prefactor * res * sign;
}

} // namespace g2
