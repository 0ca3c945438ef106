#include "genus2/moduli.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "genus2/errors.hpp"
#include "genus2/intfactor.hpp"

namespace g2 {

namespace {

constexpr std::array<int, 4> kWeights = {1, 2, 3, 5};

long valuation(Int n, const Int& p) {
  // n != 0
  long v = 0;
  Int q, r;
  while (true) {
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (r != 0) return v;
    n = q;
    ++v;
  }
}

long valuation(const Rat& x, const Int& p) {
  return valuation(num(x), p) - valuation(den(x), p);
}

long floor_div(long a, long b) {
  // b > 0
  long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

}  // namespace

StabilityClass classify_stability(const MultiplicityProfile& profile) {
  int maxmult = profile.empty() ? 0 : profile.front();
  if (maxmult <= 2) return StabilityClass::Stable;
  if (maxmult == 3) return StabilityClass::SemistableNonStable;
  return StabilityClass::Unstable;
}

StabilityClass classify_stability(const BinaryForm& form) {
  return classify_stability(multiplicity_profile(form));
}

WeightedPoint canonicalize(const std::array<Rat, 4>& coords) {
  bool some = false;
  for (const Rat& x : coords) some = some || x != 0;
  if (!some) fail(Err::AllZero, "cannot canonicalize the zero tuple");

  // Primes where a coordinate is non-integral, or where every coordinate
  // can shed a full power of its weight.
  Int g = 0, l = 1;
  for (const Rat& x : coords) {
    if (x == 0) continue;
    Int n = num(x);
    mpz_abs(n.get_mpz_t(), n.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den(x).get_mpz_t());
  }
  std::set<Int> primes;
  for (const auto& [p, e] : factor_integer(g)) primes.insert(p);
  for (const auto& [p, e] : factor_integer(l)) primes.insert(p);

  Rat t = 1;
  for (const Int& p : primes) {
    long k = 0;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
      if (coords[i] == 0) continue;
      long fi = floor_div(valuation(coords[i], p), kWeights[i]);
      k = first ? fi : std::min(k, fi);
      first = false;
    }
    if (k == 0) continue;
    Int pk;
    if (k > 0) {
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
      t /= pk;
    } else {
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(-k));
      t *= pk;
    }
  }

  WeightedPoint out;
  for (int i = 0; i < 4; ++i) out.coords[i] = coords[i] * pow_rat(t, kWeights[i]);

  // Sign: make the first nonzero odd-weight coordinate positive (t = -1
  // fixes the even-weight ones).  When only the weight-2 coordinate
  // survives, no rational rescaling can change its representative further;
  // we use its absolute value, matching the projective equality test below.
  bool flip = false;
  bool any_odd = false;
  for (int i : {0, 2, 3}) {
    if (out.coords[i] != 0) {
      any_odd = true;
      flip = out.coords[i] < 0;
      break;
    }
  }
  if (flip) {
    for (int i : {0, 2, 3}) out.coords[i] = -out.coords[i];
  }
  if (!any_odd && out.coords[1] < 0) out.coords[1] = -out.coords[1];
  return out;
}

namespace {

std::vector<std::array<int, 4>> weight30_monomials() {
  std::vector<std::array<int, 4>> out;
  for (int l = 0; 5 * l <= 30; ++l)
    for (int k = 0; 5 * l + 3 * k <= 30; ++k)
      for (int j = 0; 5 * l + 3 * k + 2 * j <= 30; ++j)
        out.push_back({30 - 2 * j - 3 * k - 5 * l, j, k, l});
  return out;
}

std::vector<Rat> weight30_vector(const std::array<Rat, 4>& x) {
  static const std::vector<std::array<int, 4>> mons = weight30_monomials();
  std::vector<Rat> out;
  out.reserve(mons.size());
  for (const auto& m : mons) {
    Rat v = 1;
    for (int i = 0; i < 4; ++i) v *= pow_rat(x[i], m[i]);
    out.push_back(v);
  }
  return out;
}

}  // namespace

bool point_eq(const std::array<Rat, 4>& lhs, const std::array<Rat, 4>& rhs) {
  auto nonzero = [](const std::array<Rat, 4>& x) {
    for (const Rat& c : x)
      if (c != 0) return true;
    return false;
  };
  if (!nonzero(lhs) || !nonzero(rhs))
    fail(Err::AllZero, "projective comparison of the zero tuple");

  // Two weighted points agree iff their weight-30 monomial vectors are
  // proportional: the monomials of one weight embed the quotient.
  std::vector<Rat> u = weight30_vector(lhs), v = weight30_vector(rhs);
  std::size_t i0 = 0;
  while (i0 < u.size() && u[i0] == 0 && v[i0] == 0) ++i0;
  require(i0 < u.size(), "weight-30 vector of a nonzero tuple vanished");
  if (u[i0] == 0 || v[i0] == 0) return false;
  Rat lambda = u[i0] / v[i0];
  for (std::size_t i = i0 + 1; i < u.size(); ++i)
    if (u[i] != lambda * v[i]) return false;
  return true;
}

ModuliPoint moduli_point(const BinaryForm& form) {
  MultiplicityProfile profile = multiplicity_profile(form);
  switch (classify_stability(profile)) {
    case StabilityClass::Stable: {
      InvariantVector inv = invariants_of(form);
      return {ModuliPoint::Kind::InteriorOrNodal, canonicalize(inv.abcd())};
    }
    case StabilityClass::SemistableNonStable: {
      InvariantVector inv = invariants_of(form);
      require(inv.A != 0 && inv.B == 0 && inv.C == 0 && inv.D == 0 && inv.E == 0,
              "triple-root form off the distinguished point");
      return {ModuliPoint::Kind::SpecialPointP, WeightedPoint{{Rat(1), Rat(0), Rat(0), Rat(0)}}};
    }
    case StabilityClass::Unstable:
    default:
      return {ModuliPoint::Kind::Undefined, WeightedPoint{}};
  }
}

bool same_curve(const BinaryForm& lhs, const BinaryForm& rhs) {
  if (classify_stability(lhs) != StabilityClass::Stable ||
      classify_stability(rhs) != StabilityClass::Stable)
    fail(Err::NotStable, "moduli comparison needs stable forms");
  return point_eq(invariants_of(lhs).abcd(), invariants_of(rhs).abcd());
}

StableModelInfo stable_model(const BinaryForm& form) {
  MultiplicityProfile profile = multiplicity_profile(form);
  if (classify_stability(profile) != StabilityClass::Stable)
    fail(Err::NotStable, "no stable model for a non-stable form");
  int nodes = static_cast<int>(std::count(profile.begin(), profile.end(), 2));
  StableModelInfo info;
  info.node_count = nodes;
  switch (nodes) {
    case 0: info.kind = StableModelKind::SmoothGenus2; break;
    case 1: info.kind = StableModelKind::ConnectedGenus1; break;
    case 2: info.kind = StableModelKind::ConnectedGenus0; break;
    case 3: info.kind = StableModelKind::TwoGenus0Components; break;
    default: fail(Err::Internal, "impossible node count");
  }
  return info;
}

std::string to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::Stable: return "stable";
    case StabilityClass::SemistableNonStable: return "semistable";
    default: return "unstable";
  }
}

std::string to_string(StableModelKind k) {
  switch (k) {
    case StableModelKind::SmoothGenus2: return "smooth genus 2";
    case StableModelKind::ConnectedGenus1: return "irreducible, one node, genus 1 normalization";
    case StableModelKind::ConnectedGenus0: return "irreducible, two nodes, genus 0 normalization";
    default: return "two genus 0 components meeting in three points";
  }
}

std::array<Rat, 3> igusa_local_coords(const InvariantVector& inv) {
  if (inv.A == 0) fail(Err::AVanishes, "local coordinates need A != 0");
  Rat a2 = inv.A * inv.A;
  return {Rat(144) * inv.B / a2,
          Rat(1728) * (Rat(3) * inv.C - inv.A * inv.B) / (a2 * inv.A),
          Rat(486) * inv.D / (a2 * a2 * inv.A)};
}

}  // namespace g2
