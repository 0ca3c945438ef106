#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "genus2/binary_form.hpp"
#include "genus2/errors.hpp"
#include "genus2/invariants.hpp"
#include "genus2/moduli.hpp"

using namespace g2;

namespace {

std::array<Rat, 4> pt(const char* a, const char* b, const char* c, const char* d) {
  return {Rat(a), Rat(b), Rat(c), Rat(d)};
}

BinaryForm sextic(std::vector<Rat> roots, int inf_mult = 0, Rat lead = Rat(1)) {
  return form_from_roots({std::move(roots), inf_mult, std::move(lead)});
}

Rat rnd_rat(std::mt19937_64& rng) {
  long n = static_cast<long>(rng() % 39) - 19;
  long d = 1 + static_cast<long>(rng() % 6);
  if (n == 0) n = 1;
  return rat(n, d);
}

} // namespace

TEST_CASE("stability from multiplicity profiles") {
  CHECK(classify_stability(MultiplicityProfile{1, 1, 1, 1, 1, 1}) == StabilityClass::Stable);
  CHECK(classify_stability(MultiplicityProfile{2, 2, 1, 1}) == StabilityClass::Stable);
  CHECK(classify_stability(MultiplicityProfile{2, 2, 2}) == StabilityClass::Stable);
  CHECK(classify_stability(MultiplicityProfile{3, 1, 1, 1}) == StabilityClass::SemistableNonStable);
  CHECK(classify_stability(MultiplicityProfile{3, 3}) == StabilityClass::SemistableNonStable);
  CHECK(classify_stability(MultiplicityProfile{3, 2, 1}) == StabilityClass::SemistableNonStable);
  CHECK(classify_stability(MultiplicityProfile{4, 1, 1}) == StabilityClass::Unstable);
  CHECK(classify_stability(MultiplicityProfile{5, 1}) == StabilityClass::Unstable);
  CHECK(classify_stability(MultiplicityProfile{6}) == StabilityClass::Unstable);

  // form overloads
  BinaryForm x6y6 = form_from_raw({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
  CHECK(classify_stability(x6y6) == StabilityClass::Stable);
  BinaryForm x3y3 = form_from_raw({Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)});
  CHECK(classify_stability(x3y3) == StabilityClass::SemistableNonStable);
  // x^4 y (x - y)
  CHECK(classify_stability(sextic({Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}, 1)) ==
        StabilityClass::Unstable);

  CHECK(to_string(StabilityClass::Stable) == "stable");
  CHECK(to_string(StabilityClass::SemistableNonStable) == "semistable");
  CHECK(to_string(StabilityClass::Unstable) == "unstable");
}

TEST_CASE("canonical representatives in P(1,2,3,5)") {
  CHECK(canonicalize(pt("1", "1", "1", "1")).coords == pt("1", "1", "1", "1"));
  CHECK(canonicalize(pt("2", "4", "8", "32")).coords == pt("1", "1", "1", "1"));
  CHECK(canonicalize(pt("-1", "1", "-1", "-1")).coords == pt("1", "1", "1", "1"));
  CHECK(canonicalize(pt("0", "4", "0", "0")).coords == pt("0", "1", "0", "0"));
  CHECK(canonicalize(pt("0", "-9", "0", "0")).coords == pt("0", "1", "0", "0"));
  CHECK(canonicalize(pt("0", "0", "0", "3125")).coords == pt("0", "0", "0", "1"));
  CHECK(canonicalize(pt("0", "0", "0", "-1")).coords == pt("0", "0", "0", "1"));
  // denominators clear: t = 6 sends (1/2, 1/36, ...) into integers
  CHECK(canonicalize(pt("1/2", "1/36", "0", "0")).coords == pt("3", "1", "0", "0"));
  // mixed prime content: v_2 = (1,2,3,5) strips exactly one power of t = 1/2
  CHECK(canonicalize(pt("2", "4", "8", "32")).coords ==
        canonicalize(pt("1", "1", "1", "1")).coords);
  CHECK(canonicalize(pt("6", "36", "216", "7776")).coords == pt("1", "1", "1", "1"));
  // partial divisibility must not strip: B = 2 blocks t = 1/2
  CHECK(canonicalize(pt("2", "2", "8", "32")).coords == pt("2", "2", "8", "32"));

  SUBCASE("idempotent and orbit-invariant on random tuples") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 30; ++trial) {
      std::array<Rat, 4> raw;
      for (auto& x : raw) x = rnd_rat(rng);
      if (trial % 5 == 0) raw[static_cast<size_t>(trial / 5) % 4] = Rat(0);
      WeightedPoint c = canonicalize(raw);
      CHECK(canonicalize(c.coords).coords == c.coords);
      Rat t = rnd_rat(rng);
      std::array<Rat, 4> scaled = {raw[0] * t, raw[1] * t * t, raw[2] * t * t * t,
                                   raw[3] * pow_rat(t, 5)};
      CHECK(canonicalize(scaled).coords == c.coords);
      CHECK(point_eq(scaled, raw));
    }
  }

  CHECK_THROWS_AS(canonicalize(pt("0", "0", "0", "0")), G2Error);
}

TEST_CASE("point equality in the weighted quotient") {
  CHECK(point_eq(pt("1", "1", "1", "1"), pt("2", "4", "8", "32")));
  CHECK(point_eq(pt("-1", "1", "-1", "-1"), pt("1", "1", "1", "1")));
  CHECK(!point_eq(pt("1", "0", "0", "0"), pt("0", "0", "0", "1")));
  CHECK(!point_eq(pt("1", "1", "1", "1"), pt("1", "1", "1", "2")));
  // no rational square root of 2 is needed: B^15 vectors stay proportional
  CHECK(point_eq(pt("0", "2", "0", "0"), pt("0", "1", "0", "0")));
  CHECK(point_eq(pt("0", "-5", "0", "0"), pt("0", "5", "0", "0")));
  CHECK_THROWS_AS(point_eq(pt("0", "0", "0", "0"), pt("1", "0", "0", "0")), G2Error);
}

TEST_CASE("moduli map") {
  // stable: canonical quadruple
  BinaryForm f = sextic({Rat(0), Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)});
  ModuliPoint mp = moduli_point(f);
  REQUIRE(mp.kind == ModuliPoint::Kind::InteriorOrNodal);
  InvariantVector iv = invariants_of(f);
  CHECK(point_eq(mp.point.coords, iv.abcd()));
  CHECK(mp.point.coords == canonicalize(iv.abcd()).coords);

  // strictly semistable: everything lands on the special point
  BinaryForm x3y3 = form_from_raw({Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)});
  ModuliPoint sp = moduli_point(x3y3);
  REQUIRE(sp.kind == ModuliPoint::Kind::SpecialPointP);
  CHECK(sp.point.coords == pt("1", "0", "0", "0"));
  ModuliPoint sp2 = moduli_point(sextic({Rat(1), Rat(1), Rat(1), Rat(2), Rat(3), Rat(5)}));
  CHECK(sp2.kind == ModuliPoint::Kind::SpecialPointP);

  // unstable: no point at all
  BinaryForm x4y2 = form_from_raw({Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)});
  CHECK(moduli_point(x4y2).kind == ModuliPoint::Kind::Undefined);

  // the A=B=C=0 point: x(x^5+y^5) lands on [0,0,0,1]
  BinaryForm xq = form_from_raw({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)});
  ModuliPoint mq = moduli_point(xq);
  REQUIRE(mq.kind == ModuliPoint::Kind::InteriorOrNodal);
  CHECK(mq.point.coords == pt("0", "0", "0", "1"));
}

TEST_CASE("same_curve") {
  std::mt19937_64 rng(99);
  BinaryForm f = sextic({Rat(0), Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)});
  for (int trial = 0; trial < 10; ++trial) {
    Matrix2 m{rnd_rat(rng), rnd_rat(rng), rnd_rat(rng), rnd_rat(rng)};
    if (m.det() == 0) continue;
    CHECK(same_curve(f, act(m, f)));
  }
  BinaryForm g = form_from_raw({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
  CHECK(!same_curve(f, g));
  CHECK(same_curve(g, act(Matrix2{Rat(1), Rat(2), Rat(0), Rat(1)}, g)));

  BinaryForm x3y3 = form_from_raw({Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)});
  CHECK_THROWS_AS(same_curve(f, x3y3), G2Error);
  try {
    same_curve(x3y3, x3y3);
  } catch (const G2Error& err) {
    CHECK(err.code() == Err::NotStable);
  }
}

TEST_CASE("stable model of the limit curve") {
  auto info = stable_model(sextic({Rat(0), Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)}));
  CHECK(info.kind == StableModelKind::SmoothGenus2);
  CHECK(info.node_count == 0);

  info = stable_model(sextic({Rat(0), Rat(0), Rat(1), Rat(2), Rat(3), Rat(4)}));
  CHECK(info.kind == StableModelKind::ConnectedGenus1);
  CHECK(info.node_count == 1);

  // x^2 y^2 (x-y)(x+y)
  info = stable_model(form_from_raw({Rat(0), Rat(0), Rat(1), Rat(0), Rat(-1), Rat(0), Rat(0)}));
  CHECK(info.kind == StableModelKind::ConnectedGenus0);
  CHECK(info.node_count == 2);

  // x^2 y^2 (x-y)^2
  info = stable_model(form_from_raw({Rat(0), Rat(0), Rat(1), Rat(-2), Rat(1), Rat(0), Rat(0)}));
  CHECK(info.kind == StableModelKind::TwoGenus0Components);
  CHECK(info.node_count == 3);

  CHECK(to_string(StableModelKind::SmoothGenus2) == "smooth genus 2");
  CHECK(to_string(StableModelKind::TwoGenus0Components) ==
        "two genus 0 components meeting in three points");

  BinaryForm x3y3 = form_from_raw({Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)});
  CHECK_THROWS_AS(stable_model(x3y3), G2Error);
}

TEST_CASE("local coordinates at the blow-up center") {
  BinaryForm x3y3 = form_from_raw({Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)});
  auto c = igusa_local_coords(invariants_of(x3y3));
  CHECK(c == std::array<Rat, 3>{Rat(0), Rat(0), Rat(0)});

  BinaryForm x6y6 = form_from_raw({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
  auto c2 = igusa_local_coords(invariants_of(x6y6));
  CHECK(c2 == std::array<Rat, 3>{Rat("81/20"), Rat("-729/200"), Rat("729/25600000")});

  // ratios have weighted degree zero, so the substitution action drops out
  BinaryForm moved = act(Matrix2{Rat(3), Rat(1), Rat(-2), Rat(5)}, x6y6);
  CHECK(igusa_local_coords(invariants_of(moved)) == c2);

  BinaryForm xq = form_from_raw({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)});
  CHECK_THROWS_AS(igusa_local_coords(invariants_of(xq)), G2Error);
  try {
    igusa_local_coords(invariants_of(xq));
  } catch (const G2Error& err) {
    CHECK(err.code() == Err::AVanishes);
  }
}
