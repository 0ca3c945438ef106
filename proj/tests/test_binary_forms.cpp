#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "genus2/binary_form.hpp"
#include "genus2/errors.hpp"

using namespace g2;

namespace {

BinaryForm roots_form(const std::vector<Rat>& finite, int inf_mult = 0,
                      const Rat& lead = Rat(1)) {
  return form_from_roots({finite, inf_mult, lead});
}

Matrix2 rnd_matrix(std::mt19937_64& rng) {
  auto r = [&] { return rat(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 3) + 1); };
  while (true) {
    Matrix2 m{r(), r(), r(), r()};
    if (m.det() != 0) return m;
  }
}

std::string mat_key(const Matrix2& m) {
  return to_string(m.m11) + "," + to_string(m.m12) + "," + to_string(m.m21) + "," +
         to_string(m.m22);
}

}  // namespace

TEST_CASE("raw and classical coefficients") {
  // (x+y)^6 has all raw coefficients binomial, all classical ones 1
  BinaryForm f = form_from_raw({Rat(1), Rat(6), Rat(15), Rat(20), Rat(15), Rat(6), Rat(1)});
  CHECK(f == BinaryForm{Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
  CHECK(f.raw() == std::array<Rat, 7>{Rat(1), Rat(6), Rat(15), Rat(20), Rat(15), Rat(6), Rat(1)});
  CHECK(roots_form({Rat(-1), Rat(-1), Rat(-1), Rat(-1), Rat(-1), Rat(-1)}) == f);
  CHECK_THROWS_AS(form_from_raw({Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)}),
                  G2Error);
}

TEST_CASE("roots at infinity drop the degree") {
  BinaryForm f = roots_form({Rat(2)}, 5, Rat(3));  // 3 y^5 (x - 2y)
  CHECK(f.dehomogenize().degree() == 1);
  CHECK(f.dehomogenize().eval(Rat(2)) == 0);
  CHECK(multiplicity_profile(f) == MultiplicityProfile{5, 1});
  CHECK_THROWS_AS(roots_form({Rat(1)}, 0), G2Error);  // 1 + 0 != 6
}

TEST_CASE("substitution action") {
  BinaryForm x6y6 = form_from_raw({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});

  SUBCASE("diagonal example") {
    BinaryForm g = act(Matrix2::diagonal(Rat(2), Rat(1)), x6y6);
    CHECK(g.raw() == std::array<Rat, 7>{Rat(16), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), rat(1, 4)});
  }

  SUBCASE("identity and inverse") {
    CHECK(act(Matrix2::identity(), x6y6) == x6y6);
    Matrix2 m{Rat(2), Rat(1), Rat(3), Rat(2)};  // det 1
    Matrix2 minv{Rat(2), Rat(-1), Rat(-3), Rat(2)};
    CHECK(act(minv, act(m, x6y6)) == x6y6);
  }

  SUBCASE("composition order") {
    std::mt19937_64 rng(31);
    BinaryForm f = roots_form({Rat(0), Rat(1), Rat(2), Rat(3), Rat(4), Rat(7)});
    for (int trial = 0; trial < 25; ++trial) {
      Matrix2 m1 = rnd_matrix(rng), m2 = rnd_matrix(rng);
      CHECK(act(m1, act(m2, f)) == act(m1 * m2, f));
    }
  }

  SUBCASE("profile is invariant") {
    std::mt19937_64 rng(37);
    BinaryForm f = roots_form({Rat(0), Rat(0), Rat(1), Rat(1), Rat(1), Rat(4)});
    for (int trial = 0; trial < 10; ++trial)
      CHECK(multiplicity_profile(act(rnd_matrix(rng), f)) == MultiplicityProfile{3, 2, 1});
  }

  CHECK_THROWS_AS(act(Matrix2{Rat(1), Rat(2), Rat(2), Rat(4)}, x6y6), G2Error);
}

TEST_CASE("leading-coefficient normalization") {
  SUBCASE("already nonzero: identity") {
    BinaryForm f = roots_form({Rat(0), Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)});
    auto [g, m] = normalize_leading(f);
    CHECK(m == Matrix2::identity());
    CHECK(g == f);
  }
  SUBCASE("root at infinity forces a shear") {
    BinaryForm f = roots_form({Rat(0), Rat(1), Rat(2), Rat(3), Rat(4)}, 1);
    auto [g, m] = normalize_leading(f);
    CHECK(m.det() == 1);
    CHECK(g.a != 0);
    CHECK(act(m, f) == g);
    CHECK(multiplicity_profile(g) == multiplicity_profile(f));
  }
  SUBCASE("y^6 is moved off infinity") {
    BinaryForm f = roots_form({}, 6);
    auto [g, m] = normalize_leading(f);
    CHECK(g.a != 0);
    CHECK(m.det() == 1);
  }
}

TEST_CASE("rational root extraction") {
  std::vector<Rat> roots{Rat(-3), rat(1, 2), Rat(5), rat(7, 3), Rat(-1), Rat(2)};
  BinaryForm f = roots_form(roots, 0, Rat(3));
  auto points = rational_root_set(f);
  REQUIRE(points.size() == 6);
  std::multiset<std::string> got, want;
  for (const auto& p : points) got.insert(p.infinite ? "inf" : to_string(p.value));
  for (const Rat& r : roots) want.insert(to_string(r));
  CHECK(got == want);

  SUBCASE("root at infinity is reported") {
    auto pts = rational_root_set(roots_form({Rat(0), Rat(1), Rat(-1), Rat(2), Rat(-2)}, 1));
    CHECK(std::count_if(pts.begin(), pts.end(), [](const ProjPoint& p) { return p.infinite; }) == 1);
  }
  SUBCASE("repeated roots rejected") {
    CHECK_THROWS_AS(rational_root_set(roots_form({Rat(0), Rat(0), Rat(1), Rat(2), Rat(3), Rat(4)})),
                    G2Error);
  }
  SUBCASE("irrational roots rejected") {
    // x^6 - 2 x^4 y^2 ... choose (x^2-2)(x^2-3)(x^2-5) style: no rational roots
    UniPoly p = UniPoly({Rat(-2), Rat(0), Rat(1)}) * UniPoly({Rat(-3), Rat(0), Rat(1)}) *
                UniPoly({Rat(-5), Rat(0), Rat(1)});
    std::array<Rat, 7> raw;
    for (int k = 0; k <= 6; ++k) raw[static_cast<size_t>(6 - k)] = p[static_cast<size_t>(k)];
    CHECK_THROWS_AS(rational_root_set(form_from_raw(raw)), G2Error);
  }
}

TEST_CASE("rational involutions of the root set") {
  SUBCASE("arithmetic progression") {
    auto invs = involutions_rational(roots_form({Rat(0), Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)}));
    REQUIRE(invs.size() == 1);
    CHECK(mat_key(invs[0].m) == "1,0,-5,-1");  // x -> 5 - x
    CHECK(invs[0].bielliptic);
    CHECK(invs[0].orbit_pairs == std::vector<std::array<int, 2>>{{0, 5}, {1, 3}, {2, 4}});
  }
  SUBCASE("reciprocal roots") {
    auto invs = involutions_rational(
        roots_form({Rat(2), rat(1, 2), Rat(3), rat(1, 3), Rat(4), rat(1, 4)}));
    REQUIRE(invs.size() == 1);
    CHECK(mat_key(invs[0].m) == "0,1,1,0");  // x -> 1/x
    CHECK(invs[0].bielliptic);
  }
  SUBCASE("plus-minus set with infinity") {
    auto invs = involutions_rational(roots_form({Rat(0), Rat(1), Rat(-1), Rat(2), Rat(-2)}, 1));
    REQUIRE(invs.size() == 3);
    std::set<std::string> keys;
    bool saw_fixed = false;
    for (const auto& inv : invs) {
      keys.insert(mat_key(inv.m));
      if (!inv.bielliptic) saw_fixed = true;
    }
    CHECK(keys == std::set<std::string>{"0,1,2,0", "0,1,-2,0", "1,0,0,-1"});
    CHECK(saw_fixed);  // x -> -x fixes 0 and infinity
  }
  SUBCASE("generic set has none") {
    CHECK(involutions_rational(roots_form({Rat(0), Rat(1), Rat(2), Rat(3), Rat(4), Rat(7)})).empty());
  }
  SUBCASE("involution matrices square to a scalar and permute the roots") {
    auto f = roots_form({Rat(0), Rat(1), Rat(-1), Rat(2), Rat(-2)}, 1);
    for (const auto& inv : involutions_rational(f)) {
      Matrix2 sq = inv.m * inv.m;
      CHECK(sq.m12 == 0);
      CHECK(sq.m21 == 0);
      CHECK(sq.m11 == sq.m22);
      CHECK(sq.m11 != 0);
    }
  }
}

TEST_CASE("forms built from swap-symmetric branch points") {
  BinaryForm f = bielliptic_form(Rat(2), Rat(3), Rat(4));
  // the root multiset is {2, 1/2, 3, 1/3, 4, 1/4}: invariant under x -> 1/x,
  // so the raw coefficient vector is palindromic
  auto raw = f.raw();
  for (int k = 0; k <= 6; ++k)
    CHECK(raw[static_cast<size_t>(k)] == raw[static_cast<size_t>(6 - k)]);
  auto invs = involutions_rational(f);
  REQUIRE(invs.size() == 1);
  CHECK(invs[0].bielliptic);

  CHECK_THROWS_AS(bielliptic_form(Rat(0), Rat(3), Rat(4)), G2Error);   // 0 degenerate
  CHECK_THROWS_AS(bielliptic_form(Rat(1), Rat(3), Rat(4)), G2Error);   // 1 = 1/1
  CHECK_THROWS_AS(bielliptic_form(Rat(2), rat(1, 2), Rat(4)), G2Error);  // pairwise collision
  CHECK_THROWS_AS(bielliptic_form(Rat(3), Rat(3), Rat(4)), G2Error);   // repeated
  CHECK_THROWS_AS(bielliptic_form(Rat(-1), Rat(3), Rat(4)), G2Error);  // -1 = 1/(-1)
}

TEST_CASE("multiplicity profiles") {
  CHECK(multiplicity_profile(form_from_raw({Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)})) ==
        MultiplicityProfile{3, 3});
  CHECK(multiplicity_profile(roots_form({Rat(1), Rat(1), Rat(1), Rat(1), Rat(2), Rat(3)})) ==
        MultiplicityProfile{4, 1, 1});
  CHECK(multiplicity_profile(roots_form({Rat(0), Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)}, 0, rat(-2, 7))) ==
        MultiplicityProfile{1, 1, 1, 1, 1, 1});
  CHECK(multiplicity_profile(roots_form({}, 6, rat(1, 3))) == MultiplicityProfile{6});
}
