#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>
#include <set>
#include <sstream>

#include "genus2/binary_form.hpp"
#include "genus2/errors.hpp"
#include "genus2/relation.hpp"

using namespace g2;

namespace {

std::array<Rat, 4> abcd_of(const char* A, const char* B, const char* C, const char* D) {
  return {Rat(A), Rat(B), Rat(C), Rat(D)};
}

} // namespace

TEST_CASE("weight-30 monomial basis") {
  auto basis = relation_monomial_basis();
  CHECK(basis.size() == 47);
  CHECK(std::is_sorted(basis.begin(), basis.end()));
  std::set<std::array<int, 4>> uniq(basis.begin(), basis.end());
  CHECK(uniq.size() == basis.size());
  for (const auto& e : basis) {
    CHECK(e[0] >= 0);
    CHECK(e[1] >= 0);
    CHECK(e[2] >= 0);
    CHECK(e[3] >= 0);
    CHECK(e[0] + 2 * e[1] + 3 * e[2] + 5 * e[3] == 15);
  }
  // extremes of the enumeration
  CHECK(uniq.count({0, 0, 0, 3}));  // D^3
  CHECK(uniq.count({15, 0, 0, 0})); // A^15
  CHECK(uniq.count({0, 0, 5, 0}));  // C^5
}

TEST_CASE("fitted relation") {
  RelationPolynomial G = derive_relation_G(60, 20240601);
  auto basis = relation_monomial_basis();
  std::set<std::array<int, 4>> allowed(basis.begin(), basis.end());
  for (const auto& [e, c] : G.coefficients) {
    CHECK(allowed.count(e) == 1);
    CHECK(c != 0);
  }

  // E = 0 on x^3 y^3 while A = 6, so the pure-A monomial cannot appear
  CHECK(G.coefficients.count({15, 0, 0, 0}) == 0);
  CHECK(G.eval(abcd_of("6", "0", "0", "0")) == 0);

  // x(x^5+y^5) has (A,B,C,D) = (0,0,0,3125) and E = 5^10, pinning the D^3 term
  CHECK(G.coefficients.at({0, 0, 0, 3}) == 3125);
  CHECK(G.eval(abcd_of("0", "0", "0", "3125")) == Rat("95367431640625"));

  SUBCASE("matches E^2 on fixed forms") {
    struct Probe {
      std::array<Rat, 4> abcd;
      Rat e;
    };
    const Probe probes[] = {
        {abcd_of("3110", "165952", "159056000", "1194393600"), Rat(0)},
        {abcd_of("8070", "1380672", "3504988800", "526727577600"), Rat("28259740142151598080")},
        {abcd_of("7022040", "460571380992", "1016265339771033600", "7574338390632265521561600"),
         Rat("24760722882029178081432183179080284241920")},
        {abcd_of("106829/72", "90938941/82944", "4279027324513/7962624", "549266265625/764411904"), Rat(0)},
        {abcd_of("206262", "683919936", "47781304742016", "1161552822312960000"),
         Rat("-1031790670457884503268353638400")},
        {abcd_of("-240", "1620", "-119880", "-46656"), Rat(0)},
    };
    for (const auto& p : probes) CHECK(G.eval(p.abcd) == p.e * p.e);
  }

  SUBCASE("text serialization") {
    std::string text = G.to_text();
    CHECK(!text.empty());
    std::istringstream is(text);
    std::string line;
    std::regex shape(R"(^\d+ \d+ \d+ \d+ -?\d+/\d+$)");
    size_t lines = 0;
    std::array<int, 4> prev = {-1, -1, -1, -1};
    while (std::getline(is, line)) {
      CAPTURE(line);
      CHECK(std::regex_match(line, shape));
      std::istringstream ls(line);
      std::array<int, 4> e;
      ls >> e[0] >> e[1] >> e[2] >> e[3];
      CHECK(prev < e);
      prev = e;
      ++lines;
    }
    CHECK(lines == G.coefficients.size());
  }

  SUBCASE("seed-independent and deterministic") {
    RelationPolynomial again = derive_relation_G(60, 20240601);
    CHECK(again.to_text() == G.to_text());
    // the relation is unique, so a different sample set fits the same polynomial
    RelationPolynomial other = derive_relation_G(55, 7);
    CHECK(other.coefficients == G.coefficients);
  }
}

TEST_CASE("sample count below the basis size") {
  CHECK_THROWS_AS(derive_relation_G(46, 1), G2Error);
  try {
    derive_relation_G(10, 1);
  } catch (const G2Error& err) {
    CHECK(err.code() == Err::OutOfRange);
  }
}
