#include "genus2/relation.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace g2 {

Rat RelationPolynomial::eval(const std::array<Rat, 4>& abcd) const {
  Rat out(0);
  for (const auto& [e, c] : coefficients) {
    Rat term = c;
    for (int v = 0; v < 4; ++v)
      term *= pow_rat(abcd[static_cast<size_t>(v)], static_cast<unsigned long>(e[static_cast<size_t>(v)]));
    out += term;
  }
  return out;
}

std::string RelationPolynomial::to_text() const {
  std::ostringstream os;
  for (const auto& [e, c] : coefficients) {
    os << e[0] << ' ' << e[1] << ' ' << e[2] << ' ' << e[3] << ' ' << num(c).get_str() << '/'
       << den(c).get_str() << '\n';
  }
  return os.str();
}

std::vector<std::array<int, 4>> relation_monomial_basis() {
  std::vector<std::array<int, 4>> basis;
  for (int l = 0; 5 * l <= 15; ++l)
    for (int k = 0; 5 * l + 3 * k <= 15; ++k)
      for (int j = 0; 5 * l + 3 * k + 2 * j <= 15; ++j)
        basis.push_back({15 - 2 * j - 3 * k - 5 * l, j, k, l});
  std::sort(basis.begin(), basis.end());
  return basis;
}

namespace {

InvariantVector random_sample(std::mt19937_64& rng) {
  std::set<long> used;
  while (used.size() < 6) used.insert(static_cast<long>(rng() % 17) - 8);
  RootSpec spec;
  for (long v : used) spec.finite_roots.emplace_back(v);
  return invariants_from_roots(spec);
}

} // namespace

RelationPolynomial derive_relation_G(int sample_count, uint64_t seed) {
  auto basis = relation_monomial_basis();
  const int n = static_cast<int>(basis.size());
  require(n == 47, "weight-30 basis size");
  if (sample_count < n) fail(Err::OutOfRange, "sample_count below the basis size");

  std::mt19937_64 rng(seed);
  auto row_of = [&](const InvariantVector& iv) {
    std::vector<Rat> row;
    row.reserve(static_cast<size_t>(n) + 1);
    for (const auto& e : basis) {
      Rat t = pow_rat(iv.A, static_cast<unsigned long>(e[0])) * pow_rat(iv.B, static_cast<unsigned long>(e[1])) *
              pow_rat(iv.C, static_cast<unsigned long>(e[2])) * pow_rat(iv.D, static_cast<unsigned long>(e[3]));
      row.push_back(t);
    }
    row.push_back(iv.E * iv.E); // RHS
    return row;
  };

  std::vector<std::vector<Rat>> rows;
  rows.reserve(static_cast<size_t>(sample_count));
  for (int i = 0; i < sample_count; ++i) rows.push_back(row_of(random_sample(rng)));

  // exact Gauss on the augmented system
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int piv = rank;
    while (piv < static_cast<int>(rows.size()) && rows[static_cast<size_t>(piv)][static_cast<size_t>(col)] == 0) ++piv;
    if (piv == static_cast<int>(rows.size())) continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(piv)]);
    Rat lead = rows[static_cast<size_t>(rank)][static_cast<size_t>(col)];
    for (auto& x : rows[static_cast<size_t>(rank)]) x /= lead;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank) continue;
      Rat fac = rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (fac == 0) continue;
      for (int cc = col; cc <= n; ++cc)
        rows[static_cast<size_t>(r)][static_cast<size_t>(cc)] -=
            fac * rows[static_cast<size_t>(rank)][static_cast<size_t>(cc)];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank < n) fail(Err::RankDeficient, "sampled system is rank-deficient; retry with a different seed");
  // rows beyond the rank must now have zero RHS, else no exact relation fits
  for (int r = rank; r < static_cast<int>(rows.size()); ++r)
    if (rows[static_cast<size_t>(r)][static_cast<size_t>(n)] != 0)
      fail(Err::VerificationFailed, "samples are inconsistent with a single relation");

  RelationPolynomial G;
  for (int r = 0; r < rank; ++r) {
    const Rat& c = rows[static_cast<size_t>(r)][static_cast<size_t>(n)];
    if (c != 0) G.coefficients[basis[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])]] = c;
  }

  // held-out verification on fresh samples
  for (int i = 0; i < 50; ++i) {
    InvariantVector iv = random_sample(rng);
    if (G.eval(iv.abcd()) != iv.E * iv.E)
      fail(Err::VerificationFailed, "held-out sample violates the fitted relation");
  }
  return G;
}

} // namespace g2
