#include "genus2/intfactor.hpp"

#include <random>

namespace g2 {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Brent's cycle variant of Pollard's rho; n odd composite, not a prime power
// of interest—just returns some nontrivial factor.
uint64_t rho_u64(uint64_t n, std::mt19937_64& rng) {
  if (n % 2 == 0) return 2;
  while (true) {
    uint64_t y = rng() % (n - 2) + 1, c = rng() % (n - 1) + 1, m = 128;
    uint64_t g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
      x = y;
      for (uint64_t i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
      for (uint64_t k = 0; k < r && g == 1; k += m) {
        ys = y;
        uint64_t lim = std::min(m, r - k);
        for (uint64_t i = 0; i < lim; ++i) {
          y = (mulmod_u64(y, y, n) + c) % n;
          q = mulmod_u64(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (mulmod_u64(ys, ys, n) + c) % n;
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
}

// Same scheme on mpz for operands beyond 64 bits.
Int rho_mpz(const Int& n, std::mt19937_64& rng) {
  if (n % 2 == 0) return Int(2);
  while (true) {
    Int y = Int(rng()) % (n - 2) + 1, c = Int(rng()) % (n - 1) + 1;
    Int g = 1, q = 1, x = 0, ys = 0;
    unsigned long r = 1, m = 128;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && g == 1; k += m) {
        ys = y;
        unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        Int d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g != n) return g;
  }
}

void add_factor(std::map<Int, int>& out, const Int& p, int e) { out[p] += e; }

void split(const Int& n, int mult, std::map<Int, int>& out, std::mt19937_64& rng) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    add_factor(out, n, mult);
    return;
  }
  // perfect powers first; rho degenerates on p^k
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long e = 2; ; ++e) {
      Int root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e)) {
        split(root, mult * static_cast<int>(e), out, rng);
        return;
      }
      require(root > 1, "perfect power with no exact root");
    }
  }
  Int d = n.fits_ulong_p() ? Int(rho_u64(mpz_get_ui(n.get_mpz_t()), rng)) : rho_mpz(n, rng);
  split(d, mult, out, rng);
  split(n / d, mult, out, rng);
}

} // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // deterministic for all 64-bit inputs with these witnesses
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::map<Int, int> factor_integer(const Int& n) {
  if (n == 0) fail(Err::Internal, "factor_integer(0)");
  std::map<Int, int> out;
  Int m = abs(n);
  if (m == 1) return out;
  // small primes by trial division
  for (uint64_t p = 2; p < 100000 && Int(p) * p <= m; p = (p == 2 ? 3 : p + 2)) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      int e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        m /= p;
        ++e;
      }
      out[Int(p)] = e;
    }
  }
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  split(m, 1, out, rng);
  return out;
}

} // namespace g2
