#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "genus2/errors.hpp"

namespace g2 {

// Exact rational, canonical form (gcd(|num|,den)=1, den>0) maintained by GMP.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline const Int& num(const Rat& q) { return q.get_num(); }
inline const Int& den(const Rat& q) { return q.get_den(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// "p" for integers, "p/q" otherwise; the I/O format used everywhere.
inline std::string to_string(const Rat& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses "p", "p/q", with optional sign; no whitespace.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) fail(Err::Parse, "empty rational");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Int n(s, 10);
      return Rat(n);
    }
    std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    if (ns.empty() || ds.empty()) fail(Err::Parse, "malformed rational '" + s + "'");
    Int n(ns, 10), d(ds, 10);
    if (d == 0) fail(Err::Parse, "zero denominator in '" + s + "'");
    Rat q(n, d);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail(Err::Parse, "malformed rational '" + s + "'");
  }
}

inline Rat pow_rat(const Rat& q, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
  return r;
}

} // namespace g2
