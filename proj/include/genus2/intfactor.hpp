#pragma once

#include <cstdint>
#include <map>

#include "genus2/rational.hpp"

namespace g2 {

bool is_prime_u64(uint64_t n);

// Prime factorization of |n| as prime -> exponent; n must be nonzero.
// Trial division for small primes, then Pollard's rho (Brent variant) with
// deterministic Miller-Rabin on 64-bit chunks. Inputs here stay word-sized
// in practice, but the splitting is recursive and handles any mpz.
std::map<Int, int> factor_integer(const Int& n);

} // namespace g2
