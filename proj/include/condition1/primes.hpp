#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace condition1 {

using u64 = std::uint64_t;

// Largest supported input: the library works over [0, 2^63].
inline constexpr u64 kMaxInput = u64(1) << 63;

struct PrimePower {
  u64 p = 0;       // prime base
  unsigned a = 0;  // exponent, >= 1
  u64 value = 0;   // p^a

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Validates p prime and a >= 1, computes value. Throws std::domain_error.
PrimePower make_prime_power(u64 p, unsigned a);

struct Factorization {
  u64 n = 0;
  // (prime, exponent), primes strictly increasing
  std::vector<std::pair<u64, unsigned>> factors;
};

// Deterministic strong-pseudoprime test, exact over the full supported range.
bool is_prime(u64 n);

// Largest prime strictly below m. Requires m >= 3.
u64 prev_prime(u64 m);

// Primes in [lo, hi), ascending. Segmented; memory O(hi - lo + sqrt(hi)).
std::vector<u64> sieve_range(u64 lo, u64 hi);

// Product of the first i primes. Requires 1 <= i <= 15 (64-bit overflow).
u64 primorial(unsigned i);

// Complete factorization of n >= 2. Trial division by sieved primes up to
// 10^6, then deterministic Brent-rho on the cofactor.
Factorization factorize(u64 n);

// Among the maximal prime-power divisors p^a of n, the one of largest value.
PrimePower largest_prime_power(u64 n);

}  // namespace condition1
