#include <condition1/primes.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace condition1 {
namespace {

using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Witness set proving primality for every n < 3.3 * 10^24.
constexpr std::array<u64, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                            17, 19, 23, 29, 31, 37};

bool strong_probable_prime(u64 n, u64 w) {
  u64 d = n - 1;
  int s = std::countr_zero(d);
  d >>= s;
  u64 x = powmod(w, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

void check_range(u64 n, const char* op) {
  if (n > kMaxInput)
    throw std::out_of_range(std::string(op) + ": input exceeds 2^63");
}

std::vector<u64> simple_sieve(u64 n) {
  std::vector<u64> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (u64 i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

const std::vector<u64>& trial_primes() {
  static const std::vector<u64> primes = simple_sieve(1'000'000);
  return primes;
}

// Brent's cycle-finding rho with a fixed parameter schedule so repeated
// runs factor identically.
u64 brent_rho(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1, q = 1, ys = y;
    u64 r = 1;
    const u64 m = 128;
    while (d == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      for (u64 k = 0; k < r && d == 1; k += m) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
      r <<= 1;
    }
    if (d == n) {
      do {
        ys = (mulmod(ys, ys, n) + c) % n;
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = brent_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

constexpr std::array<u64, 15> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19,
                                              23, 29, 31, 37, 41, 43, 47};

}  // namespace

PrimePower make_prime_power(u64 p, unsigned a) {
  if (!is_prime(p)) throw std::domain_error("make_prime_power: p not prime");
  if (a < 1) throw std::domain_error("make_prime_power: exponent must be >= 1");
  u64 value = 1;
  for (unsigned i = 0; i < a; ++i) {
    if (value > kMaxInput / p)
      throw std::out_of_range("make_prime_power: p^a exceeds 2^63");
    value *= p;
  }
  return PrimePower{p, a, value};
}

bool is_prime(u64 n) {
  check_range(n, "is_prime");
  if (n < 2) return false;
  for (u64 p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;
  for (u64 w : kWitnesses)
    if (!strong_probable_prime(n, w)) return false;
  return true;
}

u64 prev_prime(u64 m) {
  check_range(m, "prev_prime");
  if (m < 3) throw std::domain_error("prev_prime: no prime below 2");
  if (m <= 8) {
    for (u64 c = m - 1;; --c)
      if (is_prime(c)) return c;
  }
  // Only candidates coprime to 30 reach the full test.
  for (u64 c = m - 1; c >= 7; --c) {
    if (c % 2 == 0 || c % 3 == 0 || c % 5 == 0) continue;
    if (is_prime(c)) return c;
  }
  return 5;  // unreachable: m > 8 always finds 7 first
}

std::vector<u64> sieve_range(u64 lo, u64 hi) {
  check_range(hi, "sieve_range");
  if (lo > hi) throw std::domain_error("sieve_range: lo > hi");
  std::vector<u64> out;
  if (hi <= 2) return out;
  lo = std::max<u64>(lo, 2);
  const u64 root = u64(std::sqrt(double(hi))) + 2;
  const std::vector<u64> base = simple_sieve(root);
  const u64 block = 1u << 20;
  std::vector<bool> composite;
  for (u64 seg = lo; seg < hi; seg += block) {
    const u64 end = std::min(hi, seg + block);
    composite.assign(end - seg, false);
    for (u64 p : base) {
      if (p * p >= end) break;
      u64 start = std::max(p * p, (seg + p - 1) / p * p);
      for (u64 j = start; j < end; j += p) composite[j - seg] = true;
    }
    for (u64 v = seg; v < end; ++v)
      if (!composite[v - seg]) out.push_back(v);
  }
  return out;
}

u64 primorial(unsigned i) {
  if (i < 1) throw std::domain_error("primorial: i must be >= 1");
  if (i > 15)
    throw std::out_of_range(
        "primorial: i > 15 overflows 64 bits (max supported i is 15)");
  u64 r = 1;
  for (unsigned j = 0; j < i; ++j) r *= kSmallPrimes[j];
  return r;
}

Factorization factorize(u64 n) {
  check_range(n, "factorize");
  if (n < 2) throw std::domain_error("factorize: n must be >= 2");
  Factorization f;
  f.n = n;
  u64 rem = n;
  for (u64 p : trial_primes()) {
    if (p * p > rem) break;
    if (rem % p) continue;
    unsigned e = 0;
    while (rem % p == 0) {
      rem /= p;
      ++e;
    }
    f.factors.emplace_back(p, e);
  }
  if (rem > 1) {
    std::vector<u64> large;
    factor_rec(rem, large);
    std::sort(large.begin(), large.end());
    for (std::size_t i = 0; i < large.size();) {
      std::size_t j = i;
      while (j < large.size() && large[j] == large[i]) ++j;
      f.factors.emplace_back(large[i], unsigned(j - i));
      i = j;
    }
  }
  return f;
}

PrimePower largest_prime_power(u64 n) {
  const Factorization f = factorize(n);
  PrimePower best;
  for (const auto& [p, a] : f.factors) {
    u64 value = 1;
    for (unsigned i = 0; i < a; ++i) value *= p;
    if (value > best.value) best = PrimePower{p, a, value};
  }
  return best;
}

}  // namespace condition1
