#include <condition1/padic.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

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

void require_base(u64 p) {
  if (p < 2) throw std::domain_error("base p must be a prime >= 2");
}

void require_k(u64 n, u64 k) {
  if (k > n) throw std::domain_error("k must satisfy 0 <= k <= n");
}

// C(a,b) mod p for digits a,b < p. Small p goes through a Pascal row,
// larger p through the multiplicative formula with a Fermat inverse.
u64 digit_binomial_mod(u64 a, u64 b, u64 p) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  if (b == 0) return 1;
  if (p <= 64) {
    std::vector<u64> row(a + 1, 0);
    row[0] = 1;
    for (u64 i = 1; i <= a; ++i)
      for (u64 j = std::min(i, b); j > 0; --j)
        row[j] = (row[j] + row[j - 1]) % p;
    return row[b];
  }
  u64 num = 1, den = 1;
  for (u64 i = 1; i <= b; ++i) {
    num = mulmod(num, (a - b + i) % p, p);
    den = mulmod(den, i % p, p);
  }
  return mulmod(num, powmod(den, p - 2, p), p);
}

}  // namespace

DigitExpansion digits_base_p(u64 n, u64 p) {
  require_base(p);
  DigitExpansion e{n, p, {}};
  do {
    e.digits.push_back(n % p);
    n /= p;
  } while (n > 0);
  return e;
}

u64 digit_sum(u64 n, u64 p) {
  require_base(p);
  u64 s = 0;
  while (n > 0) {
    s += n % p;
    n /= p;
  }
  return s;
}

u64 vp_factorial(u64 n, u64 p) {
  require_base(p);
  u64 floor_sum = 0;
  for (u64 m = n / p; m > 0; m /= p) floor_sum += m;
  const u64 by_digits = (n - digit_sum(n, p)) / (p - 1);
  if (floor_sum != by_digits)
    throw std::logic_error("vp_factorial: floor sum and digit formula differ");
  return floor_sum;
}

unsigned kummer_valuation(u64 n, u64 k, u64 p) {
  require_base(p);
  require_k(n, k);
  u64 a = k, b = n - k, carry = 0;
  unsigned carries = 0;
  while (a || b || carry) {
    const u64 s = a % p + b % p + carry;
    carry = s >= p ? 1 : 0;
    carries += unsigned(carry);
    a /= p;
    b /= p;
  }
  return carries;
}

bool lucas_divisible(u64 n, u64 k, u64 p) {
  require_base(p);
  require_k(n, k);
  while (k > 0) {
    if (k % p > n % p) return true;
    k /= p;
    n /= p;
  }
  return false;
}

u64 lucas_residue(u64 n, u64 k, u64 p) {
  require_base(p);
  require_k(n, k);
  u64 res = 1 % p;
  while ((k > 0 || n > 0) && res != 0) {
    res = mulmod(res, digit_binomial_mod(n % p, k % p, p), p);
    k /= p;
    n /= p;
  }
  return res;
}

}  // namespace condition1
