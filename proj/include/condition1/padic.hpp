#pragma once

#include <condition1/primes.hpp>

#include <vector>

namespace condition1 {

struct DigitExpansion {
  u64 n = 0;
  u64 p = 0;
  std::vector<u64> digits;  // least-significant first; [0] when n == 0
};

// Base-p expansion, least-significant digit first.
DigitExpansion digits_base_p(u64 n, u64 p);

// s_p(n), the sum of the base-p digits of n.
u64 digit_sum(u64 n, u64 p);

// v_p(n!) by the floor sum, cross-checked against (n - s_p(n)) / (p - 1).
u64 vp_factorial(u64 n, u64 p);

// v_p(C(n,k)) = number of carries when adding k and n-k in base p.
unsigned kummer_valuation(u64 n, u64 k, u64 p);

// True iff p divides C(n,k): some base-p digit of k exceeds that of n.
bool lucas_divisible(u64 n, u64 k, u64 p);

// C(n,k) mod p via the digit product, with C(a,b) = 0 when b > a.
u64 lucas_residue(u64 n, u64 k, u64 p);

}  // namespace condition1
