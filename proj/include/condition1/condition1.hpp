#pragma once

#include <condition1/padic.hpp>
#include <condition1/primes.hpp>

#include <optional>
#include <string>
#include <vector>

namespace condition1 {

// One interval [c*q_d, c*q_d + beta_d] from the sieve lemma.
struct DangerousInterval {
  u64 c = 0;
  u64 lo = 0;  // c * q_d
  u64 hi = 0;  // c * q_d + beta_d
  u64 d = 0;
  u64 q_d = 0;
  u64 beta_d = 0;  // n - d * q_d

  friend bool operator==(const DangerousInterval&,
                         const DangerousInterval&) = default;
};

struct IntervalSet {
  u64 n = 0;
  u64 d = 0;
  u64 q_d = 0;
  u64 beta_d = 0;
  bool disjoint = false;  // q_d > n/(d+1)
  std::vector<DangerousInterval> intervals;
};

struct ResidualCheck {
  u64 k = 0;
  bool divisible_by_p = false;
  bool divisible_by_q = false;

  friend bool operator==(const ResidualCheck&, const ResidualCheck&) = default;
};

enum class VerdictKind { Holds, FailsAt, Inapplicable };

struct Verdict {
  VerdictKind kind = VerdictKind::Inapplicable;
  std::vector<u64> failures;  // k values, canonical half-range, for FailsAt
  std::string reason;         // for Inapplicable

  bool holds() const { return kind == VerdictKind::Holds; }
};

struct Certificate {
  u64 n = 0;
  u64 p = 0;
  unsigned a = 0;
  u64 q = 0;
  u64 d = 0;  // 0 for brute-force certificates
  std::vector<DangerousInterval> intervals;
  std::vector<ResidualCheck> residuals;
  Verdict verdict;
};

// A solution of p^a * x - q_d * y = delta placing k = p^a * x in the
// dangerous interval with c = y.
struct DiophantineHit {
  u64 delta = 0;
  u64 x = 0;
  u64 y = 0;
  u64 k = 0;  // p^a * x

  friend bool operator==(const DiophantineHit&,
                         const DiophantineHit&) = default;
};

struct DiophantineSummary {
  u64 q_d = 0;
  u64 beta_d = 0;
  std::vector<DiophantineHit> hits;
  u64 bound = 0;  // 2 + sum over delta of N(delta)
};

struct NVariationBound {
  u64 coarse = 0;   // 2 + floor(d/2)
  u64 refined = 0;  // 2 + total Diophantine hits; refined <= coarse
};

struct CentralTests {
  bool legendre_odd = false;  // (n - s_p(n)) / (p-1) odd
  bool big_digit = false;     // some base-p digit of n/2 exceeds floor(p/2)
  bool odd_digit = false;     // some base-p digit of n is odd
  bool top_power = false;     // p^floor(log n / log p) > n/2
};

struct MinimalVariation {
  u64 count = 0;            // minimal N; 0 for n = 1 (vacuous)
  std::vector<u64> primes;  // a witness set, ascending
};

// Brute-force scan of every k in [1, n/2] against both primes.
// Symmetry C(n,k) = C(n,n-k) covers the upper half; failures are reported
// in the lower half only.
Certificate oracle_check_pair(u64 n, u64 p, u64 q, u64 cap = 10'000'000);

// The dangerous intervals [c*q_d, c*q_d + beta_d] for 0 <= c < (d+1)/2.
IntervalSet dangerous_intervals(u64 n, u64 d);

// Multiples of pa.value lying in some dangerous interval, restricted to
// [1, n/2], ascending and deduplicated.
std::vector<u64> residual_multiples(u64 n, const PrimePower& pa, u64 d);

// Sieve-lemma certificate: only residual multiples need explicit checks;
// each is tested against both p and q_d. Cost is independent of n except
// through log n.
Certificate verify_with_theorem(u64 n, const PrimePower& pa, u64 d);

// Smallest d <= d_max with n - d*q_d < pa.value, if any.
std::optional<u64> failure_depth(u64 n, const PrimePower& pa, u64 d_max);

// True iff p divides C(n, n/2); floor-parity criterion. Requires n even.
bool central_binomial_divisible(u64 n, u64 p);

// The four independent sufficient conditions for p | C(n, n/2).
CentralTests central_binomial_sufficient_tests(u64 n, u64 p);

// All solutions of pa.value * x - q_d * y = delta with x > 0,
// 0 <= y <= floor(d/2), 0 <= delta <= beta_d.
DiophantineSummary diophantine_hits(u64 n, const PrimePower& pa, u64 d);

// Coarse bound 2 + floor(d/2) with the refined Diophantine bound attached.
// Empty when the precondition (a prime in (n/(d+1), n/d) with
// n - d*q < pa.value) fails.
std::optional<NVariationBound> n_variation_upper_bound(u64 n,
                                                       const PrimePower& pa,
                                                       u64 d);

// Smallest N and witness primes such that every C(n,k), 1 <= k <= n-1, is
// divisible by some member. Exhaustive; requires n <= cap.
MinimalVariation n_variation_minimal(u64 n, u64 cap = 10'000);

// True iff the multinomial coefficient n! / (k_1! ... k_m!) is divisible
// by p or q. Parts must be in [1, n-1] and sum to n.
bool multinomial_check(u64 n, const std::vector<u64>& parts, u64 p, u64 q);

// Smallest k <= k_max such that some prime q satisfies
// n*p^k - p^k < q < n*p^k, with the resulting d = 1 certificate.
std::optional<std::pair<unsigned, Certificate>> find_multiple_exponent(
    u64 n, u64 p, unsigned k_max);

// Tests whether n*p has a prime q with n*p - p^a' < q < n*p, where p^a' is
// the largest power of p dividing n*p; d = 1 certificate on success.
std::optional<Certificate> check_np_prime_gap(u64 n, u64 p);

}  // namespace condition1
