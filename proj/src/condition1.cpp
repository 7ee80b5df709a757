#include <condition1/condition1.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace condition1 {
namespace {

using u128 = unsigned __int128;

u64 ceil_div(u64 n, u64 d) { return (n + d - 1) / d; }

void require_prime(u64 p, const char* what) {
  if (!is_prime(p)) throw std::domain_error(std::string(what) + " is not prime");
}

void require_divisor(u64 n, const PrimePower& pa) {
  if (pa.value == 0 || n % pa.value != 0)
    throw std::domain_error("prime power does not divide n");
}

unsigned exponent_of(u64 n, u64 p) {
  unsigned a = 0;
  while (n % p == 0) {
    n /= p;
    ++a;
  }
  return a;
}

Certificate inapplicable(u64 n, const PrimePower& pa, u64 d, std::string why) {
  Certificate cert;
  cert.n = n;
  cert.p = pa.p;
  cert.a = pa.a;
  cert.d = d;
  cert.verdict = Verdict{VerdictKind::Inapplicable, {}, std::move(why)};
  return cert;
}

// Fixed-size bit set over k in [1, half] for the minimal-variation search.
struct CoverSet {
  std::vector<u64> bits;

  static CoverSet empty(u64 half) {
    return CoverSet{std::vector<u64>(half / 64 + 1, 0)};
  }
  void set(u64 k) { bits[k >> 6] |= u64(1) << (k & 63); }
  bool none() const {
    for (u64 w : bits)
      if (w) return false;
    return true;
  }
  u64 count() const {
    u64 c = 0;
    for (u64 w : bits) c += std::popcount(w);
    return c;
  }
  CoverSet and_with(const CoverSet& o) const {
    CoverSet r = *this;
    for (std::size_t i = 0; i < bits.size(); ++i) r.bits[i] &= o.bits[i];
    return r;
  }
};

}  // namespace

Certificate oracle_check_pair(u64 n, u64 p, u64 q, u64 cap) {
  if (n < 2) throw std::domain_error("oracle_check_pair: n must be >= 2");
  if (n > cap)
    throw std::out_of_range(
        "oracle_check_pair: n exceeds the scan cap; use verify_with_theorem");
  require_prime(p, "p");
  require_prime(q, "q");
  if (p == q) throw std::domain_error("oracle_check_pair: p and q must differ");

  Certificate cert;
  cert.n = n;
  cert.p = p;
  cert.a = exponent_of(n, p);
  cert.q = q;
  cert.d = 0;
  std::vector<u64> failures;
  for (u64 k = 1; k <= n / 2; ++k)
    if (!lucas_divisible(n, k, p) && !lucas_divisible(n, k, q))
      failures.push_back(k);
  cert.verdict = failures.empty()
                     ? Verdict{VerdictKind::Holds, {}, ""}
                     : Verdict{VerdictKind::FailsAt, std::move(failures), ""};
  return cert;
}

IntervalSet dangerous_intervals(u64 n, u64 d) {
  if (d < 1) throw std::domain_error("dangerous_intervals: d must be >= 1");
  const u64 t = ceil_div(n, d);
  if (t < 3)
    throw std::domain_error("dangerous_intervals: no prime below n/d");
  IntervalSet set;
  set.n = n;
  set.d = d;
  set.q_d = prev_prime(t);
  set.beta_d = n - d * set.q_d;
  set.disjoint = u128(d + 1) * set.q_d > n;
  for (u64 c = 0; c <= d / 2; ++c) {
    const u64 lo = c * set.q_d;
    set.intervals.push_back(
        DangerousInterval{c, lo, lo + set.beta_d, d, set.q_d, set.beta_d});
  }
  return set;
}

std::vector<u64> residual_multiples(u64 n, const PrimePower& pa, u64 d) {
  require_divisor(n, pa);
  const IntervalSet set = dangerous_intervals(n, d);
  const u64 half = n / 2;
  const u64 v = pa.value;
  std::vector<u64> out;
  for (const DangerousInterval& iv : set.intervals) {
    const u64 first = std::max<u64>(ceil_div(std::max<u64>(iv.lo, 1), v), 1);
    for (u64 x = first; x * v <= std::min(iv.hi, half); ++x) {
      const u64 k = x * v;
      if (out.empty() || out.back() != k) out.push_back(k);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Certificate verify_with_theorem(u64 n, const PrimePower& pa, u64 d) {
  require_divisor(n, pa);
  if (d < 1) throw std::domain_error("verify_with_theorem: d must be >= 1");
  if (ceil_div(n, d) < 3)
    return inapplicable(n, pa, d, "no prime exists below n/d");

  const IntervalSet set = dangerous_intervals(n, d);
  if (!set.disjoint)
    return inapplicable(n, pa, d,
                        "dangerous intervals overlap (q_d <= n/(d+1))");
  if (d >= set.q_d)
    return inapplicable(n, pa, d, "d >= q_d: last-digit reasoning breaks");

  Certificate cert;
  cert.n = n;
  cert.p = pa.p;
  cert.a = pa.a;
  cert.q = set.q_d;
  cert.d = d;
  cert.intervals = set.intervals;
  std::vector<u64> failures;
  for (u64 k : residual_multiples(n, pa, d)) {
    ResidualCheck rc{k, lucas_divisible(n, k, pa.p),
                     lucas_divisible(n, k, set.q_d)};
    if (!rc.divisible_by_p && !rc.divisible_by_q) failures.push_back(k);
    cert.residuals.push_back(rc);
  }
  cert.verdict = failures.empty()
                     ? Verdict{VerdictKind::Holds, {}, ""}
                     : Verdict{VerdictKind::FailsAt, std::move(failures), ""};
  return cert;
}

std::optional<u64> failure_depth(u64 n, const PrimePower& pa, u64 d_max) {
  require_divisor(n, pa);
  for (u64 d = 1; d <= d_max; ++d) {
    const u64 t = ceil_div(n, d);
    if (t < 3) break;
    const u64 q = prev_prime(t);
    if (n - d * q < pa.value) return d;
  }
  return std::nullopt;
}

bool central_binomial_divisible(u64 n, u64 p) {
  if (n % 2 != 0)
    throw std::domain_error("central_binomial_divisible: n must be even");
  require_prime(p, "p");
  for (u64 pw = p; pw <= n;) {
    if ((n / pw) % 2 == 1) return true;
    if (pw > n / p) break;
    pw *= p;
  }
  return false;
}

CentralTests central_binomial_sufficient_tests(u64 n, u64 p) {
  if (n % 2 != 0)
    throw std::domain_error(
        "central_binomial_sufficient_tests: n must be even");
  require_prime(p, "p");
  CentralTests t;
  t.legendre_odd = ((n - digit_sum(n, p)) / (p - 1)) % 2 == 1;
  for (u64 digit : digits_base_p(n / 2, p).digits)
    if (digit > p / 2) t.big_digit = true;
  for (u64 digit : digits_base_p(n, p).digits)
    if (digit % 2 == 1) t.odd_digit = true;
  u64 top = 1;  // p^floor(log n / log p)
  while (top <= n / p) top *= p;
  t.top_power = top > n / 2;
  return t;
}

DiophantineSummary diophantine_hits(u64 n, const PrimePower& pa, u64 d) {
  require_divisor(n, pa);
  const IntervalSet set = dangerous_intervals(n, d);
  if (set.q_d == pa.p)
    throw std::domain_error("diophantine_hits: q_d equals p (degenerate)");
  if (!set.disjoint)
    throw std::domain_error(
        "diophantine_hits: requires q_d > n/(d+1) (disjoint intervals)");

  DiophantineSummary out;
  out.q_d = set.q_d;
  out.beta_d = set.beta_d;
  const u64 v = pa.value;
  for (u64 y = 0; y <= d / 2; ++y) {
    const u64 lo = y * set.q_d;
    const u64 hi = lo + set.beta_d;
    for (u64 x = std::max<u64>(1, ceil_div(lo, v)); x * v <= hi; ++x)
      out.hits.push_back(DiophantineHit{x * v - lo, x, y, x * v});
  }
  out.bound = 2 + out.hits.size();
  return out;
}

std::optional<NVariationBound> n_variation_upper_bound(u64 n,
                                                       const PrimePower& pa,
                                                       u64 d) {
  require_divisor(n, pa);
  if (d < 1 || ceil_div(n, d) < 3) return std::nullopt;
  const IntervalSet set = dangerous_intervals(n, d);
  if (!set.disjoint || set.beta_d >= pa.value || set.q_d == pa.p)
    return std::nullopt;
  NVariationBound b;
  b.coarse = 2 + d / 2;
  b.refined = diophantine_hits(n, pa, d).bound;
  return b;
}

MinimalVariation n_variation_minimal(u64 n, u64 cap) {
  if (n < 1) throw std::domain_error("n_variation_minimal: n must be >= 1");
  if (n > cap)
    throw std::out_of_range("n_variation_minimal: n exceeds exhaustive cap");
  if (n == 1) return MinimalVariation{0, {}};  // empty k-range, vacuous

  const u64 half = n / 2;
  const std::vector<u64> primes = sieve_range(2, n + 1);
  CoverSet all = CoverSet::empty(half);
  for (u64 k = 1; k <= half; ++k) all.set(k);

  auto uncovered_of = [&](u64 prime) {
    CoverSet s = CoverSet::empty(half);
    for (u64 k = 1; k <= half; ++k)
      if (!lucas_divisible(n, k, prime)) s.set(k);
    return s;
  };

  std::vector<u64> divisors;
  for (u64 p : primes)
    if (n % p == 0) divisors.push_back(p);

  // N = 1: a single witness must divide C(n,1) = n.
  for (u64 p : divisors)
    if (uncovered_of(p).none()) return MinimalVariation{1, {p}};

  std::vector<CoverSet> unc;
  unc.reserve(primes.size());
  for (u64 p : primes) unc.push_back(uncovered_of(p));
  auto index_of = [&](u64 p) {
    return std::size_t(std::lower_bound(primes.begin(), primes.end(), p) -
                       primes.begin());
  };

  // N = 2: one member must divide n.
  for (u64 p : divisors) {
    const CoverSet& up = unc[index_of(p)];
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (primes[j] == p) continue;
      if (up.and_with(unc[j]).none()) {
        std::vector<u64> w{p, primes[j]};
        std::sort(w.begin(), w.end());
        return MinimalVariation{2, w};
      }
    }
  }

  // Greedy cover, then tighten by exhaustive search over smaller sizes.
  std::vector<u64> chosen;
  CoverSet remaining = all;
  while (!remaining.none()) {
    std::size_t best = primes.size();
    u64 best_gain = 0;
    for (std::size_t j = 0; j < primes.size(); ++j) {
      const u64 gain = remaining.count() - remaining.and_with(unc[j]).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = j;
      }
    }
    if (best == primes.size())
      throw std::logic_error("n_variation_minimal: no prime makes progress");
    chosen.push_back(primes[best]);
    remaining = remaining.and_with(unc[best]);
  }

  std::vector<std::size_t> order(primes.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return unc[a].count() < unc[b].count();  // most coverage first
  });

  std::vector<u64> found;
  auto search = [&](auto&& self, std::size_t start, u64 depth_left,
                    const CoverSet& acc, std::vector<u64>& picked) -> bool {
    if (acc.none()) {
      found = picked;
      return true;
    }
    if (depth_left == 0) return false;
    for (std::size_t oi = start; oi < order.size(); ++oi) {
      const std::size_t j = order[oi];
      const CoverSet next = acc.and_with(unc[j]);
      if (next.count() == acc.count()) continue;
      picked.push_back(primes[j]);
      if (self(self, oi + 1, depth_left - 1, next, picked)) return true;
      picked.pop_back();
    }
    return false;
  };

  for (u64 s = chosen.size() - 1; s >= 3; --s) {
    std::vector<u64> picked;
    if (search(search, 0, s, all, picked))
      chosen = found;
    else
      break;
  }
  std::sort(chosen.begin(), chosen.end());
  return MinimalVariation{chosen.size(), chosen};
}

bool multinomial_check(u64 n, const std::vector<u64>& parts, u64 p, u64 q) {
  require_prime(p, "p");
  require_prime(q, "q");
  u64 sum = 0;
  for (u64 part : parts) {
    if (part < 1 || part > n - 1)
      throw std::domain_error("multinomial_check: parts must lie in [1, n-1]");
    sum += part;
  }
  if (sum != n || parts.empty())
    throw std::domain_error("multinomial_check: parts must sum to n");

  auto valuation = [&](u64 prime) {
    u64 v = vp_factorial(n, prime);
    for (u64 part : parts) v -= vp_factorial(part, prime);
    return v;
  };
  return valuation(p) > 0 || valuation(q) > 0;
}

std::optional<std::pair<unsigned, Certificate>> find_multiple_exponent(
    u64 n, u64 p, unsigned k_max) {
  if (n < 2) throw std::domain_error("find_multiple_exponent: n must be >= 2");
  require_prime(p, "p");
  u64 pk = 1;
  for (unsigned k = 1; k <= k_max; ++k) {
    if (pk > kMaxInput / p)
      throw std::out_of_range("find_multiple_exponent: n*p^k exceeds 2^63");
    pk *= p;
    if (n > kMaxInput / pk)
      throw std::out_of_range("find_multiple_exponent: n*p^k exceeds 2^63");
    const u64 m = n * pk;
    const u64 q = prev_prime(m);
    if (m - q < pk) {
      const PrimePower pa = make_prime_power(p, exponent_of(m, p));
      return std::make_pair(k, verify_with_theorem(m, pa, 1));
    }
  }
  return std::nullopt;
}

std::optional<Certificate> check_np_prime_gap(u64 n, u64 p) {
  if (n < 1) throw std::domain_error("check_np_prime_gap: n must be >= 1");
  require_prime(p, "p");
  if (n > kMaxInput / p)
    throw std::out_of_range("check_np_prime_gap: n*p exceeds 2^63");
  const u64 m = n * p;
  if (m == 2) {  // n = 1, p = 2: C(2,1) = 2, nothing else to check
    Certificate cert;
    cert.n = 2;
    cert.p = 2;
    cert.a = 1;
    cert.d = 1;
    cert.verdict = Verdict{VerdictKind::Holds, {}, ""};
    return cert;
  }
  const PrimePower pa = make_prime_power(p, exponent_of(m, p));
  const u64 q = prev_prime(m);
  if (m - q >= pa.value) return std::nullopt;
  return verify_with_theorem(m, pa, 1);
}

}  // namespace condition1
