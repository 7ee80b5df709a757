#include <condition1/sequences.hpp>

#include <condition1/condition1.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace condition1 {
namespace {

constexpr u64 kScanLimit = 100'000'000;
constexpr u64 kBlock = 1u << 20;

u64 ceil_div(u64 n, u64 d) { return (n + d - 1) / d; }

// Calls fn(n, lpp) for every n in [2, limit) with lpp the largest
// prime-power divisor of n, using a segmented factoring pass.
template <class F>
void for_each_lpp(u64 limit, F&& fn) {
  if (limit <= 2) return;
  const u64 root = u64(std::sqrt(double(limit))) + 2;
  const std::vector<u64> base = sieve_range(2, root + 1);
  std::vector<u64> rem(kBlock), lpp(kBlock);
  for (u64 seg = 2; seg < limit; seg += kBlock) {
    const u64 end = std::min(limit, seg + kBlock);
    for (u64 v = seg; v < end; ++v) {
      rem[v - seg] = v;
      lpp[v - seg] = 1;
    }
    for (u64 p : base) {
      if (p * p >= end) break;
      for (u64 m = ceil_div(seg, p) * p; m < end; m += p) {
        u64& r = rem[m - seg];
        u64 pw = 1;
        while (r % p == 0) {
          r /= p;
          pw *= p;
        }
        lpp[m - seg] = std::max(lpp[m - seg], pw);
      }
    }
    for (u64 v = seg; v < end; ++v) {
      const u64 r = rem[v - seg];
      fn(v, std::max(lpp[v - seg], r > 1 ? r : 1));
    }
  }
}

void check_scan_limit(u64 limit) {
  if (limit > kScanLimit)
    throw std::out_of_range("scan limit exceeds 10^8 budget");
}

void finalize(SequenceScan& scan) {
  scan.checksum = members_checksum(scan.members);
}

}  // namespace

std::string members_checksum(const std::vector<u64>& members) {
  u64 h = 14695981039346656037ull;
  auto mix = [&](char c) {
    h ^= u64(static_cast<unsigned char>(c));
    h *= 1099511628211ull;
  };
  for (u64 m : members) {
    for (char c : std::to_string(m)) mix(c);
    mix('\n');
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

SequenceScan scan_a290203(u64 limit) {
  check_scan_limit(limit);
  SequenceScan scan;
  scan.name = "a290203";
  scan.limit = limit;
  u64 last_prime = 0;  // largest prime seen so far, strictly below n
  for_each_lpp(limit, [&](u64 n, u64 lpp) {
    // Membership: no prime q with n - lpp < q < n. Needs a prime below n
    // at all, so the scan effectively starts at n = 3.
    if (n >= 3 && last_prime <= n - lpp) scan.members.push_back(n);
    if (lpp == n && is_prime(n)) last_prime = n;
  });
  finalize(scan);
  return scan;
}

SequenceScan scan_a290290(u64 limit) {
  check_scan_limit(limit);
  SequenceScan scan;
  scan.name = "a290290";
  scan.limit = limit;
  if (limit <= 5) {
    finalize(scan);
    return scan;
  }
  // Members fail both the d = 1 and d = 2 inequalities: n - q_1 >= lpp
  // and n - 2 q_2 >= lpp, with q_1 = prev_prime(n) and
  // q_2 = prev_prime(ceil(n/2)) tracked via a synchronized walk.
  const std::vector<u64> primes = sieve_range(2, limit / 2 + 2);
  std::size_t idx = 0;  // primes[idx] is the largest prime < ceil(n/2)
  u64 last_prime = 0;   // largest prime strictly below n
  for_each_lpp(limit, [&](u64 n, u64 lpp) {
    if (n >= 5) {
      const u64 target = ceil_div(n, 2);
      while (idx + 1 < primes.size() && primes[idx + 1] < target) ++idx;
      const u64 q2 = primes[idx];
      if (last_prime <= n - lpp && n - 2 * q2 >= lpp)
        scan.members.push_back(n);
    }
    if (lpp == n && is_prime(n)) last_prime = n;
  });
  finalize(scan);
  return scan;
}

DeepFailureReport deep_failures(u64 limit, u64 d_max) {
  if (d_max < 2) throw std::domain_error("deep_failures: d_max must be >= 2");
  DeepFailureReport report;
  for (u64 d = 3; d <= d_max; ++d) report.fail_through[d] = 0;
  for (u64 n : scan_a290290(limit).members) {
    const PrimePower pa = largest_prime_power(n);
    report.entries.push_back(DeepFailure{n, failure_depth(n, pa, d_max)});
    bool failing = true;
    for (u64 d = 3; d <= d_max && failing; ++d) {
      const u64 q = prev_prime(ceil_div(n, d));
      failing = n - d * q >= pa.value;
      if (failing) ++report.fail_through[d];
    }
  }
  return report;
}

std::vector<PrimorialRow> primorial_survey(unsigned i_max) {
  if (i_max < 1 || i_max > 15)
    throw std::out_of_range("primorial_survey: i_max must be in [1, 15]");
  std::vector<PrimorialRow> rows;
  for (unsigned i = 1; i <= i_max; ++i) {
    PrimorialRow row;
    row.i = i;
    row.primorial = primorial(i);
    if (row.primorial >= 3) {
      row.q = prev_prime(row.primorial);
      row.gap = row.primorial - *row.q;
      row.gap_ok = row.gap == 1 || is_prime(row.gap);
    }
    row.minus_one_prime = is_prime(row.primorial - 1);
    rows.push_back(row);
  }
  return rows;
}

std::string render_sequence_file(const SequenceScan& scan) {
  std::ostringstream os;
  os << "# name: " << scan.name << "\n";
  os << "# limit: " << scan.limit << "\n";
  for (const auto& [key, value] : scan.params)
    os << "# " << key << ": " << value << "\n";
  os << "# count: " << scan.members.size() << "\n";
  os << "# checksum: fnv1a64:" << scan.checksum << "\n";
  for (u64 m : scan.members) os << m << "\n";
  return os.str();
}

}  // namespace condition1
