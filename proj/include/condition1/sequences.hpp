#pragma once

#include <condition1/primes.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace condition1 {

struct SequenceScan {
  std::string name;
  u64 limit = 0;
  std::vector<u64> members;  // strictly ascending, all < limit
  std::map<std::string, u64> params;
  std::string checksum;  // fnv1a64 over the member lines
};

// A290203: n with no prime strictly between n - p^a and n, where p^a is the
// largest prime power dividing n.
SequenceScan scan_a290203(u64 limit);

// A290290: n failing n - 2*q_2 < p^a, with q_2 the largest prime below n/2.
SequenceScan scan_a290290(u64 limit);

struct DeepFailure {
  u64 n = 0;
  std::optional<u64> depth;  // smallest d with n - d*q_d < p^a
};

struct DeepFailureReport {
  std::vector<DeepFailure> entries;  // one per A290290 member below limit
  // fail_through[d] = members with n - e*q_e >= p^a for every e in [2, d]
  std::map<u64, u64> fail_through;
};

DeepFailureReport deep_failures(u64 limit, u64 d_max);

struct PrimorialRow {
  unsigned i = 0;
  u64 primorial = 0;
  std::optional<u64> q;  // largest prime below the primorial
  u64 gap = 0;           // primorial - q, 0 when degenerate
  bool gap_ok = false;   // gap is 1 or prime
  bool minus_one_prime = false;
};

std::vector<PrimorialRow> primorial_survey(unsigned i_max);

// Golden-file rendering: '#' header lines, then one member per line.
std::string render_sequence_file(const SequenceScan& scan);

// 64-bit FNV-1a over the decimal member lines, as 16 hex digits.
std::string members_checksum(const std::vector<u64>& members);

}  // namespace condition1
