#include <condition1/sequences.hpp>

#include <condition1/condition1.hpp>

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace condition1;

namespace {

// Brute-force A290203 membership: factor n directly, walk down for q.
bool brute_a290203(u64 n) {
  if (n < 3) return false;
  const u64 pa = largest_prime_power(n).value;
  for (u64 q = n - 1; q > n - pa; --q)
    if (is_prime(q)) return false;
  return true;
}

// Members fail both the d = 1 and d = 2 inequalities.
bool brute_a290290(u64 n) {
  if (n < 5 || !brute_a290203(n)) return false;
  const u64 q2 = prev_prime((n + 1) / 2);
  return n - 2 * q2 >= largest_prime_power(n).value;
}

}  // namespace

TEST_CASE("scan_a290203") {
  CHECK(scan_a290203(3).members.empty());
  CHECK(scan_a290203(126).members.empty());
  CHECK(scan_a290203(300).members == std::vector<u64>{126, 210});

  SUBCASE("matches brute force below 3000") {
    const auto scan = scan_a290203(3000);
    std::vector<u64> expected;
    for (u64 n = 2; n < 3000; ++n)
      if (brute_a290203(n)) expected.push_back(n);
    CHECK(scan.members == expected);
  }

  SUBCASE("members are composite and never prime powers") {
    for (u64 n : scan_a290203(20'000).members)
      CHECK(largest_prime_power(n).value < n);
  }

  SUBCASE("monotone prefix property") {
    const auto small = scan_a290203(1000).members;
    const auto large = scan_a290203(2000).members;
    REQUIRE(small.size() <= large.size());
    CHECK(std::equal(small.begin(), small.end(), large.begin()));
  }
}

TEST_CASE("scan_a290290") {
  SUBCASE("matches brute force below 100") {
    const auto scan = scan_a290290(100);
    std::vector<u64> expected;
    for (u64 n = 5; n < 100; ++n)
      if (brute_a290290(n)) expected.push_back(n);
    CHECK(scan.members == expected);
  }
  SUBCASE("matches brute force below 20000") {
    const auto scan = scan_a290290(20'000);
    std::vector<u64> expected;
    for (u64 n = 5; n < 20'000; ++n)
      if (brute_a290290(n)) expected.push_back(n);
    CHECK(scan.members == expected);
  }
  SUBCASE("checksum is reproducible") {
    CHECK(scan_a290290(5000).checksum == scan_a290290(5000).checksum);
  }
}

TEST_CASE("deep_failures") {
  CHECK(deep_failures(126, 6).entries.empty());
  CHECK_THROWS_AS(deep_failures(100, 1), std::domain_error);

  SUBCASE("every A290290 member has depth >= 3 or none") {
    for (const auto& e : deep_failures(50'000, 12).entries) {
      if (e.depth) CHECK(*e.depth != 2);  // members fail d = 2 by definition
    }
  }
}

TEST_CASE("primorial_survey") {
  const auto rows = primorial_survey(9);
  REQUIRE(rows.size() == 9);

  CHECK_FALSE(rows[0].q.has_value());  // p_1# = 2, nothing below

  CHECK(rows[3].primorial == 210);
  CHECK_FALSE(rows[3].minus_one_prime);  // 209 = 11 * 19

  std::vector<u64> composites;
  for (const auto& r : rows)
    if (r.i >= 2 && !r.minus_one_prime)  // p_1# - 1 = 1 is a unit
      composites.push_back(r.primorial);
  CHECK(composites == std::vector<u64>{210, 510510, 9699690, 223092870});

  CHECK_THROWS_AS(primorial_survey(16), std::out_of_range);
}

TEST_CASE("golden rendering") {
  const auto scan = scan_a290203(300);
  const std::string text = render_sequence_file(scan);
  CHECK(text.find("# name: a290203\n") == 0);
  CHECK(text.find("# limit: 300\n") != std::string::npos);
  CHECK(text.find("\n126\n210\n") != std::string::npos);
  CHECK(text.back() == '\n');
}
