#include <condition1/padic.hpp>

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace condition1;

namespace {

// Pascal-triangle oracle: C(n,k) mod p via the additive recurrence, an
// independent route from the digit product.
struct PascalModP {
  u64 p;
  std::vector<std::vector<u64>> rows;

  explicit PascalModP(u64 p_, u64 max_n) : p(p_) {
    rows.reserve(max_n + 1);
    rows.push_back({1});
    for (u64 n = 1; n <= max_n; ++n) {
      std::vector<u64> row(n + 1, 1);
      for (u64 k = 1; k < n; ++k)
        row[k] = (rows[n - 1][k - 1] + rows[n - 1][k]) % p;
      rows.push_back(std::move(row));
    }
  }
};

}  // namespace

TEST_CASE("digits_base_p") {
  CHECK(digits_base_p(5, 7).digits == std::vector<u64>{5});
  CHECK(digits_base_p(510510, 17).digits == std::vector<u64>{0, 8, 15, 1, 6});
  CHECK(digits_base_p(255255, 17).digits == std::vector<u64>{0, 4, 16, 0, 3});
  CHECK(digits_base_p(0, 5).digits == std::vector<u64>{0});
  CHECK_THROWS_AS(digits_base_p(10, 1), std::domain_error);
}

TEST_CASE("digit_sum") {
  CHECK(digit_sum(0, 5) == 0);
  CHECK(digit_sum(510510, 17) == 30);
  CHECK(digit_sum(8, 2) == 1);
}

TEST_CASE("vp_factorial") {
  CHECK(vp_factorial(4, 2) == 3);
  CHECK(vp_factorial(0, 7) == 0);
  CHECK(vp_factorial(100, 5) == 24);

  SUBCASE("matches the valuation of the product 1..n") {
    for (u64 p : {2, 3, 5}) {
      u64 total = 0;
      for (u64 i = 1; i <= 60; ++i) {
        u64 m = i;
        while (m % p == 0) {
          m /= p;
          ++total;
        }
        CHECK(vp_factorial(i, p) == total);
      }
    }
  }
}

TEST_CASE("kummer_valuation") {
  CHECK(kummer_valuation(100, 0, 7) == 0);
  CHECK(kummer_valuation(4, 2, 2) == 1);
  CHECK(kummer_valuation(510510, 255255, 17) >= 1);
  CHECK_THROWS_AS(kummer_valuation(4, 5, 2), std::domain_error);

  SUBCASE("equals the Legendre difference and is symmetric") {
    for (u64 p : {2, 3, 7}) {
      for (u64 n = 0; n <= 200; ++n) {
        for (u64 k = 0; k <= n; ++k) {
          const u64 diff =
              vp_factorial(n, p) - vp_factorial(k, p) - vp_factorial(n - k, p);
          CHECK(kummer_valuation(n, k, p) == diff);
          CHECK(kummer_valuation(n, k, p) == kummer_valuation(n, n - k, p));
        }
      }
    }
  }
}

TEST_CASE("lucas_divisible") {
  CHECK(lucas_divisible(510510, 255255, 17));
  CHECK_FALSE(lucas_divisible(510510, 17, 17));
  CHECK_FALSE(lucas_divisible(100, 100, 7));
  CHECK_THROWS_AS(lucas_divisible(4, 5, 2), std::domain_error);
}

TEST_CASE("lucas_residue") {
  CHECK(lucas_residue(5, 2, 7) == 3);  // C(5,2) = 10
  CHECK(lucas_residue(100, 0, 13) == 1);
  CHECK(lucas_residue(510510, 255255, 17) == 0);

  SUBCASE("large prime base uses the multiplicative path") {
    // digits of 510510 base 255253 are [4, 2]; of 255255, [2, 1]
    CHECK(lucas_residue(510510, 255255, 255253) == 12);  // C(4,2)*C(2,1)
    CHECK(lucas_residue(510510, 255253, 255253) == 2);   // C(4,0)*C(2,1)
    CHECK(lucas_residue(510510, 5, 255253) == 0);        // digit 5 > 4
  }
}

TEST_CASE("Lucas, Kummer and Pascal mod p agree up to n = 300") {
  for (u64 p : {2, 3, 5, 7, 11, 13}) {
    PascalModP oracle(p, 300);
    for (u64 n = 0; n <= 300; ++n) {
      for (u64 k = 0; k <= n; ++k) {
        const u64 expected = oracle.rows[n][k];
        CHECK(lucas_residue(n, k, p) == expected);
        CHECK(lucas_divisible(n, k, p) == (expected == 0));
        CHECK((kummer_valuation(n, k, p) >= 1) == (expected == 0));
      }
    }
  }
}

TEST_CASE("Legendre floor sum equals digit formula up to 10^4") {
  for (u64 p : {2, 3, 5, 7}) {
    for (u64 n = 0; n <= 10'000; ++n) {
      u64 floor_sum = 0;
      for (u64 m = n / p; m > 0; m /= p) floor_sum += m;
      CHECK(vp_factorial(n, p) == floor_sum);
      CHECK(floor_sum == (n - digit_sum(n, p)) / (p - 1));
    }
  }
}
