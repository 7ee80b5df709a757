#include <condition1/primes.hpp>

#include <doctest.h>

#include <numeric>
#include <stdexcept>

using namespace condition1;

namespace {

// Independent trial-division oracle for small n.
bool slow_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("is_prime on known values") {
  CHECK(is_prime(2));
  CHECK(is_prime(510481));
  CHECK(is_prime(4360920443890001ull));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(510510));
  CHECK_THROWS_AS(is_prime((u64(1) << 63) + 1), std::out_of_range);
}

TEST_CASE("is_prime agrees with a sieve up to 10^5") {
  const auto primes = sieve_range(0, 100'000);
  std::size_t idx = 0;
  for (u64 n = 2; n < 100'000; ++n) {
    const bool in_sieve = idx < primes.size() && primes[idx] == n;
    CHECK(is_prime(n) == in_sieve);
    if (in_sieve) ++idx;
  }
  CHECK(idx == primes.size());
}

TEST_CASE("prev_prime") {
  CHECK(prev_prime(510510) == 510481);
  CHECK(prev_prime(255255) == 255253);
  CHECK(prev_prime(3) == 2);
  CHECK_THROWS_AS(prev_prime(2), std::domain_error);

  for (u64 m = 3; m <= 10'000; ++m) {
    const u64 q = prev_prime(m);
    CHECK(q < m);
    CHECK(slow_prime(q));
    for (u64 c = q + 1; c < m; ++c) CHECK_FALSE(slow_prime(c));
  }
}

TEST_CASE("sieve_range") {
  CHECK(sieve_range(0, 10) == std::vector<u64>{2, 3, 5, 7});
  CHECK(sieve_range(200, 212) == std::vector<u64>{211});
  CHECK(sieve_range(0, 1'000'000).size() == 78498);
  CHECK(sieve_range(5, 5).empty());
  CHECK_THROWS_AS(sieve_range(10, 5), std::domain_error);
}

TEST_CASE("primorial") {
  CHECK(primorial(1) == 2);
  CHECK(primorial(4) == 210);
  CHECK(primorial(7) == 510510);
  CHECK(primorial(14) == 13082761331670030ull);
  CHECK(primorial(15) == 614889782588491410ull);
  CHECK_THROWS_AS(primorial(0), std::domain_error);
  CHECK_THROWS_AS(primorial(16), std::out_of_range);
}

TEST_CASE("factorize") {
  const auto f12 = factorize(12);
  CHECK(f12.factors ==
        std::vector<std::pair<u64, unsigned>>{{2, 2}, {3, 1}});
  CHECK(factorize(96135).factors ==
        std::vector<std::pair<u64, unsigned>>{
            {3, 1}, {5, 1}, {13, 1}, {17, 1}, {29, 1}});
  CHECK(factorize(875160).factors ==
        std::vector<std::pair<u64, unsigned>>{
            {2, 3}, {3, 2}, {5, 1}, {11, 1}, {13, 1}, {17, 1}});
  CHECK_THROWS_AS(factorize(1), std::domain_error);

  SUBCASE("large semiprime beyond the trial bound") {
    const u64 a = 2147483629, b = 2147483647;  // both prime
    const auto f = factorize(a * b);
    CHECK(f.factors ==
          std::vector<std::pair<u64, unsigned>>{{a, 1}, {b, 1}});
  }

  SUBCASE("reassembly property up to 10^5") {
    for (u64 n = 2; n <= 100'000; ++n) {
      u64 prod = 1;
      u64 last = 0;
      for (const auto& [p, a] : factorize(n).factors) {
        CHECK(p > last);
        CHECK(slow_prime(p));
        last = p;
        for (unsigned i = 0; i < a; ++i) prod *= p;
      }
      CHECK(prod == n);
    }
  }
}

TEST_CASE("largest_prime_power") {
  CHECK(largest_prime_power(12) == PrimePower{2, 2, 4});
  CHECK(largest_prime_power(510510) == PrimePower{17, 1, 17});
  CHECK(largest_prime_power(13082761331670030ull) == PrimePower{43, 1, 43});

  SUBCASE("dominates every other maximal prime-power divisor") {
    for (u64 n = 2; n <= 100'000; n += 97) {
      const auto best = largest_prime_power(n);
      CHECK(n % best.value == 0);
      for (const auto& [p, a] : factorize(n).factors) {
        u64 v = 1;
        for (unsigned i = 0; i < a; ++i) v *= p;
        if (p != best.p) CHECK(v < best.value);
      }
    }
  }
}

TEST_CASE("make_prime_power validation") {
  CHECK(make_prime_power(3, 2).value == 9);
  CHECK_THROWS_AS(make_prime_power(4, 1), std::domain_error);
  CHECK_THROWS_AS(make_prime_power(3, 0), std::domain_error);
  CHECK_THROWS_AS(make_prime_power(2, 64), std::out_of_range);
}
