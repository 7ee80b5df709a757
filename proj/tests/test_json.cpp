#include <condition1/json_io.hpp>

#include <doctest.h>

#include <nlohmann/json.hpp>

using namespace condition1;

TEST_CASE("certificate JSON round-trips byte-identically") {
  for (const Certificate& cert :
       {verify_with_theorem(510510, make_prime_power(17, 1), 2),
        verify_with_theorem(510510, make_prime_power(17, 1), 1),
        verify_with_theorem(96135, make_prime_power(29, 1), 40),
        verify_with_theorem(30, make_prime_power(5, 1), 7),  // Inapplicable
        oracle_check_pair(210, 7, 41)}) {
    const std::string once = certificate_to_json(cert).dump();
    const Certificate parsed =
        certificate_from_json(nlohmann::json::parse(once));
    CHECK(certificate_to_json(parsed).dump() == once);
  }
}

TEST_CASE("verdict shapes") {
  const auto holds =
      certificate_to_json(verify_with_theorem(510510, make_prime_power(17, 1), 2));
  CHECK(holds.at("verdict") == "Holds");

  const auto fails =
      certificate_to_json(verify_with_theorem(510510, make_prime_power(17, 1), 1));
  CHECK(fails.at("verdict").at("FailsAt") == std::vector<u64>{17});
}

TEST_CASE("scan JSON carries the checksum") {
  const auto j = scan_to_json(scan_a290203(300));
  CHECK(j.at("count") == 2);
  CHECK(j.at("checksum").get<std::string>().rfind("fnv1a64:", 0) == 0);
}
