#include <condition1/json_io.hpp>

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace condition1 {

using nlohmann::json;

json certificate_to_json(const Certificate& cert) {
  json j;
  j["n"] = cert.n;
  j["p"] = cert.p;
  j["a"] = cert.a;
  j["q"] = cert.q;
  j["d"] = cert.d;
  j["intervals"] = json::array();
  for (const DangerousInterval& iv : cert.intervals)
    j["intervals"].push_back(json::array({iv.lo, iv.hi}));
  j["residuals"] = json::array();
  for (const ResidualCheck& rc : cert.residuals)
    j["residuals"].push_back(
        json{{"k", rc.k}, {"byP", rc.divisible_by_p}, {"byQ", rc.divisible_by_q}});
  switch (cert.verdict.kind) {
    case VerdictKind::Holds:
      j["verdict"] = "Holds";
      break;
    case VerdictKind::FailsAt:
      j["verdict"] = json{{"FailsAt", cert.verdict.failures}};
      break;
    case VerdictKind::Inapplicable:
      j["verdict"] = json{{"Inapplicable", cert.verdict.reason}};
      break;
  }
  return j;
}

Certificate certificate_from_json(const json& j) {
  Certificate cert;
  cert.n = j.at("n").get<u64>();
  cert.p = j.at("p").get<u64>();
  cert.a = j.at("a").get<unsigned>();
  cert.q = j.at("q").get<u64>();
  cert.d = j.at("d").get<u64>();
  const u64 q = cert.q;
  const u64 d = cert.d;
  for (const auto& iv : j.at("intervals")) {
    const u64 lo = iv.at(0).get<u64>();
    const u64 hi = iv.at(1).get<u64>();
    cert.intervals.push_back(
        DangerousInterval{q ? lo / q : 0, lo, hi, d, q, hi - lo});
  }
  for (const auto& rc : j.at("residuals"))
    cert.residuals.push_back(ResidualCheck{rc.at("k").get<u64>(),
                                           rc.at("byP").get<bool>(),
                                           rc.at("byQ").get<bool>()});
  const json& v = j.at("verdict");
  if (v.is_string() && v.get<std::string>() == "Holds") {
    cert.verdict = Verdict{VerdictKind::Holds, {}, ""};
  } else if (v.is_object() && v.contains("FailsAt")) {
    cert.verdict =
        Verdict{VerdictKind::FailsAt, v.at("FailsAt").get<std::vector<u64>>(), ""};
  } else if (v.is_object() && v.contains("Inapplicable")) {
    cert.verdict = Verdict{VerdictKind::Inapplicable, {},
                           v.at("Inapplicable").get<std::string>()};
  } else {
    throw std::invalid_argument("unrecognized certificate verdict");
  }
  return cert;
}

json scan_to_json(const SequenceScan& scan) {
  json j;
  j["name"] = scan.name;
  j["limit"] = scan.limit;
  j["params"] = json::object();
  for (const auto& [key, value] : scan.params) j["params"][key] = value;
  j["count"] = scan.members.size();
  j["checksum"] = "fnv1a64:" + scan.checksum;
  j["members"] = scan.members;
  return j;
}

}  // namespace condition1
