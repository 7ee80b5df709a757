#include <condition1/condition1.hpp>
#include <condition1/json_io.hpp>
#include <condition1/primes.hpp>
#include <condition1/sequences.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <optional>
#include <string>
#include <vector>

namespace {

using condition1::Certificate;
using condition1::PrimePower;
using condition1::u64;
using condition1::VerdictKind;
using nlohmann::json;

constexpr u64 kDefaultScanCap = 10'000'000;
// Schoenfeld-motivated ceiling: beyond d = 16596 the disjointness guarantee
// for large n runs out.
constexpr u64 kDefaultWitnessDmax = 16597;

u64 scan_cap() {
  if (const char* env = std::getenv("CONDITION1_SCAN_CAP"))
    return std::strtoull(env, nullptr, 10);
  return kDefaultScanCap;
}

void print_certificate_text(const Certificate& cert) {
  std::cout << "n = " << cert.n << ", p = " << cert.p << "^" << cert.a;
  if (cert.q) std::cout << ", q = " << cert.q;
  if (cert.d) std::cout << ", d = " << cert.d;
  std::cout << "\n";
  if (!cert.intervals.empty()) {
    std::cout << "dangerous intervals:";
    for (const auto& iv : cert.intervals)
      std::cout << " [" << iv.lo << ", " << iv.hi << "]";
    std::cout << "\n";
  }
  for (const auto& rc : cert.residuals)
    std::cout << "  residual k = " << rc.k
              << ": by p " << (rc.divisible_by_p ? "yes" : "no")
              << ", by q " << (rc.divisible_by_q ? "yes" : "no") << "\n";
  switch (cert.verdict.kind) {
    case VerdictKind::Holds:
      std::cout << "verdict: Holds\n";
      break;
    case VerdictKind::FailsAt:
      std::cout << "verdict: FailsAt";
      for (u64 k : cert.verdict.failures) std::cout << " " << k;
      std::cout << "\n";
      break;
    case VerdictKind::Inapplicable:
      std::cout << "verdict: Inapplicable (" << cert.verdict.reason << ")\n";
      break;
  }
}

int emit_certificate(const Certificate& cert, bool as_json) {
  if (as_json)
    std::cout << condition1::certificate_to_json(cert).dump() << "\n";
  else
    print_certificate_text(cert);
  return cert.verdict.holds() ? 0 : 1;
}

std::vector<PrimePower> maximal_prime_powers(u64 n, bool all) {
  if (!all) return {condition1::largest_prime_power(n)};
  std::vector<PrimePower> out;
  for (const auto& [p, a] : condition1::factorize(n).factors)
    out.push_back(condition1::make_prime_power(p, a));
  std::sort(out.begin(), out.end(),
            [](const PrimePower& x, const PrimePower& y) {
              return x.value > y.value;
            });
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify and search prime pairs (p, q) dividing all C(n,k)"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --format appear after the subcommand
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  u64 n = 0, p = 0, q = 0, d = 0, dmax = 0, limit = 0;
  unsigned imax = 15, kmax = 64;
  bool allpowers = false, np_only = false;
  std::string seq_name;

  auto* check = app.add_subcommand("check", "Scan every k against a pair");
  check->add_option("n", n)->required();
  check->add_option("--p", p);
  check->add_option("--q", q);
  check->add_option("--d", d, "Use the sieve-lemma path at this d");

  auto* witness = app.add_subcommand("witness", "Search for a certificate");
  witness->add_option("n", n)->required();
  witness->add_option("--dmax", dmax)->default_val(kDefaultWitnessDmax);
  witness->add_flag("--allpowers", allpowers,
                    "Try every maximal prime-power divisor");

  auto* intervals = app.add_subcommand("intervals", "Show dangerous intervals");
  intervals->add_option("n", n)->required();
  intervals->add_option("--d", d)->required();

  auto* nvar = app.add_subcommand("nvar", "N-variation bounds");
  nvar->add_option("n", n)->required();
  nvar->add_option("--d", d, "Diophantine upper bound at this d");

  auto* depth = app.add_subcommand("depth", "Smallest d with n - d*q_d < p^a");
  depth->add_option("n", n)->required();
  depth->add_option("--dmax", dmax)->default_val(u64(100));

  auto* seq = app.add_subcommand("seq", "Sequence scans");
  seq->add_option("name", seq_name)
      ->required()
      ->check(CLI::IsMember({"a290203", "a290290", "deep"}));
  seq->add_option("--limit", limit)->required();
  seq->add_option("--dmax", dmax)->default_val(u64(12));

  auto* primorials = app.add_subcommand("primorials", "Primorial gap survey");
  primorials->add_option("--imax", imax);

  auto* multiple = app.add_subcommand("multiple",
                                      "Multiples of n certified via p^k");
  multiple->add_option("n", n)->required();
  multiple->add_option("--p", p)->required();
  multiple->add_option("--kmax", kmax);
  multiple->add_flag("--np", np_only, "Check n*p only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  const bool as_json = format == "json";
  try {
    if (*check) {
      if (n == 1) {
        std::cout << "n = 1: Condition 1 holds vacuously "
                     "(no k with 1 <= k <= n-1)\n";
        return 0;
      }
      if (d > 0) {
        PrimePower pa;
        if (p) {
          if (n % p != 0)
            throw std::domain_error("theorem path requires p dividing n");
          unsigned a = 0;
          for (u64 m = n; m % p == 0; m /= p) ++a;
          pa = condition1::make_prime_power(p, a);
        } else {
          pa = condition1::largest_prime_power(n);
        }
        return emit_certificate(condition1::verify_with_theorem(n, pa, d),
                                as_json);
      }
      if (!p || !q)
        throw std::domain_error("check requires --p and --q (or --d)");
      return emit_certificate(condition1::oracle_check_pair(n, p, q, scan_cap()),
                              as_json);
    }

    if (*witness) {
      for (u64 dd = 1; dd <= dmax; ++dd) {
        for (const PrimePower& pa : maximal_prime_powers(n, allpowers)) {
          const Certificate cert = condition1::verify_with_theorem(n, pa, dd);
          if (cert.verdict.holds()) {
            if (!as_json)
              std::cout << "witness: p = " << cert.p << ", q = " << cert.q
                        << ", d = " << cert.d << "\n";
            return emit_certificate(cert, as_json);
          }
        }
      }
      std::cout << "no witness found with d <= " << dmax << "\n";
      return 1;
    }

    if (*intervals) {
      const auto set = condition1::dangerous_intervals(n, d);
      if (as_json) {
        json j{{"n", set.n},
               {"d", set.d},
               {"q_d", set.q_d},
               {"beta_d", set.beta_d},
               {"disjoint", set.disjoint},
               {"intervals", json::array()}};
        for (const auto& iv : set.intervals)
          j["intervals"].push_back(json::array({iv.lo, iv.hi}));
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "q_" << set.d << " = " << set.q_d
                  << ", beta = " << set.beta_d
                  << (set.disjoint ? " (disjoint)" : " (overlapping)") << "\n";
        for (const auto& iv : set.intervals)
          std::cout << "  [" << iv.lo << ", " << iv.hi << "]\n";
      }
      return 0;
    }

    if (*nvar) {
      if (d > 0) {
        const PrimePower pa = condition1::largest_prime_power(n);
        const auto bound = condition1::n_variation_upper_bound(n, pa, d);
        if (!bound) {
          std::cout << "Inapplicable: no prime q in (n/(d+1), n/d) with "
                       "n - d*q < p^a\n";
          return 1;
        }
        const auto hits = condition1::diophantine_hits(n, pa, d);
        if (as_json) {
          json j{{"n", n},        {"d", d},
                 {"p", pa.p},     {"a", pa.a},
                 {"q_d", hits.q_d}, {"coarse", bound->coarse},
                 {"refined", bound->refined}, {"hits", json::array()}};
          for (const auto& h : hits.hits)
            j["hits"].push_back(
                json{{"delta", h.delta}, {"x", h.x}, {"y", h.y}, {"k", h.k}});
          std::cout << j.dump() << "\n";
        } else {
          std::cout << "coarse N = " << bound->coarse
                    << ", refined N = " << bound->refined << "\n";
          for (const auto& h : hits.hits)
            std::cout << "  hit: x = " << h.x << ", y = " << h.y
                      << ", delta = " << h.delta << ", k = " << h.k << "\n";
        }
        return 0;
      }
      const auto mv = condition1::n_variation_minimal(n);
      if (as_json) {
        json j{{"n", n}, {"N", mv.count}, {"primes", mv.primes}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "minimal N = " << mv.count << ", primes:";
        for (u64 w : mv.primes) std::cout << " " << w;
        std::cout << "\n";
        if (n == 1) std::cout << "(n = 1 holds vacuously)\n";
      }
      return 0;
    }

    if (*depth) {
      const PrimePower pa = condition1::largest_prime_power(n);
      const auto result = condition1::failure_depth(n, pa, dmax);
      if (as_json) {
        json j{{"n", n}, {"p", pa.p}, {"a", pa.a}, {"dmax", dmax}};
        if (result) j["depth"] = *result;
        std::cout << j.dump() << "\n";
      } else if (result) {
        std::cout << "depth " << *result << ": n - " << *result << "*q_"
                  << *result << " < " << pa.value << "\n";
      } else {
        std::cout << "no d <= " << dmax << " satisfies n - d*q_d < p^a\n";
      }
      return result ? 0 : 1;
    }

    if (*seq) {
      if (seq_name == "deep") {
        const auto report = condition1::deep_failures(limit, dmax);
        if (as_json) {
          json j{{"limit", limit}, {"dmax", dmax}, {"entries", json::array()}};
          for (const auto& e : report.entries) {
            json je{{"n", e.n}};
            if (e.depth) je["depth"] = *e.depth;
            j["entries"].push_back(je);
          }
          j["fail_through"] = json::object();
          for (const auto& [dd, count] : report.fail_through)
            j["fail_through"][std::to_string(dd)] = count;
          std::cout << j.dump() << "\n";
        } else {
          for (const auto& e : report.entries) {
            std::cout << e.n << " depth ";
            if (e.depth)
              std::cout << *e.depth;
            else
              std::cout << "> " << dmax;
            std::cout << "\n";
          }
          for (const auto& [dd, count] : report.fail_through)
            std::cout << "# failing through d=" << dd << ": " << count << "\n";
        }
        return 0;
      }
      const auto scan = seq_name == "a290203" ? condition1::scan_a290203(limit)
                                              : condition1::scan_a290290(limit);
      if (as_json)
        std::cout << condition1::scan_to_json(scan).dump() << "\n";
      else
        std::cout << condition1::render_sequence_file(scan);
      return 0;
    }

    if (*primorials) {
      const auto rows = condition1::primorial_survey(imax);
      if (as_json) {
        json j = json::array();
        for (const auto& r : rows) {
          json jr{{"i", r.i},
                  {"primorial", r.primorial},
                  {"gap", r.gap},
                  {"gap_ok", r.gap_ok},
                  {"minus_one_prime", r.minus_one_prime}};
          if (r.q) jr["q"] = *r.q;
          j.push_back(jr);
        }
        std::cout << j.dump() << "\n";
      } else {
        for (const auto& r : rows) {
          std::cout << "p_" << r.i << "# = " << r.primorial;
          if (r.q)
            std::cout << ", q = " << *r.q << ", gap = " << r.gap
                      << (r.gap_ok ? " (1 or prime)" : " (composite!)");
          else
            std::cout << ", no prime below";
          std::cout << ", p#-1 " << (r.minus_one_prime ? "prime" : "composite")
                    << "\n";
        }
      }
      return 0;
    }

    if (*multiple) {
      if (np_only) {
        const auto cert = condition1::check_np_prime_gap(n, p);
        if (!cert) {
          std::cout << "no prime in (np - p^a, np)\n";
          return 1;
        }
        return emit_certificate(*cert, as_json);
      }
      const auto result = condition1::find_multiple_exponent(n, p, kmax);
      if (!result) {
        std::cout << "no k <= " << kmax << " works\n";
        return 1;
      }
      if (!as_json) std::cout << "k = " << result->first << "\n";
      return emit_certificate(result->second, as_json);
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
