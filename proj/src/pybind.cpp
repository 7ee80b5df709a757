#include <condition1/condition1.hpp>
#include <condition1/json_io.hpp>
#include <condition1/primes.hpp>
#include <condition1/sequences.hpp>

#include <nlohmann/json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace condition1;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Divisibility of binomial coefficients by prime pairs";

  py::class_<PrimePower>(m, "PrimePower")
      .def(py::init(&make_prime_power), py::arg("p"), py::arg("a"))
      .def_readonly("p", &PrimePower::p)
      .def_readonly("a", &PrimePower::a)
      .def_readonly("value", &PrimePower::value)
      .def("__repr__", [](const PrimePower& pp) {
        return "PrimePower(" + std::to_string(pp.p) + "^" +
               std::to_string(pp.a) + ")";
      });

  py::class_<Factorization>(m, "Factorization")
      .def_readonly("n", &Factorization::n)
      .def_readonly("factors", &Factorization::factors);

  py::class_<DigitExpansion>(m, "DigitExpansion")
      .def_readonly("n", &DigitExpansion::n)
      .def_readonly("p", &DigitExpansion::p)
      .def_readonly("digits", &DigitExpansion::digits);

  py::class_<DangerousInterval>(m, "DangerousInterval")
      .def_readonly("c", &DangerousInterval::c)
      .def_readonly("lo", &DangerousInterval::lo)
      .def_readonly("hi", &DangerousInterval::hi)
      .def_readonly("d", &DangerousInterval::d)
      .def_readonly("q_d", &DangerousInterval::q_d)
      .def_readonly("beta_d", &DangerousInterval::beta_d);

  py::class_<IntervalSet>(m, "IntervalSet")
      .def_readonly("n", &IntervalSet::n)
      .def_readonly("d", &IntervalSet::d)
      .def_readonly("q_d", &IntervalSet::q_d)
      .def_readonly("beta_d", &IntervalSet::beta_d)
      .def_readonly("disjoint", &IntervalSet::disjoint)
      .def_readonly("intervals", &IntervalSet::intervals);

  py::class_<ResidualCheck>(m, "ResidualCheck")
      .def_readonly("k", &ResidualCheck::k)
      .def_readonly("divisible_by_p", &ResidualCheck::divisible_by_p)
      .def_readonly("divisible_by_q", &ResidualCheck::divisible_by_q);

  py::enum_<VerdictKind>(m, "VerdictKind")
      .value("Holds", VerdictKind::Holds)
      .value("FailsAt", VerdictKind::FailsAt)
      .value("Inapplicable", VerdictKind::Inapplicable);

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("kind", &Verdict::kind)
      .def_readonly("failures", &Verdict::failures)
      .def_readonly("reason", &Verdict::reason)
      .def("holds", &Verdict::holds);

  py::class_<Certificate>(m, "Certificate")
      .def_readonly("n", &Certificate::n)
      .def_readonly("p", &Certificate::p)
      .def_readonly("a", &Certificate::a)
      .def_readonly("q", &Certificate::q)
      .def_readonly("d", &Certificate::d)
      .def_readonly("intervals", &Certificate::intervals)
      .def_readonly("residuals", &Certificate::residuals)
      .def_readonly("verdict", &Certificate::verdict)
      .def("to_json",
           [](const Certificate& c) { return certificate_to_json(c).dump(); });

  py::class_<DiophantineHit>(m, "DiophantineHit")
      .def_readonly("delta", &DiophantineHit::delta)
      .def_readonly("x", &DiophantineHit::x)
      .def_readonly("y", &DiophantineHit::y)
      .def_readonly("k", &DiophantineHit::k);

  py::class_<DiophantineSummary>(m, "DiophantineSummary")
      .def_readonly("q_d", &DiophantineSummary::q_d)
      .def_readonly("beta_d", &DiophantineSummary::beta_d)
      .def_readonly("hits", &DiophantineSummary::hits)
      .def_readonly("bound", &DiophantineSummary::bound);

  py::class_<NVariationBound>(m, "NVariationBound")
      .def_readonly("coarse", &NVariationBound::coarse)
      .def_readonly("refined", &NVariationBound::refined);

  py::class_<CentralTests>(m, "CentralTests")
      .def_readonly("legendre_odd", &CentralTests::legendre_odd)
      .def_readonly("big_digit", &CentralTests::big_digit)
      .def_readonly("odd_digit", &CentralTests::odd_digit)
      .def_readonly("top_power", &CentralTests::top_power);

  py::class_<MinimalVariation>(m, "MinimalVariation")
      .def_readonly("count", &MinimalVariation::count)
      .def_readonly("primes", &MinimalVariation::primes);

  py::class_<SequenceScan>(m, "SequenceScan")
      .def_readonly("name", &SequenceScan::name)
      .def_readonly("limit", &SequenceScan::limit)
      .def_readonly("members", &SequenceScan::members)
      .def_readonly("checksum", &SequenceScan::checksum);

  py::class_<DeepFailure>(m, "DeepFailure")
      .def_readonly("n", &DeepFailure::n)
      .def_readonly("depth", &DeepFailure::depth);

  py::class_<DeepFailureReport>(m, "DeepFailureReport")
      .def_readonly("entries", &DeepFailureReport::entries)
      .def_readonly("fail_through", &DeepFailureReport::fail_through);

  py::class_<PrimorialRow>(m, "PrimorialRow")
      .def_readonly("i", &PrimorialRow::i)
      .def_readonly("primorial", &PrimorialRow::primorial)
      .def_readonly("q", &PrimorialRow::q)
      .def_readonly("gap", &PrimorialRow::gap)
      .def_readonly("gap_ok", &PrimorialRow::gap_ok)
      .def_readonly("minus_one_prime", &PrimorialRow::minus_one_prime);

  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("prev_prime", &prev_prime, py::arg("m"));
  m.def("sieve_range", &sieve_range, py::arg("lo"), py::arg("hi"));
  m.def("primorial", &primorial, py::arg("i"));
  m.def("factorize", &factorize, py::arg("n"));
  m.def("largest_prime_power", &largest_prime_power, py::arg("n"));

  m.def("digits_base_p", &digits_base_p, py::arg("n"), py::arg("p"));
  m.def("digit_sum", &digit_sum, py::arg("n"), py::arg("p"));
  m.def("vp_factorial", &vp_factorial, py::arg("n"), py::arg("p"));
  m.def("kummer_valuation", &kummer_valuation, py::arg("n"), py::arg("k"),
        py::arg("p"));
  m.def("lucas_divisible", &lucas_divisible, py::arg("n"), py::arg("k"),
        py::arg("p"));
  m.def("lucas_residue", &lucas_residue, py::arg("n"), py::arg("k"),
        py::arg("p"));

  m.def("oracle_check_pair", &oracle_check_pair, py::arg("n"), py::arg("p"),
        py::arg("q"), py::arg("cap") = 10'000'000);
  m.def("dangerous_intervals", &dangerous_intervals, py::arg("n"),
        py::arg("d"));
  m.def("residual_multiples", &residual_multiples, py::arg("n"), py::arg("pa"),
        py::arg("d"));
  m.def("verify_with_theorem", &verify_with_theorem, py::arg("n"),
        py::arg("pa"), py::arg("d"));
  m.def("failure_depth", &failure_depth, py::arg("n"), py::arg("pa"),
        py::arg("d_max"));
  m.def("central_binomial_divisible", &central_binomial_divisible,
        py::arg("n"), py::arg("p"));
  m.def("central_binomial_sufficient_tests", &central_binomial_sufficient_tests,
        py::arg("n"), py::arg("p"));
  m.def("diophantine_hits", &diophantine_hits, py::arg("n"), py::arg("pa"),
        py::arg("d"));
  m.def("n_variation_upper_bound", &n_variation_upper_bound, py::arg("n"),
        py::arg("pa"), py::arg("d"));
  m.def("n_variation_minimal", &n_variation_minimal, py::arg("n"),
        py::arg("cap") = 10'000);
  m.def("multinomial_check", &multinomial_check, py::arg("n"), py::arg("parts"),
        py::arg("p"), py::arg("q"));
  m.def("find_multiple_exponent", &find_multiple_exponent, py::arg("n"),
        py::arg("p"), py::arg("k_max"));
  m.def("check_np_prime_gap", &check_np_prime_gap, py::arg("n"), py::arg("p"));

  m.def("scan_a290203", &scan_a290203, py::arg("limit"));
  m.def("scan_a290290", &scan_a290290, py::arg("limit"));
  m.def("deep_failures", &deep_failures, py::arg("limit"), py::arg("d_max"));
  m.def("primorial_survey", &primorial_survey, py::arg("i_max"));
  m.def("render_sequence_file", &render_sequence_file, py::arg("scan"));
}
