"""Smoke tests for the compiled python module."""

import json

import pytest

import condition1 as c1


def test_primes():
    assert c1.is_prime(510481)
    assert not c1.is_prime(510510)
    assert c1.prev_prime(510510) == 510481
    assert c1.primorial(7) == 510510
    assert c1.sieve_range(0, 10) == [2, 3, 5, 7]
    assert c1.factorize(96135).factors == [(3, 1), (5, 1), (13, 1), (17, 1), (29, 1)]
    pp = c1.largest_prime_power(510510)
    assert (pp.p, pp.a, pp.value) == (17, 1, 17)


def test_padic():
    assert c1.digits_base_p(510510, 17).digits == [0, 8, 15, 1, 6]
    assert c1.digit_sum(510510, 17) == 30
    assert c1.vp_factorial(100, 5) == 24
    assert c1.kummer_valuation(4, 2, 2) == 1
    assert c1.lucas_divisible(510510, 255255, 17)
    assert c1.lucas_residue(5, 2, 7) == 3


def test_certificates():
    cert = c1.verify_with_theorem(510510, c1.PrimePower(17, 1), 2)
    assert cert.verdict.holds()
    assert cert.q == 255253
    assert [r.k for r in cert.residuals] == [255255]
    parsed = json.loads(cert.to_json())
    assert parsed["verdict"] == "Holds"

    failing = c1.oracle_check_pair(510510, 17, 510481)
    assert failing.verdict.kind == c1.VerdictKind.FailsAt
    assert failing.verdict.failures == [17]


def test_diophantine_and_nvar():
    hits = c1.diophantine_hits(96135, c1.PrimePower(29, 1), 4)
    assert [(h.x, h.y, h.delta, h.k) for h in hits.hits] == [(829, 1, 12, 24041)]
    bound = c1.n_variation_upper_bound(96135, c1.PrimePower(29, 1), 4)
    assert (bound.coarse, bound.refined) == (4, 3)
    mv = c1.n_variation_minimal(12)
    assert (mv.count, mv.primes) == (2, [2, 3])


def test_sequences():
    scan = c1.scan_a290203(300)
    assert scan.members == [126, 210]
    rows = c1.primorial_survey(9)
    assert [r.primorial for r in rows if r.i >= 2 and not r.minus_one_prime] == [
        210,
        510510,
        9699690,
        223092870,
    ]


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        c1.prev_prime(2)
    with pytest.raises(IndexError):
        c1.primorial(16)
