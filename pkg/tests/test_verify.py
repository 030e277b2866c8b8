from fractions import Fraction

import pytest

from simcores import verify
from simcores.enumeration import CoreFamily, average_size
from simcores.errors import ResourceCapError
from simcores.qpoly import IntPolynomial
from simcores.verify import (
    CLAIMS,
    COUNTEREXAMPLE,
    EXPERIMENTAL,
    REGRESSION,
    VERIFIED,
    Grid,
    Report,
    coprime_pairs,
    maj_polynomial,
    run_claims,
    skew_polynomial,
    verify_avg,
    verify_maj,
    verify_shi,
    verify_skew,
)


def test_grid_order():
    assert list(coprime_pairs(4)) == [(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]


def test_small_claims_verify():
    r = verify_skew(3)
    assert r.status == VERIFIED and r.label == EXPERIMENTAL and r.checked == 3
    assert skew_polynomial(2, 3) == IntPolynomial([1, 0, 1])
    r = verify_maj(1)
    assert r.ok and r.label == REGRESSION
    assert maj_polynomial(1, "C") == IntPolynomial([1, 0, 1])


def test_average_at_7_8():
    for sc in (False, True):
        assert average_size(CoreFamily(7, 8, sc)) == Fraction(16 * 6 * 7, 24) == 28


def test_resource_caps():
    with pytest.raises(ResourceCapError, match="cap"):
        verify_avg(13)
    with pytest.raises(ResourceCapError):
        verify_skew(0)
    with pytest.raises(ResourceCapError):
        verify_maj(3, 8)
    with pytest.raises(ResourceCapError):
        verify_maj(0, 0)
    assert verify_maj(0, 2).checked == 2
    with pytest.raises(ResourceCapError):
        verify_shi(4, 1)


def test_counterexample_is_recorded_and_run_continues(monkeypatch):
    monkeypatch.setattr(verify, "rational_q_catalan", lambda a, b: IntPolynomial([1]))
    r = verify_skew(4)
    assert r.status == COUNTEREXAMPLE and not r.ok
    # (1,2) and (1,3) have a single core, so (2,3) is the first failure
    assert r.witness["a"] == 2 and r.witness["b"] == 3
    assert r.witness["difference"] == [0, 0, 1]
    assert r.checked == 5 and r.failures == 2
    assert "first counterexample" in r.summary()


def test_report_json_is_deterministic():
    a = verify_maj(3).to_json(timing=False)
    b = verify_maj(3).to_json(timing=False)
    assert a == b and "elapsed_ms" not in a
    assert set(verify_maj(2).to_json()) == {"claim", "label", "params", "status", "checked", "failures", "elapsed_ms"}
    r = Report("x", REGRESSION, {})
    r.fail({"n": 1})
    r.fail({"n": 2})
    assert r.witness == {"n": 1} and r.failures == 2


def test_shi_claim_small():
    r = verify_shi(2, 1)
    assert r.ok and r.checked > 0


def test_parallel_run_matches_serial():
    grid = Grid(max_ab=5, max_n=3, max_rank=1, max_m=1)
    claims = ["counts", "maj", "sieving"]
    serial = [r.to_json(timing=False) for r in run_claims(claims, grid)]
    parallel = [r.to_json(timing=False) for r in run_claims(claims, grid, jobs=2)]
    assert serial == parallel
    assert [r["claim"] for r in serial] == claims
    assert set(CLAIMS) == {"counts", "avg", "max", "maj", "skew", "qt", "sieving", "shi"}
