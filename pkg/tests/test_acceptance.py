"""Acceptance suite: twelve criteria, one PASS/FAIL line each.

Under pytest the lines are printed in the terminal summary; running this file
directly prints them as each criterion finishes.
"""
import functools
import sys
import time
from fractions import Fraction
from math import comb, gcd

from simcores.abacus import Abacus, abacus_to_partition, partition_to_abacus, type_a, type_c
from simcores.enumeration import CoreFamily, average_size, brute_force_cores, enumerate_cores
from simcores.partitions import a_core_of, conjugate
from simcores.qpoly import q_binomial, q_int, rational_q_catalan
from simcores.shi import (
    DominantAlcove,
    ShiConfig,
    enumerate_dominant,
    is_m_minimal,
    oracle_m_bounded,
    oracle_m_minimal,
    right_descents,
)
from simcores.stats import ell, maj_A, maj_C, skew_length
from simcores.verify import (
    EXPERIMENTAL,
    REGRESSION,
    VERIFIED,
    verify_avg,
    verify_counts,
    verify_maj,
    verify_max,
    verify_qt_symmetry,
    verify_sieving,
    verify_skew,
)

RESULTS: dict[int, str] = {}
LAMBDA = (7, 6, 2, 2, 2, 2)
MU = (19, 19, 16, 12, 9, 9, 9, 7, 7, 4, 4, 4, 3, 3, 3, 3, 2, 2, 2)


def criterion(number: int, title: str):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                fn(*args, **kwargs)
            except BaseException as exc:
                RESULTS[number] = f"FAIL  {number:>2}. {title} ({type(exc).__name__}: {exc})"
                raise
            RESULTS[number] = f"PASS  {number:>2}. {title} [{time.perf_counter() - start:.1f}s]"
            if __name__ == "__main__":
                print(RESULTS[number])
        return run
    return wrap


def pairs(limit):
    return [(a, b) for a in range(1, limit + 1) for b in range(a + 1, limit + 1) if gcd(a, b) == 1]


def assert_verified(report, label):
    assert report.label == label
    assert report.status == VERIFIED, report.witness


@criterion(1, "core counts match both closed formulas, a<b<=12, under 60 s")
def test_01_counts():
    start = time.perf_counter()
    report = verify_counts(12)
    assert_verified(report, REGRESSION)
    assert report.checked == 2 * len(pairs(12))
    assert time.perf_counter() - start < 60


@criterion(2, "path enumeration equals brute force, a<b<=8, under 120 s")
def test_02_oracle_equivalence():
    start = time.perf_counter()
    for a, b in pairs(8):
        assert set(enumerate_cores(CoreFamily(a, b))) == brute_force_cores(a, b), (a, b)
    assert time.perf_counter() - start < 120


@criterion(3, "type A maj generating function equals Cat_q(n,n+1), n=1..8; maj_A anchor 21")
def test_03_maj_type_a():
    assert maj_A(LAMBDA, 7) == 21
    assert_verified(verify_maj(8, 0), REGRESSION)


@criterion(4, "type C maj generating function equals [2n choose n]_{q^2}, n=1..6; maj_C anchor 42")
def test_04_maj_type_c():
    assert maj_C(MU, 7) == 42
    assert_verified(verify_maj(0, 6), REGRESSION)


@criterion(5, "length plus skew length gives Cat_q(a,b), a<b<=10 (experimental); anchors 13 and 19")
def test_05_skew_length():
    assert skew_length(LAMBDA, 7, 8) == 13
    assert ell(LAMBDA) + skew_length(LAMBDA, 7, 8) == 19
    report = verify_skew(10)
    assert_verified(report, EXPERIMENTAL)
    assert report.checked == len(pairs(10))


@criterion(6, "q,t generating function of (length, co-skew length) is symmetric, a<b<=9 (experimental)")
def test_06_qt_symmetry():
    report = verify_qt_symmetry(9)
    assert_verified(report, EXPERIMENTAL)
    assert report.checked == len(pairs(9))


@criterion(7, "average size is (a+b+1)(a-1)(b-1)/24 in both families, a<b<=10 (experimental); anchor 1/2")
def test_07_average_size():
    assert average_size(CoreFamily(2, 3)) == Fraction(1, 2)
    report = verify_avg(10)
    assert_verified(report, EXPERIMENTAL)
    assert report.checked == 2 * len(pairs(10))


@criterion(8, "maximum size (a^2-1)(b^2-1)/24 with a unique self-conjugate maximizer, a<b<=10")
def test_08_max_size():
    report = verify_max(10)
    assert_verified(report, REGRESSION)
    assert report.checked == len(pairs(10))


@criterion(9, "Cat_q(a,b) at q=-1 equals the self-conjugate count, a<b<=12")
def test_09_sieving():
    report = verify_sieving(12)
    assert_verified(report, REGRESSION)
    assert report.checked == len(pairs(12))


@criterion(10, "flush alcove sets equal the geometric oracle; worked window lists; type C region counts")
def test_10_shi():
    for m in (1, 2):
        for family, ranks in (("A", (2, 3, 4)), ("C", (1, 2, 3))):
            for n in ranks:
                cfg = ShiConfig(family, n, m)
                assert {a.window for a in enumerate_dominant(cfg, "minimal")} == oracle_m_minimal(cfg), cfg
                assert {a.window for a in enumerate_dominant(cfg, "bounded")} == oracle_m_bounded(cfg), cfg
    a3 = ShiConfig("A", 3, 1)
    assert {a.window for a in enumerate_dominant(a3)} == {(1, 2, 3), (0, 2, 4), (0, 1, 5), (-1, 3, 4), (-2, 2, 6)}
    assert not is_m_minimal(DominantAlcove((-2, 3, 5), a3), a3)
    c2 = ShiConfig("C", 2, 1)
    assert {a.window for a in enumerate_dominant(c2)} == {
        (1, 2, 3, 4), (-1, 2, 3, 6), (-2, 1, 4, 7), (-2, -1, 6, 7), (-4, 2, 3, 9), (-7, -1, 6, 12)}
    for n in range(1, 5):
        for m in range(1, 4):
            cfg = ShiConfig("C", n, m)
            assert sum(1 for _ in enumerate_dominant(cfg, "minimal")) == comb(n * m + n, n)
            assert sum(1 for _ in enumerate_dominant(cfg, "bounded")) == comb(n * m + n - 1, n)


@criterion(11, "worked examples: 6-core, conjugate, both abacus windows, Shi coordinates and descents")
def test_11_worked_examples():
    assert a_core_of((5, 4, 2, 1, 1), 6) == (3, 1, 1, 1, 1)
    assert conjugate((5, 4, 2, 1, 1)) == (5, 3, 2, 2, 1)
    assert partition_to_abacus((3, 3, 1, 1, 1), type_a(4)).window == (-4, 1, 6, 7)
    assert abacus_to_partition(Abacus.from_window(type_a(4), (-4, 1, 6, 7))) == (3, 3, 1, 1, 1)
    assert partition_to_abacus((2, 1), type_c(2)).window == (-2, 1, 4, 7)
    assert abacus_to_partition(Abacus.from_window(type_c(2), (-2, 1, 4, 7))) == (2, 1)
    a3, c2 = ShiConfig("A", 3, 1), ShiConfig("C", 2, 1)
    assert list(DominantAlcove((-1, 1, 6), a3).coords.values()) == [0, 1, 2]
    assert list(DominantAlcove((-4, -2, 7, 9), c2).coords.values()) == [0, 1, 2, 2]
    assert right_descents((-1, 1, 6), a3) == {2}
    assert right_descents((-4, -2, 7, 9), c2) == {1}


@criterion(12, "rational q-Catalan division leaves remainder zero, a<b<=16")
def test_12_exact_division():
    for a, b in pairs(16):
        quotient, remainder = q_binomial(a + b, a).divmod(q_int(a + b))
        assert not remainder, (a, b, remainder)
        assert quotient == rational_q_catalan(a, b)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except BaseException:
                failed += 1
                print(RESULTS.get(int(name[5:7]), f"FAIL  {name}"))
    sys.exit(1 if failed else 0)
