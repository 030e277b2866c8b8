"""Exhaustive checks of the theorems and conjectures over small parameter grids.

Every check returns a :class:`Report`. A failing grid point is recorded as a
counterexample (the first one in lexicographic order is kept as the witness) and
the check carries on, so a falsified conjecture never aborts a run.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Callable, Iterator

from .abacus import Family
from .enumeration import (
    CoreFamily,
    conjectured_average,
    count_cores,
    enumerate_cores,
    expected_count,
    max_size,
    olsson_stanton_size,
)
from .errors import InvariantError, ResourceCapError
from .qpoly import IntPolynomial, catalan_C, qt_generating_function, rational_q_catalan
from .shi import ShiConfig, enumerate_dominant, oracle_m_bounded, oracle_m_minimal
from .stats import co_skew_length, ell, maj_A, maj_C, skew_length

VERIFIED = "verified"
COUNTEREXAMPLE = "counterexample"
EXPERIMENTAL = "EXPERIMENTAL"
REGRESSION = "REGRESSION"

# largest grids accepted; each grid point finishes within seconds
MAX_AB = 12
MAX_N_TYPE_A = 10
MAX_N_TYPE_C = 7
MAX_SHI_RANK = 3
MAX_SHI_M = 3


@dataclass
class Report:
    claim: str
    label: str
    params: dict
    status: str = VERIFIED
    witness: dict | None = None
    checked: int = 0
    failures: int = 0
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return self.status == VERIFIED

    def fail(self, witness: dict) -> None:
        """Record a failing grid point; only the first one becomes the witness."""
        self.failures += 1
        if self.witness is None:
            self.status = COUNTEREXAMPLE
            self.witness = witness

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "claim": self.claim,
            "label": self.label,
            "params": self.params,
            "status": self.status,
            "checked": self.checked,
            "failures": self.failures,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if timing:
            out["elapsed_ms"] = self.elapsed_ms
        return out

    def summary(self) -> str:
        tag = f"{self.label}-{self.status}"
        line = f"{self.claim:<8} {tag:<28} {self.checked} grid points"
        if self.witness is not None:
            line += f"; first counterexample {self.witness}"
        return line


def _cap(name: str, value: int, limit: int, low: int = 1) -> None:
    if value < low:
        raise ResourceCapError(f"{name} must be at least {low}, got {value}")
    if value > limit:
        raise ResourceCapError(f"{name}={value} exceeds the resource cap {limit}")


def coprime_pairs(max_ab: int) -> Iterator[tuple[int, int]]:
    """Coprime 1 <= a < b <= max_ab in lexicographic order."""
    for a in range(1, max_ab + 1):
        for b in range(a + 1, max_ab + 1):
            if gcd(a, b) == 1:
                yield a, b


def _timed(claim: str, label: str, params: dict, body: Callable[[Report], None]) -> Report:
    report = Report(claim, label, params)
    start = time.perf_counter()
    body(report)
    report.elapsed_ms = round((time.perf_counter() - start) * 1000)
    return report


def _poly_witness(extra: dict, got: IntPolynomial, want: IntPolynomial) -> dict:
    return {**extra, "got": got.to_json(), "expected": want.to_json(), "difference": (got - want).to_json()}


def verify_counts(max_ab: int = MAX_AB) -> Report:
    _cap("max_ab", max_ab, MAX_AB, 2)

    def body(r: Report) -> None:
        for a, b in coprime_pairs(max_ab):
            for sc in (False, True):
                f = CoreFamily(a, b, sc)
                got, want = count_cores(f), expected_count(f)
                r.checked += 1
                if got != want:
                    r.fail({"a": a, "b": b, "self_conjugate": sc, "enumerated": got, "formula": want})

    return _timed("counts", REGRESSION, {"max_ab": max_ab}, body)


def verify_avg(max_ab: int = MAX_AB) -> Report:
    _cap("max_ab", max_ab, MAX_AB, 2)

    def body(r: Report) -> None:
        for a, b in coprime_pairs(max_ab):
            want = conjectured_average(a, b)
            for sc in (False, True):
                sizes = [p.size for p in enumerate_cores(CoreFamily(a, b, sc))]
                got = Fraction(sum(sizes), len(sizes))
                r.checked += 1
                if got != want:
                    r.fail({"a": a, "b": b, "self_conjugate": sc, "average": str(got), "formula": str(want)})

    return _timed("avg", EXPERIMENTAL, {"max_ab": max_ab}, body)


def verify_max(max_ab: int = MAX_AB) -> Report:
    _cap("max_ab", max_ab, MAX_AB, 2)

    def body(r: Report) -> None:
        for a, b in coprime_pairs(max_ab):
            r.checked += 1
            want = olsson_stanton_size(a, b)
            try:
                got, witness = max_size(CoreFamily(a, b))
            except InvariantError as e:
                r.fail({"a": a, "b": b, "error": str(e)})
                continue
            if got != want:
                r.fail({"a": a, "b": b, "maximum": got, "formula": want, "maximizer": list(witness)})

    return _timed("max", REGRESSION, {"max_ab": max_ab}, body)


def maj_polynomial(n: int, family: Family) -> IntPolynomial:
    """Sum of q^maj over (n, n+1)-cores (type A) or self-conjugate (2n, 2n+1)-cores (type C)."""
    if Family(family) is Family.A:
        return IntPolynomial.from_exponents(maj_A(p, n) for p in enumerate_cores(CoreFamily(n, n + 1)))
    return IntPolynomial.from_exponents(
        maj_C(p, n) for p in enumerate_cores(CoreFamily(2 * n, 2 * n + 1, self_conjugate=True)))


def verify_maj(max_n: int = 6, max_n_c: int | None = None) -> Report:
    """Type A for n = 1..max_n and type C for n = 1..max_n_c (defaults to max_n); 0 skips a type."""
    max_n_c = max_n if max_n_c is None else max_n_c
    _cap("max_n", max_n, MAX_N_TYPE_A, 0)
    _cap("max_n (type C)", max_n_c, MAX_N_TYPE_C, 0)
    if max_n == max_n_c == 0:
        raise ResourceCapError("max_n must be positive for at least one type")

    def body(r: Report) -> None:
        for n in range(1, max_n + 1):
            r.checked += 1
            got, want = maj_polynomial(n, Family.A), rational_q_catalan(n, n + 1)
            if got != want:
                r.fail(_poly_witness({"family": "A", "n": n}, got, want))
        for n in range(1, max_n_c + 1):
            r.checked += 1
            got, want = maj_polynomial(n, Family.C), catalan_C(n)
            if got != want:
                r.fail(_poly_witness({"family": "C", "n": n}, got, want))

    return _timed("maj", REGRESSION, {"max_n": max_n, "max_n_c": max_n_c}, body)


def skew_polynomial(a: int, b: int) -> IntPolynomial:
    """Sum of q^(length + skew length) over (a,b)-cores."""
    return IntPolynomial.from_exponents(ell(p) + skew_length(p, a, b) for p in enumerate_cores(CoreFamily(a, b)))


def verify_skew(max_ab: int = 10) -> Report:
    _cap("max_ab", max_ab, MAX_AB, 2)

    def body(r: Report) -> None:
        for a, b in coprime_pairs(max_ab):
            r.checked += 1
            got, want = skew_polynomial(a, b), rational_q_catalan(a, b)
            if got != want:
                r.fail(_poly_witness({"a": a, "b": b}, got, want))

    return _timed("skew", EXPERIMENTAL, {"max_ab": max_ab}, body)


def qt_polynomial(a: int, b: int):
    """Sum of q^length t^co-skew-length over (a,b)-cores."""
    return qt_generating_function((ell(p), co_skew_length(p, a, b)) for p in enumerate_cores(CoreFamily(a, b)))


def verify_qt_symmetry(max_ab: int = 9) -> Report:
    _cap("max_ab", max_ab, MAX_AB, 2)

    def body(r: Report) -> None:
        for a, b in coprime_pairs(max_ab):
            r.checked += 1
            f = qt_polynomial(a, b)
            if not f.is_symmetric():
                r.fail({"a": a, "b": b, "difference": (f - f.swap()).to_json()})

    return _timed("qt", EXPERIMENTAL, {"max_ab": max_ab}, body)


def verify_sieving(max_ab: int = MAX_AB) -> Report:
    _cap("max_ab", max_ab, MAX_AB, 2)

    def body(r: Report) -> None:
        for a, b in coprime_pairs(max_ab):
            r.checked += 1
            got = rational_q_catalan(a, b)(-1)
            want = count_cores(CoreFamily(a, b, self_conjugate=True))
            if got != want:
                r.fail({"a": a, "b": b, "value_at_minus_one": got, "self_conjugate_count": want})

    return _timed("sieving", REGRESSION, {"max_ab": max_ab}, body)


def shi_configs(max_rank: int, max_m: int) -> Iterator[ShiConfig]:
    """Type A_{n-1} and C_n with rank <= max_rank, m <= max_m; type A first."""
    for m in range(1, max_m + 1):
        for n in range(2, max_rank + 2):
            yield ShiConfig(Family.A, n, m)
        for n in range(1, max_rank + 1):
            yield ShiConfig(Family.C, n, m)


def region_counts(cfg: ShiConfig) -> tuple[int, int]:
    """Expected numbers of m-minimal and m-bounded dominant alcoves."""
    n, m = cfg.n, cfg.m
    if cfg.family is Family.C:
        return comb(n * m + n, n), comb(n * m + n - 1, n)
    return expected_count(CoreFamily(n, n * m + 1)), expected_count(CoreFamily(n, n * m - 1))


def verify_shi(max_rank: int = 3, max_m: int = 2) -> Report:
    """Flush sets against the geometric oracle for rank <= max_rank and m <= max_m.

    Region counts are checked one step further (rank + 1, m + 1), since they only need the cores.
    """
    _cap("max_rank", max_rank, MAX_SHI_RANK)
    _cap("max_m", max_m, MAX_SHI_M)

    def body(r: Report) -> None:
        for cfg in shi_configs(max_rank, max_m):
            for which, oracle in (("minimal", oracle_m_minimal), ("bounded", oracle_m_bounded)):
                r.checked += 1
                try:
                    flush = {a.window for a in enumerate_dominant(cfg, which)}
                    geo = oracle(cfg)
                except InvariantError as e:
                    r.fail({"config": str(cfg), "which": which, "error": str(e)})
                    continue
                if flush != geo:
                    r.fail({"config": str(cfg), "which": which,
                            "flush_only": sorted(map(list, flush - geo)),
                            "oracle_only": sorted(map(list, geo - flush))})
        for cfg in shi_configs(max_rank + 1, max_m + 1):
            want = region_counts(cfg)
            r.checked += 1
            try:
                got = tuple(sum(1 for _ in enumerate_dominant(cfg, w)) for w in ("minimal", "bounded"))
            except InvariantError as e:
                r.fail({"config": str(cfg), "error": str(e)})
                continue
            if got != want:
                r.fail({"config": str(cfg), "counts": list(got), "expected": list(want)})

    return _timed("shi", REGRESSION, {"max_rank": max_rank, "max_m": max_m}, body)


CLAIMS: dict[str, Callable[..., Report]] = {
    "counts": verify_counts,
    "avg": verify_avg,
    "max": verify_max,
    "maj": verify_maj,
    "skew": verify_skew,
    "qt": verify_qt_symmetry,
    "sieving": verify_sieving,
    "shi": verify_shi,
}


@dataclass
class Grid:
    max_ab: int = 10
    max_n: int = 6
    max_rank: int = 3
    max_m: int = 2

    def arguments(self, claim: str) -> tuple:
        if claim == "maj":
            return (self.max_n,)
        if claim == "shi":
            return (self.max_rank, self.max_m)
        return (self.max_ab,)


def _run(claim: str, grid: Grid) -> Report:
    return CLAIMS[claim](*grid.arguments(claim))


def run_claims(claims: list[str], grid: Grid, jobs: int = 1) -> list[Report]:
    """Run the named claims; with jobs > 1 they run in separate processes. Order is preserved."""
    if jobs <= 1 or len(claims) <= 1:
        return [_run(c, grid) for c in claims]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run, claims, [grid] * len(claims)))


def run_all(grid: Grid | None = None, jobs: int = 1) -> list[Report]:
    return run_claims(list(CLAIMS), grid or Grid(), jobs)
