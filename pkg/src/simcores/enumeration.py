"""Exhaustive generation of (a,b)-cores and self-conjugate (a,b)-cores, with
exact aggregate measures.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd
from typing import Iterator

from .errors import DomainError, InvariantError
from .partitions import (
    Partition,
    first_column_hooks,
    from_beta_set,
    is_core_beta,
    is_core_cellscan,
    is_self_conjugate,
    size_from_beta_set,
)
from .paths import anderson_path_to_core, enumerate_paths, fms_path_to_core


@dataclass(frozen=True)
class CoreFamily:
    a: int
    b: int
    self_conjugate: bool = False

    def __post_init__(self):
        if self.a < 1 or self.b < 1 or gcd(self.a, self.b) != 1:
            raise DomainError(f"({self.a},{self.b}) must be coprime positive integers")

    def __str__(self) -> str:
        kind = "self-conjugate " if self.self_conjugate else ""
        return f"{kind}({self.a},{self.b})-cores"


def anderson_count(a: int, b: int) -> int:
    return factorial(a + b - 1) // (factorial(a) * factorial(b))


def fms_count(a: int, b: int) -> int:
    return comb(a // 2 + b // 2, a // 2)


def expected_count(f: CoreFamily) -> int:
    return fms_count(f.a, f.b) if f.self_conjugate else anderson_count(f.a, f.b)


def olsson_stanton_size(a: int, b: int) -> int:
    return (a * a - 1) * (b * b - 1) // 24


def conjectured_average(a: int, b: int) -> Fraction:
    return Fraction((a + b + 1) * (a - 1) * (b - 1), 24)


def enumerate_cores(f: CoreFamily) -> Iterator[Partition]:
    """Each member once, in the lexicographic order of the corresponding paths."""
    a, b = f.a, f.b
    if f.self_conjugate:
        for path in enumerate_paths(b // 2, a // 2):
            yield fms_path_to_core(path, a, b)
    else:
        for path in enumerate_paths(b, a, above_diagonal=True):
            yield anderson_path_to_core(path, a, b)


def count_cores(f: CoreFamily) -> int:
    return sum(1 for _ in enumerate_cores(f))


def max_size(f: CoreFamily) -> tuple[int, Partition]:
    """Largest size and its witness; the maximizer must be unique and self-conjugate."""
    best, witnesses = -1, []
    for p in enumerate_cores(f):
        s = p.size
        if s > best:
            best, witnesses = s, [p]
        elif s == best:
            witnesses.append(p)
    if len(witnesses) != 1:
        raise InvariantError(f"{f}: {len(witnesses)} cores of maximum size {best}")
    if not is_self_conjugate(witnesses[0]):
        raise InvariantError(f"{f}: maximizer {witnesses[0]} is not self-conjugate")
    return best, witnesses[0]


def average_size(f: CoreFamily) -> Fraction:
    total = count = 0
    for p in enumerate_cores(f):
        total += p.size
        count += 1
    return Fraction(total, count)


def brute_force_cores(a: int, b: int, size_cap: int | None = None) -> set[Partition]:
    """All partitions of size <= size_cap that are both a- and b-cores.

    Candidates are grown as beta-sets in increasing order. An a-core's beta-set
    stays a-closed when truncated, so the search prunes on the a-core condition
    only; the b-condition and a cell-by-cell hook scan are applied to the survivors.
    """
    if a < 1 or b < 1:
        raise DomainError("a and b must be positive")
    if size_cap is None:
        size_cap = olsson_stanton_size(a, b)
    out: set[Partition] = set()
    beta: list[int] = []
    chosen: set[int] = set()

    def rec(nxt: int, size: int) -> None:
        p = from_beta_set(beta)
        if is_core_beta(beta, b) and is_core_cellscan(p, a) and is_core_cellscan(p, b):
            out.add(p)
        k = len(beta)
        h = nxt
        # adding h as the new largest beta number grows the size by h - k
        while size + h - k <= size_cap:
            if h < a or (h - a) in chosen:
                beta.append(h)
                chosen.add(h)
                rec(h + 1, size + h - k)
                beta.pop()
                chosen.discard(h)
            h += 1

    rec(1, 0)
    return out


def core_size(p: Partition) -> int:
    """Size from the beta-set, without materializing the diagram."""
    return size_from_beta_set(first_column_hooks(p))
