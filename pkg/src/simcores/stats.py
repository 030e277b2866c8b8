"""Statistics on simultaneous cores: length, skew length, and the type A / type C
major-index statistics built from residue counts of hook lengths.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .abacus import Family
from .errors import DomainError
from .partitions import Cell, conjugate, first_column_hooks, hook_lengths, is_self_conjugate


@dataclass(frozen=True)
class DescentVector:
    x: tuple[int, ...]
    family: Family
    rank: int

    def weak_descents(self) -> list[int]:
        """Positions i >= 1 with x[i-1] >= x[i]."""
        return [i for i in range(1, len(self.x)) if self.x[i - 1] >= self.x[i]]


def descent_vector_A(p: Sequence[int], n: int) -> DescentVector:
    """x_i = number of first-column hooks congruent to i mod n, for i = 0..n-1."""
    if n < 1:
        raise DomainError("n must be positive")
    x = [0] * n
    for h in first_column_hooks(p):
        x[h % n] += 1
    return DescentVector(tuple(x), Family.A, n)


def maj_A(p: Sequence[int], n: int) -> int:
    v = descent_vector_A(p, n)
    return sum(2 * i - v.x[i] for i in v.weak_descents())


def diagonal_arms(p: Sequence[int]) -> tuple[int, ...]:
    """One more than the number of cells right of each diagonal cell, top to bottom."""
    if not is_self_conjugate(p):
        raise DomainError(f"{tuple(p)} is not self-conjugate")
    return tuple(part - i + 1 for i, part in enumerate(p, start=1) if part >= i)


def descent_vector_C(p: Sequence[int], n: int) -> DescentVector:
    """x_0 = 0 and x_i = #{w = i} - #{w = 2n-i+1} over diagonal arms taken mod 2n.

    Residues are represented in 1..2n, so a multiple of 2n counts as 2n.
    """
    if n < 1:
        raise DomainError("n must be positive")
    m = 2 * n
    counts = [0] * (m + 1)
    for w in diagonal_arms(p):
        counts[(w - 1) % m + 1] += 1
    x = [0] + [counts[i] - counts[m - i + 1] for i in range(1, n + 1)]
    return DescentVector(tuple(x), Family.C, n)


def maj_C(p: Sequence[int], n: int) -> int:
    v = descent_vector_C(p, n)
    return 2 * sum(2 * i - v.x[i] - 1 for i in v.weak_descents())


def ell(p: Sequence[int]) -> int:
    return len(p)


def b_boundary(p: Sequence[int], b: int) -> set[Cell]:
    """Cells with hook length less than ``b``."""
    return {Cell(r, c) for r, row in enumerate(hook_lengths(p), start=1)
            for c, h in enumerate(row, start=1) if h < b}


def a_rows(p: Sequence[int], a: int) -> set[int]:
    """Topmost row for each residue class (mod a) of the first-column hooks that occurs."""
    if a < 1:
        raise DomainError("a must be positive")
    top: dict[int, int] = {}
    for r, h in enumerate(first_column_hooks(p), start=1):
        top.setdefault(h % a, r)
    return set(top.values())


def _check_pair(a: int, b: int) -> None:
    if not (1 <= a < b) or gcd(a, b) != 1:
        raise DomainError(f"skew length needs coprime a < b, got ({a},{b})")


def skew_length(p: Sequence[int], a: int, b: int) -> int:
    _check_pair(a, b)
    rows = a_rows(p, a)
    if not rows:
        return 0
    conj = conjugate(p)
    total = 0
    for r in rows:
        part = p[r - 1]
        # hooks along a row strictly decrease left to right: count the tail below b
        total += sum(1 for c in range(1, part + 1) if part - c + conj[c - 1] - r + 1 < b)
    return total


def co_skew_length(p: Sequence[int], a: int, b: int) -> int:
    return (a - 1) * (b - 1) // 2 - skew_length(p, a, b)
