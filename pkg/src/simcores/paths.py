"""North/east lattice paths, MacMahon's major index, and the Anderson and
Ford-Mai-Sze bijections between simultaneous cores and paths.

Both bijections fill the boxes of a ``b x a`` rectangle with integers
(``i`` counts columns left to right, ``j`` rows bottom to top); a core's beads
occupy the boxes below/right of the path and its gaps the boxes above/left.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd
from typing import Iterator, Sequence

from .errors import DomainError
from .partitions import (
    Partition,
    first_column_hooks,
    from_beta_set,
    is_core,
    is_self_conjugate,
    partition_from_beads,
)


@dataclass(frozen=True)
class LatticePath:
    steps: str

    def __post_init__(self):
        if any(s not in "NE" for s in self.steps):
            raise DomainError(f"path steps must be N or E: {self.steps!r}")

    @property
    def endpoint(self) -> tuple[int, int]:
        return self.steps.count("E"), self.steps.count("N")

    def heights(self) -> list[int]:
        """Height at which each east step is taken."""
        out, y = [], 0
        for s in self.steps:
            if s == "N":
                y += 1
            else:
                out.append(y)
        return out

    @classmethod
    def from_heights(cls, heights: Sequence[int], top: int) -> "LatticePath":
        steps, y = [], 0
        for h in heights:
            steps.append("N" * (h - y) + "E")
            y = h
        steps.append("N" * (top - y))
        return cls("".join(steps))

    def is_above(self, b: int, a: int) -> bool:
        """Weakly above the line from (0,0) to (b,a)."""
        return all(b * h >= a * (i + 1) for i, h in enumerate(self.heights()))

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return len(self.steps)


def maj(path: LatticePath | str) -> int:
    """Sum of the valley vertices: vertex i with step i east and step i+1 north."""
    s = str(path)
    return sum(i for i in range(1, len(s)) if s[i - 1] == "E" and s[i] == "N")


def enumerate_paths(b: int, a: int, above_diagonal: bool = False) -> Iterator[LatticePath]:
    """All N/E paths (0,0) -> (b,a), lexicographic with N < E."""
    if a < 0 or b < 0:
        raise DomainError("path endpoint must be nonnegative")
    steps: list[str] = []

    def rec(x: int, y: int) -> Iterator[LatticePath]:
        if x == b and y == a:
            yield LatticePath("".join(steps))
            return
        if y < a:
            steps.append("N")
            yield from rec(x, y + 1)
            steps.pop()
        # east step from (x,y) lands on (x+1,y), which must stay on or above the line
        if x < b and (not above_diagonal or b * y >= a * (x + 1)):
            steps.append("E")
            yield from rec(x + 1, y)
            steps.pop()

    yield from rec(0, 0)


def dyck_reduction(path: LatticePath | str) -> LatticePath:
    """Drop the forced final east step of an above-diagonal path to (n+1, n), giving a Dyck path to (n, n)."""
    s = str(path)
    if not s.endswith("E") or s.count("E") != s.count("N") + 1:
        raise DomainError(f"{s} is not a path to (n+1, n) ending in an east step")
    return LatticePath(s[:-1])


def count_paths(b: int, a: int, above_diagonal: bool = False) -> int:
    if not above_diagonal:
        return comb(a + b, a)
    return sum(1 for _ in enumerate_paths(b, a, True))


def _check_coprime(a: int, b: int) -> None:
    if a < 1 or b < 1 or gcd(a, b) != 1:
        raise DomainError(f"({a},{b}) must be coprime positive integers")


def anderson_label(a: int, b: int, i: int, j: int) -> int:
    return -a * (i + 1) + b * j


def anderson_core_to_path(p: Sequence[int], a: int, b: int) -> LatticePath:
    _check_coprime(a, b)
    p = Partition(p)
    if not (is_core(p, a) and is_core(p, b)):
        raise DomainError(f"{p} is not an ({a},{b})-core")
    beads = set(first_column_hooks(p))

    def is_bead(e: int) -> bool:
        return e < 0 or e in beads

    heights = [sum(1 for j in range(a) if is_bead(anderson_label(a, b, i, j))) for i in range(b)]
    return LatticePath.from_heights(heights, a)


def anderson_path_to_core(path: LatticePath | str, a: int, b: int) -> Partition:
    _check_coprime(a, b)
    path = path if isinstance(path, LatticePath) else LatticePath(path)
    if path.endpoint != (b, a) or not path.is_above(b, a):
        raise DomainError(f"{path} is not a path to ({b},{a}) on or above the diagonal")
    beta = [e for i, h in enumerate(path.heights()) for j in range(h)
            if (e := anderson_label(a, b, i, j)) > 0]
    return from_beta_set(beta)


def fms_label(a: int, b: int, i: int, j: int) -> int:
    if a % 2 == 0:
        return (1 + b - a) // 2 - a * i + b * j
    return (1 + 2 * b - a) // 2 - a * i + b * j


def _fms_rows(a: int) -> int:
    # for odd a the row j = a-1 is all gaps and row j = -1 all beads
    return a if a % 2 == 0 else a - 1


def _maya_beads(p: Sequence[int]) -> tuple[set[int], int]:
    """Charge-zero bead positions p_i - i + 1 above ``-len(p)``; everything at or below it is a bead."""
    return {part - i + 1 for i, part in enumerate(p, start=1)}, -len(p)


def fms_full_path(p: Sequence[int], a: int, b: int) -> LatticePath:
    """Dividing path (0,0) -> (b, rows) on the FMS grid; symmetric under rotation by 180 degrees."""
    _check_coprime(a, b)
    p = Partition(p)
    if not is_self_conjugate(p):
        raise DomainError(f"{p} is not self-conjugate")
    if not (is_core(p, a) and is_core(p, b)):
        raise DomainError(f"{p} is not an ({a},{b})-core")
    beads, floor = _maya_beads(p)

    def is_bead(e: int) -> bool:
        return e <= floor or e in beads

    rows = _fms_rows(a)
    heights = [sum(1 for j in range(rows) if is_bead(fms_label(a, b, i, j))) for i in range(b)]
    return LatticePath.from_heights(heights, rows)


def fms_core_to_path(p: Sequence[int], a: int, b: int) -> LatticePath:
    """Half-path (0,0) -> (b//2, a//2) determining a self-conjugate (a,b)-core."""
    full = fms_full_path(p, a, b)
    half_len = b // 2 + a // 2
    half = full.steps[:half_len]
    assert half.count("E") == b // 2, "full FMS path does not pass through the centre"
    return LatticePath(half)


def fms_path_to_core(path: LatticePath | str, a: int, b: int) -> Partition:
    _check_coprime(a, b)
    path = path if isinstance(path, LatticePath) else LatticePath(path)
    if path.endpoint != (b // 2, a // 2):
        raise DomainError(f"{path} does not end at ({b // 2},{a // 2})")
    middle = "E" if b % 2 else ""
    full = LatticePath(path.steps + middle + path.steps[::-1])
    beads = {fms_label(a, b, i, j) for i, h in enumerate(full.heights()) for j in range(h)}
    grid = {fms_label(a, b, i, j) for i in range(b) for j in range(_fms_rows(a))}
    # labels outside the grid: nonpositive ones are beads, positive ones gaps
    lo, hi = min(grid | {0}), max(grid | {0})
    return partition_from_beads(
        e for e in range(lo - 1, hi + 1) if (e in beads if e in grid else e <= 0))
