"""Integer partitions, hooks, rim hooks, cores and boundary words.

Conventions: rows and columns are 1-based, English notation (row 1 on top).
A partition is determined by its first-column hook lengths (its beta-set);
most predicates here work on that set instead of the full Young diagram.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import DomainError


class Partition(tuple):
    """Weakly decreasing tuple of positive integers. ``Partition()`` is the empty partition."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        for x, y in zip(parts, parts[1:]):
            if x < y:
                raise DomainError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] <= 0:
            raise DomainError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")" if self else "()"


EMPTY = Partition()


class Cell(NamedTuple):
    row: int
    col: int


def parse_partition(text: str) -> Partition:
    """Parse ``"5,4,2,1,1"``; the empty string (or ``"0"``) gives the empty partition."""
    text = text.strip().strip("()[]")
    if text in ("", "0"):
        return EMPTY
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise DomainError(f"not a comma-separated list of integers: {text!r}") from exc
    return Partition(parts)


def conjugate(p: Sequence[int]) -> Partition:
    if not p:
        return EMPTY
    return Partition(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def is_self_conjugate(p: Sequence[int]) -> bool:
    return tuple(p) == tuple(conjugate(p))


def cells(p: Sequence[int]) -> Iterator[Cell]:
    for r, part in enumerate(p, start=1):
        for c in range(1, part + 1):
            yield Cell(r, c)


def _check_cell(p: Sequence[int], c: tuple[int, int]) -> None:
    row, col = c
    if not (1 <= row <= len(p) and 1 <= col <= p[row - 1]):
        raise DomainError(f"cell {tuple(c)} lies outside the diagram of {tuple(p)}")


def hook_length(p: Sequence[int], c: tuple[int, int], conj: Sequence[int] | None = None) -> int:
    _check_cell(p, c)
    if conj is None:
        conj = conjugate(p)
    row, col = c
    return p[row - 1] - col + conj[col - 1] - row + 1


def hook_lengths(p: Sequence[int]) -> list[list[int]]:
    """Hook length of every cell, row by row."""
    conj = conjugate(p)
    return [[part - c + conj[c - 1] - r + 1 for c in range(1, part + 1)]
            for r, part in enumerate(p, start=1)]


def first_column_hooks(p: Sequence[int]) -> list[int]:
    """Beta-set of ``p``: hook lengths down the first column, strictly decreasing."""
    k = len(p)
    return [part + k - i for i, part in enumerate(p, start=1)]


def from_beta_set(beta: Iterable[int]) -> Partition:
    """Inverse of :func:`first_column_hooks` (any finite set of positive integers)."""
    hooks = sorted(set(beta), reverse=True)
    if hooks and hooks[-1] <= 0:
        raise DomainError(f"beta numbers must be positive: {hooks}")
    k = len(hooks)
    return Partition(h - (k - i) for i, h in enumerate(hooks, start=1))


def size_from_beta_set(beta: Sequence[int]) -> int:
    k = len(beta)
    return sum(beta) - k * (k - 1) // 2


def partition_from_beads(beads: Iterable[int]) -> Partition:
    """Partition whose boundary reads bead -> vertical step, gap -> horizontal step.

    ``beads`` lists the beads at or above the first gap; everything below the
    smallest listed position is taken to be a bead. Shift invariant.
    """
    beads = sorted(set(beads))
    if not beads:
        return EMPTY
    # first gap: smallest position above the initial run of consecutive beads
    start = beads[0]
    i = 0
    while i < len(beads) and beads[i] == start + i:
        i += 1
    first_gap = start + i
    return from_beta_set(b - first_gap for b in beads[i:])


def is_core_cellscan(p: Sequence[int], a: int) -> bool:
    """Reference check: no cell has hook length ``a``."""
    return all(h != a for row in hook_lengths(p) for h in row)


def is_core_beta(beta: Iterable[int], a: int) -> bool:
    """``a``-core test on a beta-set: every bead ``h >= a`` has ``h - a`` as a bead too."""
    if a < 1:
        raise DomainError("a must be positive")
    beads = set(beta)
    # h == a would need a bead at 0, which is the first gap
    return all(h < a or h - a in beads for h in beads)


def is_core(p: Sequence[int], a: int) -> bool:
    return is_core_beta(first_column_hooks(p), a)


def remove_rim_hook(p: Sequence[int], c: tuple[int, int]) -> Partition:
    """Strip the rim hook whose corner cell is ``c``.

    On the beta-set this slides the bead of row ``c.row`` down by the hook length
    (positions below 0 are all beads, 0 is the first gap).
    """
    h = hook_length(p, c)
    beta = first_column_hooks(p)
    bead = beta[c[0] - 1]
    beads = set(beta) - {bead}
    assert bead - h >= 0 and bead - h not in beads
    beads.add(bead - h)
    return partition_from_beads([-1, *beads])


def rim_hook_cells(p: Sequence[int], a: int) -> list[Cell]:
    return [Cell(r, c) for r, row in enumerate(hook_lengths(p), start=1)
            for c, h in enumerate(row, start=1) if h == a]


def a_core_of(p: Sequence[int], a: int) -> Partition:
    """Remove rim ``a``-hooks until none remain, by pushing beads up each runner."""
    if a < 1:
        raise DomainError("a must be positive")
    counts = [0] * a
    for b in first_column_hooks(p):
        counts[b % a] += 1
    flushed = [r + a * lvl for r in range(a) for lvl in range(counts[r])]
    return partition_from_beads([-1, *flushed])


@dataclass(frozen=True)
class BoundaryWord:
    """Finite window of the bi-infinite boundary string.

    ``steps[i]`` sits at position ``offset + i``. Left of the window every symbol is
    0 (a vertical step), right of it every symbol is 1 (a horizontal step).
    """

    steps: tuple[int, ...]
    offset: int = 0

    def __post_init__(self):
        if any(s not in (0, 1) for s in self.steps):
            raise DomainError(f"boundary word symbols must be 0 or 1: {self.steps}")

    @classmethod
    def from_string(cls, text: str, offset: int = 0) -> "BoundaryWord":
        if any(ch not in "01" for ch in text):
            raise DomainError(f"boundary word symbols must be 0 or 1: {text!r}")
        return cls(tuple(int(ch) for ch in text), offset)

    def canonical(self) -> "BoundaryWord":
        steps = list(self.steps)
        lo = 0
        while lo < len(steps) and steps[lo] == 0:
            lo += 1
        hi = len(steps)
        while hi > lo and steps[hi - 1] == 1:
            hi -= 1
        return BoundaryWord(tuple(steps[lo:hi]), self.offset + lo if lo < hi else 0)

    def inversions(self) -> list[tuple[int, int]]:
        """Pairs of positions (i, j), i < j, with a 1 at i and a 0 at j."""
        out = []
        for j, s in enumerate(self.steps):
            if s == 0:
                out.extend((self.offset + i, self.offset + j)
                           for i in range(j) if self.steps[i] == 1)
        return out

    def __str__(self) -> str:
        return "".join(map(str, self.steps))


def boundary_word(p: Sequence[int]) -> BoundaryWord:
    """Canonical boundary word; the first 1 (first gap) sits at position 0."""
    beta = set(first_column_hooks(p))
    top = max(beta, default=0)
    return BoundaryWord(tuple(0 if e in beta else 1 for e in range(top + 1))).canonical()


def word_to_partition(w: BoundaryWord) -> Partition:
    beads = [w.offset + i for i, s in enumerate(w.steps) if s == 0]
    return partition_from_beads([w.offset - 1] + beads)
