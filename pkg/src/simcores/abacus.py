"""Abacus diagrams of type A (n runners) and type C (2n runners, 2n+1 labels per row).

Position ``e`` sits on runner ``r`` at level ``L`` with ``e = L*N + r`` and
``1 <= r <= R``. In type C the labels ``L*N`` are skipped, so reading entries in
increasing order is the same as reading the *compressed* index ``L*R + r``.
Flushness and partitions are defined along that linear order; in type A the
compressed index is just the position.

An abacus is stored by its defining beads (lowest bead on each runner), which
is enough for every R-flush configuration, i.e. for R-cores.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError
from .partitions import (
    Partition,
    first_column_hooks,
    is_core,
    is_self_conjugate,
    partition_from_beads,
)


class Family(str, enum.Enum):
    A = "A"
    C = "C"


@dataclass(frozen=True)
class AbacusKind:
    family: Family
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.rank < 1:
            raise DomainError(f"rank must be positive, got {self.rank}")

    @property
    def R(self) -> int:
        return self.rank if self.family is Family.A else 2 * self.rank

    @property
    def N(self) -> int:
        return self.rank if self.family is Family.A else 2 * self.rank + 1

    def __str__(self) -> str:
        return f"{self.family.value}{self.rank}"


def type_a(n: int) -> AbacusKind:
    return AbacusKind(Family.A, n)


def type_c(n: int) -> AbacusKind:
    return AbacusKind(Family.C, n)


def runner_level(kind: AbacusKind, position: int) -> tuple[int, int]:
    N = kind.N
    if kind.family is Family.C and position % N == 0:
        raise DomainError(f"type C abacus has no entry at {position} (multiple of {N})")
    return (position - 1) % N + 1, (position - 1) // N


def compress(kind: AbacusKind, position: int) -> int:
    """Index of ``position`` in the increasing order of abacus entries."""
    runner, level = runner_level(kind, position)
    return level * kind.R + runner


def expand(kind: AbacusKind, index: int) -> int:
    """Inverse of :func:`compress`."""
    R = kind.R
    runner, level = (index - 1) % R + 1, (index - 1) // R
    return level * kind.N + runner


def display_runner(kind: AbacusKind, position: int) -> int:
    """Runner label 0..n-1 used when a normalized type-A abacus is drawn with runner n moved to the left."""
    if kind.family is not Family.A:
        raise DomainError("the 0..n-1 runner presentation is only used for type A")
    return position % kind.N


@dataclass(frozen=True)
class Abacus:
    kind: AbacusKind
    defining: tuple[int, ...]  # defining[r-1] is the lowest bead on runner r

    def __post_init__(self):
        object.__setattr__(self, "defining", tuple(int(d) for d in self.defining))
        if len(self.defining) != self.kind.R:
            raise DomainError(f"{self.kind} abacus needs {self.kind.R} defining beads")
        for r, d in enumerate(self.defining, start=1):
            if runner_level(self.kind, d)[0] != r:
                raise DomainError(f"position {d} is not on runner {r}")

    @classmethod
    def from_window(cls, kind: AbacusKind, window: Iterable[int]) -> "Abacus":
        window = list(window)
        if len(window) != kind.R:
            raise DomainError(f"{kind} window needs {kind.R} entries, got {len(window)}")
        defining: list[int | None] = [None] * kind.R
        for e in window:
            r, _ = runner_level(kind, e)
            if defining[r - 1] is not None:
                raise DomainError(f"window {window} has two entries on runner {r}")
            defining[r - 1] = e
        return cls(kind, tuple(defining))  # type: ignore[arg-type]

    @property
    def window(self) -> tuple[int, ...]:
        return tuple(sorted(self.defining))

    def levels(self) -> tuple[int, ...]:
        return tuple(runner_level(self.kind, d)[1] for d in self.defining)

    def is_bead(self, position: int) -> bool:
        if self.kind.family is Family.C and position % self.kind.N == 0:
            return False
        r, _ = runner_level(self.kind, position)
        return position <= self.defining[r - 1]

    def shifted(self, s: int) -> "Abacus":
        """Shift every compressed index by ``s``."""
        kind = self.kind
        return Abacus.from_window(kind, (expand(kind, compress(kind, d) + s) for d in self.defining))

    def _top(self) -> list[int]:
        return [compress(self.kind, d) for d in self.defining]

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.window)) + "]"


def is_flush(ab: Abacus, j: int) -> bool:
    """Every bead ``e`` has a bead ``j`` steps below it in entry order.

    Beads are downward closed on each runner, so checking the defining beads
    is enough.
    """
    if j < 1:
        raise DomainError("flush step must be positive")
    R = ab.kind.R
    top = ab._top()
    for c in top:
        c -= j
        if c > top[(c - 1) % R]:
            return False
    return True


def is_normalized(ab: Abacus) -> bool:
    if ab.kind.family is not Family.A:
        raise DomainError("normalization is a type A notion")
    return min(ab.defining) + ab.kind.N == 0


def normalize(ab: Abacus) -> Abacus:
    """Shift so that the first gap sits at position 0 (type A only)."""
    if ab.kind.family is not Family.A:
        raise DomainError("type C abaci are only used in balanced antisymmetric form")
    return ab.shifted(-(min(ab.defining) + ab.kind.N))


def is_balanced(ab: Abacus) -> bool:
    lv = ab.levels()
    if ab.kind.family is Family.A:
        return sum(lv) == 0
    R = ab.kind.R
    return all(lv[r - 1] == -lv[R - r] for r in range(1, R + 1))


def balance(ab: Abacus) -> Abacus:
    kind = ab.kind
    if kind.family is Family.A:
        # each unit shift raises exactly one runner's level by one
        n = kind.rank
        excess = sum(ab.defining) - n * (n + 1) // 2
        assert excess % n == 0
        return ab.shifted(-excess // n)
    p = abacus_to_partition(ab)
    if not is_self_conjugate(p):
        raise DomainError(f"no antisymmetric shift exists: {p} is not self-conjugate")
    return partition_to_abacus(p, kind)


def beta_beads(p: Sequence[int]) -> list[int]:
    """Nonnegative beads of the normalized abacus of ``p`` (the first-column hooks)."""
    return sorted(first_column_hooks(p))


def flush_beads(beads: Iterable[int], j: int) -> bool:
    """Flush test on an explicit normalized bead set (negatives are implicit beads, 0 a gap)."""
    s = set(beads)
    return all(e - j < 0 or e - j in s for e in s)


def _defining_from(beads: set[int], below: int, R: int) -> list[int]:
    # compressed indices; every index <= below is a bead; one defining bead per runner
    top = [below - ((below - r) % R) for r in range(1, R + 1)]
    for c in beads:
        r = (c - 1) % R
        if c > top[r]:
            top[r] = c
    return top


def partition_to_abacus(p: Sequence[int], kind: AbacusKind) -> Abacus:
    """Balanced abacus of an R-core (type A) or of a self-conjugate 2n-core (type C)."""
    p = Partition(p)
    R = kind.R
    if kind.family is Family.A:
        if not is_core(p, R):
            raise DomainError(f"{p} is not a {R}-core; its abacus has no defining-bead form")
        top = _defining_from(set(first_column_hooks(p)), -1, R)
        return balance(Abacus.from_window(kind, top))
    if not is_self_conjugate(p):
        raise DomainError(f"type C abacus needs a self-conjugate partition, got {p}")
    if not is_core(p, R):
        raise DomainError(f"{p} is not a {R}-core; its abacus has no defining-bead form")
    # charge-zero Maya diagram: beads at p_i - i + 1, antisymmetric about 1/2;
    # shifting by R centers the antisymmetry on position N
    ell = len(p)
    maya = {part - i + 1 for i, part in enumerate(p, start=1)}
    top = _defining_from({c + R for c in maya}, -ell + R, R)
    return Abacus.from_window(kind, (expand(kind, c) for c in top))


def abacus_to_partition(ab: Abacus) -> Partition:
    R = ab.kind.R
    top = ab._top()
    lo = min(top)
    beads = [c for c in range(lo, max(top) + 1) if c <= top[(c - 1) % R]]
    return partition_from_beads(beads)


def is_antisymmetric(ab: Abacus) -> bool:
    """Type C: position ``N - b`` is a bead exactly when ``N + b`` is a gap."""
    N = ab.kind.N
    span = max(abs(d - N) for d in ab.defining) + N
    return all(ab.is_bead(N - b) != ab.is_bead(N + b)
               for b in range(1, span + 1) if b % N)
