"""Dominant alcoves of the m-Shi arrangement in types A_{n-1} and C_n.

An alcove is labelled by the strictly increasing window of defining beads of
its balanced abacus. Shi coordinates are floors of inner products with the
positive roots; m-minimal / m-bounded alcoves are read off as flush conditions
on the abacus, and :func:`oracle_m_minimal` / :func:`oracle_m_bounded` recover
the same sets from the coordinates alone.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable, Iterator, NamedTuple, Sequence

from .abacus import Abacus, AbacusKind, Family, abacus_to_partition, is_flush, partition_to_abacus
from .enumeration import CoreFamily, enumerate_cores
from .errors import DomainError, InvariantError
from .partitions import Partition


@dataclass(frozen=True)
class ShiConfig:
    family: Family
    n: int
    m: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        low = 2 if self.family is Family.A else 1
        if self.n < low:
            raise DomainError(f"type {self.family.value} needs n >= {low}")
        if self.m < 1:
            raise DomainError("m must be positive")

    @property
    def kind(self) -> AbacusKind:
        return AbacusKind(self.family, self.n)

    @property
    def R(self) -> int:
        return self.kind.R

    @property
    def N(self) -> int:
        return self.kind.N

    def __str__(self) -> str:
        return f"{self.family.value}{self.n}, m={self.m}"


class RootKind(str, enum.Enum):
    DIFF = "-"
    SUM = "+"
    DOUBLE = "2"


class PositiveRoot(NamedTuple):
    kind: RootKind
    i: int
    j: int  # equals i for 2e_i

    def __str__(self) -> str:
        if self.kind is RootKind.DOUBLE:
            return f"2e{self.i}"
        return f"e{self.i}{self.kind.value}e{self.j}"


def positive_roots(cfg: ShiConfig) -> list[PositiveRoot]:
    """Positive roots ordered by height."""
    n = cfg.n
    roots = [PositiveRoot(RootKind.DIFF, i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if cfg.family is Family.C:
        roots += [PositiveRoot(RootKind.SUM, i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        roots += [PositiveRoot(RootKind.DOUBLE, i, i) for i in range(1, n + 1)]
    # within one height, differences and doubles come before sums
    return sorted(roots, key=lambda r: (root_height(r, cfg), r.kind is RootKind.SUM, r.i))


def simple_roots(cfg: ShiConfig) -> list[PositiveRoot]:
    out = [PositiveRoot(RootKind.DIFF, i, i + 1) for i in range(1, cfg.n)]
    if cfg.family is Family.C:
        out.append(PositiveRoot(RootKind.DOUBLE, cfg.n, cfg.n))
    return out


def root_height(r: PositiveRoot, cfg: ShiConfig) -> int:
    n = cfg.n
    if r.kind is RootKind.DIFF:
        return r.j - r.i
    if r.kind is RootKind.SUM:
        return (n - r.i) + (n - r.j) + 1
    return 2 * (n - r.i) + 1


def _index_pair(r: PositiveRoot, cfg: ShiConfig) -> tuple[int, int]:
    # window indices (lower, upper) whose difference measures the root
    R = cfg.R
    if r.kind is RootKind.DIFF:
        return r.i, r.j
    if r.kind is RootKind.SUM:
        return r.i, R + 1 - r.j
    return r.i, R + 1 - r.i


def check_window(window: Sequence[int], cfg: ShiConfig) -> tuple[int, ...]:
    """Validate a balanced window (type C: mirrored) and return it as a tuple."""
    w = tuple(int(x) for x in window)
    Abacus.from_window(cfg.kind, w)  # one entry per runner
    if cfg.family is Family.A:
        n = cfg.n
        if sum(w) != n * (n + 1) // 2:
            raise DomainError(f"window {list(w)} is not balanced (sum must be {n * (n + 1) // 2})")
    else:
        R, N = cfg.R, cfg.N
        if any(w[i] + w[R - 1 - i] != N for i in range(R)):
            raise DomainError(f"window {list(w)} is not mirrored: w(i) + w({R + 1}-i) must be {N}")
    return w


@dataclass(frozen=True)
class DominantAlcove:
    window: tuple[int, ...]
    cfg: ShiConfig

    def __post_init__(self):
        w = check_window(self.window, self.cfg)
        if any(x >= y for x, y in zip(w, w[1:])):
            raise DomainError(f"window {list(w)} is not strictly increasing, so not dominant")
        object.__setattr__(self, "window", w)

    @cached_property
    def coords(self) -> dict[PositiveRoot, int]:
        return {r: shi_coordinate(self, r, self.cfg) for r in positive_roots(self.cfg)}

    @property
    def length(self) -> int:
        """Number of affine hyperplanes separating the alcove from the fundamental one."""
        return sum(self.coords.values())

    def signature(self) -> tuple[int, ...]:
        """Clipped coordinates; two dominant alcoves lie in one m-Shi region iff these agree."""
        m = self.cfg.m
        return tuple(min(k, m) for k in self.coords.values())

    def abacus(self) -> Abacus:
        return Abacus.from_window(self.cfg.kind, self.window)

    def core(self) -> Partition:
        return abacus_to_partition(self.abacus())

    def to_json(self) -> dict:
        return {
            "window": list(self.window),
            "coords": [[str(r), k] for r, k in self.coords.items()],
            "minimal": is_m_minimal(self, self.cfg),
            "bounded": is_m_bounded(self, self.cfg),
            "core": list(self.core()),
        }


def shi_coordinate(a: DominantAlcove, r: PositiveRoot, cfg: ShiConfig) -> int:
    lo, hi = _index_pair(r, cfg)
    w = a.window
    return (w[hi - 1] - w[lo - 1]) // cfg.N


def right_descents(window: Sequence[int], cfg: ShiConfig) -> set[int]:
    """Indices i with s_i a right descent: the bead on runner i+1 sits at least N past runner i's.

    Runner 0 is read as runner R.
    """
    d = Abacus.from_window(cfg.kind, window).defining
    N = cfg.N
    count = cfg.n if cfg.family is Family.A else cfg.n + 1
    return {i for i in range(count) if d[i] - d[i - 1] >= N}  # d[-1] is runner R


def is_m_minimal(a: DominantAlcove, cfg: ShiConfig) -> bool:
    return is_flush(a.abacus(), cfg.R * cfg.m + 1)


def is_m_bounded(a: DominantAlcove, cfg: ShiConfig) -> bool:
    return is_flush(a.abacus(), cfg.R * cfg.m - 1)


def core_family(cfg: ShiConfig, which: str) -> CoreFamily:
    if which not in ("minimal", "bounded"):
        raise DomainError(f"which must be 'minimal' or 'bounded', got {which!r}")
    R, m = cfg.R, cfg.m
    b = R * m + 1 if which == "minimal" else R * m - 1
    return CoreFamily(R, b, self_conjugate=cfg.family is Family.C)


def enumerate_dominant(cfg: ShiConfig, which: str = "minimal") -> Iterator[DominantAlcove]:
    """Alcoves from the matching simultaneous cores, each checked against its flush predicate."""
    fam = core_family(cfg, which)
    test = is_m_minimal if which == "minimal" else is_m_bounded
    for p in enumerate_cores(fam):
        alcove = DominantAlcove(partition_to_abacus(p, cfg.kind).window, cfg)
        if not test(alcove, cfg):
            raise InvariantError(f"{p} gives window {list(alcove.window)} that fails the {which} flush test")
        yield alcove


def default_cap(cfg: ShiConfig) -> Callable[[PositiveRoot], int]:
    """Coordinate cap for the oracle search: height(root) * (m + 1)."""
    return lambda r: root_height(r, cfg) * (cfg.m + 1)


def dominant_windows(cfg: ShiConfig, cap: Callable[[PositiveRoot], int] | None = None) -> Iterator[DominantAlcove]:
    """All dominant alcoves with every Shi coordinate k_r <= cap(r), found by direct search."""
    cap = cap or default_cap(cfg)
    roots = positive_roots(cfg)
    limits = {r: cap(r) for r in roots}
    top = max(limits.values())
    N, R = cfg.N, cfg.R
    span = (top + 1) * N  # w(R) - w(1) < span
    if cfg.family is Family.A:
        n = cfg.n
        target = n * (n + 1) // 2
        for w1 in range(-((span * (n - 1)) // n) - 1, n + 1):
            for rest in combinations(range(w1 + 1, w1 + span), n - 1):
                w = (w1, *rest)
                if sum(w) != target or len({x % n for x in w}) != n:
                    continue
                yield from _keep(w, cfg, limits)
    else:
        n = cfg.n
        half_top = (N - 1) // 2  # w(n) < N/2
        lo = (N - span) // 2
        for half in combinations(range(lo, half_top + 1), n):
            if any(x % N == 0 for x in half):
                continue
            w = half + tuple(N - x for x in reversed(half))
            if len({x % N for x in w}) != R:
                continue
            yield from _keep(w, cfg, limits)


def _keep(w: tuple[int, ...], cfg: ShiConfig, limits: dict[PositiveRoot, int]) -> Iterator[DominantAlcove]:
    alcove = DominantAlcove(w, cfg)
    if all(alcove.coords[r] <= k for r, k in limits.items()):
        yield alcove


def _regions(cfg: ShiConfig, cap) -> dict[tuple[int, ...], list[DominantAlcove]]:
    groups: dict[tuple[int, ...], list[DominantAlcove]] = {}
    for alcove in dominant_windows(cfg, cap):
        groups.setdefault(alcove.signature(), []).append(alcove)
    return groups


def _unique_extreme(group: list[DominantAlcove], pick, what: str) -> DominantAlcove:
    best = pick(a.length for a in group)
    winners = [a for a in group if a.length == best]
    if len(winners) != 1:
        raise InvariantError(f"{what}: {len(winners)} alcoves of length {best} in one region")
    return winners[0]


def oracle_m_minimal(cfg: ShiConfig, cap=None) -> set[tuple[int, ...]]:
    """Windows of the shortest alcove in each dominant m-Shi region."""
    return {_unique_extreme(g, min, "minimal").window for g in _regions(cfg, cap).values()}


def oracle_m_bounded(cfg: ShiConfig, cap=None) -> set[tuple[int, ...]]:
    """Windows of the longest alcove in each bounded dominant m-Shi region.

    A dominant region is bounded exactly when every simple root's clipped
    coordinate stays below m.
    """
    roots = positive_roots(cfg)
    simple = [roots.index(r) for r in simple_roots(cfg)]
    limits = {r: (cap or default_cap(cfg))(r) for r in roots}
    out = set()
    for sig, group in _regions(cfg, cap).items():
        if all(sig[k] < cfg.m for k in simple):
            for a in group:
                # a bounded region must sit strictly inside the searched box
                if any(a.coords[r] >= limits[r] for r in roots):
                    raise InvariantError(f"bounded region {sig} touches the search cap")
            out.add(_unique_extreme(group, max, "bounded").window)
    return out


def affine_inverse(window: Sequence[int], cfg: ShiConfig) -> dict[int, int]:
    """Values u^{-1}(r) for r = 0..R+1, where u is the affine permutation with this window."""
    N, R = cfg.N, cfg.R
    inv: dict[int, int] = {}
    for k, d in enumerate(window, start=1):
        r = (d - 1) % N + 1
        inv[r] = k - (d - r)
    inv[0] = inv[R] - N if cfg.family is Family.A else 0
    inv[R + 1] = inv[1] + N
    return inv


def descents_by_permutation(window: Sequence[int], cfg: ShiConfig) -> set[int]:
    """Right descents of the alcove element (the inverse of the window's permutation),
    tested as w(i) > w(i+1) on the inverse."""
    inv = affine_inverse(window, cfg)
    count = cfg.n if cfg.family is Family.A else cfg.n + 1
    return {i for i in range(count) if inv[i] > inv[i + 1]}


def affine_length_A(values: dict[int, int], n: int) -> int:
    """Inversions of an affine permutation of type A given by its values on 1..n."""
    total = 0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            # pairs (i, j + t*n) with i < j + t*n and u(i) > u(j) + t*n
            diff = values[i] - values[j]
            lo = 0 if j > i else 1
            hi = (diff - 1) // n if diff > 0 else -1  # largest t with t*n < diff
            if hi >= lo:
                total += hi - lo + 1
    return total


def length_descents_A(window: Sequence[int], cfg: ShiConfig) -> set[int]:
    """Type A right descents by comparing lengths: l(w s_i) < l(w) with w the alcove element."""
    if cfg.family is not Family.A:
        raise DomainError("length comparison is implemented for type A")
    n = cfg.n
    inv = affine_inverse(window, cfg)
    w = {r: inv[r] for r in range(1, n + 1)}
    base = affine_length_A(w, n)
    out = set()
    for i in range(n):
        ws = dict(w)
        if i == 0:
            ws[1], ws[n] = w[n] - n, w[1] + n
        else:
            ws[i], ws[i + 1] = w[i + 1], w[i]
        if affine_length_A(ws, n) < base:
            out.add(i)
    return out


def alcoves_from_windows(windows: Iterable[Sequence[int]], cfg: ShiConfig) -> list[DominantAlcove]:
    return [DominantAlcove(tuple(w), cfg) for w in windows]
