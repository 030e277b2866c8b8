"""Exact integer polynomials in q (and in q, t) and the q-Catalan family."""
from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, InvariantError


class IntPolynomial:
    """Polynomial in q with Python-int coefficients; ``coeffs[k]`` multiplies ``q**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * k + [coeff])

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "IntPolynomial":
        """Sum of ``q**e`` over the multiset ``exponents``."""
        c: list[int] = []
        for e in exponents:
            if e < 0:
                raise DomainError(f"negative exponent {e}")
            if e >= len(c):
                c.extend([0] * (e + 1 - len(c)))
            c[e] += 1
        return cls(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-x for x in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(x * other for x in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by ``q**k``."""
        return IntPolynomial([0] * k + list(self.coeffs)) if self.coeffs else self

    def divmod(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Long division over the integers; the divisor must be monic up to sign."""
        d = divisor.coeffs
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        lead = d[-1]
        if lead not in (1, -1):
            raise DomainError("integer long division needs a leading coefficient of +-1")
        rem = list(self.coeffs)
        quot = [0] * max(len(rem) - len(d) + 1, 0)
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + len(d) - 1] * lead
            quot[k] = c
            if c:
                for i, y in enumerate(d):
                    rem[k + i] -= c * y
        return IntPolynomial(quot), IntPolynomial(rem)

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        quot, rem = self.divmod(divisor)
        if rem:
            raise InvariantError(f"division left remainder {rem}")
        return quot

    def substitute_power(self, k: int) -> "IntPolynomial":
        """Replace q by ``q**k``."""
        out = [0] * (k * self.degree + 1) if self.coeffs else []
        for i, x in enumerate(self.coeffs):
            out[k * i] = x
        return IntPolynomial(out)

    def __call__(self, q0: int) -> int:
        acc = 0
        for x in reversed(self.coeffs):
            acc = acc * q0 + x
        return acc

    evaluate = __call__

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            terms.append(("-" if c < 0 else "+", body))
        head_sign, head = terms[0]
        return ("-" if head_sign == "-" else "") + head + "".join(f" {s} {b}" for s, b in terms[1:])


ZERO = IntPolynomial()
ONE = IntPolynomial([1])


def evaluate(p: IntPolynomial, q0: int) -> int:
    return p(q0)


def q_int(n: int) -> IntPolynomial:
    if n < 0:
        raise DomainError("q-integer needs n >= 0")
    return IntPolynomial([1] * n)


def q_factorial(n: int) -> IntPolynomial:
    out = ONE
    for k in range(1, n + 1):
        out = out * q_int(k)
    return out


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> IntPolynomial:
    """Gaussian binomial by the q-Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k]."""
    if not 0 <= k <= n:
        raise DomainError(f"q-binomial needs 0 <= k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)


def rational_q_catalan(a: int, b: int) -> IntPolynomial:
    """[a+b choose a]_q / [a+b]_q, with the exactness of the division checked."""
    if a < 1 or b < 1 or gcd(a, b) != 1:
        raise DomainError(f"({a},{b}) must be coprime positive integers")
    return q_binomial(a + b, a).exact_div(q_int(a + b))


def catalan_C(n: int) -> IntPolynomial:
    """[2n choose n] evaluated at q**2."""
    if n < 1:
        raise DomainError("catalan_C needs n >= 1")
    return q_binomial(2 * n, n).substitute_power(2)


class IntPolynomial2:
    """Polynomial in q, t stored as ``{(q_exp, t_exp): coeff}`` with no zero entries."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self.terms: dict[tuple[int, int], int] = {
            (int(i), int(j)): int(c) for (i, j), c in (terms or {}).items() if c
        }

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial2) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "IntPolynomial2") -> "IntPolynomial2":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return IntPolynomial2(out)

    def __sub__(self, other: "IntPolynomial2") -> "IntPolynomial2":
        return self + IntPolynomial2({k: -c for k, c in other.terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def swap(self) -> "IntPolynomial2":
        return IntPolynomial2({(j, i): c for (i, j), c in self.terms.items()})

    def is_symmetric(self) -> bool:
        return self == self.swap()

    def specialize_t(self, t0: int) -> IntPolynomial:
        out: dict[int, int] = {}
        for (i, j), c in self.terms.items():
            out[i] = out.get(i, 0) + c * t0 ** j
        return IntPolynomial(out.get(k, 0) for k in range(max(out, default=-1) + 1))

    def to_json(self) -> list[list[int]]:
        return [[i, j, c] for (i, j), c in sorted(self.terms.items())]

    def __repr__(self) -> str:
        return f"IntPolynomial2({self.to_json()})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items()):
            mono = "*".join(x for x in (
                "" if i == 0 else ("q" if i == 1 else f"q^{i}"),
                "" if j == 0 else ("t" if j == 1 else f"t^{j}"),
            ) if x)
            parts.append(str(c) if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return " + ".join(parts)


def qt_generating_function(pairs: Iterable[Sequence[int]]) -> IntPolynomial2:
    """Sum of ``q**e_q * t**e_t`` over the given exponent pairs."""
    terms: dict[tuple[int, int], int] = {}
    for eq, et in pairs:
        terms[(eq, et)] = terms.get((eq, et), 0) + 1
    return IntPolynomial2(terms)
