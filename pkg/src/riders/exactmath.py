"""Exact integer/rational helpers: binomials, Stirling numbers, partitions,
and a small dense polynomial type.

Everything here works on Python ints and :class:`fractions.Fraction`, so
nothing ever rounds.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterator, Sequence


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


class _StirlingTable:
    """Rows of unsigned first-kind Stirling numbers, grown on demand."""

    def __init__(self):
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple[int, ...]:
        if n < len(self._rows):
            return self._rows[n]
        with self._lock:
            while len(self._rows) <= n:
                i = len(self._rows) - 1
                prev = self._rows[i]
                # c(i+1, k) = i*c(i, k) + c(i, k-1)
                new = [0] * (i + 2)
                for k, v in enumerate(prev):
                    new[k] += i * v
                    new[k + 1] += v
                self._rows.append(tuple(new))
        return self._rows[n]


_STIRLING = _StirlingTable()


def stirling_first_unsigned(n: int, k: int) -> int:
    """Number of permutations of n elements with exactly k cycles."""
    if n < 0:
        raise ValueError(f"stirling number needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return _STIRLING.row(n)[k]


@dataclass(frozen=True)
class IntegerPartition:
    """A partition stored as (part, multiplicity) pairs, parts decreasing."""

    parts: tuple[tuple[int, int], ...]

    @property
    def total(self) -> int:
        return sum(lam * mult for lam, mult in self.parts)

    @property
    def length(self) -> int:
        """Number of parts counted with multiplicity."""
        return sum(mult for _, mult in self.parts)

    def as_list(self) -> list[int]:
        return [lam for lam, mult in self.parts for _ in range(mult)]


def partitions_of(q: int) -> Iterator[IntegerPartition]:
    """Yield every partition of q, in decreasing lexicographic order.

    >>> [p.as_list() for p in partitions_of(3)]
    [[3], [2, 1], [1, 1, 1]]
    """
    if q < 0:
        raise ValueError(f"cannot partition a negative integer ({q})")

    def rec(remaining: int, cap: int) -> Iterator[list[tuple[int, int]]]:
        if remaining == 0:
            yield []
            return
        for lam in range(min(cap, remaining), 0, -1):
            for mult in range(remaining // lam, 0, -1):
                for rest in rec(remaining - lam * mult, lam - 1):
                    yield [(lam, mult)] + rest

    for parts in rec(q, q):
        yield IntegerPartition(tuple(parts))


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


@dataclass(frozen=True, init=False)
class DensePolynomial:
    """Polynomial with exact coefficients; ``coeffs[i]`` multiplies x**i.

    Coefficients are ints or Fractions. Trailing zeros are stripped, so the
    zero polynomial has an empty coefficient tuple.
    """

    coeffs: tuple

    def __init__(self, coeffs: Sequence = ()):
        cs = [_normalize(c) for c in coeffs]
        for c in cs:
            if not isinstance(c, Rational):
                raise TypeError(f"coefficient {c!r} is not exact")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def one(cls) -> DensePolynomial:
        return cls((1,))

    @classmethod
    def linear(cls, root_shift) -> DensePolynomial:
        """The monic linear polynomial x + root_shift."""
        return cls((root_shift, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _normalize(acc) if isinstance(acc, Fraction) else acc

    def __mul__(self, other: DensePolynomial) -> DensePolynomial:
        return poly_mul(self, other)

    def __pow__(self, e: int) -> DensePolynomial:
        return poly_pow(self, e)

    def __repr__(self):
        return f"DensePolynomial({list(self.coeffs)!r})"


def poly_mul(a: DensePolynomial, b: DensePolynomial, max_degree: int | None = None) -> DensePolynomial:
    """Schoolbook product; coefficients above ``max_degree`` are dropped if given."""
    if a.is_zero() or b.is_zero():
        return DensePolynomial()
    top = a.degree + b.degree
    if max_degree is not None:
        top = min(top, max_degree)
    out = [0] * (top + 1)
    bc = b.coeffs
    for i, ai in enumerate(a.coeffs):
        if i > top:
            break
        if ai == 0:
            continue
        for j in range(min(len(bc), top - i + 1)):
            out[i + j] += ai * bc[j]
    return DensePolynomial(out)


def poly_pow(a: DensePolynomial, e: int, max_degree: int | None = None) -> DensePolynomial:
    """a**e by repeated squaring (optionally truncated above ``max_degree``)."""
    if e < 0:
        raise ValueError("negative exponent")
    result = DensePolynomial.one()
    base = a
    while e:
        if e & 1:
            result = poly_mul(result, base, max_degree)
        e >>= 1
        if e:
            base = poly_mul(base, base, max_degree)
    return result


def interpolate(points: Sequence[tuple[int, object]]) -> DensePolynomial:
    """Unique polynomial of degree < len(points) through the given points.

    Uses Newton divided differences in exact rationals.
    """
    if not points:
        raise ValueError("need at least one sample point")
    xs = [p[0] for p in points]
    if len(set(xs)) != len(xs):
        raise ValueError(f"duplicate abscissa in sample set {sorted(xs)}")
    table = [Fraction(p[1]) for p in points]
    n = len(points)
    newton = [table[0]]
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(n - level)
        ]
        newton.append(table[0])

    # Horner in the Newton basis: p = c0 + (x-x0)(c1 + (x-x1)(c2 + ...))
    poly = DensePolynomial((newton[-1],))
    for k in range(n - 2, -1, -1):
        poly = poly_mul(poly, DensePolynomial.linear(-xs[k]))
        cs = list(poly.coeffs) or [0]
        cs[0] += newton[k]
        poly = DensePolynomial(cs)
    return poly


def rising_factorial_coeffs(s: int) -> DensePolynomial:
    """(x+1)(x+2)...(x+s-1), read off the Stirling row c(s, .)."""
    if s < 1:
        raise ValueError(f"rising_factorial_coeffs needs s >= 1, got {s}")
    return DensePolynomial([stirling_first_unsigned(s, j + 1) for j in range(s)])
