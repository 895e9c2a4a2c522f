"""Fit n -> u(q; n, n) as a quasipolynomial and measure its period.

For a move (c, d) every power sum of line sizes on the n x n board is a
polynomial in n on each residue class mod max(c, d), so the count is too.
We sample each class, interpolate exactly, and confirm with a held-out
sample before trusting the fit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .board_lines import BoardRect, Move, line_multiset
from .counting import count_elementary
from .exactmath import DensePolynomial, interpolate


class RegimeError(RuntimeError):
    """The sampled values are not yet polynomial on some residue class."""


@dataclass(frozen=True)
class Quasipolynomial:
    period: int
    degree: int
    constituents: tuple[DensePolynomial, ...]
    valid_from: int

    def __post_init__(self):
        if len(self.constituents) != self.period:
            raise ValueError("need one constituent per residue class")


def square_count(move: Move, q: int, n: int) -> int:
    return count_elementary(q, line_multiset(move, BoardRect(n, n)))


def default_valid_from(move: Move, q: int) -> int:
    return (q + 1) * move.period


def sample_points(residue: int, period: int, start: int, k: int) -> list[int]:
    """The first k integers >= start congruent to residue mod period."""
    first = start + (residue - start) % period
    return [first + i * period for i in range(k)]


def fit_square_board(move: Move, q: int, valid_from: int | None = None) -> Quasipolynomial:
    if q < 1:
        raise ValueError("fit needs q >= 1")
    period = move.period
    degree = 2 * q
    start = default_valid_from(move, q) if valid_from is None else valid_from
    if start < 1:
        raise ValueError(f"valid_from must be at least 1, got {start}")
    constituents = []
    for r in range(period):
        ns = sample_points(r, period, start, degree + 2)
        values = [square_count(move, q, n) for n in ns]
        poly = interpolate(list(zip(ns[:-1], values[:-1])))
        if poly(ns[-1]) != values[-1]:
            raise RegimeError(
                f"quasipolynomial regime not reached for move {move}, q={q}, "
                f"residue {r} (mismatch at n={ns[-1]}); raise valid_from"
            )
        constituents.append(poly)
    return Quasipolynomial(period, degree, tuple(constituents), start)


def minimal_period(qp: Quasipolynomial) -> int:
    cs = qp.constituents
    for p in range(1, qp.period + 1):
        if qp.period % p:
            continue
        if all(cs[r] == cs[(r + p) % qp.period] for r in range(qp.period)):
            return p
    return qp.period


def evaluate(qp: Quasipolynomial, n: int) -> int:
    if n < qp.valid_from:
        raise RegimeError(f"n={n} is below valid_from={qp.valid_from}")
    value = Fraction(qp.constituents[n % qp.period](n))
    if value.denominator != 1:
        raise ArithmeticError(f"quasipolynomial gave non-integer {value} at n={n}")
    return value.numerator
