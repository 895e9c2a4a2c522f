"""Power sums of line sizes, sum over lines of size**p.

``alpha_general`` is the definition. The p = 2 and p = 3 closed forms are
shortcuts checked against it; note the leading term of the p = 2 form has
denominator 3*d**2 (the variant with d**2 alone is off by a factor of 3 and
gives 55 instead of 19 on the 3x3 diagonal).
"""

from __future__ import annotations

from fractions import Fraction

from .board_lines import HypothesisError, LineMultiset, OrientedInstance

ALPHA2_ERRATUM = (
    "alpha(2) closed form: leading term is (3dmn^2 - cn^3)/(3d^2), "
    "not /(d^2)"
)


class FormulaError(ArithmeticError):
    """An exact formula produced a value it provably cannot take."""


def alpha_general(p: int, lines: LineMultiset) -> int:
    if p < 1:
        raise ValueError(f"power sums need p >= 1, got {p}")
    return sum(mult * size**p for size, mult in lines.items())


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise FormulaError(f"{what} evaluated to non-integer {value}")
    return value.numerator


def _check(inst: OrientedInstance) -> None:
    if not inst.valid:
        raise HypothesisError(f"{inst.as_tuple()} violates the line-table hypothesis")


def alpha2_closed(inst: OrientedInstance) -> int:
    _check(inst)
    c, d, m, n, nb = inst.c, inst.d, inst.m, inst.n, inst.nbar
    head = Fraction(3 * d * m * n**2 - c * n**3, 3 * d**2) + Fraction(c * n, 3)
    tail = Fraction(nb * (d - nb), d**2) * (d * m - c * n - Fraction(c * (d - 2 * nb), 3))
    return _as_int(head + tail, f"alpha2{inst.as_tuple()}")


def alpha3_closed(inst: OrientedInstance) -> int:
    _check(inst)
    c, d, m, n, nb = inst.c, inst.d, inst.m, inst.n, inst.nbar
    head = Fraction(2 * d * m * n**3 - c * n**4, 2 * d**3) + Fraction(c * n**2, 2 * d)
    tail = Fraction(nb * (d - nb), d**3) * (
        (3 * n + d - 2 * nb) * d * m
        - (3 * n + 2 * d - 4 * nb) * c * n
        + Fraction(3 * c * nb * (d - nb), 2)
    )
    return _as_int(head + tail, f"alpha3{inst.as_tuple()}")
