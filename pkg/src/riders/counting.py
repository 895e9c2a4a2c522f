"""Counting nonattacking placements of identical riders.

For a one-move rider two pieces attack exactly when they share a line, so a
nonattacking placement of q pieces is a choice of q distinct lines and one
cell on each: the count is the elementary symmetric function e_q of the line
sizes. The three one-move routes below compute e_q differently:

* ``elementary``: top coefficients of prod (x + size) over all lines;
* ``partition``:  e_q from power sums, summed over partitions of q;
* ``stirling``:   the grouped convolution of binomial and Stirling factors
  that the rectangular line table yields.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from . import oracle
from .board_lines import (
    BoardRect,
    LineMultiset,
    Move,
    MoveError,
    OrientedInstance,
    canonicalize_move,
    line_multiset_closed,
    orient,
)
from .exactmath import (
    DensePolynomial,
    binomial,
    partitions_of,
    poly_mul,
    poly_pow,
    stirling_first_unsigned,
)
from .power_sums import ALPHA2_ERRATUM, FormulaError, alpha2_closed, alpha_general

TWO_PIECE_ERRATUM = (
    "two-piece count: u(2) = (m^2 n^2 + (|M|-1) m n - sum of alpha(2)) / 2; "
    "the overlap term enters with a plus sign"
)

METHODS = ("elementary", "partition", "stirling", "semirook", "semibishop", "oracle")
DEFAULT_ORACLE_BUDGET = 2_000_000


class MethodDisagreement(RuntimeError):
    """Two counting routes produced different values for the same query."""

    def __init__(self, query: dict, values: dict[str, int]):
        self.query = query
        self.values = values
        lines = [f"methods disagree for {query}:"]
        lines += [f"  {name:<11} {value}" for name, value in values.items()]
        super().__init__("\n".join(lines))


class UnsupportedQuery(ValueError):
    pass


@dataclass(frozen=True)
class CountResult:
    value: int
    method: str
    per_method: dict[str, int] = field(default_factory=dict)
    errata_notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.value < 0:
            raise FormulaError(f"negative count {self.value} from {self.method}")


class Moveset:
    """Distinct-slope set of signed basic moves.

    Each move is stored as the direction representative with c > 0, or
    c == 0 and d > 0; (1,-1) and (1,1) are different slopes.
    """

    def __init__(self, moves):
        seen = []
        for c, d in moves:
            canonicalize_move(c, d)  # validates basic-ness
            if c < 0 or (c == 0 and d < 0):
                c, d = -c, -d
            if (c, d) in seen:
                raise MoveError(f"duplicate slope {d}/{c} in moveset")
            seen.append((c, d))
        if not seen:
            raise MoveError("moveset must be nonempty")
        self.moves: tuple[tuple[int, int], ...] = tuple(seen)

    @classmethod
    def parse(cls, text: str) -> Moveset:
        """Parse ``"c1,d1;c2,d2"``."""
        moves = []
        for chunk in text.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            try:
                c, d = (int(v) for v in chunk.split(","))
            except ValueError:
                raise MoveError(f"cannot parse move {chunk!r}; expected c,d") from None
            moves.append((c, d))
        return cls(moves)

    def __iter__(self):
        return iter(self.moves)

    def __len__(self):
        return len(self.moves)

    def canonical(self) -> list[Move]:
        return [canonicalize_move(c, d) for c, d in self.moves]

    def __repr__(self):
        return f"Moveset({list(self.moves)})"


def count_elementary(q: int, lines: LineMultiset) -> int:
    """Coefficient of x**(|L|-q) in prod over lines of (x + size).

    Works with the reversed product prod (1 + size*y), whose y**q coefficient
    is the same number, truncated at degree q.
    """
    if q < 0:
        raise ValueError("q must be nonnegative")
    if q > lines.line_count:
        return 0
    product = DensePolynomial.one()
    for size, mult in lines.items():
        factor = poly_pow(DensePolynomial((1, size)), mult, max_degree=q)
        product = poly_mul(product, factor, max_degree=q)
    return int(product.coefficient(q))


def count_partition(q: int, lines: LineMultiset) -> int:
    """e_q of the line sizes via power sums (Newton/cycle-index form)."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    power = {}
    total = Fraction(0)
    for part in partitions_of(q):
        term = Fraction(1)
        for lam, mult in part.parts:
            if lam not in power:
                power[lam] = alpha_general(lam, lines)
            term *= Fraction(power[lam] ** mult, lam**mult * factorial(mult))
        if (q - part.length) % 2:
            term = -term
        total += term
    if total.denominator != 1 or total < 0:
        raise FormulaError(f"partition sum for q={q} gave {total}, expected a nonnegative integer")
    return total.numerator


def count_stirling(q: int, inst: OrientedInstance) -> int:
    """Sum over k + j + x_1 + ... + x_{2cd} = q of
    C(A,j) s^j * C(B,k) (s+1)^k * prod_i c(s, s - x_i).

    The composition sum is evaluated as a truncated convolution of the three
    coefficient sequences, which is the same sum grouped by factor.
    """
    if q < 0:
        raise ValueError("q must be nonnegative")
    c, d, m = inst.c, inst.d, inst.m
    s, nbar = inst.s, inst.nbar
    a_mult = (d - nbar) * (m - c * s) + c * (nbar + d)
    b_mult = nbar * (m - c * s)

    long_lines = DensePolynomial([binomial(a_mult, j) * s**j for j in range(min(a_mult, q) + 1)])
    longer_lines = DensePolynomial([binomial(b_mult, k) * (s + 1) ** k for k in range(min(b_mult, q) + 1)])
    short_block = DensePolynomial([stirling_first_unsigned(s, s - x) for x in range(min(s, q) + 1)])

    acc = poly_mul(long_lines, longer_lines, max_degree=q)
    acc = poly_mul(acc, poly_pow(short_block, 2 * c * d, max_degree=q), max_degree=q)
    return int(acc.coefficient(q))


def count_two_pieces(moves: Moveset, board: BoardRect) -> int:
    """u(2) for any moveset: ordered cell pairs minus collinear ones, halved.

    A cell pair on a common line is counted once per move by the alpha(2)
    terms; each cell paired with itself is counted |M| times, hence the
    (|M|-1)mn correction.
    """
    mn = board.m * board.n
    collinear = sum(alpha2_closed(orient(mv, board)) for mv in moves.canonical())
    twice = mn * mn + (len(moves) - 1) * mn - collinear
    if twice % 2:
        raise FormulaError(f"two-piece count for {moves} on {board} is not an integer")
    return twice // 2


def count_semirook(q: int, m: int, n: int) -> int:
    """Vertical-only rider: choose q of the m columns, any cell in each."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    return binomial(m, q) * n**q


def count_semibishop(q: int, m: int, n: int) -> int:
    """Single-diagonal rider on an m x n board with m >= n.

    There are m-n+1 diagonals of full length n; l of them stay empty. The
    remaining pieces split between the two triangles of short diagonals,
    each contributing a Stirling factor. j runs over the support of both
    factors rather than a fixed index range.
    """
    if m < n:
        raise ValueError(f"semibishop formula needs m >= n, got {m}x{n}; transpose the board")
    if q < 0:
        raise ValueError("q must be nonnegative")
    long_count = m - n + 1
    total = 0
    for l in range(long_count + 1):
        weight = n ** (long_count - l) * binomial(long_count, l)
        inner = 0
        for j in range(1, n + 1):
            k = m + n - q - j - l + 1
            if 1 <= k <= n:
                inner += stirling_first_unsigned(n, j) * stirling_first_unsigned(n, k)
        total += weight * inner
    return total


def oracle_budget() -> int:
    raw = os.environ.get("RIDER_ORACLE_BUDGET")
    return int(raw) if raw else DEFAULT_ORACLE_BUDGET


def applicable_methods(q: int, move: Move, board: BoardRect, budget: int | None = None) -> list[str]:
    methods = ["elementary", "partition", "stirling"]
    if move.c == 0 or move.d == 0:
        methods.append("semirook")
    if move == Move(1, 1):
        methods.append("semibishop")
    if budget is None:
        budget = oracle_budget()
    if binomial(board.m * board.n, q) <= budget:
        methods.append("oracle")
    return methods


def _run(method: str, q: int, move: Move, board: BoardRect, budget: int) -> int:
    if method == "elementary":
        return count_elementary(q, line_multiset_closed(orient(move, board)))
    if method == "partition":
        return count_partition(q, line_multiset_closed(orient(move, board)))
    if method == "stirling":
        return count_stirling(q, orient(move, board))
    if method == "semirook":
        if move.c != 0 and move.d != 0:
            raise UnsupportedQuery(f"semirook formula does not apply to move {move}")
        inst = orient(move, board)
        return count_semirook(q, inst.m, inst.n)
    if method == "semibishop":
        if move != Move(1, 1):
            raise UnsupportedQuery(f"semibishop formula does not apply to move {move}")
        return count_semibishop(q, max(board.m, board.n), min(board.m, board.n))
    if method == "oracle":
        return oracle.brute_force_count(q, [(move.c, move.d)], board, budget)
    raise ValueError(f"unknown method {method!r}")


def count(q: int, move: Move, board: BoardRect, method: str = "auto", budget: int | None = None) -> CountResult:
    """Count q nonattacking one-move riders; ``method='all'`` cross-checks."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    if budget is None:
        budget = oracle_budget()
    if method == "auto":
        method = "elementary"
    if method != "all":
        return CountResult(_run(method, q, move, board, budget), method)

    values = {name: _run(name, q, move, board, budget) for name in applicable_methods(q, move, board, budget)}
    if len(set(values.values())) != 1:
        query = {"pieces": q, "move": str(move), "board": f"{board.m},{board.n}"}
        raise MethodDisagreement(query, values)
    return CountResult(values["elementary"], "all", per_method=values)


def count_moveset(q: int, moves: Moveset, board: BoardRect, method: str = "auto") -> CountResult:
    """Dispatch for signed movesets: one slope reduces to ``count``, several
    slopes are supported only for two pieces."""
    if len(moves) == 1:
        (c, d), = moves
        return count(q, canonicalize_move(c, d), board, method)
    if q != 2:
        raise UnsupportedQuery(f"{q} pieces with {len(moves)} moves is not supported (only q=2)")
    value = count_two_pieces(moves, board)
    notes = (ALPHA2_ERRATUM, TWO_PIECE_ERRATUM)
    if method == "all":
        budget = oracle_budget()
        per = {"two_piece": value}
        if binomial(board.m * board.n, 2) <= budget:
            per["oracle"] = oracle.brute_force_count(2, moves, board, budget)
        if len(set(per.values())) != 1:
            raise MethodDisagreement({"pieces": q, "moves": list(moves.moves), "board": f"{board.m},{board.n}"}, per)
        return CountResult(value, "all", per_method=per, errata_notes=notes)
    return CountResult(value, "two_piece", errata_notes=notes)
