"""Move and board geometry: the multiset of line sizes cut out of an m x n
board by all lines of a fixed rational slope.

Coordinates: the first board dimension ``m`` runs along the horizontal step
``c`` of a move, the second dimension ``n`` along its vertical step ``d``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Mapping


class MoveError(ValueError):
    """Raised for moves that are not basic (coprime, nonzero) rider moves."""


class HypothesisError(ValueError):
    """Raised when an instance lies outside the closed-form line regime."""


@dataclass(frozen=True, order=True)
class Move:
    c: int
    d: int

    def __post_init__(self):
        if self.c < 0 or self.d < 0:
            raise MoveError(f"Move({self.c}, {self.d}) is not canonical; use canonicalize_move")
        _check_basic(self.c, self.d)

    @property
    def period(self) -> int:
        return max(self.c, self.d)

    def __str__(self):
        return f"{self.c},{self.d}"


@dataclass(frozen=True)
class BoardRect:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"board dimensions must be positive, got {self.m}x{self.n}")

    @property
    def cells(self) -> int:
        return self.m * self.n

    def transpose(self) -> BoardRect:
        return BoardRect(self.n, self.m)


def _check_basic(c: int, d: int) -> None:
    if c == 0 and d == 0:
        raise MoveError("move must be a basic move: (0,0) does not move")
    if gcd(c, d) != 1:
        raise MoveError(f"move must be a basic move: gcd({c},{d}) = {gcd(c, d)}")


def canonicalize_move(c: int, d: int) -> Move:
    """Reflect a signed basic move to (|c|, |d|).

    Mirror images of a line family on a rectangle have the same sizes, so
    every count depends only on the canonical move.
    """
    _check_basic(abs(c), abs(d))
    return Move(abs(c), abs(d))


@dataclass(frozen=True)
class OrientedInstance:
    """A (move, board) pair in the orientation the closed forms expect.

    Valid instances satisfy ``0 < n//d <= m//c`` (``m//0`` read as infinity),
    or are degenerate with ``n < d``: then no two cells share a line and the
    closed forms still hold with ``s = 0``.
    """

    c: int
    d: int
    m: int
    n: int

    def __post_init__(self):
        if self.d < 1:
            raise HypothesisError(f"oriented instance needs d >= 1, got d={self.d}")
        if self.c < 0 or self.m < 1 or self.n < 1:
            raise HypothesisError(f"bad oriented instance {self.as_tuple()}")
        _check_basic(self.c, self.d)
        if not self.valid:
            raise HypothesisError(
                f"instance (c,d,m,n)={self.as_tuple()} violates 0 < n//d <= m//c; "
                "build it with orient() first"
            )

    @property
    def s(self) -> int:
        """Length of the typical long line, n // d."""
        return self.n // self.d

    @property
    def nbar(self) -> int:
        return self.n % self.d

    @property
    def degenerate(self) -> bool:
        return self.s == 0

    @property
    def valid(self) -> bool:
        s = self.s
        if s == 0:
            return True
        return self.c == 0 or s <= self.m // self.c

    @property
    def move(self) -> Move:
        return Move(self.c, self.d)

    @property
    def board(self) -> BoardRect:
        return BoardRect(self.m, self.n)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.c, self.d, self.m, self.n)


def _satisfies(c: int, d: int, m: int, n: int) -> bool:
    if d == 0:
        return False
    s = n // d
    return s > 0 and (c == 0 or s <= m // c)


def orient(move: Move, board: BoardRect) -> OrientedInstance:
    """Swap (c,d,m,n) -> (d,c,n,m) if needed to satisfy 0 < n//d <= m//c.

    The input orientation wins ties. When neither orientation qualifies the
    move does not fit on the board in either direction; we then return the
    orientation with n < d, where every line is a single cell.
    """
    c, d, m, n = move.c, move.d, board.m, board.n
    if _satisfies(c, d, m, n):
        return OrientedInstance(c, d, m, n)
    if _satisfies(d, c, n, m):
        return OrientedInstance(d, c, n, m)
    if d > 0 and n < d:
        return OrientedInstance(c, d, m, n)
    return OrientedInstance(d, c, n, m)


class LineMultiset(Mapping[int, int]):
    """Immutable map from line size to how many lines have that size."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[int, int] | None = None):
        merged: Counter = Counter()
        for size, mult in (entries or {}).items():
            if size < 0 or mult < 0:
                raise ValueError(f"negative line entry {size}:{mult}")
            if size > 0 and mult > 0:
                merged[size] += mult
        self._entries = dict(sorted(merged.items()))

    def __getitem__(self, size: int) -> int:
        return self._entries[size]

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other):
        if isinstance(other, Mapping):
            return self._entries == dict(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._entries.items()))

    def __repr__(self):
        return f"LineMultiset({self._entries!r})"

    @property
    def line_count(self) -> int:
        """|L|: number of lines counted with multiplicity."""
        return sum(self._entries.values())

    @property
    def cell_count(self) -> int:
        return sum(size * mult for size, mult in self._entries.items())

    def sizes(self) -> Iterator[int]:
        """Every line size, repeated by multiplicity, ascending."""
        for size, mult in self._entries.items():
            for _ in range(mult):
                yield size


def line_multiset_closed(inst: OrientedInstance) -> LineMultiset:
    """Line sizes from the closed-form multiplicity table."""
    if not inst.valid:
        raise HypothesisError(f"{inst.as_tuple()} violates the line-table hypothesis; call orient() first")
    c, d, m = inst.c, inst.d, inst.m
    s, nbar = inst.s, inst.nbar
    entries: Counter = Counter()
    for size in range(1, s):
        entries[size] += 2 * c * d
    if s > 0:
        entries[s] += (d - nbar) * (m - c * s) + c * (nbar + d)
    entries[s + 1] += nbar * (m - c * s)
    return LineMultiset(entries)


def line_multiset_geometric(move: Move, board: BoardRect) -> LineMultiset:
    """Line sizes found by walking each maximal segment cell by cell."""
    c, d, m, n = move.c, move.d, board.m, board.n

    def on_board(x, y):
        return 1 <= x <= m and 1 <= y <= n

    sizes: Counter = Counter()
    for x in range(1, m + 1):
        for y in range(1, n + 1):
            # only start from the first cell of a segment
            if on_board(x - c, y - d):
                continue
            length = 0
            a, b = x, y
            while on_board(a, b):
                length += 1
                a, b = a + c, b + d
            sizes[length] += 1
    return LineMultiset(sizes)


def line_multiset(move: Move, board: BoardRect) -> LineMultiset:
    return line_multiset_closed(orient(move, board))
