"""Brute-force ground truth: enumerate placements cell by cell.

Deliberately shares nothing with the line-multiset code. Moves are plain
signed (c, d) pairs, cells are (x, y) with 1 <= x <= m, 1 <= y <= n.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable


class BudgetExceeded(RuntimeError):
    def __init__(self, subsets: int, budget: int):
        self.subsets = subsets
        self.budget = budget
        super().__init__(f"C(mn, q) = {subsets} exceeds the oracle budget {budget}")


@dataclass(frozen=True)
class Cell:
    x: int
    y: int


def attacks(a: Cell, b: Cell, moves: Iterable[tuple[int, int]]) -> bool:
    """True iff b - a is a nonzero multiple of some move (c, d).

    For coprime (c, d) that is the same as the cross product
    c*dy - d*dx vanishing.
    """
    dx, dy = b.x - a.x, b.y - a.y
    if dx == 0 and dy == 0:
        return False
    return any(c * dy - d * dx == 0 for c, d in moves)


def brute_force_count(q: int, moves: Iterable[tuple[int, int]], board, budget: int = 2_000_000) -> int:
    """Number of q-subsets of cells with no attacking pair.

    Subsets are visited in lexicographic order of cell index; a branch is cut
    as soon as the newest cell attacks an earlier one, and the last piece is
    counted with a popcount over the still-safe cells.
    """
    m, n = board.m, board.n
    total_cells = m * n
    subsets = comb(total_cells, q)
    if subsets > budget:
        raise BudgetExceeded(subsets, budget)
    if q == 0:
        return 1
    moves = list(moves)
    cells = [Cell(x, y) for x in range(1, m + 1) for y in range(1, n + 1)]

    # later[i]: bitmask of cells j > i not attacked by cell i
    later = []
    for i, a in enumerate(cells):
        mask = 0
        for j in range(i + 1, total_cells):
            if not attacks(a, cells[j], moves):
                mask |= 1 << j
        later.append(mask)

    def extend(safe: int, remaining: int) -> int:
        if remaining == 1:
            return safe.bit_count()
        found = 0
        while safe:
            low = safe & -safe
            i = low.bit_length() - 1
            safe ^= low
            found += extend(safe & later[i], remaining - 1)
        return found

    return extend((1 << total_cells) - 1, q)
