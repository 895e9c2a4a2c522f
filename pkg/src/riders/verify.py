"""Cross-method sweep: every counting route against every other and against
brute force, over a box of moves, boards and piece counts."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, gcd

from . import board_lines, counting, oracle, power_sums


@dataclass
class SweepReport:
    checked: int = 0
    oracle_checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def sweep_moves(max_c: int, max_d: int) -> list[board_lines.Move]:
    """Basic moves (c, d) with 0 <= c <= d, c <= max_c, d <= max_d."""
    return [
        board_lines.Move(c, d)
        for d in range(1, max_d + 1)
        for c in range(0, min(max_c, d) + 1)
        if gcd(c, d) == 1
    ]


def check_instance(move, board, max_q: int, budget: int, report: SweepReport) -> None:
    fail = report.failures.append
    tag = f"move {move} board {board.m}x{board.n}"
    inst = board_lines.orient(move, board)
    closed = board_lines.line_multiset_closed(inst)
    geometric = board_lines.line_multiset_geometric(move, board)
    if closed != geometric:
        fail(f"{tag}: closed lines {dict(closed)} != geometric {dict(geometric)}")
    if closed.cell_count != board.cells:
        fail(f"{tag}: lines cover {closed.cell_count} cells, board has {board.cells}")
    for p, closed_form in ((2, power_sums.alpha2_closed), (3, power_sums.alpha3_closed)):
        want = power_sums.alpha_general(p, geometric)
        got = closed_form(inst)
        if got != want:
            fail(f"{tag}: alpha{p} closed {got} != general {want}")

    for q in range(max_q + 1):
        values = {
            "elementary": counting.count_elementary(q, closed),
            "partition": counting.count_partition(q, closed),
            "stirling": counting.count_stirling(q, inst),
        }
        if move.c == 0:
            values["semirook"] = counting.count_semirook(q, inst.m, inst.n)
        if move == board_lines.Move(1, 1):
            values["semibishop"] = counting.count_semibishop(q, max(board.m, board.n), min(board.m, board.n))
        if q == 2:
            values["two_piece"] = counting.count_two_pieces(counting.Moveset([(move.c, move.d)]), board)
        if comb(board.cells, q) <= budget:
            values["oracle"] = oracle.brute_force_count(q, [(move.c, move.d)], board, budget)
            report.oracle_checked += 1
        report.checked += 1
        if len(set(values.values())) != 1:
            fail(f"{tag} q={q}: " + ", ".join(f"{k}={v}" for k, v in values.items()))


def run_sweep(max_c=3, max_d=3, max_m=6, max_n=6, max_q=6, budget=2_000_000) -> SweepReport:
    report = SweepReport()
    for move in sweep_moves(max_c, max_d):
        for m in range(1, max_m + 1):
            for n in range(1, max_n + 1):
                check_instance(move, board_lines.BoardRect(m, n), max_q, budget, report)
    return report
