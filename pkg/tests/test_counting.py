import itertools
import math
from math import gcd, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from riders import counting
from riders.board_lines import BoardRect, LineMultiset, Move, MoveError, OrientedInstance, line_multiset, orient
from riders.counting import (
    MethodDisagreement,
    Moveset,
    UnsupportedQuery,
    count,
    count_elementary,
    count_moveset,
    count_partition,
    count_semibishop,
    count_semirook,
    count_stirling,
    count_two_pieces,
)
from riders.oracle import brute_force_count

DIAG_3x3 = LineMultiset({1: 2, 2: 2, 3: 1})


def e_q_by_subsets(q, lines):
    """Sum of products over q-subsets of the individual lines."""
    sizes = list(lines.sizes())
    return sum(prod(combo) for combo in itertools.combinations(sizes, q))


def small_moves(limit):
    return [Move(c, d) for c in range(limit + 1) for d in range(limit + 1) if (c or d) and gcd(c, d) == 1]


def test_subset_oracle_on_diag():
    # (x+3)(x+1)^2(x+2)^2 = x^5 + 9x^4 + 31x^3 + 51x^2 + 40x + 12
    assert [e_q_by_subsets(q, DIAG_3x3) for q in range(6)] == [1, 9, 31, 51, 40, 12]


def test_count_elementary_examples():
    assert count_elementary(2, DIAG_3x3) == 31
    assert count_elementary(3, DIAG_3x3) == 51
    assert count_elementary(5, DIAG_3x3) == 1 * 1 * 2 * 2 * 3
    assert count_elementary(6, DIAG_3x3) == 0
    assert count_elementary(0, LineMultiset({4: 3})) == 1
    assert count_elementary(0, LineMultiset()) == 1


def test_count_partition_examples():
    # p1 = 9, p2 = 19, p3 = 45
    assert count_partition(2, DIAG_3x3) == (81 - 19) // 2 == 31
    assert count_partition(3, DIAG_3x3) == (729 - 3 * 9 * 19 + 2 * 45) // 6 == 51
    assert count_partition(1, line_multiset(Move(1, 3), BoardRect(5, 7))) == 35
    assert count_partition(0, DIAG_3x3) == 1
    assert count_partition(9, DIAG_3x3) == 0


def test_count_stirling_examples():
    assert count_stirling(2, OrientedInstance(1, 1, 3, 3)) == 31
    # lines {1:4, 2:5, 3:2}: (p1^2 - p2)/2 = (400 - 42)/2
    assert count_stirling(2, OrientedInstance(1, 2, 4, 5)) == 179
    assert e_q_by_subsets(2, LineMultiset({1: 4, 2: 5, 3: 2})) == 179
    assert count_stirling(0, OrientedInstance(2, 3, 7, 8)) == 1


def test_routes_agree_with_subset_oracle():
    for move in small_moves(3):
        for m in range(1, 6):
            for n in range(1, 6):
                board = BoardRect(m, n)
                lines = line_multiset(move, board)
                inst = orient(move, board)
                for q in range(0, 6):
                    want = e_q_by_subsets(q, lines)
                    assert count_elementary(q, lines) == want
                    assert count_partition(q, lines) == want
                    assert count_stirling(q, inst) == want


@settings(max_examples=80, deadline=None)
@given(st.dictionaries(st.integers(1, 9), st.integers(1, 4), max_size=5), st.integers(0, 8))
def test_elementary_equals_partition_on_arbitrary_multisets(entries, q):
    # the one-move formulas accept any line multiset, not just rectangles
    lines = LineMultiset(entries)
    assert count_elementary(q, lines) == count_partition(q, lines) == e_q_by_subsets(q, lines)


def test_boundary_behaviour():
    for move in small_moves(3):
        for m, n in [(1, 1), (3, 5), (6, 4)]:
            lines = line_multiset(move, BoardRect(m, n))
            assert count_elementary(0, lines) == 1
            assert count_elementary(1, lines) == m * n
            full = lines.line_count
            assert count_elementary(full, lines) == prod(size**mult for size, mult in lines.items())
            assert count_elementary(full + 1, lines) == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 4), st.integers(0, 4), st.integers(1, 9), st.integers(1, 9), st.integers(0, 6))
def test_transpose_invariance(c, d, m, n, q):
    if (c, d) == (0, 0) or gcd(c, d) != 1:
        return
    a = count(q, Move(c, d), BoardRect(m, n)).value
    b = count(q, Move(d, c), BoardRect(n, m)).value
    assert a == b


def test_two_pieces_examples():
    assert count_two_pieces(Moveset([(1, 1)]), BoardRect(3, 3)) == (81 + 0 - 19) // 2 == 31
    assert count_two_pieces(Moveset([(1, 1), (1, -1)]), BoardRect(3, 3)) == (81 + 9 - 19 - 19) // 2 == 26
    assert count_two_pieces(Moveset([(0, 1)]), BoardRect(2, 2)) == 4 == count_semirook(2, 2, 2)


def test_two_pieces_matches_brute_force_for_movesets():
    movesets = [
        [(1, 1), (1, -1)],  # bishop
        [(0, 1), (1, 0)],  # rook
        [(0, 1), (1, 0), (1, 1), (1, -1)],  # queen
        [(1, 2), (2, 1), (1, -2), (2, -1)],  # nightrider
        [(1, 3), (0, 1)],
    ]
    for moves in movesets:
        for m in range(1, 7):
            for n in range(1, 7):
                board = BoardRect(m, n)
                assert count_two_pieces(Moveset(moves), board) == brute_force_count(2, moves, board), (moves, m, n)


def test_two_pieces_singleton_equals_one_move_count():
    for move in small_moves(4):
        for m in range(1, 8):
            for n in range(1, 8):
                board = BoardRect(m, n)
                assert count_two_pieces(Moveset([(move.c, move.d)]), board) == count(2, move, board).value


def test_semirook():
    assert count_semirook(2, 3, 3) == 27
    assert count_semirook(4, 3, 5) == 0
    assert count_semirook(1, 4, 6) == 24
    for m in range(1, 13):
        for n in range(1, 13):
            for q in range(7):
                assert count_semirook(q, m, n) == count(q, Move(0, 1), BoardRect(m, n)).value


def test_semibishop():
    # l = 0 term: 3 * (c(3,2)c(3,3) + c(3,3)c(3,2)) = 18; l = 1 term: 2 + 9 + 2 = 13
    assert count_semibishop(2, 3, 3) == 31
    assert count_semibishop(2, 4, 3) == count_elementary(2, line_multiset(Move(1, 1), BoardRect(4, 3)))
    assert count_semibishop(2, 4, 3) == brute_force_count(2, [(1, 1)], BoardRect(4, 3))
    for m in range(1, 9):
        for n in range(1, m + 1):
            assert count_semibishop(0, m, n) == 1
            for q in range(9):
                assert count_semibishop(q, m, n) == count(q, Move(1, 1), BoardRect(m, n)).value


def test_semibishop_needs_tall_board():
    with pytest.raises(ValueError, match="transpose"):
        count_semibishop(2, 3, 4)


def test_count_dispatch_examples():
    result = count(2, Move(1, 1), BoardRect(3, 3), "all")
    assert result.value == 31
    assert set(result.per_method) == {"elementary", "partition", "stirling", "semibishop", "oracle"}
    assert count(7, Move(1, 1), BoardRect(3, 3)).value == 0
    assert count(7, Move(1, 1), BoardRect(3, 3)).method == "elementary"
    assert count(1, Move(1, 2), BoardRect(9, 9), "all").value == 81


@pytest.mark.parametrize("method", counting.METHODS)
def test_count_single_methods(method):
    move = Move(1, 1) if method == "semibishop" else Move(0, 1) if method == "semirook" else Move(1, 2)
    want = brute_force_count(3, [(move.c, move.d)], BoardRect(4, 5))
    assert count(3, move, BoardRect(4, 5), method).value == want


def test_count_rejects_inapplicable_method():
    with pytest.raises(UnsupportedQuery):
        count(2, Move(1, 2), BoardRect(3, 3), "semirook")


def test_all_reports_disagreement(monkeypatch):
    monkeypatch.setattr(counting, "count_partition", lambda q, lines: 999)
    with pytest.raises(MethodDisagreement) as info:
        count(2, Move(1, 1), BoardRect(3, 3), "all")
    assert info.value.values["partition"] == 999
    assert info.value.values["elementary"] == 31
    assert "partition" in str(info.value)


def test_oracle_skipped_above_budget(monkeypatch):
    monkeypatch.setenv("RIDER_ORACLE_BUDGET", "10")
    result = count(2, Move(1, 1), BoardRect(3, 3), "all")
    assert "oracle" not in result.per_method


def test_count_moveset_dispatch():
    bishop = Moveset.parse("1,1;1,-1")
    assert count_moveset(2, bishop, BoardRect(3, 3)).value == 26
    assert count_moveset(2, bishop, BoardRect(3, 3)).errata_notes
    assert count_moveset(2, bishop, BoardRect(3, 3), "all").per_method == {"two_piece": 26, "oracle": 26}
    with pytest.raises(UnsupportedQuery):
        count_moveset(3, bishop, BoardRect(3, 3))
    assert count_moveset(3, Moveset.parse("-1,2"), BoardRect(4, 4)).value == count(3, Move(1, 2), BoardRect(4, 4)).value


def test_moveset_validation():
    with pytest.raises(MoveError, match="duplicate"):
        Moveset([(1, 2), (-1, -2)])
    with pytest.raises(MoveError):
        Moveset([(2, 2)])
    with pytest.raises(MoveError):
        Moveset([])
    with pytest.raises(MoveError):
        Moveset.parse("1;2")


def test_large_counts_are_exact():
    board = BoardRect(100, 100)
    value = count(50, Move(0, 1), board).value
    assert value == math.comb(100, 50) * 100**50
    assert count(50, Move(0, 1), board, "stirling").value == value
    # p(50) = 204226 partitions; the rational route is checked at q = 25
    assert count(25, Move(1, 1), board, "partition").value == count(25, Move(1, 1), board).value
