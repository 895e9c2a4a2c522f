"""Exact counts of nonattacking one-move riders on rectangular boards."""

from .board_lines import (
    BoardRect,
    LineMultiset,
    Move,
    MoveError,
    OrientedInstance,
    canonicalize_move,
    line_multiset,
    line_multiset_closed,
    line_multiset_geometric,
    orient,
)
from .counting import (
    CountResult,
    MethodDisagreement,
    Moveset,
    count,
    count_elementary,
    count_moveset,
    count_partition,
    count_semibishop,
    count_semirook,
    count_stirling,
    count_two_pieces,
)
from .power_sums import alpha2_closed, alpha3_closed, alpha_general

__version__ = "0.1.0"
