"""Command-line interface.

Exit codes: 0 success, 1 verify found failures, 2 input error,
3 method disagreement, 4 unsupported query, 5 quasipolynomial regime failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import counting, quasipoly, verify
from .board_lines import BoardRect, MoveError, canonicalize_move, line_multiset_closed, orient
from .oracle import BudgetExceeded

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_DISAGREE = 3
EXIT_UNSUPPORTED = 4
EXIT_REGIME = 5

METHOD_CHOICES = ("auto", "all") + counting.METHODS


class InputError(ValueError):
    pass


def parse_pair(text: str, what: str) -> tuple[int, int]:
    try:
        a, b = (int(v) for v in text.split(","))
    except ValueError:
        raise InputError(f"cannot parse {what} {text!r}; expected two integers like 3,4") from None
    return a, b


def parse_board(text: str) -> BoardRect:
    m, n = parse_pair(text, "board")
    try:
        return BoardRect(m, n)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def parse_range(text: str) -> range:
    """``"2..5"`` -> 2, 3, 4, 5; a bare integer is a one-element range."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise InputError(f"cannot parse range {text!r}; expected lo..hi") from None
    if lo < 1 or hi < lo:
        raise InputError(f"range {text!r} must satisfy 1 <= lo <= hi")
    return range(lo, hi + 1)


def parse_move(text: str):
    c, d = parse_pair(text, "move")
    move = canonicalize_move(c, d)
    notes = []
    if (c, d) != (move.c, move.d):
        notes.append(f"move {c},{d} reflected to {move}; counts are reflection invariant")
    return move, notes


def frac_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def emit(args, doc: dict, rows: list[list] | None = None, header: list[str] | None = None) -> None:
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        text = buf.getvalue()
    else:
        text = json.dumps(doc, indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_lines(args) -> int:
    move, notes = parse_move(args.move)
    board = parse_board(args.board)
    lines = line_multiset_closed(orient(move, board))
    pairs = [[str(size), str(mult)] for size, mult in lines.items()]
    doc = {
        "query": {"move": args.move, "board": args.board},
        "result": {"lines": pairs, "checksum": str(lines.cell_count)},
        "method": "closed",
        "errata_notes": [],
        "notes": notes,
    }
    emit(args, doc, pairs, ["size", "multiplicity"])
    return EXIT_OK


def cmd_count(args) -> int:
    if args.pieces < 0:
        raise InputError("--pieces must be nonnegative")
    board = parse_board(args.board)
    notes = []
    if args.moves:
        moves = counting.Moveset.parse(args.moves)
        result = counting.count_moveset(args.pieces, moves, board, args.method)
        query = {"pieces": args.pieces, "moves": args.moves, "board": args.board, "method": args.method}
    else:
        move, notes = parse_move(args.move)
        result = counting.count(args.pieces, move, board, args.method)
        query = {"pieces": args.pieces, "move": args.move, "board": args.board, "method": args.method}
    doc = {
        "query": query,
        "result": str(result.value),
        "method": result.method,
        "errata_notes": list(result.errata_notes),
        "notes": notes,
    }
    if result.per_method:
        doc["per_method"] = {k: str(v) for k, v in result.per_method.items()}
        doc["agree"] = True
    rows = [[args.pieces, args.board, result.method, str(result.value)]]
    emit(args, doc, rows, ["pieces", "board", "method", "value"])
    return EXIT_OK


def cmd_period(args) -> int:
    if args.pieces < 1:
        raise InputError("--pieces must be at least 1")
    move, notes = parse_move(args.move)
    qp = quasipoly.fit_square_board(move, args.pieces, args.valid_from)
    minimal = quasipoly.minimal_period(qp)
    constituents = [[frac_str(c) for c in poly.coeffs] for poly in qp.constituents]
    doc = {
        "query": {"move": args.move, "pieces": args.pieces},
        "result": {
            "period": str(qp.period),
            "minimal_period": str(minimal),
            "degree": str(qp.degree),
            "valid_from": str(qp.valid_from),
            "constituents": constituents,
            "minimal_equals_max_step": minimal == move.period,
        },
        "method": "elementary",
        "errata_notes": [],
        "notes": notes,
    }
    rows = [
        [r, power, coeff]
        for r, coeffs in enumerate(constituents)
        for power, coeff in enumerate(coeffs)
    ]
    emit(args, doc, rows, ["residue", "power", "coefficient"])
    return EXIT_OK


def cmd_verify(args) -> int:
    budget = args.oracle_budget if args.oracle_budget is not None else counting.oracle_budget()
    report = verify.run_sweep(args.max_c, args.max_d, args.max_m, args.max_n, args.max_q, budget)
    for line in report.failures:
        print(f"FAIL {line}")
    status = "ok" if report.ok else "FAILED"
    print(
        f"verify {status}: {report.checked} instances, {report.oracle_checked} brute-forced, "
        f"{len(report.failures)} failures"
    )
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def cmd_table(args) -> int:
    if args.pieces < 0:
        raise InputError("--pieces must be nonnegative")
    move, notes = parse_move(args.move)
    grid = []
    for m in parse_range(args.m):
        for n in parse_range(args.n):
            value = counting.count(args.pieces, move, BoardRect(m, n)).value
            grid.append([m, n, str(value)])
    doc = {
        "query": {"move": args.move, "pieces": args.pieces, "m": args.m, "n": args.n},
        "result": [{"m": m, "n": n, "value": v} for m, n, v in grid],
        "method": "elementary",
        "errata_notes": [],
        "notes": notes,
    }
    emit(args, doc, grid, ["m", "n", "value"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="riders", description="Count nonattacking rider placements on rectangular boards.")
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--output", help="write to this path instead of stdout")

    p = sub.add_parser("lines", help="line-size multiset for a move on a board")
    p.add_argument("--move", required=True, help="basic move c,d")
    p.add_argument("--board", required=True, help="board m,n")
    output_flags(p)
    p.set_defaults(func=cmd_lines)

    p = sub.add_parser("count", help="count nonattacking placements")
    p.add_argument("--pieces", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--move", help="basic move c,d")
    group.add_argument("--moves", help='several moves "c1,d1;c2,d2" (q=2 only); write --moves=-1,1;... for a leading minus')
    p.add_argument("--board", required=True)
    p.add_argument("--method", choices=METHOD_CHOICES, default="auto")
    output_flags(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("period", help="fit u(q; n, n) and report its period")
    p.add_argument("--move", required=True)
    p.add_argument("--pieces", type=int, required=True)
    p.add_argument("--valid-from", type=int, default=None)
    output_flags(p)
    p.set_defaults(func=cmd_period)

    p = sub.add_parser("verify", help="cross-method and brute-force sweep")
    p.add_argument("--max-c", type=int, default=3)
    p.add_argument("--max-d", type=int, default=3)
    p.add_argument("--max-m", type=int, default=6)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-q", type=int, default=6)
    p.add_argument("--oracle-budget", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="grid of u(q; m, n)")
    p.add_argument("--move", required=True)
    p.add_argument("--pieces", type=int, required=True)
    p.add_argument("--m", required=True, help="range lo..hi")
    p.add_argument("--n", required=True, help="range lo..hi")
    output_flags(p)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, MoveError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except counting.MethodDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except counting.UnsupportedQuery as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except quasipoly.RegimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REGIME


if __name__ == "__main__":
    sys.exit(main())
