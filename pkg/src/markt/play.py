"""Text REPL: a human plays a sum of Mark-t games against the engine."""

from __future__ import annotations

import re
import sys

from .misere import misere_winning_move
from .sums import Move, apply_move, ordered_moves, winning_move
from .tary import BASE_T, DECIMAL, TaryNat, div_t, format_position

NORMAL = "normal"
MISERE = "misere"
HUMAN = "you"
ENGINE = "engine"

HELP = ("moves: '[component] sub <i>' or '[component] div' "
        "(shorthand '-<i>' and '/'); the component index may be omitted "
        "when there is only one")

_MOVE_RE = re.compile(r"^\s*(?:(\d+)\s*[:,]?\s*)?(?:(?:sub(?:tract)?\s*|-)\s*(\d+)|(div(?:ide)?|/))\s*$",
                      re.IGNORECASE)


class IllegalMove(ValueError):
    pass


def parse_move(line: str, position: list[TaryNat]) -> Move:
    m = _MOVE_RE.match(line)
    if not m:
        raise IllegalMove(f"cannot parse {line.strip()!r}; {HELP}")
    comp_s, amount_s, div = m.groups()
    if comp_s is None:
        if len(position) != 1:
            raise IllegalMove("several components: say which one, e.g. '0 sub 1'")
        comp = 0
    else:
        comp = int(comp_s)
    if not 0 <= comp < len(position):
        raise IllegalMove(f"no component {comp}")
    amount = None if div else int(amount_s)
    for move in ordered_moves(position[comp], comp):
        if move.amount == amount:
            return move
    raise IllegalMove(f"that move is not legal from {position[comp].value}")


def engine_move(position: list[TaryNat], mode: str) -> Move:
    """Winning move if there is one, else divide the largest component."""
    if mode == MISERE:
        move = misere_winning_move(position[0])
    else:
        move = winning_move(position)
    if move is not None:
        return move
    idx = max(range(len(position)), key=lambda i: (len(position[i]), position[i].msd()))
    return Move(idx, None, div_t(position[idx]))


def _wins(who: str) -> str:
    return "you win" if who == HUMAN else "engine wins"


def show(position: list[TaryNat], out):
    if not position:
        print("  (empty sum)", file=out)
    for idx, x in enumerate(position):
        print(f"  [{idx}] {format_position(x, BASE_T)} (base {x.t}) = "
              f"{format_position(x, DECIMAL)}", file=out)


def play(start, mode: str = NORMAL, engine_first: bool = False,
         stdin=None, out=None) -> str | None:
    """Run one game; return the winner (HUMAN or ENGINE), or None on EOF."""
    stdin = sys.stdin if stdin is None else stdin
    out = sys.stdout if out is None else out
    position = list(start)
    if mode not in (NORMAL, MISERE):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == MISERE and len(position) != 1:
        raise ValueError("misere play needs exactly one component")
    mover = ENGINE if engine_first else HUMAN
    print(f"{mode} play; {HELP}", file=out)
    while True:
        other = HUMAN if mover == ENGINE else ENGINE
        show(position, out)
        if not any(position):
            if mode == NORMAL:
                print(f"no moves: mover loses ({mover} to move); {_wins(other)}", file=out)
                return other
            print(f"no moves: mover wins ({mover} to move); {_wins(mover)}", file=out)
            return mover
        if mover == ENGINE:
            move = engine_move(position, mode)
            print(f"engine: component {move.component}: {move.describe()}", file=out)
        else:
            while True:
                print("> ", end="", file=out, flush=True)
                line = stdin.readline()
                if not line:
                    print("\nend of input; game abandoned", file=out)
                    return None
                if not line.strip():
                    continue
                try:
                    move = parse_move(line, position)
                    break
                except IllegalMove as exc:
                    print(f"illegal: {exc}", file=out)
            print(f"you: component {move.component}: {move.describe()}", file=out)
        position = apply_move(position, move)
        mover = other
