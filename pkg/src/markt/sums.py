"""Normal-play sums of Mark-t games.

The nim-value of a sum is the XOR of its components' Grundy values, and a
winning move replaces one component by an option whose value restores a
zero XOR.  Components may use different radices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from operator import xor
from typing import Iterator, Sequence

from .grundy import grundy
from .oracle import N, P
from .tary import TaryNat, div_t, format_position, sub_small

SumPosition = Sequence[TaryNat]


@dataclass(frozen=True)
class Move:
    """Subtract ``amount`` from, or (amount=None) divide, one component."""

    component: int
    amount: int | None
    result: TaryNat

    @property
    def action(self) -> str:
        return "divide" if self.amount is None else "subtract"

    def describe(self, fmt: str = "decimal") -> str:
        verb = "divide" if self.amount is None else f"subtract {self.amount}"
        return f"{verb} -> {format_position(self.result, fmt)}"


def ordered_moves(x: TaryNat, component: int = 0) -> Iterator[Move]:
    """Legal moves from ``x`` in scan order: subtract 1..t-1, then divide."""
    if not x:
        return
    top = x.t - 1 if len(x) > 1 else min(x.digits[0], x.t - 1)
    for i in range(1, top + 1):
        yield Move(component, i, sub_small(x, i))
    yield Move(component, None, div_t(x))


def apply_move(s: SumPosition, move: Move) -> list[TaryNat]:
    out = list(s)
    out[move.component] = move.result
    return out


def sum_grundy(s: SumPosition) -> int:
    return reduce(xor, (grundy(x) for x in s), 0)


def sum_outcome(s: SumPosition) -> str:
    return P if sum_grundy(s) == 0 else N


def winning_move(s: SumPosition) -> Move | None:
    values = [grundy(x) for x in s]
    total = reduce(xor, values, 0)
    if total == 0:
        return None
    for idx, x in enumerate(s):
        target = values[idx] ^ total
        for move in ordered_moves(x, idx):
            if grundy(move.result) == target:
                return move
    raise AssertionError("nonzero nim-value but no move restores zero")
