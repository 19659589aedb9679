"""Misère Mark-t: the player unable to move wins.

P-positions are the numbers whose base-t form ends in an odd number of
zeros, except that odd powers of t move to N and even powers of t
(including 1) move to P.  Zero is N: the mover has already won.
"""

from __future__ import annotations

from .oracle import N, P
from .sums import Move, ordered_moves
from .tary import TaryNat, trailing_run


def is_power_of_t(x: TaryNat) -> int | None:
    """Exponent m with x == t**m, or None."""
    ds = x.digits
    if not ds or ds[-1] != 1:
        return None
    m = len(ds) - 1
    if any(ds[:m]):
        return None
    return m


def misere_outcome(x: TaryNat) -> str:
    if not x:
        return N
    m = is_power_of_t(x)
    if m is not None:
        return P if m % 2 == 0 else N
    d, r = trailing_run(x)
    return P if d == 0 and r % 2 else N


def misere_winning_move(x: TaryNat) -> Move | None:
    """First option (subtract 1..t-1, then divide) that lands on a P-position."""
    if not x or misere_outcome(x) == P:
        return None
    for move in ordered_moves(x):
        if misere_outcome(move.result) == P:
            return move
    raise AssertionError(f"N-position {x.value} has no move to P")
