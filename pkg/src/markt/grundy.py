"""Fast Sprague-Grundy values for Mark-t.

For t >= 3 a position whose base-t string ends in an odd run of some digit
k <= t-2 has value k.  Everything else has value t-1 or t, and is resolved
by rewriting the tail of the string into shorter (or simpler) strings whose
value is known to agree or disagree with the original, counting the
disagreements.  Deleting a trailing (t-1) from a run of two or more flips
the value, which reduces every remaining input to one of two shapes: a
single trailing (t-1), or an even run of some other digit.

t = 2 uses the classical closed form over trailing zeros and the parity of
the number of 1 digits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tary import TaryNat, trailing_run

SINGLE_TOP = "single_top"  # w i^r k (t-1), or a base shape
EVEN_RUN = "even_run"  # w k^(2j)


@dataclass(frozen=True)
class HardParse:
    """Tail decomposition of a hard-case string.

    ``w`` is the untouched prefix (most-significant first).  For the
    single-(t-1) shape, ``i``/``r`` describe the maximal run before ``k``;
    when i == k the run of k has total length r + 1.  For the even-run
    shape, ``k`` is the repeated digit and the run has length ``2 * j``.
    Base shapes ``(t-1)`` and ``k(t-1)`` have ``i is None``.
    """

    shape: str
    w: tuple[int, ...]
    k: int
    i: int | None = None
    r: int = 0
    j: int = 0


def grundy_t2(x: TaryNat) -> int:
    if x.t != 2:
        raise ValueError(f"grundy_t2 needs radix 2, got {x.t}")
    if not x:
        return 0
    zeros = 0
    for d in x.digits:
        if d:
            break
        zeros += 1
    if zeros % 2:
        return 0
    return 1 if sum(x.digits) % 2 else 2


def easy_classify(x: TaryNat) -> int | None:
    """Value k when R(x) ends in an odd run of k <= t-2, else None."""
    if x.t < 3:
        raise ValueError("easy_classify needs t >= 3")
    if not x:
        return 0
    d, r = trailing_run(x)
    if d <= x.t - 2 and r % 2:
        return d
    return None


def flip(v: int, t: int) -> int:
    if v == t - 1:
        return t
    if v == t:
        return t - 1
    raise ValueError(f"can only flip between {t - 1} and {t}, got {v}")


def strip_extra_t_minus_1(x: TaryNat) -> tuple[TaryNat, int]:
    top = x.t - 1
    if not x or x.digits[0] != top:
        raise ValueError(f"position must end in {top}")
    _, r = trailing_run(x)
    return TaryNat._trusted(x.digits[r - 1:], x.t), r - 1


# The hard loop runs on a run-length encoding, most-significant run first:
# a list of [digit, count].  Every rewrite only touches the last few runs,
# so one iteration is O(1) apart from re-canonicalizing an empty prefix.

def _runs(x: TaryNat) -> list[list[int]]:
    runs: list[list[int]] = []
    for d in reversed(x.digits):
        if runs and runs[-1][0] == d:
            runs[-1][1] += 1
        else:
            runs.append([d, 1])
    return runs


def _push(runs, d, c):
    if c <= 0:
        return
    if runs and runs[-1][0] == d:
        runs[-1][1] += c
    else:
        runs.append([d, c])


def _parse(runs, length, t) -> tuple:
    """(shape, k, i, r, j, tail_runs) for the current string."""
    top = t - 1
    d, c = runs[-1]
    if d == top:
        if c != 1:
            raise ValueError("hard case needs a single trailing (t-1)")
        if length <= 2:
            return SINGLE_TOP, (runs[-2][0] if length == 2 else top), None, 0, 0, len(runs)
        k, ck = runs[-2]
        if ck > 1:
            return SINGLE_TOP, k, k, ck - 1, 0, 2
        i, r = runs[-3]
        return SINGLE_TOP, k, i, r, 0, 3
    if c % 2:
        raise ValueError(f"hard case needs an even trailing run, got {c} x {d}")
    return EVEN_RUN, d, None, 0, c // 2, 1


def parse_hard(x: TaryNat) -> HardParse:
    if x.t < 3 or not x:
        raise ValueError("hard case needs t >= 3 and a nonzero position")
    runs = _runs(x)
    shape, k, i, r, j, tail = _parse(runs, len(x), x.t)
    w = tuple(d for d, c in runs[:len(runs) - tail] for _ in range(c))
    return HardParse(shape, w, k, i, r, j)


def hard_iterations(x: TaryNat) -> tuple[int, int]:
    """Value of a hard-case position and the number of rewrite steps taken."""
    t = x.t
    if t < 3 or not x:
        raise ValueError("hard case needs t >= 3 and a nonzero position")
    top = t - 1
    runs = _runs(x)
    length = len(x)
    bound = 2 * length
    flips = 0
    steps = 0
    while True:
        shape, k, i, r, j, tail = _parse(runs, length, t)
        if shape == SINGLE_TOP and i is None:
            value = top
            break
        steps += 1
        if steps > bound:
            raise AssertionError(f"hard loop exceeded {bound} steps")
        if shape == SINGLE_TOP:
            del runs[-tail:]
            if i > k or (i == k and r % 2 == 0):
                # w i^(r-1) (i-1) (t-1)
                if i == k:
                    _push(runs, k, r - 1)  # the k-run held r + 1 copies
                else:
                    _push(runs, i, r - 1)
                _push(runs, i - 1, 1)
                _push(runs, top, 1)
                length -= 1
            elif i == k:
                _push(runs, k, r + 1)
                length -= 1
            elif r % 2:
                _push(runs, i, r + 1)
                length -= 1
            else:
                _push(runs, i, r + 2)
            flips += 1
        elif k != 0:
            runs.pop()
            _push(runs, k, 2 * j - 2)
            _push(runs, k - 1, 1)
            _push(runs, top, 1)
            flips += 1
        else:
            # u i 0^(2j) -> u (i-1) (t-1): the move flips, the 2j-1 deletions
            # flip back an odd number of times, net parity unchanged.
            runs.pop()
            lead = runs[-1][0]
            runs[-1][1] -= 1
            if runs[-1][1] == 0:
                runs.pop()
            _push(runs, lead - 1, 1)
            _push(runs, top, 1)
            length -= 2 * j - 1
        if runs[0][0] == 0:
            length -= runs[0][1]
            del runs[0]
    return (top + 1 if flips % 2 else top), steps


def hard(x: TaryNat) -> int:
    return hard_iterations(x)[0]


def grundy(x: TaryNat) -> int:
    t = x.t
    if t == 2:
        return grundy_t2(x)
    if not x:
        return 0
    d, r = trailing_run(x)
    if d <= t - 2:
        return d if r % 2 else hard(x)
    stripped, count = strip_extra_t_minus_1(x)
    v = hard(stripped)
    return flip(v, t) if count % 2 else v


def grundy_of(n: int, t: int) -> int:
    return grundy(TaryNat.from_int(n, t))
