"""Base-t digit strings for Mark-t positions.

A position is stored least-significant digit first, so the trailing digits
of its base-t representation sit at the front of ``digits``.  Zero is the
empty sequence.  Only the arithmetic the game needs is provided: small
subtraction, floor division by t and option enumeration.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import NamedTuple

MAX_RADIX = 2**31 - 1
SYMBOLS = string.digits + string.ascii_lowercase

DECIMAL = "decimal"
BASE_T = "base_t"
FORMATS = (DECIMAL, BASE_T)


def check_radix(t: int) -> int:
    if isinstance(t, bool) or not isinstance(t, int):
        raise TypeError(f"radix must be an int, got {type(t).__name__}")
    if not 2 <= t <= MAX_RADIX:
        raise ValueError(f"radix must be in [2, {MAX_RADIX}], got {t}")
    return t


@dataclass(frozen=True)
class TaryNat:
    """A nonnegative integer in canonical base-t form.

    ``digits`` is least-significant first with no most-significant zero.
    """

    digits: tuple[int, ...]
    t: int

    def __post_init__(self):
        check_radix(self.t)
        object.__setattr__(self, "digits", tuple(self.digits))
        if self.digits and self.digits[-1] == 0:
            raise ValueError("most-significant digit must be nonzero")
        for d in self.digits:
            if not 0 <= d < self.t:
                raise ValueError(f"digit {d} out of range for base {self.t}")

    @classmethod
    def _trusted(cls, digits: tuple[int, ...], t: int) -> TaryNat:
        # Skips validation; callers guarantee canonical digits.
        obj = object.__new__(cls)
        object.__setattr__(obj, "digits", digits)
        object.__setattr__(obj, "t", t)
        return obj

    @classmethod
    def from_int(cls, n: int, t: int) -> TaryNat:
        check_radix(t)
        if n < 0:
            raise ValueError("position must be nonnegative")
        return cls._trusted(_int_to_digits(n, t), t)

    @classmethod
    def from_msd(cls, digits, t: int) -> TaryNat:
        """Build from most-significant-first digits, dropping leading zeros."""
        ds = list(digits)
        lead = 0
        while lead < len(ds) and ds[lead] == 0:
            lead += 1
        return cls(tuple(reversed(ds[lead:])), t)

    @property
    def value(self) -> int:
        t = self.t
        if t <= 36 and self.digits:
            return int("".join(SYMBOLS[d] for d in reversed(self.digits)), t)
        n = 0
        for d in reversed(self.digits):
            n = n * t + d
        return n

    def msd(self) -> tuple[int, ...]:
        """Digits most-significant first, i.e. R(n) read left to right."""
        return self.digits[::-1]

    def __len__(self) -> int:
        return len(self.digits)

    def __bool__(self) -> bool:
        return bool(self.digits)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return format_position(self, BASE_T)


def _int_to_digits(n: int, t: int) -> tuple[int, ...]:
    if n == 0:
        return ()
    # Peel off chunks of t**m that fit in a machine word, then split each chunk.
    m = 1
    while t ** (m + 1) < 2**62:
        m += 1
    big = t**m
    out: list[int] = []
    while n:
        n, chunk = divmod(n, big)
        for _ in range(m):
            chunk, d = divmod(chunk, t)
            out.append(d)
            if not n and not chunk:
                break
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class TrailingRun(NamedTuple):
    digit: int
    count: int


def parse_position(text: str, t: int, fmt: str = DECIMAL) -> TaryNat:
    """Parse ``text`` as a Mark-t position.

    Decimal text is ``[0-9]+``.  Base-t text uses the symbols ``0-9a-z`` when
    t <= 36, or dot-separated decimal digit values (e.g. ``"1.0.40"``) for
    larger t.
    """
    check_radix(t)
    text = text.strip()
    if fmt == DECIMAL:
        if not text or not text.isascii() or not text.isdigit():
            raise ValueError(f"malformed decimal position: {text!r}")
        return TaryNat.from_int(int(text), t)
    if fmt != BASE_T:
        raise ValueError(f"unknown format {fmt!r}")
    if not text:
        raise ValueError("empty position")
    if t <= 36:
        msd = []
        for ch in text.lower():
            d = SYMBOLS.find(ch)
            if d < 0:
                raise ValueError(f"malformed base-{t} position: {text!r}")
            if d >= t:
                raise ValueError(f"digit {ch!r} is not valid in base {t}")
            msd.append(d)
    else:
        msd = []
        for part in text.split("."):
            if not part.isascii() or not part.isdigit():
                raise ValueError(f"malformed base-{t} position: {text!r}")
            d = int(part)
            if d >= t:
                raise ValueError(f"digit {d} is not valid in base {t}")
            msd.append(d)
    return TaryNat.from_msd(msd, t)


def format_position(x: TaryNat, fmt: str = DECIMAL) -> str:
    if fmt == DECIMAL:
        return str(x.value)
    if fmt != BASE_T:
        raise ValueError(f"unknown format {fmt!r}")
    if not x.digits:
        return "0"
    if x.t <= 36:
        return "".join(SYMBOLS[d] for d in reversed(x.digits))
    return ".".join(str(d) for d in reversed(x.digits))


def trailing_run(x: TaryNat) -> TrailingRun:
    """Last digit of R(x) and the length of its maximal run."""
    ds = x.digits
    if not ds:
        raise ValueError("zero has no trailing run")
    d = ds[0]
    count = 1
    while count < len(ds) and ds[count] == d:
        count += 1
    return TrailingRun(d, count)


def sub_small(x: TaryNat, i: int) -> TaryNat:
    t = x.t
    if not 1 <= i <= t - 1:
        raise ValueError(f"can only subtract 1..{t - 1}, got {i}")
    ds = list(x.digits)
    if len(ds) <= 1 and (not ds or ds[0] < i):
        raise ValueError(f"cannot subtract {i} from {x.value}")
    # i < t, so at most one borrow enters the chain.
    pos = 0
    borrow = i
    while borrow:
        d = ds[pos] - borrow
        if d < 0:
            ds[pos] = d + t
            borrow = 1
        else:
            ds[pos] = d
            borrow = 0
        pos += 1
    while ds and ds[-1] == 0:
        ds.pop()
    return TaryNat._trusted(tuple(ds), t)


def div_t(x: TaryNat) -> TaryNat:
    return TaryNat._trusted(x.digits[1:], x.t)


def options(x: TaryNat) -> set[TaryNat]:
    """Distinct positions reachable from ``x`` in one move."""
    if not x:
        return set()
    opts = {div_t(x)}
    top = min(x.value, x.t - 1) if len(x) <= 1 else x.t - 1
    for i in range(1, top + 1):
        opts.add(sub_small(x, i))
    return opts


def same_radix(*xs: TaryNat) -> int:
    radices = {x.t for x in xs}
    if len(radices) > 1:
        raise ValueError(f"mixed radices {sorted(radices)}")
    return radices.pop()
