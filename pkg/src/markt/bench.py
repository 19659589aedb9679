"""Scaling measurements for the fast Grundy computation."""

from __future__ import annotations

import random
import statistics
import time
from dataclasses import dataclass

from .grundy import grundy
from .tary import TaryNat

CSV_HEADER = "length,median_ns,mean_ns"


@dataclass(frozen=True)
class BenchRow:
    length: int
    median_ns: float
    mean_ns: float

    def csv(self) -> str:
        return f"{self.length},{self.median_ns:.0f},{self.mean_ns:.0f}"


def random_position(rng: random.Random, length: int, t: int, hard: bool = False) -> TaryNat:
    """Uniform canonical ``length``-digit base-t position.

    With ``hard`` the last digit is forced to t-1, which always takes the
    slow path for t >= 3.
    """
    if length < 1:
        raise ValueError("length must be positive")
    msd = [rng.randrange(1, t)]
    msd.extend(rng.randrange(t) for _ in range(length - 1))
    if hard:
        msd[-1] = t - 1
    return TaryNat._trusted(tuple(reversed(msd)), t)


def sample_inputs(seed: int, length: int, t: int, count: int, hard: bool = False) -> list[TaryNat]:
    rng = random.Random(f"{seed}:{t}:{length}")
    return [random_position(rng, length, t, hard) for _ in range(count)]


def time_length(length: int, t: int = 3, samples: int = 9, batch: int = 16,
                seed: int = 0, hard: bool = False) -> BenchRow:
    """Per-call time of ``grundy`` on random ``length``-digit inputs.

    Each of the ``samples`` timings averages one batch of fresh inputs;
    roughly half of uniform inputs finish after the trailing-run check, so
    single-call timings are bimodal and their median is unstable.
    """
    if samples < 1 or batch < 1:
        raise ValueError("samples and batch must be positive")
    inputs = sample_inputs(seed, length, t, samples * batch, hard)
    per_call = []
    for s in range(samples):
        chunk = inputs[s * batch:(s + 1) * batch]
        start = time.perf_counter_ns()
        for x in chunk:
            grundy(x)
        per_call.append((time.perf_counter_ns() - start) / batch)
    return BenchRow(length, statistics.median(per_call), statistics.fmean(per_call))


def run(lengths, t: int = 3, samples: int = 9, batch: int = 16,
        seed: int = 0, hard: bool = False) -> list[BenchRow]:
    return [time_length(n, t, samples, batch, seed, hard) for n in lengths]


def to_csv(rows) -> str:
    return "\n".join([CSV_HEADER, *(r.csv() for r in rows)]) + "\n"
