"""Brute-force ground truth for small Mark-t positions.

Everything here works on plain ints and walks the game tree directly, so it
shares no code with the digit-based fast path it is used to check.
"""

from __future__ import annotations

import os

from .tary import check_radix

DEFAULT_LIMIT = 10**7
SUM_COMPONENT_CAP = 200
SUM_LENGTH_CAP = 3

P = "P"
N = "N"


def default_limit() -> int:
    env = os.environ.get("MARKT_ORACLE_LIMIT")
    return int(env) if env else DEFAULT_LIMIT


def mex(values) -> int:
    seen = set(values)
    m = 0
    while m in seen:
        m += 1
    return m


def int_options(n: int, t: int) -> set[int]:
    if n == 0:
        return set()
    opts = {n // t}
    opts.update(n - i for i in range(1, min(n, t - 1) + 1))
    return opts


class OracleSession:
    """Memoized game-tree evaluation for one radix.

    Tables are filled in increasing n, so there is no recursion: every option
    of n is smaller than n.  A session is not thread-safe; give each worker
    its own.
    """

    def __init__(self, t: int, limit: int | None = None,
                 sum_cap: int = SUM_COMPONENT_CAP, sum_len: int = SUM_LENGTH_CAP):
        self.t = check_radix(t)
        self.limit = default_limit() if limit is None else limit
        self.sum_cap = sum_cap
        self.sum_len = sum_len
        self._grundy = [0]
        self._misere = [N]
        self._sums: dict[tuple[int, ...], int] = {(): 0}

    def _check(self, n: int):
        if n < 0:
            raise ValueError("position must be nonnegative")
        if n > self.limit:
            raise ValueError(f"position {n} exceeds oracle limit {self.limit}")

    def grundy(self, n: int) -> int:
        self._check(n)
        table = self._grundy
        t = self.t
        for m in range(len(table), n + 1):
            table.append(mex(table[o] for o in int_options(m, t)))
        return table[n]

    def misere_outcome(self, n: int) -> str:
        self._check(n)
        table = self._misere
        t = self.t
        for m in range(len(table), n + 1):
            # m > 0: the mover wins iff some option leaves the opponent in P.
            table.append(N if any(table[o] == P for o in int_options(m, t)) else P)
        return table[n]

    def sum_grundy(self, positions) -> int:
        """Nim-value of a sum, from the game tree of the sum itself."""
        key = tuple(sorted(positions))
        if len(key) > self.sum_len:
            raise ValueError(f"at most {self.sum_len} components supported")
        for p in key:
            if p < 0 or p > self.sum_cap:
                raise ValueError(f"component {p} outside [0, {self.sum_cap}]")
        memo = self._sums
        t = self.t
        stack = [key]
        while stack:
            state = stack[-1]
            if state in memo:
                stack.pop()
                continue
            children = []
            for idx, p in enumerate(state):
                for o in int_options(p, t):
                    children.append(tuple(sorted(state[:idx] + (o,) + state[idx + 1:])))
            pending = [c for c in children if c not in memo]
            if pending:
                stack.extend(pending)
                continue
            memo[state] = mex(memo[c] for c in children)
            stack.pop()
        return memo[key]


def oracle_grundy(session: OracleSession, n: int) -> int:
    return session.grundy(n)


def oracle_misere_outcome(session: OracleSession, n: int) -> str:
    return session.misere_outcome(n)


def oracle_sum_grundy(session: OracleSession, positions) -> int:
    return session.sum_grundy(positions)
