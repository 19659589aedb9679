"""``markt`` command line.

Exit codes: 0 success, 1 usage or parse error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bench
from .grundy import grundy
from .misere import misere_outcome, misere_winning_move
from .oracle import N, P, OracleSession, default_limit
from .play import MISERE, NORMAL, play
from .sums import Move, sum_grundy, winning_move
from .tary import BASE_T, DECIMAL, TaryNat, check_radix, format_position, parse_position

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(args, text: str, payload: dict):
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _positions(args) -> list[TaryNat]:
    fmt = BASE_T if args.base_t else DECIMAL
    try:
        return [parse_position(p, args.t, fmt) for p in args.positions]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _fmt(args) -> str:
    return BASE_T if args.base_t else DECIMAL


def _json_pos(args, x: TaryNat):
    # Decimal positions stay JSON numbers; base-t digit strings stay strings.
    return format_position(x, BASE_T) if args.base_t else x.value


def _json_move(args, move: Move | None):
    if move is None:
        return None
    return {"component": move.component, "action": move.action,
            "amount": move.amount, "result": _json_pos(args, move.result)}


def cmd_grundy(args) -> int:
    xs = _positions(args)
    values = [grundy(x) for x in xs]
    _emit(args, "\n".join(str(v) for v in values),
          {"t": args.t, "results": [{"n": _json_pos(args, x), "g": v} for x, v in zip(xs, values)]})
    return EXIT_OK


def cmd_outcome_move(args) -> int:
    xs = _positions(args)
    nim = sum_grundy(xs)
    outcome = P if nim == 0 else N
    text = f"{outcome} (nim-value {nim})"
    payload = {"t": args.t, "nim_value": nim, "outcome": outcome}
    if args.command == "move":
        move = winning_move(xs)
        payload["move"] = _json_move(args, move)
        if move is not None:
            text += f"; component {move.component}: {move.describe(_fmt(args))}"
        elif any(xs):
            text += "; no winning move"
    _emit(args, text, payload)
    return EXIT_OK


def cmd_misere(args) -> int:
    xs = _positions(args)
    if len(xs) != 1:
        raise UsageError("misere takes exactly one position: "
                         "misere play of sums of games is not supported")
    x = xs[0]
    outcome = misere_outcome(x)
    move = misere_winning_move(x)
    if not x:
        text = f"{N} (game over: mover wins)"
    elif move is not None:
        text = f"{outcome}; {move.describe(_fmt(args))}"
    else:
        text = outcome
    _emit(args, text, {"t": args.t, "n": _json_pos(args, x), "outcome": outcome,
                       "move": _json_move(args, move)})
    return EXIT_OK


def _verify_normal(t, limit, session):
    for n in range(limit + 1):
        expected = session.grundy(n)
        try:
            got = grundy(TaryNat.from_int(n, t))
        except AssertionError as exc:
            return n, f"internal check failed: {exc}"
        if got != expected:
            return n, f"fast g = {got}, oracle g = {expected}"
    return None


def _verify_misere(t, limit, session):
    for n in range(limit + 1):
        expected = session.misere_outcome(n)
        got = misere_outcome(TaryNat.from_int(n, t))
        if got != expected:
            return n, f"closed form {got}, oracle {expected}"
    return None


def _verify_sums(t, limit, session):
    values = [grundy(TaryNat.from_int(n, t)) for n in range(limit + 1)]
    for a in range(limit + 1):
        for b in range(a, limit + 1):
            expected = session.sum_grundy([a, b])
            if values[a] ^ values[b] != expected:
                return (a, b), f"XOR {values[a] ^ values[b]}, game tree {expected}"
    return None


def cmd_verify(args) -> int:
    mode = args.mode or NORMAL
    limit = args.limit if args.limit is not None else (60 if mode == "sums" else 50_000)
    if limit < 0:
        raise UsageError("--limit must be nonnegative")
    session = OracleSession(args.t, default_limit())
    if limit > session.limit:
        raise UsageError(f"--limit {limit} exceeds the oracle limit {session.limit}")
    if mode == "sums" and limit > session.sum_cap:
        raise UsageError(f"--limit {limit} exceeds the sum oracle cap {session.sum_cap}")
    check = {NORMAL: _verify_normal, MISERE: _verify_misere, "sums": _verify_sums}[mode]
    failure = check(args.t, limit, session)
    payload = {"t": args.t, "mode": mode, "limit": limit, "ok": failure is None}
    if failure is None:
        _emit(args, f"ok: {mode} t={args.t} n=0..{limit} agrees with the oracle", payload)
        return EXIT_OK
    where, detail = failure
    payload["counterexample"] = {"n": list(where) if isinstance(where, tuple) else where,
                                 "detail": detail}
    _emit(args, f"mismatch: {mode} t={args.t} at {where}: {detail}", payload)
    return EXIT_MISMATCH


def _int_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None
    if not values or any(v < 1 for v in values):
        raise UsageError("--lengths needs positive integers")
    return values


def cmd_bench(args) -> int:
    lengths = _int_list(args.lengths)
    if args.samples < 1 or args.batch < 1:
        raise UsageError("--samples and --batch must be positive")
    rows = bench.run(lengths, args.t, args.samples, args.batch, args.seed, args.hard)
    sys.stdout.write(bench.to_csv(rows))
    return EXIT_OK


def cmd_play(args) -> int:
    xs = _positions(args)
    mode = args.mode or NORMAL
    if mode not in (NORMAL, MISERE):
        raise UsageError(f"play supports --mode normal or misere, not {mode}")
    if mode == MISERE and len(xs) != 1:
        raise UsageError("misere play needs exactly one position")
    play(xs, mode, args.engine_first)
    return EXIT_OK


COMMANDS = {
    "grundy": (cmd_grundy, "Sprague-Grundy value of each position"),
    "outcome": (cmd_outcome_move, "nim-value and P/N outcome of the sum of positions"),
    "move": (cmd_outcome_move, "outcome of the sum plus a winning move"),
    "misere": (cmd_misere, "misere outcome of one position and a winning move"),
    "verify": (cmd_verify, "cross-check the fast path against brute force"),
    "bench": (cmd_bench, "time grundy on random long inputs, CSV to stdout"),
    "play": (cmd_play, "play against the engine"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-t", type=int, required=True, help="radix t >= 2")
    common.add_argument("--base-t", action="store_true",
                        help="positions are base-t digit strings (dot-separated digits if t > 36)")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--limit", type=int, help="verify: largest n checked")
    common.add_argument("--mode", choices=(NORMAL, MISERE, "sums"))
    common.add_argument("--lengths", default="1024,2048,4096,8192", help="bench: digit counts")
    common.add_argument("--samples", type=int, default=9, help="bench: timings per length")
    common.add_argument("--batch", type=int, default=16, help="bench: inputs averaged per timing")
    common.add_argument("--seed", type=int, default=0, help="bench: PRNG seed")
    common.add_argument("--hard", action="store_true", help="bench: force inputs ending in t-1")
    common.add_argument("--engine-first", action="store_true", help="play: engine moves first")
    common.add_argument("positions", nargs="*")

    parser = _Parser(prog="markt", description="Mark-t game solver")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text, description=help_text)
    return parser


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    args = build_parser().parse_args(argv)
    try:
        check_radix(args.t)
        return COMMANDS[args.command][0](args)
    except (UsageError, ValueError) as exc:
        print(f"markt {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
