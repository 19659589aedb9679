import csv
import io
import json
import subprocess
import sys

import pytest

from markt import bench
from markt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv,expected", [
    (["grundy", "-t", "3", "4", "9"], "3\n2\n"),
    (["grundy", "-t", "2", "2"], "0\n"),
    (["grundy", "-t", "3", "0"], "0\n"),
    (["grundy", "-t", "3", "--base-t", "212", "11"], "3\n3\n"),
    (["move", "-t", "3", "4", "4"], "P (nim-value 0); no winning move\n"),
    (["move", "-t", "3", "4", "9"], "N (nim-value 1); component 0: subtract 2 -> 2\n"),
    (["move", "-t", "3"], "P (nim-value 0)\n"),
    (["move", "-t", "3", "--base-t", "11", "100"], "N (nim-value 1); component 0: subtract 2 -> 2\n"),
    (["outcome", "-t", "3", "4", "9"], "N (nim-value 1)\n"),
    (["outcome", "-t", "3"], "P (nim-value 0)\n"),
    (["misere", "-t", "3", "9"], "P\n"),
    (["misere", "-t", "3", "3"], "N; subtract 2 -> 1\n"),
    (["misere", "-t", "3", "0"], "N (game over: mover wins)\n"),
])
def test_text_output(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected


def test_grundy_json_round_trip(capsys):
    code, out, _ = run(capsys, "grundy", "-t", "3", "--json", "4", "9", "123456789012345678901234567890")
    assert code == 0
    data = json.loads(out)
    assert data["t"] == 3
    assert [r["n"] for r in data["results"]] == [4, 9, 123456789012345678901234567890]
    assert [r["g"] for r in data["results"]][:2] == [3, 2]


def test_base_t_json_keeps_digit_strings(capsys):
    digits = "1" + "0" * 3000 + "2"
    code, out, _ = run(capsys, "grundy", "-t", "3", "--base-t", "--json", digits)
    data = json.loads(out)
    assert data["results"][0]["n"] == digits
    assert data["results"][0]["g"] in (2, 3)


def test_move_json(capsys):
    code, out, _ = run(capsys, "move", "-t", "3", "--json", "4", "9")
    assert json.loads(out) == {"t": 3, "nim_value": 1, "outcome": "N",
                               "move": {"component": 0, "action": "subtract", "amount": 2, "result": 2}}
    code, out, _ = run(capsys, "move", "-t", "3", "--json", "4", "4")
    assert json.loads(out)["move"] is None


def test_misere_json(capsys):
    code, out, _ = run(capsys, "misere", "-t", "3", "--json", "3")
    assert json.loads(out) == {"t": 3, "n": 3, "outcome": "N",
                               "move": {"component": 0, "action": "subtract", "amount": 2, "result": 1}}


def test_large_radix_dotted(capsys):
    code, out, _ = run(capsys, "move", "-t", "40", "--base-t", "1.0.39")
    assert code == 0 and out.startswith("N")


@pytest.mark.parametrize("argv", [
    ["misere", "-t", "3", "1", "2"],
    ["grundy", "-t", "3", "x"],
    ["grundy", "-t", "3", "--base-t", "13"],
    ["grundy", "-t", "1", "3"],
    ["grundy", "4"],
    ["frobnicate", "-t", "3"],
    ["verify", "-t", "3", "--limit", "500", "--mode", "sums"],
    ["bench", "-t", "3", "--lengths", "0"],
    ["bench", "-t", "3", "--lengths", "a,b"],
    ["play", "-t", "3", "--mode", "misere", "1", "2"],
])
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == 1


def test_verify_modes(capsys):
    assert run(capsys, "verify", "-t", "3", "--limit", "3000")[0] == 0
    assert run(capsys, "verify", "-t", "4", "--limit", "3000", "--mode", "misere")[0] == 0
    code, out, _ = run(capsys, "verify", "-t", "3", "--limit", "20", "--mode", "sums", "--json")
    assert code == 0 and json.loads(out)["ok"] is True


def test_verify_limit_respects_env(capsys, monkeypatch):
    monkeypatch.setenv("MARKT_ORACLE_LIMIT", "100")
    assert run(capsys, "verify", "-t", "3", "--limit", "101")[0] == 1
    assert run(capsys, "verify", "-t", "3", "--limit", "100")[0] == 0


def test_verify_mismatch_exit_2(capsys, monkeypatch):
    import markt.cli as cli

    real = cli.grundy
    monkeypatch.setattr(cli, "grundy", lambda x: real(x) ^ (1 if x.value == 17 else 0))
    code, out, _ = run(capsys, "verify", "-t", "3", "--limit", "100", "--json")
    assert code == 2
    assert json.loads(out)["counterexample"]["n"] == 17


def test_bench_csv(capsys):
    code, out, _ = run(capsys, "bench", "-t", "3", "--lengths", "16,32", "--samples", "3", "--batch", "2")
    assert code == 0
    assert "\r" not in out
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["length", "median_ns", "mean_ns"]
    assert [r[0] for r in rows[1:]] == ["16", "32"]
    assert all(float(v) > 0 for r in rows[1:] for v in r[1:])


def test_bench_inputs_deterministic():
    a = bench.sample_inputs(5, 100, 3, 4)
    assert a == bench.sample_inputs(5, 100, 3, 4)
    assert a != bench.sample_inputs(6, 100, 3, 4)
    assert all(len(x) == 100 for x in a)
    assert all(x.digits[0] == 2 for x in bench.sample_inputs(0, 50, 3, 10, hard=True))


def test_play_via_cli(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("div\n"))
    code, out, _ = run(capsys, "play", "-t", "3", "4")
    assert code == 0
    assert "engine: component 0: subtract 1 -> 0" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "markt", "grundy", "-t", "3", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "3\n"
    proc = subprocess.run([sys.executable, "-m", "markt", "grundy"], capture_output=True, text=True)
    assert proc.returncode == 1
