import json
import subprocess
import sys

import pytest

from pastrev.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.rstrip("\n"), err


@pytest.mark.parametrize("argv, want", [
    (["poly", "reverse", "3x^2+2x+1"], "x^2+2x+3"),
    (["poly", "paste", "x+2", "2x+1"], "x^3+2x^2+2x+1"),
    (["poly", "fold", "x", "1"], "x^2+1"),
    (["poly", "flip", "x^2+x"], "x+1"),
    (["poly", "classify", "2x^2-5x+2"], "palindromic"),
    (["poly", "cipher", "x^5+1"], "6"),
    (["poly", "expand", "1:2", "2:1"], "2x^2-5x+2"),
    (["poly", "expand", "--unit", "-3", "1:0"], "-3x"),
    (["poly", "divides", "x^3+2x^2+2x+1", "-1"], "true"),
    (["poly", "reciprocal", "(1+i)x+2"], "2x+(1-i)"),
    (["poly", "mul", "2x^2-5x+2", "x+1"], "2x^3-3x^2-3x+2"),
    (["poly", "sub", "x", "x"], "0"),
    (["nat", "paste", "987654321", "0"], "9876543210"),
    (["nat", "fold", "9", "10"], "910"),
    (["nat", "reverse", "120"], "21"),
    (["nat", "eleven", "121"], "true"),
    (["nat", "palindrome", "123"], "false"),
    (["nat", "reverse", "110", "--base", "2"], "11"),
    (["op", "mul", "D+x", "D+1"], "D^2+(x+1)*D+x"),
    (["op", "mul", "D", "x"], "x*D+1"),
    (["op", "reverse", "D^2+1-x^2"], "(-x^2+1)*D^2+1"),
    (["op", "paste", "D+2", "2*D+1"], "D^3+2*D^2+2*D+1"),
    (["op", "classify", "x*D^3+2*D^2+2*D+x"], "palindromic"),
    (["op", "apply", "D^2+1-x^2", "exp(-x^2/2)"], "0"),
    (["op", "apply", "D-2", "x*exp(2x)"], "exp(2x)"),
    (["op", "divide", "D-1", "1"], "quotient 1\nremainder -2"),
    (["op", "divide", "x*D^3+2*D^2+2*D+x", "1"], "quotient x*D^2+(-x+2)*D+x\nremainder 0"),
    (["op", "charpoly", "D^2-5*D+6"], "x^2-5x+6"),
    (["op", "logderiv", "2*D+3"], "u1 -3/2\nu2 -2/3\nproduct 1"),
    (["op", "kernel", "1:2"], "exp(2x) multiplicity 1, reversed exp(1/2*x)"),
    (["cheb", "T", "2"], "2w^2-1"),
    (["cheb", "reduce", "z^2+3z+1"], "n=1 coeffs=(3/2, 1)"),
    (["cheb", "expand", "1", "1"], "z^2+2z+1"),
])
def test_text_output(capsys, argv, want):
    code, out, _ = run(capsys, *argv)
    assert (code, out) == (0, want)


def test_cheb_reduce_json(capsys):
    code, out, _ = run(capsys, "cheb", "reduce", "z^2+3z+1", "--format", "json")
    assert code == 0 and json.loads(out) == {"n": 1, "coeffs": ["3/2", "1"]}


def test_format_flag_before_noun(capsys):
    code, out, _ = run(capsys, "--format", "json", "poly", "reverse", "2x+3")
    assert json.loads(out) == {"result": "3x+2", "coeffs": ["2", "3"]}


def test_json_is_sorted(capsys):
    _, out, _ = run(capsys, "op", "logderiv", "D+1", "--format", "json")
    assert list(json.loads(out)) == ["product", "u1", "u2"]


def test_leading_minus_after_separator(capsys):
    code, out, _ = run(capsys, "poly", "reverse", "--", "-x+2")
    assert (code, out) == (0, "2x-1")


@pytest.mark.parametrize("argv, code", [
    (["poly", "reverse", "x^2+"], 2),
    (["poly", "reverse", "x^2+x"], 3),
    (["nat", "paste", "12", "3z"], 2),
    (["op", "add", "D+x", "(1+i)*D"], 3),
    (["op", "parse", "D"], 2),
    (["cheb", "reduce", "z^2+2"], 3),
    (["verify", "--only", "NOPE"], 3),
])
def test_exit_codes(capsys, argv, code):
    try:
        got = main(argv)
    except SystemExit as exc:  # argparse usage errors
        got = exc.code
    assert got == code


def test_parse_error_message_has_offset(capsys):
    code, _, err = run(capsys, "poly", "reverse", "x^2+")
    assert code == 2 and "byte 4" in err


def test_games_tables(capsys):
    code, out, _ = run(capsys, "nat", "games", "nines", "--rows", "9", "--format", "text")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 9
    assert lines[-1] == "987654321 x 9 - 1 = 8888888888"
    _, out, _ = run(capsys, "nat", "games", "repunits", "--format", "json")
    rows = json.loads(out)["rows"]
    assert rows[-1]["rhs"] == "12345678987654321" and all(r["equal"] for r in rows)


def test_verify_defaults_to_json(capsys):
    code, out, _ = run(capsys, "verify", "--seed", "7", "--only", "PDO4.2")
    payload = json.loads(out)
    assert code == 0 and payload["passed"] and [r["id"] for r in payload["reports"]] == ["PDO4.2"]


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "--only", "P1.4,N1", "--cases", "20", "--format", "text")
    assert code == 0 and out.splitlines()[-1] == "suite passed (seed 42)"


def test_verify_failure_exit_code(capsys, monkeypatch):
    from pastrev import cli
    from pastrev.propcheck import PropertyReport
    broken = PropertyReport("X", "", "theorem", "fixed", 1, 1,
                            [{"inputs": "1", "expected": "2", "got": "3"}], [], [])
    monkeypatch.setattr(cli, "run_all", lambda *a, **k: [broken])
    code, out, _ = run(capsys, "verify", "--seed", "1")
    assert code == 1 and json.loads(out)["passed"] is False


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pastrev", "poly", "reverse", "3x^2+2x+1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "x^2+2x+3\n"
