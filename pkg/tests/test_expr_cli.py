import io
import json
import random
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from helpers import FIELD_KINDS, random_scalar
from nonruled.cli import main, run_classify
from nonruled.expr import ExprEvalError, ExprSyntaxError, format_element, parse_expr
from nonruled.valued_field import ValuedField

TQ = ValuedField.parse("tadic:Q")
P5 = ValuedField.parse("padic:5")

TATE = {"id": "tate", "base_field": {"kind": "tadic", "semantics": "real-signs"},
        "a": "(3*t^2-1)/(3*t^4)", "b": "-2*(9*t^2+1)/(27*t^6)"}


def test_parse_examples():
    t = TQ.t
    assert parse_expr("(3*t^2-1)/(3*t^4)", TQ) == (3 * t ** 2 - 1) / (3 * t ** 4)
    assert parse_expr("4/27", P5) == Fraction(4, 27)
    with pytest.raises(ExprEvalError, match="division by zero"):
        parse_expr("t/(t-t)", TQ)


def test_precedence():
    assert parse_expr("-2^2", P5) == -4
    assert parse_expr("2^-1", P5) == Fraction(1, 2)
    assert parse_expr("8/4/2", P5) == 1
    assert parse_expr("1-2-3", P5) == -4
    assert parse_expr("2*-3", P5) == -6
    assert parse_expr("(1+2)^2*3", P5) == 27


@pytest.mark.parametrize("src", ["1+", "(1", "2^t", "1 2", "3 $ 4", ""])
def test_syntax_errors(src):
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr(src, TQ)
    assert info.value.pos >= 0


def test_t_not_allowed_over_padic():
    with pytest.raises(ExprEvalError):
        parse_expr("t+1", P5)
    with pytest.raises(ExprEvalError):
        parse_expr("X", TQ)
    assert parse_expr("X*t", TQ, with_x=True).num.degree == 1


@pytest.mark.parametrize("kind", FIELD_KINDS)
def test_serialization_round_trip(kind):
    vf = ValuedField.parse(kind)
    rng = random.Random(kind)
    for _ in range(50):
        x = random_scalar(vf, rng)
        y = random_scalar(vf, rng)
        for z in (x, x + y, x * y - 1, -x):
            assert parse_expr(format_element(z), vf) == z


@settings(max_examples=50)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=4), st.lists(st.integers(-20, 20), min_size=1, max_size=3))
def test_round_trip_property(num, den):
    t = TQ.t
    n = sum((c * t ** i for i, c in enumerate(num)), TQ.domain.zero)
    d = sum((c * t ** i for i, c in enumerate(den)), TQ.domain.zero)
    if not d:
        return
    x = n / d
    assert parse_expr(str(x), TQ) == x


# -- JSON-lines classification ------------------------------------------------------


def test_classify_examples():
    lines = [json.dumps(TATE),
             json.dumps({"id": "p5", "base_field": "padic:5", "a": "1", "b": "1"}),
             json.dumps({"id": "sing", "base_field": "padic:5", "a": "-3", "b": "2"})]
    out = list(run_classify(lines))
    assert [o["id"] for o in out] == ["tate", "p5", "sing"]
    tate, p5, sing = out
    assert tate["reduction"] == "not_potential_good" and tate["omega_star"] == 1
    assert tate["residue"]["kind"] == "conic" and tate["residue"]["class"] == [-1, -1]
    assert tate["v_delta"] == ["-10/1"] and tate["v_a3"] == ["-12/1"]
    assert set(tate["witness"]) >= {"generator", "c", "d", "u1", "u2"}
    assert p5["reduction"] == "good" and p5["omega_star"] == 1
    assert {k: p5["residue"][k] for k in ("kind", "a_bar", "b_bar", "delta_bar")} == \
        {"kind": "elliptic", "a_bar": "1", "b_bar": "1", "delta_bar": "1"}
    assert "singular curve" in sing["error"] and sing["line"] == 3


def test_classify_reports_malformed_lines():
    out = list(run_classify(["not json", "[1, 2]", json.dumps({"id": "x", "base_field": "padic:4", "a": "1", "b": "1"}),
                             json.dumps({"id": "y", "base_field": "padic:5", "a": "t", "b": "1"})]))
    assert [o["line"] for o in out] == [1, 2, 3, 4]
    assert all("error" in o for o in out)
    assert out[2]["id"] == "x"


def _random_records(n):
    rng = random.Random(1)
    recs = []
    for i in range(n):
        kind = rng.choice(["padic:5", "padic:7", "tadic:Q", "tadic:F7"])
        a = f"{rng.randint(-30, 30)}" if kind.startswith("padic") else f"{rng.randint(1, 9)}*t^{rng.randint(-4, 4)}"
        b = f"{rng.randint(-30, 30)}/{rng.randint(1, 9)}"
        recs.append(json.dumps({"id": f"r{i}", "base_field": kind, "a": a, "b": b}))
    return recs


def test_parallel_output_matches_serial_order():
    recs = _random_records(40)
    serial = list(run_classify(recs, 1))
    parallel = list(run_classify(recs, 3))
    assert serial == parallel
    assert [o["id"] for o in parallel] == [f"r{i}" for i in range(40)]


def test_blank_lines_are_skipped():
    rec = json.dumps({"id": "p5", "base_field": "padic:5", "a": "1", "b": "1"})
    assert len(list(run_classify([rec, "", "  ", rec]))) == 2


# -- command line ------------------------------------------------------------------------


def run_main(argv, stdin=""):
    out = io.StringIO()
    old_out, old_in = sys.stdout, sys.stdin
    sys.stdout, sys.stdin = out, io.StringIO(stdin)
    try:
        code = main(argv)
    finally:
        sys.stdout, sys.stdin = old_out, old_in
    return code, out.getvalue()


def test_main_defaults_to_classify(tmp_path):
    code, out = run_main([], json.dumps(TATE) + "\n")
    assert code == 0 and json.loads(out)["omega_star"] == 1
    path = tmp_path / "in.jsonl"
    path.write_text("\n".join(_random_records(5)) + "\n")
    code, out = run_main(["classify", str(path), "--jobs", "2", "--pretty"])
    assert code in (0, 1)
    code, out = run_main([str(path)])
    assert len(out.strip().splitlines()) == 5


def test_main_record_error_exit_code():
    code, out = run_main(["classify"], "garbage\n")
    assert code == 1 and "error" in json.loads(out)


def test_main_usage_errors():
    assert run_main(["gauss", "--field", "padic:5"])[0] == 2
    assert run_main(["conic"])[0] == 2
    assert run_main(["classify", "--jobs", "x"])[0] == 2
    assert run_main(["classify", "--jobs", "0"])[0] == 2


def test_main_gauss():
    code, out = run_main(["gauss", "--field", "tadic:Q:real", "--generator", "X/t",
                          "--radicand=-(X^2+t^2)*(X^2+1)"])
    obj = json.loads(out)
    assert code == 0
    assert obj["kind"] == "conic" and obj["ruled"] is False and obj["conic_class"] == [-1, -1]
    assert obj["value"] == ["2/1"]
    code, out = run_main(["gauss", "--field", "padic:5", "--generator", "X^2", "--radicand", "X"])
    assert code == 1 and "error" in json.loads(out)


def test_main_conic():
    code, out = run_main(["conic", "--field", "Q", "--", "-1", "-1"])
    assert code == 0 and json.loads(out)["has_point"] is False
    code, out = run_main(["conic", "--field", "Q", "2", "7"])
    assert json.loads(out)["has_point"] is True
    code, out = run_main(["conic", "--field", "F5", "4", "3"])
    assert json.loads(out)["class"] == [1, 3]
    code, out = run_main(["conic", "--field", "R", "--", "-1", "3"])
    assert json.loads(out)["has_point"] is True
    code, out = run_main(["conic", "--field", "Q", "0", "1"])
    assert code == 1


def test_main_selftest():
    code, out = run_main(["selftest"])
    assert code == 0
    assert out.count("PASS") == 5


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nonruled", "selftest"], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
