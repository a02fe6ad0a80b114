import json

import pytest

from jimm.cli import main
from jimm.verify import MATRIX_TABLE

PI_50 = "1.72377079254802760796993264949310251455581442892"
E_45 = "1.310575292846625521582249549693914334971203808"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


@pytest.mark.parametrize(
    "literal, expected",
    [
        ("(0+1*sqrt(2))/1", "(1+1*sqrt(2))/1"),
        ("(3+5*sqrt(2))/7", "(-3+2*sqrt(95))/7"),
        ("sqrt(11)", "(15+1*sqrt(901))/26"),
        ("-sqrt(11)", "(15-1*sqrt(901))/26"),
        ("[1;(2)]", "(1+1*sqrt(2))/1"),
        ("[(1)]", "inf"),
    ],
)
def test_transform_goldens(capsys, literal, expected):
    assert run(capsys, "transform", literal) == (0, expected, "")


def test_transform_pi(capsys):
    code, out, _ = run(capsys, "transform", "[3;7,15,1,292,...]", "--digits", "50")
    assert code == 0 and out.startswith(PI_50)


def test_transform_e(capsys):
    code, out, _ = run(capsys, "--digits", "45", "transform", "e")
    assert code == 0 and out.startswith(E_45)


def test_transform_stream_record(capsys):
    code, out, _ = run(capsys, "transform", "pi", "--json", "--digits", "20")
    rec = json.loads(out)
    assert rec["representation"] == "stream-cf"
    assert rec["output_exact"] is None
    assert rec["output_cf_prefix"][:4] == [1, 1, 2, 1]


def test_transform_rational_points_at_jump(capsys):
    code, _, err = run(capsys, "transform", "1/1")
    assert code == 1 and "jump" in err


def test_transform_rational_with_jump_flag(capsys):
    code, out, _ = run(capsys, "transform", "2", "--jump", "--json")
    assert code == 0 and json.loads(out)["delta"] == "(0-1*sqrt(5))/1"


@pytest.mark.parametrize("via", ["cf", "xor", "both"])
def test_via(capsys, via):
    code, out, _ = run(capsys, "transform", "sqrt(3)", "--via", via, "--json")
    rec = json.loads(out)
    assert rec["output_exact"] == "(3+1*sqrt(13))/2"
    assert rec["method_agreement"] is (True if via == "both" else None)


def test_jump(capsys):
    code, out, _ = run(capsys, "jump", "2")
    rec = json.loads(out)
    assert code == 0
    assert (rec["left"], rec["right"], rec["delta"]) == ("(5+1*sqrt(5))/2", "(5-1*sqrt(5))/2", "(0-1*sqrt(5))/1")


@pytest.mark.parametrize("m, expected", MATRIX_TABLE, ids=[str(m) for m, _ in MATRIX_TABLE])
def test_matrix_table(capsys, m, expected):
    text = f"[[{m.a},{m.b}],[{m.c},{m.d}]]"
    want = f"[[{expected.a},{expected.b}],[{expected.c},{expected.d}]]"
    assert run(capsys, "matrix", text) == (0, want, "")


def test_matrix_errors(capsys):
    assert run(capsys, "matrix", "[[2,0],[0,1]]")[0] == 1
    assert run(capsys, "matrix", "not a matrix")[0] == 1


def test_orbit_fixed(capsys):
    assert run(capsys, "orbit-fixed", "[[1,1],[0,1]]") == (0, "(0+1*sqrt(2))/1", "")
    assert run(capsys, "orbit-fixed", "[[1,0],[0,1]]")[0] == 1


def test_dynamics_tjimm_example(capsys):
    code, out, _ = run(capsys, "dynamics", "iterate", "--map", "tjimm", "--start", "[0;1,1,3,(2)]", "--steps", "1")
    assert out.splitlines() == ["(11-1*sqrt(2))/17", "(-1+1*sqrt(2))/1"]


def test_dynamics_json(capsys):
    code, out, _ = run(capsys, "dynamics", "iterate", "--map", "gauss", "--start", "-1+sqrt(3)", "--steps", "3", "--emit", "json")
    assert code == 0 and len(json.loads(out)["orbit"]) == 4


def test_boxgraph_csv(capsys):
    code, out, _ = run(capsys, "boxgraph", "--depth", "6", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "x_lo,x_hi,y_lo,y_hi" and len(lines) == 33


def test_boxgraph_svg(capsys):
    assert run(capsys, "boxgraph", "--depth", "3", "--format", "svg")[1].startswith("<svg")


def test_beatty(capsys):
    code, out, _ = run(capsys, "beatty", "--x", "sqrt(2)", "--limit", "10000")
    rec = json.loads(out)
    assert code == 0 and rec["partition"] and rec["harmonic"] and rec["dual_partition"]
    assert run(capsys, "beatty", "--x", "(1+sqrt(5))/2")[0] == 1


def test_verify_matrix_table(capsys):
    code, out, _ = run(capsys, "verify", "matrix-table")
    assert code == 0
    assert "PASS matrix-table: table rows (floor decomposition) (8/8)" in out


def test_verify_delta_json(capsys):
    code, out, _ = run(capsys, "verify", "delta", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["ok"]
    assert {c["name"] for c in rep["suites"][0]["checks"]} >= {"jump(n).delta = closed formula, n=1..30"}


def test_verify_reports_informational_lines(capsys):
    code, out, _ = run(capsys, "verify", "mcmullen")
    assert code == 0 and "INFO mcmullen" in out


def test_verify_unknown(capsys):
    assert run(capsys, "verify", "nope")[0] == 1


def test_stats_soft_gate(capsys):
    code, out, _ = run(capsys, "stats", "density", "--samples", "5", "--depth", "200", "--json", "--seed", "4")
    rep = json.loads(out)
    assert rep["gate"] == "soft" and rep["config"]["seed"] == 4


def test_usage_errors_exit_one(capsys):
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "transform", "sqrt(2)", "--via", "abacus")[0] == 1


def test_global_flags_either_side(capsys):
    a = run(capsys, "--json", "--digits", "12", "transform", "sqrt(7)")
    b = run(capsys, "transform", "sqrt(7)", "--json", "--digits", "12")
    assert a == b and a[0] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["jump", "3/5"],
        ["transform", "pi", "--digits", "25"],
        ["stats", "integral", "--samples", "40"],
        ["verify", "rayleigh"],
    ],
)
def test_json_is_deterministic(capsys, argv):
    first = run(capsys, *argv, "--json")
    second = run(capsys, *argv, "--json")
    assert first == second
    json.loads(first[1])


def test_negative_literals_are_positionals(capsys):
    assert run(capsys, "jump", "-3/8", "--json")[0] == 0
    assert run(capsys, "transform", "-(1+sqrt(5))/2")[1] == "0"
