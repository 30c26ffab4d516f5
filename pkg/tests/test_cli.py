import json
import os
import subprocess
import sys

import pytest

from qshrb.cli import main
from qshrb.report import Report

VALID = [
    "flip2.def", "hecke2.def", "hecke2_m0.def", "qflip2.def", "signflip.def", "idem2_flip2.def",
    "dual_numbers.def", "qmb_trivial_hecke2.def", "qmb_m11_idem2.def", "z2_yd.def", "z2_yd_mixed.def", "trivial_yd.def",
]


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv("QSHRB_DEGREE_BOUND", raising=False)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("fname", VALID)
def test_check_all_passes(capsys, data, fname):
    code, out, _ = run(capsys, "check", "all", data / fname)
    assert code == 0, out
    n, total = out.strip().splitlines()[-1].split()[0].split("/")
    assert n == total


@pytest.mark.parametrize(
    "suite, fname",
    [
        ("ybe", "hecke2_corrupt.def"),
        ("braided-algebra", "nonassoc2.def"),
        ("qsh-assoc", "idem2_flip2_dropmiddle.def"),
        ("filtration", "idem2_flip2_dropmiddle.def"),
        ("rota-baxter", "idem2_flip2_dropmiddle.def"),
        ("tridendriform", "hecke2_corrupt.def"),
        ("braided-rb", "hecke2_corrupt.def"),
        ("qmb", "qmb_nonassoc.def"),
        ("yd", "z2_yd_broken.def"),
        ("bosonization", "z2_yd_bad_qmb.def"),
    ],
)
def test_negative_controls(capsys, data, suite, fname):
    code, out, _ = run(capsys, "check", suite, data / fname, "--json")
    assert code == 1
    doc = json.loads(out)
    assert doc["passed"] is False
    failing = [Report.from_dict(r) for r in doc["reports"] if r["status"] == "fail"]
    assert failing and all(r.witness.lhs != r.witness.rhs for r in failing)


def test_json_round_trip(capsys, data):
    code, out, _ = run(capsys, "check", "ybe,qsh-assoc", data / "hecke2.def", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["suites"] == ["ybe,qsh-assoc"] and doc["passed"]
    for r in doc["reports"]:
        rep = Report.from_dict(r)
        assert rep.to_dict() == r
        assert Report.from_json(rep.to_json()) == rep


def test_text_output_is_deterministic(capsys, data):
    first = run(capsys, "check", "all", data / "idem2_flip2.def")[1]
    second = run(capsys, "check", "all", data / "idem2_flip2.def", "--parallel")[1]
    assert first == second


def test_failure_text_shows_witness(capsys, data):
    code, out, _ = run(capsys, "check", "ybe", data / "hecke2_corrupt.def")
    assert code == 1
    assert "FAIL" in out and "lhs:" in out and "rhs:" in out and "diff:" in out


def test_weight_and_mode(capsys, data):
    assert run(capsys, "check", "rota-baxter", data / "hecke2_m0.def", "--weight", "q", "--degree-cap", "2")[0] == 0
    assert run(capsys, "check", "braided-rb", data / "idem2_flip2.def", "--mode", "weak")[0] == 0
    assert run(capsys, "check", "bosonization", data / "z2_yd.def", "--weight", "1", "--degree-cap", "2")[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ("check", "nonsense", "hecke2.def"),
        ("check", "yd", "hecke2.def"),
        ("check", "braided-algebra", "flip2.def"),
        ("check", ",", "hecke2.def"),
        ("check", "ybe", "hecke2.def", "--degree-cap", "9"),
        ("check", "ybe", "hecke2.def", "--weight", "q^"),
        ("expand", "qsh", "e3 , e1", "hecke2.def"),
        ("expand", "qsh", "e1 e1 e1 , e1 e1 e1", "hecke2.def"),
        ("expand", "qsh", "e1 , e1", "hecke2.def", "--at-q", "x"),
        ("expand", "smash", "v1 # 1 , v1 # 1", "hecke2.def"),
        ("check", "ybe", "missing.def"),
    ],
)
def test_usage_errors_exit_2(capsys, data, argv):
    argv = [str(data / a) if a.endswith(".def") else a for a in argv]
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


@pytest.mark.parametrize("argv", [("frobnicate",), ("--bound", "0", "check", "ybe", "x.def"), ("check", "ybe")])
def test_argument_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    assert exc.value.code == 2
    assert "error" in capsys.readouterr().err


def test_bad_environment_bound(capsys, data, monkeypatch):
    monkeypatch.setenv("QSHRB_DEGREE_BOUND", "zero")
    code, _, err = run(capsys, "check", "ybe", data / "hecke2.def")
    assert code == 2 and "QSHRB_DEGREE_BOUND" in err


def test_environment_bound_limits_caps(capsys, data, monkeypatch):
    monkeypatch.setenv("QSHRB_DEGREE_BOUND", "3")
    code, out, _ = run(capsys, "check", "qsh-assoc", data / "hecke2_m0.def")
    assert code == 0 and "degree=3" in out
    assert run(capsys, "expand", "qsh", "e1 e1 , e1 e2", data / "hecke2.def")[0] == 2


def test_invalid_definition_exits_1(capsys, data):
    code, out, _ = run(capsys, "check", "ybe", data / "singular.def")
    assert code == 1
    assert "not invertible" in out


def test_expand_examples(capsys, data):
    assert run(capsys, "expand", "qsh", "e2 , e1", data / "hecke2.def")[1].strip() == "q·e1⊗e2 + (2−q²)·e2⊗e1"
    assert run(capsys, "expand", "qsh", "e2 , e1", data / "hecke2.def", "--at-q", "1")[1].strip() == "e1⊗e2 + e2⊗e1"
    assert run(capsys, "expand", "tri-dot", "e1 , e1", data / "idem2_flip2.def")[1].strip() == "e1"
    assert run(capsys, "expand", "smash", "1 # g , v1 # 1", data / "z2_yd.def")[1].strip() == "−v1#g"
    assert run(capsys, "expand", "star", "e1 , e1", data / "qmb_m11_idem2.def")[1].strip() == "e1 + 2·e1⊗e1"
    out = run(capsys, "expand", "qsh", "2*e1 - e2 , e1", data / "flip2.def")[1].strip()
    assert out == "4·e1⊗e1 − e1⊗e2 − e2⊗e1"


def test_expand_diamond(capsys, data):
    out = run(capsys, "expand", "diamond", "e1 | e2 , 1A | e1", data / "idem2_flip2.def")[1].strip()
    assert out == "e1 ⊗̲ e1⊗e2 + e1 ⊗̲ e2⊗e1"


def test_solve(capsys, data):
    code, out, _ = run(capsys, "solve", "products", data / "hecke2.def")
    assert code == 0 and "solution dimension 0" in out and "q = 1" in out
    code, out, _ = run(capsys, "solve", "products", data / "flip2.def", "--json")
    assert code == 0 and json.loads(out)["dimension"] == 8
    code, _, err = run(capsys, "solve", "products", data / "hecke2.def", "--strict")
    assert code == 1 and "q = 1" in err


def test_module_entry_point(data):
    env = dict(os.environ)
    env.pop("QSHRB_DEGREE_BOUND", None)
    proc = subprocess.run([sys.executable, "-m", "qshrb", "check", "ybe", str(data / "flip2.def")], capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    assert proc.stdout.strip().endswith("2/2 checks passed")


@pytest.mark.parametrize("flag, expected", [("1", "python"), ("", None)])
def test_kernel_selection(flag, expected):
    env = dict(os.environ, QSHRB_PURE_PYTHON=flag)
    proc = subprocess.run([sys.executable, "-c", "import qshrb; print(qshrb.IMPLEMENTATION)"], capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    assert proc.stdout.strip() == (expected or proc.stdout.strip())
    assert proc.stdout.strip() in ("python", "cython")
