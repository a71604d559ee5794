"""Command-line interface: exit codes, grammar, determinism."""

import json
import subprocess
import sys

import pytest

from operads.cli import UsageError, main, parse_element
from operads.linalg import LinComb
from operads.models import get_model


def run_cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "operads.cli", *argv],
        capture_output=True,
        text=True,
    )
    return proc


# --- element grammar -------------------------------------------------------

def test_parse_element_words():
    model = get_model("as", 2)
    lc = parse_element(model, "2*xy - 1/3*yx + x")
    assert lc == LinComb({"xy": 2, "yx": LinComb.of("x").coeff("x") * -1 / 3, "x": 1})


def test_parse_element_trees():
    model = get_model("dup", 1)
    lc = parse_element(model, "(.,.):x + 2*((.,.),.):xx")
    assert lc.coeff("(.,.):x") == 1
    assert lc.coeff("((.,.),.):xx") == 2


def test_parse_element_rejects_garbage():
    model = get_model("as", 2)
    for bad in ("", "qq", "2*", "x**y", "1/0*x", "xy+zz", "xy+yy+zz"):
        with pytest.raises(UsageError):
            parse_element(model, bad)


# --- exit codes -------------------------------------------------------------

def test_exit_zero_on_holding_check():
    proc = run_cli("check", "--model", "as", "--relation", "nui", "--max-degree", "4")
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["holds"] is True


def test_exit_one_on_falsified_check():
    proc = run_cli(
        "check", "--model", "as", "--relation", "hopf", "--max-degree", "3",
        "--witness",
    )
    assert proc.returncode == 1
    report = json.loads(proc.stdout)
    assert report["holds"] is False
    assert "firstFailure" in report


def test_exit_two_on_usage_errors():
    for argv in (
        ["check", "--model", "nope", "--relation", "nui"],
        ["check", "--model", "as", "--relation", "nope"],
        ["coproduct", "--model", "as", "--element", "zz"],
        ["product", "--model", "as", "--left", "x", "--right", "@"],
        ["series"],
        ["series", "--check", "triple", "--names", "As"],
        ["idempotent", "--model", "as", "--kind", "nope"],
        ["suite"],
    ):
        proc = run_cli(*argv)
        assert proc.returncode == 2, argv
        assert proc.stderr.startswith("error:")


# --- a few commands end to end ----------------------------------------------

def test_trees_enumerate_and_graft():
    proc = run_cli("trees", "enumerate", "--leaves", "3")
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == ["((.,.),.)", "(.,(.,.))"]
    proc = run_cli("trees", "graft", "--kind", "over", "--left", "(.,.)",
                   "--right", "(.,.)")
    assert proc.stdout.strip() == "((.,.),.)"


def test_coproduct_and_product_json():
    proc = run_cli("coproduct", "--model", "as", "--alphabet", "2", "--element", "xy")
    assert json.loads(proc.stdout) == {"x|y": "1"}
    proc = run_cli("product", "--model", "as", "--alphabet", "2",
                   "--left", "x", "--right", "y - x")
    assert json.loads(proc.stdout) == {"xy": "1", "xx": "-1"}


def test_prim_and_idempotent_reports():
    proc = run_cli("prim", "--model", "dup", "--degree", "3")
    report = json.loads(proc.stdout)
    assert report["dimension"] == 2
    proc = run_cli("idempotent", "--model", "as", "--kind", "versal",
                   "--max-degree", "4")
    report = json.loads(proc.stdout)
    assert report["ranks"] == {"1": 1, "2": 0, "3": 0, "4": 0}


def test_series_and_homology_commands():
    proc = run_cli("series", "--show", "Dup", "--order", "5")
    assert json.loads(proc.stdout)["coefficients"] == ["1", "2", "5", "14", "42"]
    proc = run_cli("series", "--check", "triple", "--names", "Com,As,Lie",
                   "--order", "8")
    assert proc.returncode == 0
    proc = run_cli("series", "--check", "koszul", "--names", "Dup,Nil",
                   "--order", "4")
    assert proc.returncode == 1
    proc = run_cli("homology", "--internal-degree", "3")
    report = json.loads(proc.stdout)
    assert report["homologyDims"] == [0, 0, 0]
    assert proc.returncode == 0


def test_verify_h2_command():
    proc = run_cli("verify", "--model", "dup", "--what", "h2", "--max-degree", "4")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "epi-with-splitting"


def test_suite_is_deterministic_and_green():
    first = run_cli("suite", "--all")
    second = run_cli("suite", "--all")
    assert first.returncode == 0
    assert first.stdout == second.stdout
    assert "FAIL" not in first.stdout
    last = first.stdout.strip().splitlines()[-1]
    assert last.startswith("suite: ")
    passed, total = last.split()[1].split("/")
    assert passed == total


def test_suite_single_bundle():
    proc = run_cli("suite", "--catalan")
    assert proc.returncode == 0
    assert "[catalan]" in proc.stdout
    assert "[series]" not in proc.stdout


def test_main_exits_with_code():
    with pytest.raises(SystemExit) as exc:
        main(["trees", "enumerate", "--leaves", "2"])
    assert exc.value.code == 0
