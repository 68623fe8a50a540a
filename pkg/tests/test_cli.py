import json
import subprocess
import sys

import pytest

from graphoid.cli import main
from conftest import CORPUS_DIR


def run(capsys, *argv):
    rc = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return rc, out, err


def corpus(name):
    return CORPUS_DIR / f"{name}.gpd"


def test_yamada_text_and_json(capsys):
    rc, out, _ = run(capsys, "yamada", corpus("trivial"))
    assert rc == 0 and json.loads(out)["polynomial"] == "A + 1 + A^-1"
    rc, out, _ = run(capsys, "yamada", "--json", "--route", "both", corpus("trefoil"))
    assert rc == 0 and len(out.strip().splitlines()) == 1


def test_validate_error_is_json(capsys, tmp_path):
    bad = tmp_path / "bad.gpd"
    bad.write_text("GPD 1 bad\nV(1,1,1)\n")
    rc, out, _ = run(capsys, "validate", bad)
    assert rc == 1 and json.loads(out)["error"] == "duplicate-half-edge"


def test_usage_errors_exit_2(capsys):
    for argv in (["yamada", "--bogus", str(corpus("trivial"))], ["frobnicate"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


def test_subcommands_run(capsys):
    cases = [
        ("gyamada", corpus("virtual_trefoil")),
        ("nonclassical", "test", corpus("loop_around_head")),
        ("adequacy", "report", corpus("adequate_genus_two")),
        ("adequacy", "dual", corpus("theta")),
        ("adequacy", "checkerboard", corpus("trefoil")),
        ("close", "--mode", "under", corpus("kink_knotoid")),
        ("pi1", "present", corpus("trefoil")),
        ("pi1", "abelian", corpus("theta")),
        ("pi1", "homs", "--target", "S3", corpus("trefoil")),
        ("constituents", "list", corpus("theta_graphoid")),
        ("tangle", "insert", "--vertex", "1", corpus("vertex_kink_graphoid")),
        ("moves", "enumerate", "--kinds", "R1+", corpus("trivial")),
    ]
    for argv in cases:
        rc, out, _ = run(capsys, *argv)
        assert rc == 0 and out.strip(), argv


def test_homs_value(capsys):
    rc, out, _ = run(capsys, "pi1", "homs", "--json", "--target", "S3", corpus("trefoil"))
    assert "12" in out


def test_moves_apply_and_equiv(capsys):
    rc, out, _ = run(capsys, "moves", "enumerate", "--kinds", "R1+", corpus("trivial"))
    script = out.splitlines()[0]
    rc, out, _ = run(capsys, "moves", "apply", "--move", script, corpus("trivial"))
    assert rc == 0 and "X(" in out
    rc, out, _ = run(capsys, "equiv", "search", "--json", corpus("trivial"), corpus("trivial"))
    assert rc == 0 and json.loads(out)["verdict"] == "equivalent-with-path"


def test_constituent_bounds(capsys, tmp_path):
    data = tmp_path / "values.json"
    data.write_text('{"crossing": {"7": 2}, "height": {}}')
    rc, out, _ = run(capsys, "constituents", "bounds", "--json", "--data", data, corpus("theta_graphoid"))
    assert rc == 0 and json.loads(out)["mcc"] == 2


def test_batch_is_deterministic(tmp_path):
    cmd = [sys.executable, "-m", "graphoid.cli", "batch", "--ops", "validate,yamada", str(CORPUS_DIR)]
    one = subprocess.run(cmd + ["--workers", "1"], capture_output=True, text=True)
    two = subprocess.run(cmd + ["--workers", "2"], capture_output=True, text=True)
    assert one.returncode == 0, one.stdout + one.stderr
    assert one.stdout == two.stdout
    lines = one.stdout.splitlines()
    assert len(lines) == len(list(CORPUS_DIR.glob("*.gpd")))
    assert all("error" not in json.loads(line) for line in lines)
