import csv
import io
import json
import subprocess
import sys

import pytest

from curvekit.classify import Configuration
from curvekit.cli import EXIT_EXCLUDED, EXIT_OK, EXIT_USAGE, main
from curvekit.exactfield import elem_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_curve_pretty(capsys):
    code, out, _ = run(capsys, "curve", "s4", "6")
    assert code == EXIT_OK
    assert "Z^6 + XY(X^4 − Y^4) = 0" in out
    assert "C_6 ∘ GL_2(F_3)" in out


def test_curve_with_params(capsys):
    code, out, _ = run(capsys, "curve", "a4", "12", "--params", "a=3", "--format", "json")
    assert code == EXIT_OK
    rec = json.loads(out)
    assert elem_from_json(rec["params"][0]) == 3
    assert rec["group_pretty"]


def test_excluded_parameter_exit_code(capsys):
    code, _, err = run(capsys, "curve", "d_m", "12", "--m", "5", "--config", "0", "--params", "a=-11i")
    assert code == EXIT_EXCLUDED
    assert "EscalatesSymmetry" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["curve", "s4"],
        ["curve", "a4", "12", "--params", "b=3"],
        ["curve", "a4", "12", "--params", "a=zz"],
        ["curve", "a4", "12", "--params", "a=1", "a2=2"],
        ["enumerate", "s4", "30", "10"],
        ["curve", "s4", "6", "--m", "3"],
        ["tables", "--group", "nope"],
        ["frobnicate"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == EXIT_USAGE


def test_ambiguous_curve_lists_choices(capsys):
    code, _, err = run(capsys, "curve", "d_m", "14")
    assert code == EXIT_USAGE
    assert "--config" in err


def test_enumerate_json_round_trip(capsys):
    code, out, _ = run(capsys, "enumerate", "s4", "6", "30", "--format", "json")
    assert code == EXIT_OK
    records = json.loads(out)
    assert [r["d"] for r in records] == sorted(r["d"] for r in records)
    for r in records:
        back = Configuration.from_json(r).to_json()
        assert back == {k: r[k] for k in back}


def test_enumerate_forms_agree(capsys):
    _, a, _ = run(capsys, "enumerate", "a5", "4", "100", "--format", "csv")
    _, b, _ = run(capsys, "enumerate", "--group", "a5", "--d-min", "4", "--d-max", "100", "--format", "csv")
    assert a == b and a.count("\n") > 5


def test_enumerate_with_generators(capsys):
    code, out, _ = run(capsys, "enumerate", "--group", "a5", "--degree", "12", "--with-generators")
    assert code == EXIT_OK
    assert "sigma" in out and "rho" in out


def test_tables_csv(capsys):
    code, out, _ = run(capsys, "tables", "--group", "s4")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0]["d"] == "6"


def test_verify_scope(capsys):
    code, out, _ = run(capsys, "verify", "tables", "--group", "s4")
    assert code == EXIT_OK
    assert "PASS" in out or "ok" in out.lower()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "curvekit", "curve", "s4", "8"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "S_{8,14}" in proc.stdout
