import io
import json
import subprocess
import sys

import jsonschema
import pytest

from dqg.cli import main
from dqg.nfcore import Algebra
from dqg.parser import parse_expr
from dqg.report import REPORT_SCHEMA


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_nf_examples():
    code, out = run("nf", "t[2,2] t[1,1]", "--n", "2")
    assert code == 0
    assert "t[1,1] t[2,2]" in out and "t[1,2] t[2,1]" in out
    assert len(parse_expr(Algebra(2), out).terms) == 2
    assert run("nf", "det dinv")[1].strip() == "1"
    code, out = run("nf", "S(t[1,1]) t[1,1] + S(t[1,2]) t[2,1]", "--n", "2", "--clear-det", "1")
    assert (code, out.strip()) == (0, "1")


def test_nf_clear_det_cap_exceeded():
    code, _ = run("nf", "S(t[1,1]) t[1,1]", "--clear-det", "0")
    assert code == 1


def test_nf_json():
    code, out = run("nf", "t[1,2] t[1,1]", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["normal_form"].endswith("t[1,1] t[1,2]")


def test_pair_command():
    code, out = run("pair", "t[1,1]", "t[1,1]", "--n", "2")
    assert code == 0 and out.strip() == "(tau)@(-2, 0)"
    code, out = run("pair", "det", "det", "--n", "3", "--format", "json")
    assert json.loads(out)["terms"] == [{"shift": [-2, -2, -2], "coeff": "1"}]


@pytest.mark.parametrize("argv", [
    ["check", "bogus"],
    ["check", "--n", "7"],
    ["check", "rll", "--suite", "qdybe"],
    ["check", "hall-littlewood", "--r", "6"],
    ["nf", "t[1,3]"],
    ["nf", "t[1,"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2


def test_check_json_qdybe_n3():
    code, out = run("check", "qdybe", "--n", "3", "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, REPORT_SCHEMA)
    entries = [c for c in data["checks"] if c["id"].startswith("qdybe row=")]
    assert code == 0 and len(entries) == 729
    ids = [c["id"] for c in data["checks"]]
    assert ids == sorted(ids)


def test_suite_filter():
    code, out = run("check", "--suite", "rll,cofactor", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["suite"] == "all"
    assert {c["id"].split(":")[0] for c in data["checks"]} == {"rll", "cofactor"}


def test_console_script_all_n2():
    proc = subprocess.run([sys.executable, "-m", "dqg", "check", "all", "--n", "2",
                           "--format", "json"], capture_output=True, text=True, timeout=300)
    assert proc.returncode == 0, proc.stderr
    data = json.loads(proc.stdout)
    jsonschema.validate(data, REPORT_SCHEMA)
    assert data["summary"]["fail"] == 0
