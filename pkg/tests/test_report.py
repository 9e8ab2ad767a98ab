import json

import jsonschema

from dqg.nfcore import Algebra
from dqg.report import REPORT_SCHEMA, Checker, CheckRecord, Outcome, SuiteReport
from dqg.suites import run_suite


def test_checker_records_failures_with_counterexamples():
    c = Checker()
    c.check("a", "ref", lambda: True)
    c.check("b", "ref", lambda: Outcome(False, "t[1,1]"), indices=[1, 2])
    c.check("c", "ref", lambda: 1 / 0)
    a, b, e = c.records
    assert a.passed and a.counterexample is None
    assert not b.passed and b.counterexample == {"indices": [1, 2], "residue": "t[1,1]"}
    assert not e.passed and "ZeroDivisionError" in e.counterexample["residue"]
    assert not c.all_passed


def test_report_json_round_trip_and_schema():
    rep = run_suite("rll", n=2)
    data = json.loads(rep.dumps())
    jsonschema.validate(data, REPORT_SCHEMA)
    back = SuiteReport.loads(rep.dumps())
    assert back.to_json() == data
    assert data["summary"] == {"pass": 16, "fail": 0}


def test_failure_report_validates():
    rep = SuiteReport("x", 2, [CheckRecord("i", "ref", False, 1, 2.5,
                                           {"indices": [1], "residue": "q"})])
    data = json.loads(rep.dumps())
    jsonschema.validate(data, REPORT_SCHEMA)
    assert SuiteReport.loads(rep.dumps()).to_json() == data
    assert "FAIL" in rep.to_text()


def test_text_and_json_have_same_checks():
    rep = run_suite("cofactor", n=2)
    text = rep.to_text()
    for c in rep.checks:
        assert c.id in text
    assert len(json.loads(rep.dumps())["checks"]) == len(rep.checks)


def test_mutated_rule_produces_counterexamples():
    alg = Algebra(2)
    alg.flip_rule_sign()
    rep = run_suite("confluence", alg=alg)
    bad = [c for c in rep.checks if not c.passed]
    assert bad
    for c in bad:
        assert c.counterexample["residue"] and c.counterexample["residue"] != "0"
    jsonschema.validate(json.loads(rep.dumps()), REPORT_SCHEMA)
