"""Check records and suite reports shared by the verify functions and the CLI."""

import json
import time
from dataclasses import asdict, dataclass, field


@dataclass
class CheckRecord:
    id: str
    paper_ref: str
    passed: bool
    clear_power: int = 0
    ms: float = 0.0
    counterexample: dict | None = None

    def to_json(self):
        out = {"id": self.id, "paper_ref": self.paper_ref, "pass": self.passed,
               "clear_power": self.clear_power, "ms": round(self.ms, 3)}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out

    @classmethod
    def from_json(cls, d):
        return cls(id=d["id"], paper_ref=d["paper_ref"], passed=d["pass"],
                   clear_power=d["clear_power"], ms=d["ms"],
                   counterexample=d.get("counterexample"))


@dataclass
class Outcome:
    """Result of one identity check before timing/labelling."""
    passed: bool
    residue: str | None = None
    clear_power: int = 0


@dataclass
class SuiteReport:
    suite: str
    n: int
    checks: list = field(default_factory=list)

    @property
    def n_pass(self):
        return sum(1 for c in self.checks if c.passed)

    @property
    def n_fail(self):
        return len(self.checks) - self.n_pass

    @property
    def ok(self):
        return self.n_fail == 0

    def sorted(self):
        return SuiteReport(self.suite, self.n, sorted(self.checks, key=lambda c: c.id))

    def to_json(self):
        return {"suite": self.suite, "n": self.n,
                "checks": [c.to_json() for c in self.checks],
                "summary": {"pass": self.n_pass, "fail": self.n_fail}}

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=False)

    @classmethod
    def from_json(cls, d):
        return cls(d["suite"], d["n"], [CheckRecord.from_json(c) for c in d["checks"]])

    @classmethod
    def loads(cls, text):
        return cls.from_json(json.loads(text))

    def to_text(self):
        lines = [f"suite {self.suite}  n={self.n}"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            extra = f"  clear_power={c.clear_power}" if c.clear_power else ""
            lines.append(f"{status}  {c.id}  [{c.paper_ref}]  {c.ms:.1f}ms{extra}")
            if c.counterexample is not None:
                lines.append(f"      counterexample: {json.dumps(c.counterexample)}")
        lines.append(f"summary: {self.n_pass} passed, {self.n_fail} failed")
        return "\n".join(lines)


REPORT_SCHEMA = {
    "type": "object",
    "required": ["suite", "n", "checks", "summary"],
    "additionalProperties": False,
    "properties": {
        "suite": {"type": "string"},
        "n": {"type": "integer"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "paper_ref", "pass", "clear_power", "ms"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string"},
                    "paper_ref": {"type": "string", "minLength": 1},
                    "pass": {"type": "boolean"},
                    "clear_power": {"type": "integer", "minimum": 0},
                    "ms": {"type": "number", "minimum": 0},
                    "counterexample": {
                        "type": "object",
                        "required": ["indices", "residue"],
                        "properties": {
                            "indices": {},
                            "residue": {"type": "string"},
                        },
                    },
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["pass", "fail"],
            "properties": {"pass": {"type": "integer"}, "fail": {"type": "integer"}},
        },
    },
}


def is_zero_outcome(x, clear_power=0):
    """Outcome for 'x is zero' where x is any engine value with is_zero()."""
    if x.is_zero():
        return Outcome(True, None, clear_power)
    return Outcome(False, str(x), clear_power)


def equal_outcome(x, y):
    if x == y:
        return Outcome(True)
    return Outcome(False, f"{x}  !=  {y}")


def mod_det_outcome(x, y, D=None):
    """x == y in the localization, certified by clearing det^D."""
    diff = x - y
    if D is None:
        D = diff.max_dinv()
    cleared = diff.clear_det(D)
    return is_zero_outcome(cleared, D)


class Checker:
    """Collects timed CheckRecords."""

    def __init__(self):
        self.records = []

    def check(self, cid, ref, thunk, indices=None):
        start = time.perf_counter()
        try:
            out = thunk()
        except Exception as exc:  # a crash is a failed identity, with its reason
            out = Outcome(False, f"error: {type(exc).__name__}: {exc}")
        if isinstance(out, bool):
            out = Outcome(out, None if out else "identity is false")
        ms = (time.perf_counter() - start) * 1000
        cex = None
        if not out.passed:
            cex = {"indices": indices if indices is not None else cid,
                   "residue": out.residue or ""}
        rec = CheckRecord(cid, ref, out.passed, out.clear_power, ms, cex)
        self.records.append(rec)
        return rec

    @property
    def all_passed(self):
        return all(r.passed for r in self.records)


def summarize(records):
    return {"pass": sum(r.passed for r in records),
            "fail": sum(not r.passed for r in records)}


def record_dict(rec):
    return asdict(rec)
