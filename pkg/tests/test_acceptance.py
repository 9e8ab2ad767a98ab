"""One test per acceptance criterion; each prints a PASS/FAIL line."""

import itertools
import json
import subprocess
import sys
import time

import jsonschema
import pytest

from dqg.extcorep import verify_unitarity
from dqg.minors import (cofactor_check, eta, hall_littlewood_check, laplace_check,
                        normalizer, normalizer_closed_form, permutations, subsets, xi)
from dqg.nfcore import Algebra
from dqg.report import REPORT_SCHEMA, Checker
from dqg.rmatrix import verify_qdybe, verify_rll
from dqg.suites import run_suite, verify_confluence


@pytest.fixture
def verdict(capsys):
    def report(number, title, ok, detail=""):
        with capsys.disabled():
            status = "PASS" if ok else "FAIL"
            print(f"\n[acceptance {number:2d}] {status}  {title}  {detail}".rstrip())
        assert ok, f"criterion {number} failed: {detail}"
    return report


def _failures(reports):
    return [f"{r.suite}: {c.id}" for r in reports for c in r.checks if not c.passed]


def test_01_qdybe(verdict, alg2, alg3):
    detail = []
    ok = True
    for alg, expected in ((alg2, 64), (alg3, 729)):
        start = time.perf_counter()
        c = verify_qdybe(alg.field, Checker())
        elapsed = time.perf_counter() - start
        ok &= len(c.records) == expected and c.all_passed and elapsed < 60
        detail.append(f"n={alg.n}: {len(c.records)} entries in {elapsed:.1f}s")
    verdict(1, "quantum dynamical Yang-Baxter equation", ok, "; ".join(detail))


def test_02_confluence(verdict, alg2, alg3):
    overlaps_ok = all(r.is_zero() for alg in (alg2, alg3) for _, r in alg.check_confluence())
    c = verify_confluence(alg3, Checker(), random_count=200, max_len=5, seed=2024)
    random_records = [r for r in c.records if r.id.startswith("random word")]
    ok = overlaps_ok and c.all_passed and len(random_records) == 200
    verdict(2, "confluence and strategy independence", ok,
            f"overlaps n=2,3 resolved={overlaps_ok}; random words={len(random_records)}")


def test_03_rll(verdict, alg2, alg3):
    counts = []
    ok = True
    for alg in (alg2, alg3):
        c = verify_rll(alg, Checker())
        ok &= len(c.records) == alg.n ** 4 and c.all_passed
        counts.append(len(c.records))
    verdict(3, "RLL relations", ok, f"instances {counts}")


def test_04_minor_formulas(verdict, alg2, alg3):
    ok = True
    count = 0
    for alg in (Algebra(1), alg2, alg3):
        for r in range(alg.n + 1):
            for I in subsets(alg.n, r):
                for J in subsets(alg.n, r):
                    ok &= xi(alg, I, J) == eta(alg, I, J)
                    count += 1
    rho_count = 0
    for r in range(1, 4):
        for I in subsets(3, r):
            for J in subsets(3, r):
                base = xi(alg3, I, J)
                for rho in permutations(r):
                    ok &= xi(alg3, I, J, rho) == base and eta(alg3, I, J, rho) == base
                    rho_count += 1
    verdict(4, "xi = eta and rho-independence", ok,
            f"{count} minor pairs, {rho_count} rho instances")


def test_05_hall_littlewood(verdict, F3):
    ok = all(hall_littlewood_check(r) for r in range(1, 5))
    count = 0
    for r in range(1, 4):
        for I in subsets(3, r):
            ok &= normalizer(F3, I) == normalizer_closed_form(F3, r)
            count += 1
    verdict(5, "Hall-Littlewood identity and normalizer", ok, f"r<=4; {count} subsets")


def test_06_laplace_and_cofactors(verdict, alg2, alg3):
    ok = True
    count = zeros = 0
    for I in subsets(3):
        for J1 in subsets(3):
            if len(J1) > len(I):
                continue
            for J2 in subsets(3, len(I) - len(J1)):
                for which in (1, 2):
                    ok &= laplace_check(alg3, I, J1, J2, which)
                    count += 1
                    zeros += bool(set(J1) & set(J2))
    cof = 0
    for alg in (alg2, alg3):
        for i, j, v in itertools.product(range(1, alg.n + 1), range(1, alg.n + 1), (1, 2, 3, 4)):
            ok &= cofactor_check(alg, i, j, v)
            cof += 1
    verdict(6, "Laplace and cofactor expansions", ok,
            f"{count} Laplace instances ({zeros} overlapping), {cof} cofactor instances")


def test_07_antipode(verdict, alg2, alg3):
    reports = [run_suite("antipode", alg=alg2), run_suite("antipode", alg=alg3)]
    ids = [c.id for c in reports[1].checks]
    covered = (any(i.startswith("antipode axiom 1 on det") for i in ids)
               and any(i.startswith("antipode axiom 2 on dinv") for i in ids)
               and sum(i.startswith("S on minor") for i in ids) == 18
               and sum(i.startswith("S^2 on minor") for i in ids) == 18
               and any(i.startswith("det central") for i in ids)
               and "S(det) = det^-1" in ids)
    bad = _failures(reports)
    verdict(7, "antipode", covered and not bad,
            f"{sum(len(r.checks) for r in reports)} checks, failures={bad[:3]}")


def test_08_star_structures(verdict, alg2, alg3):
    reports = [run_suite(s, alg=a) for a in (alg2, alg3) for s in ("star", "dagger")]
    u2 = verify_unitarity(alg2, Checker())
    u3 = verify_unitarity(alg3, Checker(), max_size=2)
    ids = [c.id for c in reports[2].checks]
    covered = (any(i.startswith("gauge identity") for i in ids)
               and any(i.startswith("star commutes with comultiplication det") for i in ids)
               and any(i.startswith("star on minor") for i in ids))
    bad = _failures(reports)
    ok = covered and not bad and u2.all_passed and u3.all_passed
    verdict(8, "star structures and unitarity", ok,
            f"{sum(len(r.checks) for r in reports)} checks, unitarity "
            f"{len(u2.records)}+{len(u3.records)}, failures={bad[:3]}")


def test_09_pairing_tables(verdict, alg2, alg3):
    reports = [run_suite("pairing", alg=alg2), run_suite("pairing", alg=alg3)]
    ids = [c.id for c in reports[1].checks]
    covered = (sum(i.startswith("pairing t[") and i.count("t[") == 2 for i in ids) == 81
               and "pairing det det" in ids
               and sum(i.startswith("action oracle t[") for i in ids) == 9
               and sum(" xi(" in i for i in ids) == 162)
    bad = _failures(reports)
    verdict(9, "pairing tables and closed forms", covered and not bad,
            f"{sum(len(r.checks) for r in reports)} checks, failures={bad[:3]}")


def test_10_cobraiding_and_compatibility(verdict, alg2, alg3):
    reports = [run_suite(s, alg=a) for a in (alg2, alg3)
               for s in ("cobraiding", "hopf-pairing", "star-pairing")]
    counts = {(r.suite, r.n): len(r.checks) for r in reports}
    # atoms are the generators and det^-1; at n=3 pairs with at most one
    # off-diagonal generator
    covered = (counts[("cobraiding", 2)] == 25 and counts[("cobraiding", 3)] == 64
               and counts[("hopf-pairing", 3)] == 100 and counts[("star-pairing", 3)] == 100)
    bad = _failures(reports)
    verdict(10, "cobraiding, Hopf and star pairing", covered and not bad,
            f"{counts}, failures={bad[:3]}")


def test_11_cli(verdict):
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "dqg", "check", "all", "--n", "2",
                           "--format", "json"], capture_output=True, text=True, timeout=300)
    elapsed = time.perf_counter() - start
    data = json.loads(proc.stdout)
    jsonschema.validate(data, REPORT_SCHEMA)
    ok = proc.returncode == 0 and elapsed < 300 and data["summary"]["fail"] == 0

    alg = Algebra(2)
    alg.flip_rule_sign()
    mutated = [run_suite(s, alg=alg) for s in ("confluence", "rll", "basis")]
    bad = [c for r in mutated for c in r.checks if not c.passed]
    for r in mutated:
        jsonschema.validate(json.loads(r.dumps()), REPORT_SCHEMA)
    ok &= bool(bad) and all(c.counterexample and c.counterexample["residue"] for c in bad)
    verdict(11, "CLI, report schema and mutation detection", ok,
            f"check all --n 2 in {elapsed:.1f}s exit={proc.returncode}; "
            f"mutation counterexamples={len(bad)}")
