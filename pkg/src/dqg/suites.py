"""Named verification suites and the registry the CLI runs."""

import itertools
import random

from . import extcorep, hopf, pairing, rmatrix
from .extcorep import order_by_swaps, order_sequence
from .minors import (cofactor_sides, eta, hall_littlewood_sides, laplace_sides,
                     normalizer, normalizer_closed_form, permutations, subsets, xi)
from .nfcore import Algebra, Element
from .report import Checker, Outcome, SuiteReport, equal_outcome, is_zero_outcome

MIN_N, MAX_N = 2, 4
MAX_HL = 5


def _element_of(alg, nf):
    return Element(alg, {(w, 0): c for w, c in nf.items()})


def _nf_outcome(alg, a, b):
    if a.keys() == b.keys() and all(a[k] == b[k] for k in a):
        return Outcome(True)
    diff = _element_of(alg, a) - _element_of(alg, b)
    return Outcome(False, str(diff))


def verify_confluence(alg, checker=None, random_count=200, max_len=5, seed=0):
    """Every overlap resolves, and random words have strategy-independent
    normal forms (leftmost, rightmost and insertion reduction agree)."""
    checker = checker or Checker()
    ref = "resolvable reduction system"
    for trip in alg.overlaps():
        def resolve(trip=trip):
            return _nf_outcome(alg, alg.rewrite(trip, first=0), alg.rewrite(trip, first=1))
        checker.check(f"overlap {trip}", ref, resolve, list(trip))
    for k, word in enumerate(alg.random_words(random_count, max_len, seed)):
        def strategies(word=word):
            left = alg.rewrite(word, "leftmost")
            out = _nf_outcome(alg, left, alg.rewrite(word, "rightmost"))
            if not out.passed:
                return out
            return _nf_outcome(alg, left, alg.reduce_word(word))
        checker.check(f"random word {k:03d}", "normal form independent of strategy",
                      strategies, list(word))
    return checker


def verify_basis(alg, checker=None, seed=0, count=40):
    """PBW soundness, the defining relations, and the ordering lemma in W, V."""
    checker = checker or Checker()
    F = alg.field
    n = alg.n
    for label, rel in alg.relation_instances():
        checker.check(f"relation {label}", "defining relations",
                      lambda rel=rel: is_zero_outcome(alg.from_free(rel)), label)
    rng = random.Random(seed)
    for k, word in enumerate(alg.random_words(count, 4, seed)):
        def idempotent(word=word):
            nf = alg.reduce_word(word)
            want = alg.weights(word)
            for w in nf:
                if alg.reduce_word(w) != {w: F.one}:
                    return Outcome(False, f"normal word {w} is not reduced")
                if alg.weights(w) != want:
                    return Outcome(False, f"weight of {w} differs from {want}")
            return True
        checker.check(f"normal form idempotent and graded {k:02d}", "PBW basis", idempotent,
                      list(word))
    for k in range(count // 4):
        a, b, c = (alg.t(rng.randint(1, n), rng.randint(1, n)) for _ in range(3))
        checker.check(f"associativity {k:02d}", "associative product",
                      lambda a=a, b=b, c=c: equal_outcome((a * b) * c, a * (b * c)), k)
    for kind in "WV":
        for r in range(2, n + 1):
            for seq in itertools.product(range(1, n + 1), repeat=r):
                def order(kind=kind, seq=seq):
                    c1, K1 = order_sequence(F, kind, seq)
                    c2, K2 = order_by_swaps(F, kind, seq)
                    if K1 == K2 and c1 == c2:
                        return True
                    return Outcome(False, f"{c1} {kind}{K1}  !=  {c2} {kind}{K2}")
                checker.check(f"ordering in {kind} {seq}", "ordering lemma in the exterior algebras",
                              order, list(seq))
    return checker


def _rho_outcome(alg, I, J, rho):
    base = xi(alg, I, J)
    out = equal_outcome(xi(alg, I, J, rho), base)
    return out if not out.passed else equal_outcome(eta(alg, I, J, rho), base)


def verify_minors(alg, checker=None, max_rho=3):
    checker = checker or Checker()
    n = alg.n
    for r in range(n + 1):
        for I in subsets(n, r):
            for J in subsets(n, r):
                idx = {"I": list(I), "J": list(J)}
                checker.check(f"xi = eta I={I} J={J}", "equality of the two minor formulas",
                              lambda I=I, J=J: equal_outcome(xi(alg, I, J), eta(alg, I, J)), idx)
                if r > max_rho:
                    continue
                for rho in permutations(r)[1:]:
                    checker.check(f"rho independence I={I} J={J} rho={rho}",
                                  "minor formulas independent of rho",
                                  lambda I=I, J=J, rho=rho: _rho_outcome(alg, I, J, rho),
                                  {**idx, "rho": list(rho)})
    extcorep.verify_comodule_axioms(alg, checker)
    for i, j in itertools.product(range(1, n + 1), repeat=2):
        checker.check(f"det commutes with t[{i},{j}]", "det is central",
                      lambda i=i, j=j: equal_outcome(alg.det() * alg.t(i, j),
                                                     alg.t(i, j) * alg.det()), [i, j])
    return checker


def verify_laplace(alg, checker=None):
    checker = checker or Checker()
    n = alg.n
    for I in subsets(n):
        for J1 in subsets(n):
            for J2 in subsets(n, len(I) - len(J1)) if len(J1) <= len(I) else []:
                for which in (1, 2):
                    def run(I=I, J1=J1, J2=J2, which=which):
                        return equal_outcome(*laplace_sides(alg, I, J1, J2, which))
                    checker.check(f"laplace {which} I={I} J1={J1} J2={J2}", "Laplace expansions",
                                  run, {"I": list(I), "J1": list(J1), "J2": list(J2),
                                        "which": which})
    return checker


def verify_cofactor(alg, checker=None):
    checker = checker or Checker()
    n = alg.n
    for i, j, v in itertools.product(range(1, n + 1), range(1, n + 1), (1, 2, 3, 4)):
        checker.check(f"cofactor {v} i={i} j={j}", "cofactor expansions of det",
                      lambda i=i, j=j, v=v: equal_outcome(*cofactor_sides(alg, i, j, v)), [i, j, v])
    return checker


def verify_hall_littlewood(field, checker=None, max_r=4, max_normalizer=3):
    checker = checker or Checker()
    for r in range(1, max_r + 1):
        checker.check(f"hall-littlewood r={r}", "Hall-Littlewood identity for the zero partition",
                      lambda r=r: equal_outcome(*hall_littlewood_sides(r)), r)
    n = field.n
    for I in subsets(n):
        if not 1 <= len(I) <= max_normalizer:
            continue
        checker.check(f"normalizer A(I) I={I}", "normalizer independent of lambda and I",
                      lambda I=I: equal_outcome(normalizer(field, I),
                                                normalizer_closed_form(field, len(I))),
                      list(I))
    return checker


def verify_qdybe(alg, checker=None):
    checker = checker or Checker()
    rmatrix.verify_qdybe(alg.field, checker)
    checker.check("R-matrix weight zero", "h-invariance of the R-matrix",
                  lambda: rmatrix.verify_h_invariance(alg.field))
    return checker


def verify_pairing(alg, checker=None, split_len=None):
    """Tables, det and minor values, the action oracle, recursion order
    independence and the weight law."""
    checker = checker or Checker()
    pairing.verify_pairing_table(alg, checker)
    pairing.verify_pairing_minors(alg, checker)
    split_len = 2 if split_len is None else split_len
    atoms = pairing._atoms(alg)
    words = [w for k in range(1, split_len + 1) for w in itertools.product(atoms, repeat=k)]
    for X in words:
        for a in words:
            wX, wa = pairing._weights(alg, X), pairing._weights(alg, a)
            if [x + y for x, y in zip(wX[1], wa[1])] != [x + y for x, y in zip(wX[0], wa[0])]:
                continue
            checker.check("recursion order " + _word_label(alg, X) + " | " + _word_label(alg, a), "pairing product rules",
                          lambda X=X, a=a: pairing.split_independence(alg, X, a),
                          [list(X), list(a)])
    det = alg.det()
    for label, x in [("det", det)] + [(f"t[{i},{j}]", alg.t(i, j))
                                     for i in range(1, alg.n + 1) for j in range(1, alg.n + 1)]:
        for label2, y in [("det", det), ("dinv", alg.dinv()), ("t[1,1]", alg.t(1, 1))]:
            checker.check(f"weight law {label} | {label2}", "pairing target weights",
                          lambda x=x, y=y: pairing.weight_law_holds(alg, x, y,
                                                                    pairing.pair(x, y)),
                          [label, label2])
    return checker


def _word_label(alg, word):
    return " ".join(pairing._atom_name(alg, x) for x in word)


def _default_minor_bound(n):
    return n if n <= 2 else 2


SUITES = {
    "qdybe": lambda alg, o: verify_qdybe(alg, o["checker"]),
    "confluence": lambda alg, o: verify_confluence(alg, o["checker"], seed=o["seed"]),
    "rll": lambda alg, o: rmatrix.verify_rll(alg, o["checker"]),
    "basis": lambda alg, o: verify_basis(alg, o["checker"], seed=o["seed"]),
    "minors": lambda alg, o: verify_minors(alg, o["checker"]),
    "laplace": lambda alg, o: verify_laplace(alg, o["checker"]),
    "cofactor": lambda alg, o: verify_cofactor(alg, o["checker"]),
    "antipode": lambda alg, o: hopf.verify_antipode(
        alg, o["checker"], max_minor=_default_minor_bound(alg.n), seed=o["seed"]),
    "star": lambda alg, o: hopf.verify_star_axioms(alg, "star", o["checker"]),
    "dagger": lambda alg, o: hopf.verify_star_axioms(alg, "dagger", o["checker"]),
    "unitarity": lambda alg, o: extcorep.verify_unitarity(
        alg, o["checker"], max_size=_default_minor_bound(alg.n)),
    "pairing": lambda alg, o: verify_pairing(alg, o["checker"]),
    "cobraiding": lambda alg, o: pairing.verify_cobraiding(
        alg, o["checker"], max_off_diagonal=None if alg.n == 2 else 1),
    "hopf-pairing": lambda alg, o: pairing.verify_hopf_pairing(alg, o["checker"],
                                                               exhaustive=True),
    "star-pairing": lambda alg, o: pairing.verify_star_pairing(alg, o["checker"],
                                                               exhaustive=True),
    "hall-littlewood": lambda alg, o: verify_hall_littlewood(alg.field, o["checker"],
                                                             max_r=o["r"]),
}

SUITE_NAMES = list(SUITES) + ["all"]


class CappedChecker(Checker):
    """A Checker that fails any check needing more det-clearing than allowed."""

    def __init__(self, clear_cap=None):
        super().__init__()
        self.clear_cap = clear_cap

    def check(self, cid, ref, thunk, indices=None):
        rec = super().check(cid, ref, thunk, indices)
        if self.clear_cap is not None and rec.passed and rec.clear_power > self.clear_cap:
            rec.passed = False
            rec.counterexample = {
                "indices": indices if indices is not None else cid,
                "residue": f"needs det-clearing power {rec.clear_power} "
                           f"above the cap {self.clear_cap}"}
        return rec


def run_suite(name, n=None, alg=None, seed=0, clear_cap=None, r=4):
    """Run one named suite and return its SuiteReport with checks sorted by id.

    ``alg`` may be passed to run against a prepared (e.g. mutated) algebra.
    """
    if name not in SUITES:
        raise ValueError(f"unknown suite: {name}")
    if alg is None:
        if n is None or not MIN_N <= n <= MAX_N:
            raise ValueError(f"n must be between {MIN_N} and {MAX_N}")
        alg = Algebra(n)
    if not 1 <= r <= MAX_HL:
        raise ValueError(f"r must be between 1 and {MAX_HL}")
    checker = CappedChecker(clear_cap)
    SUITES[name](alg, {"checker": checker, "seed": seed, "r": r})
    return SuiteReport(name, alg.n, checker.records).sorted()


def run_all(n=None, alg=None, seed=0, clear_cap=None, r=4, names=None):
    alg = alg if alg is not None else Algebra(n)
    names = names or list(SUITES)
    return [run_suite(s, alg=alg, seed=seed, clear_cap=clear_cap, r=r) for s in names]


__all__ = ["SUITES", "SUITE_NAMES", "run_suite", "run_all", "verify_confluence",
           "verify_basis", "verify_minors", "verify_laplace", "verify_cofactor",
           "verify_hall_littlewood", "verify_pairing", "CappedChecker"]
