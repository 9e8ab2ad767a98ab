"""The dynamical GL(n) R-matrix, its Yang-Baxter equation and RLL relations."""

import itertools

from .report import Checker, equal_outcome, is_zero_outcome
from .scalars import LAM, MU, unit_vector, vneg


def r_entry(field, a, b, x, y, bank=LAM):
    """R^{ab}_{xy}: coefficient of v_x (x) v_y in R(v_a (x) v_b)."""
    if a == b:
        return field.q if (x, y) == (a, b) else field.zero
    if (x, y) == (a, b):
        return field.one if a < b else field.g(a, b, bank)
    if (x, y) == (b, a):
        return field.h0(a, b, bank)
    return field.zero


def r_apply(field, a, b, shift=None):
    """R(lam + shift)(v_a (x) v_b) as {(x, y): coefficient}."""
    out = {}
    for x, y in ((a, b), (b, a)):
        c = r_entry(field, a, b, x, y)
        if c:
            out[(x, y)] = c.shift(LAM, shift) if shift is not None else c
    return out


def _apply_leg(field, state, legs, shift_leg):
    """Apply R on legs (i, j) of a three-fold tensor state, with lambda
    shifted by minus the weight of leg ``shift_leg`` (or unshifted)."""
    i, j = legs
    out = {}
    for vec, c in state.items():
        shift = None
        if shift_leg is not None:
            shift = vneg(unit_vector(field.n, vec[shift_leg]))
        for (x, y), r in r_apply(field, vec[i], vec[j], shift).items():
            new = list(vec)
            new[i], new[j] = x, y
            new = tuple(new)
            val = c * r
            prev = out.get(new)
            out[new] = val if prev is None else prev + val
    return {k: v for k, v in out.items() if v}


def qdybe_sides(field, basis_vec):
    """Both sides of the QDYBE applied to one basis vector of V^{(x)3}.

    Operators act right to left, so the rightmost factor is applied first.
    """
    start = {tuple(basis_vec): field.one}
    lhs = _apply_leg(field, start, (1, 2), 0)       # R23(lam - h1)
    lhs = _apply_leg(field, lhs, (0, 2), None)      # R13(lam)
    lhs = _apply_leg(field, lhs, (0, 1), 2)         # R12(lam - h3)
    rhs = _apply_leg(field, start, (0, 1), None)    # R12(lam)
    rhs = _apply_leg(field, rhs, (0, 2), 1)         # R13(lam - h2)
    rhs = _apply_leg(field, rhs, (1, 2), None)      # R23(lam)
    return lhs, rhs


def verify_qdybe(field, checker=None):
    """One check per matrix entry (n^3 x n^3)."""
    checker = checker or Checker()
    n = field.n
    F = field
    for col in itertools.product(range(1, n + 1), repeat=3):
        lhs, rhs = qdybe_sides(F, col)
        for row in itertools.product(range(1, n + 1), repeat=3):
            left = lhs.get(row, F.zero)
            right = rhs.get(row, F.zero)
            checker.check(f"qdybe row={row} col={col}",
                          "quantum dynamical Yang-Baxter equation",
                          lambda l=left, r=right: equal_outcome(l, r),
                          indices={"row": row, "col": col})
    return checker


def verify_h_invariance(field):
    """R^{ab}_{xy} vanishes unless e_x + e_y = e_a + e_b, and the nonzero
    entries are exactly the listed closed forms."""
    n = field.n
    count = 0
    for a, b, x, y in itertools.product(range(1, n + 1), repeat=4):
        c = r_entry(field, a, b, x, y)
        if c:
            count += 1
            if sorted((a, b)) != sorted((x, y)):
                return False
    # n diagonal q's, n(n-1) ordered off-diagonal pairs each with one
    # diagonal-block entry (1 or g) and one swap entry (h0)
    return count == n + 2 * n * (n - 1)


def rll_terms(alg, a, b, c, d):
    """sum R^{xy}_{ac}(lam) L_xb L_yd - sum R^{bd}_{xy}(mu) L_cy L_ax as a
    list of (coefficient, word)."""
    F = alg.field
    n = alg.n
    terms = []
    for x, y in itertools.product(range(1, n + 1), repeat=2):
        r1 = r_entry(F, x, y, a, c, LAM)
        if r1:
            terms.append((r1, (alg.gen(x, b), alg.gen(y, d))))
        r2 = r_entry(F, b, d, x, y, MU)
        if r2:
            terms.append((-r2, (alg.gen(c, y), alg.gen(a, x))))
    return terms


def rll_relation(alg, a, b, c, d):
    """Normal form of the RLL relation (a, b, c, d); zero when it holds."""
    return alg.from_free(rll_terms(alg, a, b, c, d))


def verify_rll(alg, checker=None):
    checker = checker or Checker()
    n = alg.n
    for idx in itertools.product(range(1, n + 1), repeat=4):
        checker.check(f"rll a,b,c,d={idx}", "RLL relation from the R-matrix",
                      lambda idx=idx: is_zero_outcome(rll_relation(alg, *idx)),
                      indices=list(idx))
    return checker
