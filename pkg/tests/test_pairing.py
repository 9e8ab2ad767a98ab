import itertools

import pytest

from dqg.coalg import DiffOp
from dqg.minors import hat, xi
from dqg.pairing import (Pairing, act_pi, cobraiding_sides, det_value_from_action,
                         free_product, hopf_pairing_sides, pair, split_independence,
                         star_pairing_sides, top_w, weight_law_holds)
from dqg.scalars import ones, unit_vector, vadd, vneg


def T(F, *shift):
    return DiffOp.shift_op(F, shift)


def explicit_table(alg, i, j, k, l):
    """The four nontrivial lines of the generator table, spelled out
    independently of the R-matrix code."""
    F = alg.field
    n = alg.n
    shift = vneg(vadd(unit_vector(n, i), unit_vector(n, k)))
    qn = F.tau_pow(-1)        # q^{-1/n} = tau^{-1}
    if i == j == k == l:
        return DiffOp.shift_op(F, shift, F.q * qn)
    if i == j and k == l and i < k:
        return DiffOp.shift_op(F, shift, qn)
    if i == j and k == l and i > k:
        return DiffOp.shift_op(F, shift, qn * F.g(k, i))
    if i != j and (k, l) == (j, i):
        # <t_ji, t_ij> = q^{-1/n} h0(lam_i - lam_j)
        return DiffOp.shift_op(F, shift, qn * F.h0(j, i))
    return DiffOp.zero(F)


@pytest.mark.parametrize("n", [2, 3])
def test_generator_table(n, alg2, alg3):
    alg = alg2 if n == 2 else alg3
    for i, j, k, l in itertools.product(range(1, n + 1), repeat=4):
        assert pair(alg.t(i, j), alg.t(k, l)) == explicit_table(alg, i, j, k, l), (i, j, k, l)


def test_applied_off_diagonal_value(alg3):
    F = alg3.field
    v = pair(alg3.t(2, 1), alg3.t(1, 2))
    assert v.apply_to_one() == F.tau_pow(-1) * F.h0(1, 2)


@pytest.mark.parametrize("n", [2, 3])
def test_det_pairings(n, alg2, alg3):
    alg = alg2 if n == 2 else alg3
    F = alg.field
    det = alg.det()
    for i, j in itertools.product(range(1, n + 1), repeat=2):
        e = DiffOp.shift_op(F, vneg(vadd(ones(n), unit_vector(n, i)))) if i == j \
            else DiffOp.zero(F)
        assert pair(alg.t(i, j), det) == e
        assert pair(det, alg.t(i, j)) == e
    assert pair(det, det) == DiffOp.shift_op(F, ones(n, -2))


def test_action_oracle_on_det(alg2, alg3):
    for alg in (alg2, alg3):
        for i in range(1, alg.n + 1):
            x = alg.t(i, i)
            assert det_value_from_action(x) == pair(x, alg.det())
        assert act_pi(alg.det(), top_w(alg)) == top_w(alg)


def test_dinv_pairings(alg2):
    F = alg2.field
    D = alg2.dinv()
    assert pair(alg2.t(1, 1), D) == T(F, 0, 1)
    assert pair(D, alg2.t(2, 2)) == T(F, 1, 0)
    assert pair(alg2.t(1, 2), D).is_zero()
    assert pair(D, D) == T(F, 2, 2)
    # det * dinv pairs like the unit
    assert pair(alg2.t(1, 1), free_product(alg2.det(), D)) == T(F, -1, 0)


def test_minor_pairings_n3(alg3):
    F = alg3.field
    lead = F.q_pow(-1) * F.tau
    full = (-1, -1, -1)
    # <t_ii, xi^{i^}_{i^}> with the generator first
    assert pair(alg3.t(1, 1), xi(alg3, hat(3, 1), hat(3, 1))) == DiffOp.shift_op(F, full, lead)
    # different diagonal index: q^{1/n} T_{-omega(j^) - omega(i)}
    v = pair(alg3.t(1, 1), xi(alg3, hat(3, 2), hat(3, 2)))
    assert v == DiffOp.shift_op(F, (-2, 0, -1), F.tau)
    # mismatched off-diagonal indices vanish
    assert pair(alg3.t(1, 2), xi(alg3, hat(3, 1), hat(3, 3))).is_zero()


def test_split_independence_n2(alg2):
    atoms = [alg2.gen(i, j) for i in (1, 2) for j in (1, 2)] + [-1]
    for X in itertools.product(atoms, repeat=2):
        for a in itertools.product(atoms, repeat=2):
            assert split_independence(alg2, X, a).passed, (X, a)


def test_pairing_class_rejects_unknown_split(alg2):
    with pytest.raises(ValueError):
        Pairing(alg2, split="middle")


def test_weight_law(alg2):
    t = alg2.t
    for x in (t(1, 1), t(1, 2) * t(2, 1), alg2.det()):
        for y in (t(2, 2), t(2, 1) * t(1, 2), alg2.det()):
            assert weight_law_holds(alg2, x, y, pair(x, y))


def test_cobraiding_n2(alg2):
    atoms = [alg2.gen(i, j) for i in (1, 2) for j in (1, 2)]
    for x in atoms:
        for y in atoms:
            lhs, rhs = cobraiding_sides(alg2, x, y)
            assert lhs == rhs, (x, y)


def test_hopf_and_star_pairing_n2(alg2):
    t = alg2.t
    for X, a in [(t(1, 1), t(2, 2)), (t(1, 2), t(2, 1)), (alg2.det(), t(1, 1)),
                 (t(1, 1), alg2.dinv())]:
        lhs, rhs = hopf_pairing_sides(X, a)
        assert lhs == rhs
        lhs, rhs = star_pairing_sides(X, a)
        assert lhs == rhs
