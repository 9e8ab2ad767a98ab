import itertools

from hypothesis import given, settings, strategies as st

from dqg.coalg import (DiffOp, TensorElement, apply_diffop_to_one, comult, comult_k, comult_leg,
                       counit, counit_leg)
from dqg.scalars import LAM, Field, unit_vector


def test_comult_generator(alg2):
    n = 2
    for i, j in itertools.product(range(1, n + 1), repeat=2):
        expected = None
        for k in range(1, n + 1):
            term = TensorElement.tensor(alg2.t(i, k), alg2.t(k, j))
            expected = term if expected is None else expected + term
        assert comult(alg2.t(i, j)) == expected


def test_comult_det(alg2, alg3):
    for alg in (alg2, alg3):
        d = alg.det()
        assert comult(d) == TensorElement.tensor(d, d)


def test_coassociativity_on_generators(alg2):
    for i, j in itertools.product(range(1, 3), repeat=2):
        D = comult(alg2.t(i, j))
        assert comult_leg(D, 1) == comult_leg(D, 2)
    assert comult_k(alg2.t(1, 2), 3) == comult_leg(comult(alg2.t(1, 2)), 2)


def test_counit_values(alg3):
    F = alg3.field
    for i, j in itertools.product(range(1, 4), repeat=2):
        e = counit(alg3.t(i, j))
        if i == j:
            assert e == DiffOp.shift_op(F, tuple(-x for x in unit_vector(3, i)))
        else:
            assert e.is_zero()
    f = F.h(1, 2)
    assert counit(alg3.ml(f)) == DiffOp(F, {(0, 0, 0): f})
    assert counit(alg3.mr(f)) == DiffOp(F, {(0, 0, 0): f})
    assert counit(alg3.det()) == DiffOp.shift_op(F, (-1, -1, -1))


def test_counit_axiom(alg2, alg3):
    for alg in (alg2, alg3):
        t = alg.t
        for x in [t(1, 2), t(2, 2), alg.det(), t(2, 1) * t(1, 1) + alg.ml(alg.field.q) * t(1, 2) * t(2, 2)]:
            D = comult(x)
            assert counit_leg(D, 1) == x
            assert counit_leg(D, 2) == x


def test_comult_is_multiplicative(alg2):
    t = alg2.t
    x, y = t(1, 2), t(2, 1)
    assert comult(x * y) == comult(x) * comult(y)


def test_comult_and_counit_kill_relations(alg2, alg3):
    for alg in (alg2, alg3):
        for label, rel in alg.relation_instances():
            elt = _unreduced(alg, rel)
            assert comult(elt).is_zero(), label
            assert counit(elt).is_zero(), label


def _unreduced(alg, terms):
    # an Element-like object whose to_free is the raw relation
    class Raw:
        pass
    raw = Raw()
    raw.alg = alg
    raw.to_free = lambda: terms
    return raw


def test_apply_diffop_to_one(alg2):
    F = alg2.field
    assert apply_diffop_to_one(DiffOp.shift_op(F, (3, -1))) == 1
    assert apply_diffop_to_one(counit(alg2.t(1, 1))) == 1


F3 = Field(3)
shifts = st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2))
coeffs = st.sampled_from([F3.one, F3.h(1, 2), F3.q - F3.h(2, 3), F3.X(LAM, 1)])


@settings(max_examples=30, deadline=None)
@given(coeffs, shifts, coeffs, shifts, coeffs, shifts)
def test_diffop_composition_associative(f, a, g, b, h, c):
    A, B, C = (DiffOp(F3, {a: f}), DiffOp(F3, {b: g}), DiffOp(F3, {c: h}))
    assert (A * B) * C == A * (B * C)


@settings(max_examples=30, deadline=None)
@given(coeffs, shifts, coeffs, shifts)
def test_diffop_antipode_reverses_products(f, a, g, b):
    A, B = DiffOp(F3, {a: f}), DiffOp(F3, {b: g})
    assert (A * B).antipode() == B.antipode() * A.antipode()
    assert A.antipode().antipode() == A
    assert A.star().star() == A
