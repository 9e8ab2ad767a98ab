import pytest

from dqg.minors import (cofactor_check, eta, hall_littlewood_check, hall_littlewood_sides,
                        laplace_check, laplace_sides, normalizer, normalizer_closed_form,
                        permutations, subsets, xi)
from dqg.scalars import Field


def test_single_minors(alg3):
    for i in range(1, 4):
        for j in range(1, 4):
            assert xi(alg3, (i,), (j,)) == alg3.t(i, j)
            assert eta(alg3, (i,), (j,)) == alg3.t(i, j)


def test_full_minor_is_det(alg2, alg3):
    for alg in (alg2, alg3):
        full = tuple(range(1, alg.n + 1))
        assert xi(alg, full, full) == alg.det()


def test_two_by_two_expansion(alg2):
    F = alg2.field
    g = alg2.gen
    expected = alg2.from_free([(F.one, (g(1, 1), g(2, 2))), (-F.h(2, 1), (g(2, 1), g(1, 2)))])
    assert xi(alg2, (1, 2), (1, 2)) == expected


def test_xi_equals_eta_n3(alg3):
    for r in range(4):
        for I in subsets(3, r):
            for J in subsets(3, r):
                assert xi(alg3, I, J) == eta(alg3, I, J), (I, J)


def test_rho_independence_r2(alg3):
    for I in subsets(3, 2):
        for J in subsets(3, 2):
            assert xi(alg3, I, J, (2, 1)) == xi(alg3, I, J)
            assert eta(alg3, I, J, (2, 1)) == xi(alg3, I, J)


def test_mismatched_sizes_give_zero(alg3):
    assert xi(alg3, (1,), (1, 2)).is_zero()


def test_bad_subsets_rejected(alg3):
    with pytest.raises(ValueError):
        xi(alg3, (2, 1), (1, 2))
    with pytest.raises(ValueError):
        xi(alg3, (1, 4), (1, 2))


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_normalizer_closed_form(r):
    F = Field(4)
    for I in subsets(4, r):
        assert normalizer(F, I) == normalizer_closed_form(F, r)


def test_hall_littlewood_small_cases():
    lhs, rhs = hall_littlewood_sides(1)
    assert lhs == 1 and rhs == 1
    lhs, rhs = hall_littlewood_sides(2)
    F = lhs.field
    assert lhs == 1 + F.tau
    for r in (3, 4):
        assert hall_littlewood_check(r)
    with pytest.raises(ValueError):
        hall_littlewood_check(6)


def test_laplace_two_term(alg2):
    lhs, rhs = laplace_sides(alg2, (1, 2), (1,), (2,), 1)
    assert lhs == rhs
    assert lhs == xi(alg2, (1, 2), (1, 2))


def test_laplace_overlap_gives_zero(alg3):
    for which in (1, 2):
        lhs, rhs = laplace_sides(alg3, (1, 2), (1,), (1,), which)
        assert lhs.is_zero() and rhs.is_zero()


def test_laplace_single_column_n3(alg3):
    for I in subsets(3):
        for J1 in subsets(3, 1):
            if not I:
                continue
            for J2 in subsets(3, len(I) - 1):
                assert laplace_check(alg3, I, J1, J2, 1)
                assert laplace_check(alg3, I, J1, J2, 2)


def test_laplace_size_mismatch(alg2):
    with pytest.raises(ValueError):
        laplace_sides(alg2, (1, 2), (1,), (), 1)


def test_cofactor_expansions(alg2):
    for v in (1, 2, 3, 4):
        for i in (1, 2):
            for j in (1, 2):
                assert cofactor_check(alg2, i, j, v)
    with pytest.raises(ValueError):
        cofactor_check(alg2, 1, 1, 5)


def test_permutations_count():
    assert len(permutations(3)) == 6
    assert permutations(3)[0] == (1, 2, 3)
