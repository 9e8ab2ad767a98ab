import pytest
from hypothesis import given, settings, strategies as st

from dqg.hopf import antipode
from dqg.minors import xi
from dqg.nfcore import Algebra, format_element, simplify_mod_det
from dqg.parser import ParseError, parse_expr, parse_scalar, tokenize
from dqg.scalars import LAM, MU


def test_tokenize_positions():
    toks = tokenize("t[1, 2]  dinv")
    assert [t[1] for t in toks] == ["t", "[", 1, ",", 2, "]", "dinv", None]
    assert toks[6][2] == 9
    assert [t[0] for t in tokenize("  t \n\t")] == ["name", "end"]


def test_generators_and_products(alg2):
    t = alg2.t
    assert parse_expr(alg2, "t[1,2] t[1,1]") == t(1, 2) * t(1, 1)
    assert parse_expr(alg2, "t[1,2]*t[1,1]") == t(1, 2) * t(1, 1)
    assert parse_expr(alg2, " t[ 1 , 2 ]t[1,1] ") == t(1, 2) * t(1, 1)
    assert parse_expr(alg2, "t[1,1]^2") == t(1, 1) * t(1, 1)


def test_same_row_rule_prints_h_of_mu(alg2):
    x = parse_expr(alg2, "t[1,2] t[1,1]")
    F = alg2.field
    assert x == alg2.scalar(F.h(1, 2, MU)) * alg2.t(1, 1) * alg2.t(1, 2)
    assert format_element(x).endswith("t[1,1] t[1,2]")


def test_det_dinv_is_one(alg2, alg3):
    for alg in (alg2, alg3):
        assert format_element(simplify_mod_det(parse_expr(alg, "det dinv"))[0]) == "1"
        assert parse_expr(alg, "det^-1") == alg.dinv()


def test_antipode_axiom_example(alg2):
    x = parse_expr(alg2, "S(t[1,1]) t[1,1] + S(t[1,2]) t[2,1]")
    y, power = simplify_mod_det(x, cap=1)
    assert format_element(y) == "1" and power == 1


def test_operators_and_minors(alg3):
    assert parse_expr(alg3, "xi[12;23]") == xi(alg3, (1, 2), (2, 3))
    assert parse_expr(alg3, "xi[1,2;2,3]") == xi(alg3, (1, 2), (2, 3))
    assert parse_expr(alg3, "xi[;]") == alg3.one
    assert parse_expr(alg3, "S(t[1,2])") == antipode(alg3.t(1, 2))


def test_scalars(alg2):
    F = alg2.field
    assert parse_scalar(alg2, "q") == F.q
    assert parse_scalar(alg2, "tau^2") == F.q
    assert parse_scalar(alg2, "L1") == F.X(LAM, 1)
    assert parse_scalar(alg2, "M2") == F.X(MU, 2)
    assert parse_scalar(alg2, "(1 + I)^2") == 2 * F.i
    assert parse_scalar(alg2, "-3/2 + q^-1") == F.const(-3) / 2 + F.q.inverse()
    assert parse_expr(alg2, "ml(L1) t[1,1]") == alg2.ml(F.X(LAM, 1)) * alg2.t(1, 1)
    assert parse_expr(alg2, "mr(L1)") == alg2.scalar(F.X(MU, 1))


@pytest.mark.parametrize("text, pos", [
    ("t[1,3]", 4),
    ("t[0,1]", 2),
    ("t[1,", 4),
    ("(t[1,1]", 7),
    ("foo", 0),
    ("1 ? 2", 2),
    ("", 0),
    ("t[1,1] / t[1,2]", 7),
    ("ml(t[1,1])", 3),
    ("ml(M1)", 3),
    ("xi[21;12]", 3),
    ("xi[13;12]", 4),
    ("w3", 0),
    ("t[1,1]^-1", 0),
    ("1/0", 1),
    ("t[1,1] t[2,2])", 13),
])
def test_errors_report_positions(alg2, text, pos):
    with pytest.raises(ParseError) as exc:
        parse_expr(alg2, text)
    assert exc.value.pos == pos
    assert f"position {pos}" in str(exc.value)


ATOMS = ["t[1,1]", "t[1,2]", "t[2,1]", "t[2,2]", "dinv", "ml(L1)", "mr(q L2)", "2", "q", "I"]
A2 = Algebra(2)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.sampled_from(ATOMS), min_size=1, max_size=3), min_size=1, max_size=3),
       st.lists(st.sampled_from(["+", "-"]), min_size=3, max_size=3))
def test_printed_normal_forms_parse_back(terms, signs):
    text = " ".join(f"{signs[k]} {' '.join(term)}" for k, term in enumerate(terms))
    x = parse_expr(A2, text)
    assert parse_expr(A2, format_element(x)) == x
