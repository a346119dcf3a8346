from fractions import Fraction

import pytest

from qid.errors import (EvaluationDivisionByZero, NegativeExponentAtZero, NonDivisible, ParseError,
                        ZeroPolynomial)
from qid.identities import evaluate_side
from qid.identities.jtp import id1_lhs_cleared
from qid.laurent import (ONE, ZERO, Poly, RationalPoint, coeff_extract, degree_range, eval_rational,
                         exact_div, mono, parse, substitute, to_text, truncate)
from qid.qkit import q_binomial

P = parse
q, z = Poly.var("q"), Poly.var("z")


def test_add_examples():
    assert (1 + z) + (-z) == ONE
    p = P("3*a*q^2 - z^-1")
    assert p + ZERO == p
    assert (1 - q) + (q - q ** 2) == 1 - q ** 2


def test_mul_examples():
    assert (1 + z) * (1 - z) == 1 - z ** 2
    assert Poly.var("z", -1) * z == ONE
    assert (1 - q) * (1 - q ** 2) * (1 - q ** 3) == P("1 - q - q^2 + q^4 + q^5 - q^6")


def test_exact_div_examples():
    assert exact_div(z ** 2 + Poly.var("z", -1), 1 + z) == P("z^-1 - 1 + z")
    p = P("2*a*b^-1 + q^3*c")
    assert exact_div(p, ONE) == p
    with pytest.raises(NonDivisible):
        exact_div(1 + z ** 2, 1 + z)


def test_exact_div_multivariate():
    d = P("1 - a*q^2") * P("1 + z*q")
    n = d * P("c - b^2 + q^-1")
    assert exact_div(n, d) == P("c - b^2 + q^-1")
    with pytest.raises(NonDivisible):
        exact_div(n + ONE, d)


def test_substitute_examples():
    b = Poly.var("b")
    assert substitute(b ** 2 * q, "b", mono(q=3)) == q ** 7
    assert substitute(P("1 - c*q + c^2*q^3"), "c", 0) == ONE
    assert substitute(1 + q + q ** 2, "q", mono(q=2)) == P("1 + q^2 + q^4")
    with pytest.raises(NegativeExponentAtZero):
        substitute(P("c^-1"), "c", 0)


def test_coeff_extract_examples():
    p = P("1 + q*z^-1 - q + q*z")
    assert coeff_extract(p, "z", 0) == 1 - q
    assert coeff_extract(p, "z", 7).is_zero
    assert coeff_extract(1 - z ** 2, "z", 2) == -ONE


def test_truncate_examples():
    assert truncate(1 + q + q ** 3, "q", 2) == 1 + q
    qq3 = (1 - q) * (1 - q ** 2) * (1 - q ** 3)
    assert truncate(qq3, "q", 3) == P("1 - q - q^2")


def test_eval_examples():
    assert eval_rational(1 - z ** 2, RationalPoint(z=2)) == -3
    assert eval_rational(q_binomial(4, 2), RationalPoint(q=1)) == 6
    assert eval_rational(P("q^-2*a"), RationalPoint(q=Fraction(1, 3), a=-2)) == -18
    with pytest.raises(EvaluationDivisionByZero):
        eval_rational(Poly.var("z", -1), RationalPoint(z=0))


def test_degree_range_examples():
    assert degree_range(q * Poly.var("z", -1) + z, "z") == (-1, 1)
    assert degree_range(Poly.constant(5), "q") == (0, 0)
    with pytest.raises(ZeroPolynomial):
        degree_range(ZERO, "q")


@pytest.mark.parametrize("L", [1, 2, 5, 9])
def test_degree_range_id1(L):
    assert degree_range(id1_lhs_cleared(L), "z") == (-L, L + 1)
    assert degree_range(evaluate_side("id1", "lhs", {"L": L}), "z") == (-L, L)


def test_text_round_trip_and_order():
    p = P("q*z - 2*a^-1 + 7")
    assert to_text(p) == "-2*a^-1 + 7 + 1*q*z"
    assert parse(to_text(p)) == p
    assert to_text(ZERO) == "0"
    with pytest.raises(ParseError):
        parse("")
    with pytest.raises(ParseError):
        parse("1 + x")


def test_zero_coefficients_dropped():
    p = Poly({mono(q=1): 0, mono(z=2): 3})
    assert len(p) == 1 and p.coefficient(mono(z=2)) == 3
