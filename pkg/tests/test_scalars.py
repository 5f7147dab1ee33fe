"""Exact scalar layer: rational parsing/serialization, the λ-polynomial
ring, domains, and the canonical renderers."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from degenbern import (
    DomainError,
    EvaluatedDomain,
    LAMBDA,
    LambdaPoly,
    Rational,
    SYMBOLIC,
    domain_from_string,
    poly_eval,
    rational_from_string,
    rational_to_string,
    render_poly_latex,
    render_poly_text,
    scalar_from_json,
    scalar_to_json,
    scalar_to_latex,
    scalar_to_text,
)


def test_rational_parse_and_render():
    assert rational_from_string("3/4") == Fraction(3, 4)
    assert rational_from_string("-19/30") == Fraction(-19, 30)
    assert rational_from_string("7") == Fraction(7)
    assert rational_from_string("+2/6") == Fraction(1, 3)
    assert rational_to_string(Fraction(1, 3)) == "1/3"
    assert rational_to_string(Fraction(-4)) == "-4"
    assert rational_to_string(Fraction(2, 6)) == "1/3"


@pytest.mark.parametrize("bad", ["", "1.5", "a/b", "1/0", "1//2", "1 / 2", "2/-3"])
def test_rational_parse_rejects(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        rational_from_string(bad)


def test_rational_roundtrip_is_identity():
    for num in range(-12, 13):
        for den in range(1, 9):
            q = Fraction(num, den)
            assert rational_from_string(rational_to_string(q)) == q


def test_lambda_poly_basics():
    p = LambdaPoly((1, 3))
    assert p.degree == 1
    assert p.coefficient(0) == 1
    assert p.coefficient(1) == 3
    assert p.coefficient(5) == 0
    assert LambdaPoly().degree == -1
    assert not LambdaPoly()
    assert LambdaPoly((0, 0)) == LambdaPoly()
    assert LambdaPoly.constant(Fraction(2, 4)).constant_term == Fraction(1, 2)
    assert LAMBDA == LambdaPoly((0, 1))


def test_lambda_poly_ring_ops():
    lam = LAMBDA
    one = LambdaPoly.constant(1)
    assert (lam + one) * (lam - one) == lam * lam - one
    assert (one + lam) ** 3 == LambdaPoly((1, 3, 3, 1))
    assert lam**0 == one
    assert 2 * lam == lam + lam
    assert lam - lam == LambdaPoly()
    assert (lam * 6) / Fraction(3) == 2 * lam
    assert -(lam - one) == one - lam


def test_lambda_poly_constant_equality_with_rationals():
    assert LambdaPoly.constant(Fraction(5, 3)) == Fraction(5, 3)
    assert LambdaPoly((Fraction(5, 3), 1)) != Fraction(5, 3)
    assert hash(LambdaPoly.constant(Fraction(5, 3))) == hash(Fraction(5, 3))


def test_shifted_down():
    p = LambdaPoly((0, 0, 3, 1))
    assert p.shifted_down(2) == LambdaPoly((3, 1))
    assert p.shifted_down(0) == p
    with pytest.raises(ArithmeticError):
        LambdaPoly((1, 2)).shifted_down(1)


def test_poly_eval():
    p = LambdaPoly((Fraction(-1, 6), 0, Fraction(1, 6)))
    assert poly_eval(p, Fraction(0)) == Fraction(-1, 6)
    assert poly_eval(p, Fraction(1)) == 0
    assert poly_eval(p, Fraction(1, 2)) == Fraction(-1, 8)
    assert poly_eval(Fraction(3, 7), Fraction(9)) == Fraction(3, 7)


small_rationals = st.fractions(
    min_value=-10, max_value=10, max_denominator=12
)
small_polys = st.lists(small_rationals, min_size=0, max_size=5).map(
    lambda cs: LambdaPoly(tuple(cs))
)


@given(small_polys, small_polys, small_polys)
def test_poly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(small_polys, small_rationals)
def test_eval_is_ring_homomorphism(p, x):
    q = LambdaPoly((1, 2, 1))
    assert poly_eval(p * q, x) == poly_eval(p, x) * poly_eval(q, x)
    assert poly_eval(p + q, x) == poly_eval(p, x) + poly_eval(q, x)


def test_render_text_canonical():
    assert render_poly_text(LambdaPoly()) == "0"
    assert render_poly_text(LambdaPoly.constant(5)) == "5"
    assert render_poly_text(LAMBDA) == "λ"
    assert render_poly_text(-LAMBDA) == "-λ"
    assert render_poly_text(LambdaPoly((1, 3))) == "1+3*λ"
    assert render_poly_text(LambdaPoly((2, 9, 7))) == "2+9*λ+7*λ^2"
    assert render_poly_text(LambdaPoly((0, 1, 1))) == "λ+λ^2"
    p = LambdaPoly((Fraction(-1, 6), 0, Fraction(1, 6)))
    assert render_poly_text(p) == "-1/6+1/6*λ^2"
    assert render_poly_text(LambdaPoly((0, 0, Fraction(3, 4)))) == "3/4*λ^2"


def test_render_latex_canonical():
    assert render_poly_latex(LambdaPoly((2, 9, 7))) == r"2+9\lambda+7\lambda^{2}"
    assert render_poly_latex(LAMBDA) == r"\lambda"
    p = LambdaPoly((Fraction(-1, 6), 0, Fraction(1, 6)))
    assert render_poly_latex(p) == r"-\frac{1}{6}+\frac{1}{6}\lambda^{2}"
    assert scalar_to_latex(Fraction(-2, 3)) == r"-\frac{2}{3}"
    assert scalar_to_latex(Fraction(4)) == "4"


def test_scalar_json_roundtrip():
    assert scalar_to_json(Fraction(-7, 2)) == "-7/2"
    assert scalar_to_json(LambdaPoly((1, 3))) == ["1", "3"]
    assert scalar_from_json("-7/2") == Fraction(-7, 2)
    assert scalar_from_json(["1", "3"]) == LambdaPoly((1, 3))
    p = LambdaPoly((Fraction(2, 3), 0, Fraction(-1, 6)))
    assert scalar_from_json(scalar_to_json(p)) == p
    assert scalar_to_text(p) == render_poly_text(p)
    assert scalar_to_text(Fraction(1, 3)) == "1/3"


def test_domains():
    assert SYMBOLIC.describe() == "sym"
    assert SYMBOLIC.coerce(Fraction(1, 2)) == LambdaPoly.constant(Fraction(1, 2))
    dom = EvaluatedDomain(Fraction(1, 2))
    assert dom.describe() == "1/2"
    assert dom.lam == Fraction(1, 2)
    with pytest.raises(DomainError):
        dom.coerce(LAMBDA)
    assert domain_from_string("sym") == SYMBOLIC
    assert domain_from_string("-1/3") == EvaluatedDomain(Fraction(-1, 3))
    assert domain_from_string("1/2") != domain_from_string("1/3")


def test_rational_alias_is_exact():
    assert Rational(1, 3) + Rational(1, 6) == Rational(1, 2)
