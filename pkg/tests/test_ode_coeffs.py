"""Coefficient triangle of the closed derivative family: recurrence
construction, the three explicit entry formulas, boundaries, degree
shape, and the λ -> 0 constant terms."""

from fractions import Fraction

import pytest

from degenbern import (
    DomainError,
    EvaluatedDomain,
    SYMBOLIC,
    coeff_explicit_falling,
    coeff_explicit_stirling,
    coeff_limit_at_zero,
    coeff_triangle,
    coeff_unrolled_recurrence,
    falling_factorial,
    poly_eval,
    render_poly_text,
    stirling1_signed,
)


def test_rows_one_to_three_canonical():
    t = coeff_triangle(3, SYMBOLIC)
    assert [render_poly_text(v) for v in t.row(1)] == ["λ", "1"]
    assert [render_poly_text(v) for v in t.row(2)] == ["λ+λ^2", "1+3*λ", "2"]
    assert [render_poly_text(v) for v in t.row(3)] == [
        "2*λ+3*λ^2+λ^3",
        "2+9*λ+7*λ^2",
        "6+12*λ",
        "6",
    ]


def test_boundary_entries():
    t = coeff_triangle(8, SYMBOLIC)
    lam = SYMBOLIC.lam
    fact = 1
    for N in range(1, 9):
        fact *= N
        assert t.value(N, N) == Fraction(fact)
        assert t.value(0, N) == falling_factorial(N + lam - 1, N)


def test_degree_shape():
    t = coeff_triangle(10, SYMBOLIC)
    for N in range(1, 11):
        for i in range(N + 1):
            assert t.value(i, N).degree == N - i


def test_table_bounds():
    t = coeff_triangle(3, SYMBOLIC)
    with pytest.raises(ValueError):
        t.value(0, 4)
    with pytest.raises(ValueError):
        t.value(4, 3)
    with pytest.raises(ValueError):
        t.value(-1, 2)


def test_explicit_routes_match_recurrence():
    t = coeff_triangle(7, SYMBOLIC)
    for N in range(1, 8):
        for i in range(N + 1):
            ref = t.value(i, N)
            assert coeff_explicit_stirling(i, N, SYMBOLIC) == ref
            assert coeff_explicit_falling(i, N, SYMBOLIC) == ref
            if 1 <= i <= N - 1:
                assert coeff_unrolled_recurrence(i, N, SYMBOLIC) == ref


def test_unrolled_range_validation():
    with pytest.raises(ValueError):
        coeff_unrolled_recurrence(0, 3, SYMBOLIC)
    with pytest.raises(ValueError):
        coeff_unrolled_recurrence(3, 3, SYMBOLIC)


def test_evaluated_domain_matches_symbolic_eval():
    lam = Fraction(5, 3)
    dom = EvaluatedDomain(lam)
    t_eval = coeff_triangle(6, dom)
    t_sym = coeff_triangle(6, SYMBOLIC)
    for N in range(1, 7):
        for i in range(N + 1):
            assert t_eval.value(i, N) == poly_eval(t_sym.value(i, N), lam)


def test_falling_route_rejects_lambda_zero():
    dom = EvaluatedDomain(Fraction(0))
    with pytest.raises(DomainError):
        coeff_explicit_falling(1, 3, dom)
    # the stirling route handles λ = 0 fine and lands on the limit values
    assert coeff_explicit_stirling(1, 3, dom) == Fraction(2)


def test_constant_terms_are_signed_first_kind():
    t = coeff_triangle(9, SYMBOLIC)
    s1 = stirling1_signed(9)
    for N in range(1, 10):
        for i in range(N + 1):
            expected = coeff_limit_at_zero(i, N, s1)
            assert poly_eval(t.value(i, N), Fraction(0)) == expected
            sign = -1 if (N + i) % 2 else 1
            fact = 1
            for m in range(1, i + 1):
                fact *= m
            assert expected == sign * fact * s1.value(N, i)
