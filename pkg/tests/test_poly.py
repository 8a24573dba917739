from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings

from liepoly.poly import (
    MAX_EXPONENT,
    ArityError,
    MixedGradeError,
    Polynomial,
    check_exponent,
    monomials_of_degree,
    monomials_of_weighted_degree,
    parse_polynomial,
)

from conftest import P, polynomials


def test_add_cancels():
    assert P("x1 + x2") + P("-x1") == P("x2")
    assert P("x1*x4 - x2*x3") + P("x2*x3") == P("x1*x4")


def test_add_zero_identity():
    p = P("3*x1^2 - 1/2*x4")
    assert p + Polynomial.zero(4) == p


def test_add_arity_mismatch():
    with pytest.raises(ArityError):
        P("x1", 2) + P("x1", 3)


def test_mul_square_of_u():
    u = P("x1*x4 - x2*x3")
    assert u * u == P("x1^2*x4^2 - 2*x1*x2*x3*x4 + x2^2*x3^2")
    assert u ** 2 == u * u


def test_mul_by_one_and_self():
    p = P("x1 + 2/3*x3")
    assert p * Polynomial.constant(4) == p
    assert P("x1") * P("x1") == P("x1^2")


def test_mul_matches_convolution_oracle():
    p, q = P("x1 + 2*x2 - x3*x4"), P("x1*x2 - 1/3 + x4^2")
    oracle = {}
    for (e1, c1), (e2, c2) in product(p.terms.items(), q.terms.items()):
        e = tuple(a + b for a, b in zip(e1, e2))
        oracle[e] = oracle.get(e, 0) + c1 * c2
    assert p * q == Polynomial(4, oracle)


def test_partial_derivative_examples():
    assert P("x1^2*x2").partial_derivative(1) == P("2*x1*x2")
    assert P("x1*x4").partial_derivative(3).is_zero()
    assert P("x1*x4 - x2*x3").partial_derivative(4) == P("x1")
    with pytest.raises(IndexError):
        P("x1").partial_derivative(5)


def test_grade_and_degree():
    assert P("x2^3").grade(S=[2, 3, 4], T=[1]) == 3
    assert P("x1*x4 - x2*x3").grade(S=[3, 4], T=[1, 2]) == 0
    assert Polynomial.constant(4).total_degree() == 0
    with pytest.raises(MixedGradeError):
        P("x1 + x3").grade(S=[3, 4], T=[1, 2])


def test_coefficient_and_scale():
    p = P("1/3*x1^3*x3 + x1*x5", 5)
    assert p.coefficient((3, 0, 1, 0, 0)) == Fraction(1, 3)
    assert p.coefficient((1, 0, 0, 0, 0)) == 0
    assert p.scale(3) == P("x1^3*x3 + 3*x1*x5", 5)
    assert p.scale(0).is_zero()


def test_no_zero_terms_stored():
    p = Polynomial(2, {(1, 0): 1, (0, 1): 0})
    assert len(p) == 1
    assert (P("x1", 2) - P("x1", 2)).terms == {}


def test_coefficients_normalized():
    p = P("2/4*x1", 2)
    assert p.coefficient((1, 0)) == Fraction(1, 2)
    assert p == P("1/2*x1", 2)


def test_exponent_overflow_fails_loudly():
    with pytest.raises(OverflowError):
        check_exponent((MAX_EXPONENT + 1,))


def test_parse_and_format_round_trip():
    text = "1/3*x1^3*x3 + x1*x5"
    p = parse_polynomial(text, 5)
    assert p.format() == text
    assert parse_polynomial(p.format(), 5) == p


def test_parse_double_family_names():
    p = parse_polynomial("x1*y2 - x2*y1", 4, 2)
    assert p.coefficient((1, 0, 0, 1)) == 1
    assert p.format(["x1", "x2", "y1", "y2"]) == "x1*y2 - x2*y1"


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_polynomial("x1 + ", 2)
    with pytest.raises((ValueError, IndexError)):
        parse_polynomial("x3", 2)


def test_monomial_enumeration_counts():
    assert sorted(monomials_of_degree(3, 1)) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert len(list(monomials_of_degree(4, 3))) == 20
    assert all(a + 3 * b == 6 for a, b in monomials_of_weighted_degree((1, 3), 6))


@settings(max_examples=60, deadline=None)
@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=60, deadline=None)
@given(polynomials(max_exp=2), polynomials(max_exp=2))
def test_leibniz(p, q):
    for i in (1, 2, 3):
        lhs = (p * q).partial_derivative(i)
        assert lhs == p.partial_derivative(i) * q + p * q.partial_derivative(i)


def test_partials_commute_on_degree_six():
    for d in range(7):
        for e in monomials_of_degree(3, d):
            m = Polynomial.monomial(e)
            for i, j in ((1, 2), (1, 3), (2, 3)):
                assert m.partial_derivative(i).partial_derivative(j) == \
                    m.partial_derivative(j).partial_derivative(i)
