from fractions import Fraction

import pytest
from hypothesis import given, settings

from liepoly.form import (
    CAVEAT, adjoint_check, contravariance_sweep, form, gram, irreducibility_certificate, monomial_norm,
    so_odd_adjoint_sweep,
)
from liepoly.lie import E, LieElement
from liepoly.poly import ArityError, Polynomial, monomials_of_degree

from conftest import ctx_of, polynomials


def test_monomial_values():
    ctx = ctx_of("gl", 4, (1,))
    x = ctx.poly
    assert form(ctx, x("x1^2*x2"), x("x1^2*x2")) == 2
    assert form(ctx, x("x1"), x("x1")) == -1
    assert form(ctx, x("x1"), x("x2")) == 0
    assert monomial_norm((3, 0, 2, 0), {1}) == -12


def test_arity_mismatch():
    ctx = ctx_of("gl", 4)
    with pytest.raises(ArityError):
        form(ctx, Polynomial.constant(3), Polynomial.constant(4))


@settings(max_examples=50, deadline=None)
@given(polynomials(4, 2, 4), polynomials(4, 2, 4))
def test_symmetric(p, q):
    ctx = ctx_of("gl", 4, (2, 3))
    assert form(ctx, p, q) == form(ctx, q, p)


def test_gram_is_diagonal():
    ctx = ctx_of("gl", 3, (2,))
    mons = list(monomials_of_degree(3, 2))
    G = gram(ctx, mons)
    for i, e in enumerate(mons):
        for j in range(len(mons)):
            assert G[i][j] == (monomial_norm(e, {2}) if i == j else 0)
    assert G[mons.index((0, 2, 0))][mons.index((0, 2, 0))] == 2


def test_adjoint_examples():
    ctx = ctx_of("gl", 4, (1,))
    for a in [(1, 0, 0, 0), (2, 1, 0, 0), (0, 0, 3, 1)]:
        assert adjoint_check(ctx, E(1, 1, 4), a, a)
    assert adjoint_check(ctx, LieElement(4), (1, 0, 0, 0), (0, 1, 0, 0))
    sp = ctx_of("sp", 2, (1, 2))
    assert adjoint_check(sp, E(1, 3, 4), (0, 0, 1, 0), (1, 0, 0, 0))


def test_contravariance_sweep_small():
    r = contravariance_sweep(3, 3)
    assert r.partitions == 8 and r.generators == 9 and r.verdict == "PASS"


def test_so_odd_sweep():
    r = so_odd_adjoint_sweep(2, 3)
    assert r.verdict == "PASS" and r.pairs > 0


def test_certificate_single_line():
    ctx = ctx_of("so_even", 2, (1, 2))
    c = irreducibility_certificate(ctx, -1, 5, harmonic="delta")
    d = c.to_dict()
    assert d["verdict"] == "PASS"
    assert d["singular_witnesses"] == ["x2"] and d["norms"] == ["-1"]
    assert "truncation-level" in d["caveat"] and d["caveat"] == CAVEAT


def test_certificate_two_lines_fails():
    ctx = ctx_of("sp", 2, (1, 2))
    c = irreducibility_certificate(ctx, 0, 4)
    assert c.verdict == "FAIL"
    assert set(c.witnesses) == {"1", "x1*x4 - x2*x3"}


def test_certificate_zero_module_is_vacuous_fail():
    ctx = ctx_of("sl", 2, (1, 2), "B")
    c = irreducibility_certificate(ctx, (1, 0), 4, harmonic="delta")
    assert c.verdict == "FAIL" and c.witnesses == []
