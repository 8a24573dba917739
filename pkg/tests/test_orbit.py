import pytest

from liepoly.linalg import span_rank
from liepoly.orbit import dimension_identity_check, orbit_span, parity_split_check, sp4_orbit_bases
from liepoly.poly import Polynomial

from conftest import ctx_of


def same_span(a, b):
    A, B = [p.terms for p in a], [p.terms for p in b]
    return span_rank(A) == span_rank(B) == span_rank(A + B)


def test_orbit_of_zero():
    ctx = ctx_of("sp", 2, (1, 2))
    o = orbit_span(ctx, Polynomial.zero(4), 4)
    assert o.dimension() == 0 and o.saturated


def test_lemma_2_7_orbits():
    ctx = ctx_of("sp", 2, (1, 2))
    o1 = orbit_span(ctx, Polynomial.constant(4), 8)
    ou = orbit_span(ctx, ctx.poly("x1*x4 - x2*x3"), 8)
    assert o1.saturated and ou.saturated
    for m in range(5):
        plus, minus = sp4_orbit_bases(m)
        assert same_span(o1.slice_basis(2 * m), plus)
        assert same_span(ou.slice_basis(2 * m), minus)
        assert not o1.slice_basis(2 * m + 1)


def test_orbit_layer_cap_reports_inconclusive():
    ctx = ctx_of("sp", 2, (1, 2))
    o = orbit_span(ctx, Polynomial.constant(4), 8, max_layers=1)
    assert o.verdict == "INCONCLUSIVE"


def test_dimension_identity():
    r = dimension_identity_check(8, 6)
    assert r.verdict == "PASS"


@pytest.mark.parametrize("n", [2, 3])
def test_parity_split(n):
    r = parity_split_check(n, bound=3 if n == 3 else 5)
    assert r.verdict == "PASS"
    assert all(row.get("contained", True) for row in r.rows)
