from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from liepoly.linalg import ExactMatrix, nullspace, rank, sum_and_intersection
from liepoly.poly import Polynomial
from liepoly.slices import (
    SliceCapExceeded, SliceEscapeError, SliceSpec, adapted_weights, enumerate_slice, joint_kernel,
    monomials_up_to, operator_matrix,
)
from liepoly.weyl import WeylOperator, apply

from conftest import ctx_of


@pytest.mark.parametrize("m", range(9))
def test_sp4_grade_zero_dimension(m):
    ctx = ctx_of("sp", 2, (1, 2))
    assert len(enumerate_slice(SliceSpec(ctx, 0, 2 * m))) == (m + 1) ** 2


def test_canonical_degree_one():
    ctx = ctx_of("gl", 3)
    got = enumerate_slice(SliceSpec(ctx, 1, 1)).monomials
    assert set(got) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}


def test_double_family_slice():
    ctx = ctx_of("sl", 2, (), "B")
    got = enumerate_slice(SliceSpec(ctx, (0, 1), 1)).monomials
    assert set(got) == {(0, 0, 1, 0), (0, 0, 0, 1)}
    with pytest.raises(ValueError):
        SliceSpec(ctx, 0, 1)


def test_slice_is_grlex_sorted_and_json():
    ctx = ctx_of("sp", 2, (1, 2))
    b = enumerate_slice(SliceSpec(ctx, 0, 2))
    assert list(b.monomials) == sorted(b.monomials, key=lambda e: (sum(e), e), reverse=True)
    assert b.to_json().startswith("[[")


def test_cap():
    ctx = ctx_of("sp", 2, (1, 2))
    with pytest.raises(SliceCapExceeded):
        enumerate_slice(SliceSpec(ctx, 0, 8), cap=5)


def test_operator_matrix_zero_and_identity():
    ctx = ctx_of("sp", 2, (1, 2))
    b = enumerate_slice(SliceSpec(ctx, 0, 4))
    Z = operator_matrix(WeylOperator.zero(4), b, b)
    assert Z.is_zero() and rank(Z) == 0
    I = operator_matrix(WeylOperator.identity(4), b, b)
    assert I == ExactMatrix.identity(len(b))
    assert nullspace(I) == []


def test_delta_matrix_matches_hand_differentiation():
    ctx = ctx_of("so_even", 2, (1, 2))  # Delta = -x1 d3 - x2 d4
    dom = enumerate_slice(SliceSpec(ctx, 0, 2))
    cod = enumerate_slice(SliceSpec(ctx, -2, 2))
    M = operator_matrix(ctx.delta, dom, cod)
    idx = cod.index
    for j, e in enumerate(dom.monomials):
        img = apply(ctx.delta, Polynomial.monomial(e))
        col = M.column(j)
        assert {cod.monomials[i]: c for i, c in enumerate(col) if c} == dict(img.terms)
        assert all(f in idx for f in img.terms)


def test_operator_matrix_escape():
    ctx = ctx_of("so_even", 2, (1, 2))
    dom = enumerate_slice(SliceSpec(ctx, 0, 2))
    with pytest.raises(SliceEscapeError):
        operator_matrix(ctx.delta, dom, dom)


def test_rank_and_nullity():
    assert rank(ExactMatrix(3, 3)) == 0
    M = ExactMatrix(2, 3, [[1, 2, 3], [2, 4, 6]])
    ns = nullspace(M)
    assert rank(M) == 1 and len(ns) == 2
    for v in ns:
        assert next(c for c in v if c) == 1
        assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in [[1, 2, 3], [2, 4, 6]])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5))
def test_rank_plus_nullity(rows):
    M = ExactMatrix(len(rows), 4, rows)
    assert rank(M) + len(nullspace(M)) == 4


def test_sum_and_intersection():
    U = [[1, 0, 0], [0, 1, 0]]
    V = [[0, 1, 0], [0, 0, 1]]
    assert sum_and_intersection(U, V) == (3, 1)
    assert sum_and_intersection(U, []) == (2, 0)


def test_joint_kernel_of_nothing_is_everything():
    ctx = ctx_of("sp", 2, (1, 2))
    mons = monomials_up_to(ctx, 0, 2)
    assert len(joint_kernel([], mons)) == len(mons)


def test_adapted_weights_make_delta_homogeneous():
    ctx = ctx_of("so_odd", 2, (2, 3))
    w = adapted_weights(ctx)
    # d1^2 and x2 d4 shift by the same weighted amount
    assert w[0] * 2 == w[3] - w[1]
    assert adapted_weights(ctx_of("sp", 2)) == (1, 1, 1, 1)
