import pytest

from liepoly.lie import AlgebraError, AlgebraSpec, E, basis
from liepoly.poly import Polynomial, monomials_of_degree
from liepoly.rep import (
    RepresentationContext, SwapPartition, UnsupportedError, all_partitions, bracket_fidelity, profile,
)
from liepoly.weyl import WeylOperator, apply, commutator, compose, parse_operator

from conftest import ctx_of


def op(text, nvars, n_x=None):
    return parse_operator(text, nvars, n_x)


def test_rho_sp4_case1():
    ctx = ctx_of("sp", 2, (1,))
    assert ctx.rho(E(1, 4, 4) + E(2, 3, 4)) == op("d1*d4 + x2*d3", 4)


def test_rho_canonical():
    ctx = ctx_of("gl", 3)
    for i in range(1, 4):
        for j in range(1, 4):
            assert ctx.rho(E(i, j, 3)) == WeylOperator.term(3, mul=(i,), diff=(j,))


def test_rho_sp4_case3():
    ctx = ctx_of("sp", 2, (1, 3))
    assert ctx.rho(E(2, 1, 4) - E(3, 4, 4)) == op("-x1*x2 - d3*d4", 4)


def test_rho_rejects_non_member():
    with pytest.raises(AlgebraError):
        ctx_of("sp", 2).rho(E(1, 2, 4))


def test_rho_double_family_subtracts_y_term():
    ctx = ctx_of("sl", 2, (), "B")
    assert ctx.rho(E(1, 2, 2)) == op("x1*d2 - y2*d3", 4, 2)


def test_delta_examples():
    ctx = ctx_of("so_even", 3, (1, 2, 3))
    assert ctx.delta == op("-x1*d4 - x2*d5 - x3*d6", 6)
    ctx = ctx_of("so_odd", 2, (2, 3))
    assert ctx.delta == op("d1^2 - 2*x2*d4 - 2*x3*d5", 5)
    ctx = ctx_of("sl", 3, (), "B")
    assert ctx.delta == op("d1*d4 + d2*d5 + d3*d6", 6, 3)


def test_delta_unsupported():
    for family in ("sp", "gl"):
        with pytest.raises(UnsupportedError):
            ctx_of(family, 2).delta
    with pytest.raises(UnsupportedError):
        ctx_of("sl", 3).eta


def test_profile():
    # T = {1..n} puts every pair (i, n+i) in T2
    p = profile(SwapPartition(4, frozenset({1, 2})), 2)
    assert p.T2 == {1, 2} and not (p.S1 or p.S2 or p.T1)
    p = profile(SwapPartition(4, frozenset({1, 2, 3, 4})), 2)
    assert p.T1 == {1, 2}
    p = profile(SwapPartition(6, frozenset()), 3)
    assert p.S1 == {1, 2, 3}
    p = profile(SwapPartition(5, frozenset({2, 5})), 2, offset=1)
    assert (p.T2, p.S2) == ({2}, {3})


def test_so_odd_requires_one_in_S():
    with pytest.raises(ValueError, match="symmetry"):
        ctx_of("so_odd", 2, (1,))


def test_partition_parse():
    assert SwapPartition.parse("1,3", 4).T == {1, 3}
    assert SwapPartition.parse("", 4).S == {1, 2, 3, 4}
    with pytest.raises(ValueError):
        SwapPartition.parse("5", 4)


@pytest.mark.parametrize("family,n", [("sp", 2), ("so_even", 2), ("so_odd", 2), ("sl", 3), ("gl", 2)])
def test_bracket_fidelity_all_partitions(family, n):
    spec = AlgebraSpec(family, n)
    for part in all_partitions(spec):
        assert bracket_fidelity(RepresentationContext(spec, part)) == []


def test_bracket_fidelity_double_family():
    spec = AlgebraSpec("sl", 3)
    for part in all_partitions(spec, "B"):
        assert bracket_fidelity(RepresentationContext(spec, part, "B")) == []


@pytest.mark.parametrize("args", [
    ("so_even", 2, (1, 2)), ("so_even", 3, (1,)), ("so_odd", 2, (2, 3)), ("so_odd", 3, (2,)),
    ("sl", 3, (1,), "B"),
])
def test_delta_eta_central(args):
    ctx = ctx_of(*args)
    for _, g in ctx.basis_ops:
        assert commutator(ctx.delta, g).is_zero()
        assert commutator(ctx.eta, g).is_zero()


@pytest.mark.parametrize("n", [2, 3])
def test_so_odd_delta_eta_commutator(n):
    ctx = ctx_of("so_odd", n, range(2, n + 2))
    nv = ctx.nvars
    rhs = WeylOperator.term(nv, mul=(1,), diff=(1,), c=4) + WeylOperator.scalar(nv, 2)
    for i in range(1, n + 1):
        rhs = rhs + WeylOperator.term(nv, mul=(n + i + 1,), diff=(n + i + 1,), c=4)
        rhs = rhs - WeylOperator.term(nv, mul=(i + 1,), diff=(i + 1,), c=4)
    assert compose(ctx.delta, ctx.eta) - compose(ctx.eta, ctx.delta) == rhs


@pytest.mark.parametrize("args", [("sp", 2, (1, 3)), ("so_even", 2, (1,)), ("so_odd", 2, (2,))])
def test_grading_stability_and_shift(args):
    ctx = ctx_of(*args)
    has_delta = ctx.spec.family != "sp"
    for d in range(4):
        for a in monomials_of_degree(ctx.nvars, d):
            k = ctx.grade_of_monomial(a)
            m = Polynomial.monomial(a)
            for _, g in ctx.basis_ops:
                img = apply(g, m)
                assert img.is_zero() or ctx.grade(img) == k
            if has_delta:
                for opr, shift in ((ctx.delta, -2), (ctx.eta, 2)):
                    img = apply(opr, m)
                    assert img.is_zero() or ctx.grade(img) == k + shift


def test_weights_of_highest_vectors():
    ctx = ctx_of("sp", 2, (1,))
    for k in range(4):
        assert ctx.weight(ctx.poly(f"x2^{k}")).coords == (-(k + 1), k)
    ctx = ctx_of("so_even", 3, (1, 2, 3))
    for k in range(4):
        assert ctx.weight(ctx.poly(f"x6^{k}")).coords == (0, k, -(k + 2))


def test_basis_ops_size():
    assert len(ctx_of("so_odd", 3, (2,)).basis_ops) == len(basis(AlgebraSpec("so_odd", 3)))
