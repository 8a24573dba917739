from fractions import Fraction

import pytest

from liepoly.singular import (
    CATALOGS, catalog, catalog_for_context, f_pq, find_all_singular, find_singular, is_singular,
    match_catalog, run_catalog,
)
from liepoly.weyl import apply

from conftest import ctx_of


def found_set(ctx, grades, D):
    return {ctx.fmt(sv.polynomial) for g in grades for sv in find_singular(ctx, g, D)}


def test_lemma_2_6_example():
    ctx = ctx_of("sp", 2, (1, 2))
    got = found_set(ctx, range(-2, 3), 2)  # x2 is swapped, so x2^k sits in grade -k
    expected = {ctx.fmt(ctx.poly(t).normalized()) for t in ("1", "x2", "x2^2", "x4", "x4^2", "x1*x4 - x2*x3")}
    assert got == expected


def test_sp4_case3_has_no_singular_vectors():
    assert find_all_singular(ctx_of("sp", 2, (1, 3)), 6) == []


def test_f_pq_instance():
    ctx = ctx_of("so_odd", 2, (2, 3))
    assert f_pq(2, 1, 1) == ctx.poly("1/3*x1^3*x3 + x1*x5")


@pytest.mark.parametrize("p", [1, 3, 5])
@pytest.mark.parametrize("q", range(4))
def test_f_pq_singular_and_harmonic_iff_p_is_one(p, q):
    ctx = ctx_of("so_odd", 2, (2, 3))
    f = f_pq(2, p, q)
    assert is_singular(ctx, f)
    assert apply(ctx.delta, f).is_zero() == (p == 1)


def test_so_odd_search_finds_f_and_eta_families():
    ctx = ctx_of("so_odd", 2, (2, 3))
    found = [sv.polynomial for sv in find_all_singular(ctx, 4)]
    assert f_pq(2, 1, 1).normalized() in found
    assert all(is_singular(ctx, f) for f in found)


@pytest.mark.parametrize("cid", sorted(CATALOGS))
def test_catalogs_match(cid):
    D = 4 if CATALOGS[cid].default_n == 2 else 3
    rep = run_catalog(cid, None, D)
    assert rep.verdict == "PASS", rep.to_dict()


def test_lemma_2_6_to_degree_four():
    assert run_catalog("lemma_2_6", None, 4).verdict == "PASS"


def test_perturbed_catalog_is_detected():
    ctx = ctx_of("sp", 2, (1, 2))
    found = find_all_singular(ctx, 3)
    expected = [p for e in catalog("lemma_2_6", ctx) for p in e.instances(3)]
    # drop one entry and add a non-singular one
    rep = match_catalog(ctx, found, expected[1:] + [ctx.poly("x1")])
    assert rep.verdict == "FAIL"
    assert rep.missing and rep.extra


def test_empty_matches_empty():
    ctx = ctx_of("sp", 2, (1, 3))
    assert match_catalog(ctx, [], []).verdict == "PASS"


def test_catalog_entries():
    ctx = ctx_of("sp", 3, (1, 2, 3))
    labels = " ".join(e.label for e in catalog("lemma_2_9", ctx))
    assert "x3" in labels and "x6" in labels
    lemma51 = catalog("lemma_5_1", n=2)
    inst = {ctx_of("sl", 2, (1, 2), "B").fmt(p) for e in lemma51 for p in e.instances(3)}
    assert "x2^2*y2" in inst
    with pytest.raises(KeyError):
        catalog("lemma_9_9")


def test_catalog_for_context():
    assert catalog_for_context(ctx_of("sp", 2, (1, 2))) == "lemma_2_6"
    assert catalog_for_context(ctx_of("sl", 3)) is None


def test_found_vectors_reverified_and_normalized():
    ctx = ctx_of("so_even", 2, (1,))
    for sv in find_all_singular(ctx, 4):
        assert is_singular(ctx, sv.polynomial)
        assert sv.polynomial.leading()[1] == 1


def test_weights_of_catalog_vectors():
    ctx = ctx_of("sp", 2, (1,))
    for k in range(1, 4):
        assert ctx.weight(ctx.poly(f"x2^{k}")).coords == (-(k + 1), k)
    n = 3
    ctx = ctx_of("so_even", n, range(1, n + 1))
    for k in range(1, 4):
        assert ctx.weight(ctx.poly(f"x6^{k}")).coords == (0, k, -(k + 2))
    ctx = ctx_of("so_odd", n, range(2, n + 2))
    for k in range(2, 5):
        w = ctx.weight(f_pq(n, 1, k - 1)).coords
        assert w == (0, k - 1, -2 * k)
