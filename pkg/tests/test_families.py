import pytest

from liepoly.families import FAMILIES, admissible, enumerate_family, family_context, verify_family
from liepoly.linalg import span_rank


def normalized_set(ctx, polys):
    return {ctx.fmt(p.normalized()) for p in polys}


def test_f_3_12_small_example():
    ctx = family_context("F_3_12", 2)
    got = set()
    for d in range(4):
        got |= normalized_set(ctx, enumerate_family("F_3_12", 2, 1, d))
    u = ctx.poly("x1*x4 - x2*x3")
    expected = normalized_set(ctx, [ctx.poly("x3"), ctx.poly("x4"), ctx.poly("x3") * u, ctx.poly("x4") * u])
    assert got == expected
    for p in (ctx.poly(t) for t in got):
        from liepoly.weyl import apply

        assert apply(ctx.eta, p).is_zero()


def test_lemma_2_7_families_at_degree_two():
    ctx = family_context("F_2_17", 2)
    plus = enumerate_family("F_2_17", 2, 0, 2)
    minus = enumerate_family("F_2_18", 2, 0, 2)
    assert normalized_set(ctx, plus) == {"x1*x3", "x2*x4", "x1*x4 + x2*x3"}
    assert normalized_set(ctx, minus) == {"x1*x4 - x2*x3"}


@pytest.mark.parametrize("m", range(7))
def test_lemma_2_7_counts(m):
    plus = enumerate_family("F_2_17", 2, 0, 2 * m)
    minus = enumerate_family("F_2_18", 2, 0, 2 * m)
    assert len(plus) + len(minus) == (m + 1) ** 2
    assert span_rank([p.terms for p in plus + minus]) == (m + 1) ** 2


def test_admissibility_constraints():
    # k_{i,j} k_t = 0 for i < j < t
    assert not admissible((0, 0, 1), {(1, 2): 1})
    assert admissible((1, 0, 0), {(2, 3): 1})
    # crossing pairs i < i1, j > j1 are excluded
    assert not admissible((0, 0, 0, 0), {(1, 4): 1, (2, 3): 1})
    assert admissible((0, 0, 0, 0), {(1, 2): 1, (3, 4): 1})


@pytest.mark.parametrize("family,n,grade,d,s", [
    ("F_3_13", 2, -2, 4, None), ("F_3_12", 3, 1, 3, None), ("F_3_23", 2, -1, 3, None),
    ("F_3_25", 3, -2, 3, 1), ("F_4_2", 2, 0, 4, None), ("F_4_3", 2, 1, 4, 1),
    ("F_5_1", 2, (-2, 1), 3, None), ("F_5_2", 2, (1, 1), 2, None), ("F_5_4", 2, (-1, 1), 4, None),
    ("F_5_5", 3, (-2, 1), 4, 1),
])
def test_verify_family(family, n, grade, d, s):
    r = verify_family(family, n, grade, d, s)
    assert r.verdict == "PASS", r.to_dict()
    assert r.dims["elements"] == r.dims["rank"] == r.dims["target"]


def test_f_3_12_negative_grade_is_empty():
    assert enumerate_family("F_3_12", 2, -1, 3) == []
    assert verify_family("F_3_12", 2, -1, 3).verdict == "PASS"


def test_orbit_target_needs_basis():
    with pytest.raises(ValueError):
        verify_family("F_2_17", 2, 0, 2)


def test_unknown_family():
    with pytest.raises(KeyError):
        enumerate_family("F_9_9", 2, 0, 0)
    assert len(FAMILIES) == 12
