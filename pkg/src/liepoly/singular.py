"""Brute-force singular vectors and the closed-form catalogs they are compared with.

A singular vector is a weight vector killed by every positive root vector.
Cartan elements act diagonally on monomials here, so each grade is split into
monomial weight spaces and the joint kernel of the positive root operators is
computed exactly inside each one.  The search space is "all monomials of the
grade with total degree <= D"; singular vectors need not be homogeneous in
total degree (so(2n+1) has ``x1^3*x3/3 + x1*x5``), and the truncated kernel
contains exactly the singular vectors whose terms all have degree <= D.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable, Iterator

from .lie import AlgebraSpec, WeightVector
from .linalg import span_rank
from .poly import Polynomial
from .rep import RepresentationContext
from .slices import DEFAULT_MONOMIAL_CAP, joint_kernel, monomials_up_to
from .weyl import apply


@dataclass(frozen=True)
class SingularVector:
    polynomial: Polynomial
    weight: WeightVector
    grade: object
    space_dim: int = 1

    def to_dict(self, ctx: RepresentationContext) -> dict:
        g = list(self.grade) if isinstance(self.grade, tuple) else self.grade
        return {
            "polynomial": ctx.fmt(self.polynomial),
            "weight": self.weight.as_list(),
            "grade": g,
            "space_dim": self.space_dim,
        }


def is_singular(ctx: RepresentationContext, f: Polynomial) -> bool:
    if f.is_zero():
        return False
    try:
        ctx.weight(f)
    except ValueError:
        return False
    return all(apply(op, f).is_zero() for op in ctx.positive_ops)


def grades_up_to(ctx: RepresentationContext, max_degree: int) -> list:
    if ctx.model == "B":
        return [(l1, l2) for l2 in range(max_degree + 1)
                for l1 in range(-(max_degree - l2), max_degree - l2 + 1)]
    return list(range(-max_degree, max_degree + 1))


def find_singular(ctx: RepresentationContext, grade, max_degree: int,
                  cap: int = DEFAULT_MONOMIAL_CAP) -> list[SingularVector]:
    """All singular vectors of one grade with terms of total degree <= max_degree."""
    mons = monomials_up_to(ctx, grade, max_degree, cap=cap)
    spaces: dict = {}
    for e in mons:
        spaces.setdefault(ctx.weight_of_monomial(e), []).append(e)
    out = []
    for w in sorted(spaces):
        kern = joint_kernel(ctx.positive_ops, spaces[w])
        for f in kern:
            if not all(apply(op, f).is_zero() for op in ctx.positive_ops):
                raise AssertionError("nullspace vector fails the direct singularity check")
            out.append(SingularVector(f, WeightVector(w), grade, len(kern)))
    return out


def find_all_singular(ctx: RepresentationContext, max_degree: int,
                      cap: int = DEFAULT_MONOMIAL_CAP) -> list[SingularVector]:
    out = []
    for g in grades_up_to(ctx, max_degree):
        out += find_singular(ctx, g, max_degree, cap)
    return out


# ---------------------------------------------------------------------------
# closed forms shared by catalogs and families


def double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def xvar(i: int, nvars: int) -> Polynomial:
    return Polynomial.var(i, nvars)


def f_pq(n: int, p: int, q: int) -> Polynomial:
    """so(2n+1): sum_i q! p!! / (i! (q-i)! (p+2q-2i)!!) x1^(p+2q-2i) x_{n+1}^(q-i) x_{2n+1}^i."""
    nv = 2 * n + 1
    terms = {}
    for i in range(q + 1):
        e = [0] * nv
        e[0] = p + 2 * q - 2 * i
        e[n] += q - i
        e[2 * n] += i
        c = Fraction(factorial(q) * double_factorial(p),
                     factorial(i) * factorial(q - i) * double_factorial(p + 2 * q - 2 * i))
        terms[tuple(e)] = terms.get(tuple(e), 0) + c
    return Polynomial(nv, terms)


def power_apply(op, f: Polynomial, times: int) -> Polynomial:
    for _ in range(times):
        f = apply(op, f)
    return f


@dataclass(frozen=True)
class CatalogEntry:
    case: str
    label: str
    ranges: str
    generate: Callable[[int], Iterator[Polynomial]] = field(compare=False, repr=False)

    def instances(self, max_degree: int) -> list[Polynomial]:
        return [p for p in self.generate(max_degree) if not p.is_zero() and p.total_degree() <= max_degree]


@dataclass(frozen=True)
class CatalogCase:
    case_id: str
    anchor: str
    make_ctx: Callable[[int], RepresentationContext] = field(repr=False)
    entries: Callable[[RepresentationContext], list[CatalogEntry]] = field(repr=False)
    default_n: int = 2


def _sp(n, T):
    return RepresentationContext.build(AlgebraSpec("sp", n), T)


def _cat_lemma_2_5(ctx):
    nv = ctx.nvars
    return [
        CatalogEntry("lemma_2_5", "x2^k", "k >= 0", lambda D: (xvar(2, nv) ** k for k in range(D + 1))),
        CatalogEntry("lemma_2_5", "x1^k", "k > 0", lambda D: (xvar(1, nv) ** k for k in range(1, D + 1))),
    ]


def _u(i: int, j: int, n: int, nv: int, second: int | None = None) -> Polynomial:
    """x_i x_{n+j} - x_j x_{n+i}; ``second`` overrides the offset of the partner family."""
    off = n if second is None else second
    return xvar(i, nv) * xvar(off + j, nv) - xvar(j, nv) * xvar(off + i, nv)


def _cat_sp_t2(ctx):
    n = ctx.spec.n
    nv = ctx.nvars
    cid = "lemma_2_6" if n == 2 else "lemma_2_9"
    return [
        CatalogEntry(cid, f"x{n}^a", "a >= 0", lambda D: (xvar(n, nv) ** a for a in range(D + 1))),
        CatalogEntry(cid, f"x{2 * n}^b", "b > 0", lambda D: (xvar(2 * n, nv) ** b for b in range(1, D + 1))),
        CatalogEntry(cid, f"x{n - 1}*x{2 * n} - x{n}*x{2 * n - 1}", "single",
                     lambda D: iter([_u(n - 1, n, n, nv)])),
    ]


def _cat_lemma_3_2(ctx):
    n = ctx.spec.n
    nv = ctx.nvars

    def gen(D):
        for a in range(D + 1):
            for b in range(D + 1 - a):
                yield xvar(n, nv) ** a * xvar(2 * n, nv) ** b

    return [CatalogEntry("lemma_3_2", f"x{n}^a*x{2 * n}^b", "a, b >= 0", gen)]


def _cat_lemma_4_1(ctx):
    n = ctx.spec.n
    nv = ctx.nvars
    eta = ctx.eta

    def fam_f(D):
        for p in range(1, D + 1, 2):
            for q in range(0, D + 1):
                if p + 2 * q <= D:
                    yield f_pq(n, p, q)

    def fam_eta(D):
        for k in range(D + 1):
            for l in range(0, (D - k) // 2 + 1):
                yield power_apply(eta, xvar(n + 1, nv) ** k, l)

    return [
        CatalogEntry("lemma_4_1", "f_{p,q}", "p odd, q >= 0", fam_f),
        CatalogEntry("lemma_4_1", f"eta^l x{n + 1}^k", "l, k >= 0", fam_eta),
    ]


def _cat_lemma_5_1(ctx):
    n = ctx.spec.n
    nv = ctx.nvars
    x_n, y_n = xvar(n, nv), xvar(2 * n, nv)
    u = xvar(n - 1, nv) * y_n - x_n * xvar(2 * n - 1, nv)

    def gen(D):
        for a in range(D + 1):
            for b in range(D + 1 - a):
                for t in range((D - a - b) // 2 + 1):
                    yield x_n ** a * y_n ** b * u ** t

    return [CatalogEntry("lemma_5_1", f"x{n}^(-l1-t) y{n}^(l2-t) (x{n - 1}y{n} - x{n}y{n - 1})^t",
                         "t >= 0", gen)]


def _cat_lemma_5_3(ctx):
    n = ctx.spec.n
    s = n - 1
    nv = ctx.nvars

    def elem(l1, l2, bs):
        terms = {}
        a = abs(l1)
        for t in range(bs + 1):
            e = [0] * nv
            if l1 >= 0:
                e[s - 1], e[n - 1] = t, l1 + t
            else:
                e[s - 1], e[n - 1] = a + t, t
            e[n + s - 1] = bs - t
            e[2 * n - 1] = l2 - bs + t
            terms[tuple(e)] = Fraction(factorial(a) * factorial(bs),
                                       factorial(t) * factorial(a + t) * factorial(bs - t))
        return Polynomial(nv, terms)

    def gen(D):
        for l2 in range(D + 1):
            for l1 in range(-D, D + 1):
                for bs in range(l2 + 1):
                    yield elem(l1, l2, bs)

    return [CatalogEntry("lemma_5_3", "flag series in x_s, x_n, y_s, y_n", "0 <= beta_s <= l2", gen)]


def _cat_so_even_case2(ctx):
    n = ctx.spec.n
    s = max(ctx.partition.T)
    nv = ctx.nvars
    eta = ctx.eta
    if s == n - 1:
        def g1(D):
            for a in range(D + 1):
                for b in range(D + 1 - a):
                    yield xvar(n, nv) ** a * xvar(2 * n, nv) ** b

        def g2(D):
            for m in range(D + 1):
                for l in range(D + 1):
                    if m + 2 * l <= D:
                        yield power_apply(eta, xvar(n - 1, nv) ** m, l)

        return [
            CatalogEntry("so_even_case2_1", f"x{n}^a x{2 * n}^b", "a, b >= 0", g1),
            CatalogEntry("so_even_case2_1", f"eta^l x{n - 1}^m", "l, m >= 0", g2),
        ]

    def g3(D):
        for idx in (s, s + 1):
            for m in range(D + 1):
                for l in range(D + 1):
                    if m + 2 * l <= D:
                        yield power_apply(eta, xvar(idx, nv) ** m, l)

    return [CatalogEntry("so_even_case2_2", f"eta^l x{s}^m, eta^l x{s + 1}^m", "l, m >= 0", g3)]


def _cat_so_odd_case2(ctx):
    s = max(ctx.partition.T) - 1
    nv = ctx.nvars
    eta = ctx.eta

    def gen(D):
        for idx in (s + 1, s + 2):
            for m in range(D + 1):
                for l in range(D + 1):
                    if m + 2 * l <= D:
                        yield power_apply(eta, xvar(idx, nv) ** m, l)

    return [CatalogEntry("so_odd_case2", f"eta^l x{s + 1}^m, eta^l x{s + 2}^m", "l, m >= 0", gen)]


def _cat_empty(ctx):
    return []


CATALOGS: dict[str, CatalogCase] = {
    "lemma_2_5": CatalogCase("lemma_2_5", "Lemma 2.5 (sp(4), T={1})", lambda n: _sp(2, [1]), _cat_lemma_2_5),
    "lemma_2_6": CatalogCase("lemma_2_6", "Lemma 2.6 (sp(4), T={1,2})", lambda n: _sp(2, [1, 2]), _cat_sp_t2),
    "lemma_2_9": CatalogCase("lemma_2_9", "Lemma 2.9 (sp(2n), T={1..n})",
                             lambda n: _sp(n, range(1, n + 1)), _cat_sp_t2, 3),
    "sp4_no_singular": CatalogCase("sp4_no_singular", "Theorem 2.10 a) / Lemma 2.8 (sp(4), T={1,3})",
                                   lambda n: _sp(2, [1, 3]), _cat_empty),
    "lemma_3_2": CatalogCase("lemma_3_2", "Lemma 3.2 (so(2n), T={1..n})",
                             lambda n: RepresentationContext.build(AlgebraSpec("so_even", n), range(1, n + 1)),
                             _cat_lemma_3_2),
    "so_even_case2_1": CatalogCase("so_even_case2_1", "so(2n) Case 2, s=n-1 (before Theorem 3.4)",
                                   lambda n: RepresentationContext.build(AlgebraSpec("so_even", n), range(1, n)),
                                   _cat_so_even_case2),
    "so_even_case2_2": CatalogCase("so_even_case2_2", "so(2n) Case 2, s<n-1 (before Theorem 3.5)",
                                   lambda n: RepresentationContext.build(AlgebraSpec("so_even", n), [1]),
                                   _cat_so_even_case2, 3),
    "lemma_4_1": CatalogCase("lemma_4_1", "Lemma 4.1 (so(2n+1), T={2..n+1})",
                             lambda n: RepresentationContext.build(AlgebraSpec("so_odd", n), range(2, n + 2)),
                             _cat_lemma_4_1),
    "so_odd_case2": CatalogCase("so_odd_case2", "so(2n+1) Case 2 (before Theorem 4.3)",
                                lambda n: RepresentationContext.build(AlgebraSpec("so_odd", n), [2]),
                                _cat_so_odd_case2),
    "lemma_5_1": CatalogCase("lemma_5_1", "Lemma 5.1 (sl(n) double family, T={1..n})",
                             lambda n: RepresentationContext.build(AlgebraSpec("sl", n), range(1, n + 1), "B"),
                             _cat_lemma_5_1),
    "lemma_5_3": CatalogCase("lemma_5_3", "Lemma 5.3 (sl(n) double family, T={1..n-1})",
                             lambda n: RepresentationContext.build(AlgebraSpec("sl", n), range(1, n), "B"),
                             _cat_lemma_5_3),
}


def catalog(case_id: str, ctx: RepresentationContext | None = None, n: int | None = None) -> list[CatalogEntry]:
    if case_id not in CATALOGS:
        raise KeyError(f"unknown catalog {case_id!r}; known: {sorted(CATALOGS)}")
    case = CATALOGS[case_id]
    if ctx is None:
        ctx = case.make_ctx(n or case.default_n)
    return case.entries(ctx)


def catalog_for_context(ctx: RepresentationContext) -> str | None:
    """Catalog id whose canonical context equals ``ctx``, if any."""
    for cid, case in CATALOGS.items():
        for n in (ctx.spec.n,):
            try:
                if case.make_ctx(n) == ctx:
                    return cid
            except ValueError:
                continue
    return None


@dataclass
class MatchReport:
    case: str
    params: dict
    found: list
    expected: list
    missing: list
    extra: list
    verdict: str

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "slice": self.params,
            "found": self.found,
            "expected": self.expected,
            "missing": self.missing,
            "extra": self.extra,
            "verdict": self.verdict,
        }


def _weight_key(ctx, p: Polynomial):
    return (ctx.grade(p), ctx.weight(p).coords)


def match_catalog(ctx: RepresentationContext, found: list[SingularVector],
                  expected: Iterable[Polynomial], case: str = "", max_degree: int | None = None) -> MatchReport:
    """Compare found singular vectors with catalog instances, one (grade, weight) space at a time."""
    fgroups: dict = {}
    for sv in found:
        fgroups.setdefault((sv.grade, sv.weight.coords), []).append(sv.polynomial)
    egroups: dict = {}
    bad_expected = []
    for p in expected:
        if not is_singular(ctx, p):
            bad_expected.append(p)
            continue
        egroups.setdefault(_weight_key(ctx, p), []).append(p)
    missing, extra = [ctx.fmt(p) for p in bad_expected], []
    for key in sorted(set(fgroups) | set(egroups), key=str):
        F = [dict(p.terms) for p in fgroups.get(key, [])]
        X = [dict(p.terms) for p in egroups.get(key, [])]
        rf, rx, rs = span_rank(F), span_rank(X), span_rank(F + X)
        if rs > rf:
            missing += [ctx.fmt(p) for p in egroups.get(key, [])]
        if rs > rx:
            extra += [ctx.fmt(p) for p in fgroups.get(key, [])]
    verdict = "PASS" if not missing and not extra else "FAIL"
    params = {"context": ctx.describe()}
    if max_degree is not None:
        params["max_degree"] = max_degree
    return MatchReport(
        case,
        params,
        [ctx.fmt(sv.polynomial) for sv in found],
        sorted({ctx.fmt(p.normalized()) for p in expected if not p.is_zero()}),
        missing,
        extra,
        verdict,
    )


def run_catalog(case_id: str, n: int | None, max_degree: int, cap: int = DEFAULT_MONOMIAL_CAP) -> MatchReport:
    case = CATALOGS[case_id]
    ctx = case.make_ctx(n or case.default_n)
    found = find_all_singular(ctx, max_degree, cap)
    expected = [p for e in case.entries(ctx) for p in e.instances(max_degree)]
    rep = match_catalog(ctx, found, expected, case_id, max_degree)
    rep.params["n"] = ctx.spec.n
    return rep
