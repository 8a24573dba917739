"""Case registry and the check runners behind the command line.

A check runner takes plain keyword arguments and returns a list of
``CheckResult``; tasks are ``(runner name, case id, kwargs)`` tuples so they
can be shipped to worker processes and collected back in submission order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .lie import AlgebraSpec
from .rep import RepresentationContext, UnsupportedError
from .slices import DEFAULT_MONOMIAL_CAP, adapted_weights


@dataclass
class CheckResult:
    check: str
    case: str
    params: dict
    verdict: str
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"check": self.check, "case": self.case, "params": self.params,
                "verdict": self.verdict, "details": self.details}


def _verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def make_context(family: str, n: int, swap, model: str = "A") -> RepresentationContext:
    return RepresentationContext.build(AlgebraSpec(family, n), tuple(swap), model)


def _ctx_params(ctx: RepresentationContext) -> dict:
    return {"algebra": ctx.spec.label, "n": ctx.spec.n, "swap": sorted(ctx.partition.T), "model": ctx.model}


def _grade_json(g):
    return list(g) if isinstance(g, tuple) else g


def default_grades(model: str, bound: int) -> list:
    if model == "B":
        return [(l1, l2) for l2 in range(bound + 1) for l1 in range(-(bound - l2), bound - l2 + 1)]
    return list(range(-bound, bound + 1))


# ---------------------------------------------------------------------------
# runners


def run_bracket(case: str, family: str, n: int, swap, model: str = "A", **_) -> list[CheckResult]:
    from .rep import bracket_fidelity

    ctx = make_context(family, n, swap, model)
    bad = bracket_fidelity(ctx)
    k = len(ctx.basis_ops)
    return [CheckResult("bracket_fidelity", case, _ctx_params(ctx), _verdict(not bad),
                        {"pairs": k * (k - 1) // 2, "violations": [[str(a), str(b)] for a, b in bad[:10]]})]


def run_centrality(case: str, family: str, n: int, swap, model: str = "A", **_) -> list[CheckResult]:
    """Delta and eta commute with every rho(g); without them only the grading operator is checked."""
    from .weyl import WeylOperator, commutator

    ctx = make_context(family, n, swap, model)
    ops = {}
    try:
        ops = {"delta": ctx.delta, "eta": ctx.eta}
    except UnsupportedError:
        pass
    grading = WeylOperator.zero(ctx.nvars)
    for i in range(1, ctx.spec.N + 1):
        grading = grading + ctx.rho_unit(i, i)
    ops["grading"] = grading
    bad = []
    for name, op in ops.items():
        for g, r in ctx.basis_ops:
            if not commutator(op, r).is_zero():
                bad.append([name, str(g)])
    return [CheckResult("centrality", case, _ctx_params(ctx), _verdict(not bad),
                        {"operators": sorted(ops), "generators": len(ctx.basis_ops), "violations": bad[:10]})]


def run_catalog(case: str, catalog: str, n: int | None, max_degree: int,
                cap: int = DEFAULT_MONOMIAL_CAP, **_) -> list[CheckResult]:
    from .singular import run_catalog as rc

    rep = rc(catalog, n, max_degree, cap)
    d = rep.to_dict()
    return [CheckResult("singular_catalog", case, {"catalog": catalog, **d["slice"]}, rep.verdict,
                        {k: d[k] for k in ("found", "expected", "missing", "extra")})]


def _degree_range(ctx: RepresentationContext, max_degree: int) -> range:
    return range(max_degree * max(adapted_weights(ctx)) + 1)


def run_decomposition(case: str, theorem: str, n: int, grades: list, max_degree: int, s: int | None = None,
                      cap: int = DEFAULT_MONOMIAL_CAP, **_) -> list[CheckResult]:
    from .decompose import DECOMPOSITIONS, check_decomposition

    dec = DECOMPOSITIONS[theorem]
    ctx = dec.make_ctx(n) if s is None else dec.make_ctx(n, s)
    out = []
    for g in grades:
        g = tuple(g) if isinstance(g, list) else g
        reps = [check_decomposition(theorem, n, g, w, s, cap) for w in _degree_range(ctx, max_degree)]
        verdicts = {r.verdict for r in reps}
        params = {"theorem": theorem, "n": n, "grade": _grade_json(g), "max_degree": max_degree,
                  "context": ctx.describe()}
        if s is not None:
            params["s"] = s
        if verdicts == {"SKIPPED"}:
            out.append(CheckResult("decomposition", case, params, "SKIPPED",
                                   {"condition": reps[0].condition}))
            continue
        pieces = [{"degree": r.params["degree"], **r.dims, "verdict": r.verdict}
                  for r in reps if r.dims.get("slice")]
        fails = [r.to_dict() for r in reps if r.verdict == "FAIL"]
        out.append(CheckResult("decomposition", case, params, _verdict(not fails),
                               {"weights": list(adapted_weights(ctx)), "pieces": pieces, "failures": fails}))
    return out


def run_families(case: str, family: str, n: int, grades: list, max_degree: int, s: int | None = None,
                 cap: int = DEFAULT_MONOMIAL_CAP, **_) -> list[CheckResult]:
    from .families import family_context, verify_family

    ctx = family_context(family, n, s)
    out = []
    for g in grades:
        g = tuple(g) if isinstance(g, list) else g
        reps = [verify_family(family, n, g, w, s, cap=cap) for w in _degree_range(ctx, max_degree)]
        reps = [r for r in reps if r.dims.get("target") or r.dims.get("elements")]
        params = {"family": family, "n": n, "grade": _grade_json(g), "max_degree": max_degree,
                  "context": ctx.describe()}
        if s is not None:
            params["s"] = s
        if not reps:
            out.append(CheckResult("family", case, params, "SKIPPED", {"condition": "empty slices"}))
            continue
        fails = [r.to_dict() for r in reps if r.verdict != "PASS"]
        out.append(CheckResult("family", case, params, _verdict(not fails),
                               {"pieces": [{"degree": r.params.get("degree"), **r.dims} for r in reps],
                                "failures": fails}))
    return out


def run_orbit_families(case: str, n: int, max_degree: int, **_) -> list[CheckResult]:
    """The two symmetrized-product families against orbit slices of 1 and u."""
    from .families import verify_family
    from .linalg import sum_and_intersection
    from .orbit import orbit_span
    from .poly import Polynomial

    ctx = make_context("sp", n, range(1, n + 1))
    top = 2 * max_degree
    o1 = orbit_span(ctx, Polynomial.constant(ctx.nvars), top)
    ou = orbit_span(ctx, ctx.poly(f"x{n - 1}*x{2 * n} - x{n}*x{2 * n - 1}"), top)
    rows, ok = [], o1.saturated and ou.saturated
    for m in range(max_degree + 1):
        a = verify_family("F_2_17", n, 0, 2 * m, target_basis=o1.slice_basis(2 * m))
        b = verify_family("F_2_18", n, 0, 2 * m, target_basis=ou.slice_basis(2 * m))
        s, i = sum_and_intersection([p.terms for p in o1.slice_basis(2 * m)],
                                    [p.terms for p in ou.slice_basis(2 * m)])
        rows.append({"degree": 2 * m, "orbit_1": a.dims, "orbit_u": b.dims, "sum": s, "intersection": i})
        ok = ok and a.verdict == b.verdict == "PASS" and i == 0
    return [CheckResult("family", case, {"families": ["F_2_17", "F_2_18"], "n": n, "max_degree": top,
                                          "context": ctx.describe()}, _verdict(ok),
                        {"orbits": [o1.verdict, ou.verdict], "rows": rows})]


def run_flag_series(case: str, config: str, n: int, max_degree: int, s: int | None = None, **_) -> list[CheckResult]:
    from .flag import compare_with_family

    r = compare_with_family(config, n, s, min(max_degree, 4))
    d = r.to_dict()
    return [CheckResult("flag_series", case, d["params"] | {"config": config}, r.verdict,
                        {"checked": r.checked, "mismatches": r.mismatches[:10]})]


def run_certificates(case: str, theorem: str | None, n: int, grades: list, max_degree: int,
                     s: int | None = None, family: str | None = None, swap=(), model: str = "A",
                     cap: int = DEFAULT_MONOMIAL_CAP, **_) -> list[CheckResult]:
    from .form import irreducibility_certificate, module_monomials

    if theorem is not None:
        from .decompose import DECOMPOSITIONS

        dec = DECOMPOSITIONS[theorem]
        kw = {} if s is None else {"s": s}
        ctx = dec.make_ctx(n, **kw)
    else:
        ctx = make_context(family, n, swap, model)
    out = []
    for g in grades:
        g = tuple(g) if isinstance(g, list) else g
        params = {"context": ctx.describe(), "grade": _grade_json(g), "max_degree": max_degree}
        harmonic = None
        if theorem is not None:
            if not dec.condition(g, n, **kw):
                out.append(CheckResult("certificate", case, params, "SKIPPED", {"condition": dec.condition_text}))
                continue
            harmonic = dec.kernel_for(g, n, **kw)
            params["harmonic"] = harmonic
        if not module_monomials(ctx, g, max_degree, harmonic, cap):
            out.append(CheckResult("certificate", case, params, "SKIPPED",
                                   {"condition": "no monomials of this grade within the cap"}))
            continue
        cert = irreducibility_certificate(ctx, g, max_degree, harmonic, case, cap)
        d = cert.to_dict()
        d.pop("case")
        if ctx.model == "B":
            d["form"] = "derived: y_i read as x_{n+i} in the merged ring"
        out.append(CheckResult("certificate", case, params, cert.verdict, d))
    return out


def run_form_sweep(case: str, n: int, max_degree: int, **_) -> list[CheckResult]:
    from .form import contravariance_sweep

    D = min(max_degree, 4)
    r = contravariance_sweep(n, D)
    return [CheckResult("form_adjointness", case, {"algebra": f"gl({n})", "max_degree": D}, r.verdict,
                        {"partitions": r.partitions, "generators": r.generators, "pairs": r.pairs,
                         "violations": [[list(T), list(g), list(a), list(b)] for T, g, a, b in r.violations[:10]]})]


def run_so_odd_form(case: str, n: int, max_degree: int, **_) -> list[CheckResult]:
    from .form import so_odd_adjoint_sweep

    D = min(max_degree, 4)
    r = so_odd_adjoint_sweep(n, D)
    return [CheckResult("form_adjointness", case, {"algebra": f"so({2 * n + 1})", "max_degree": D},
                        r.verdict, {"partitions": r.partitions, "generators": r.generators, "pairs": r.pairs,
                                    "violations": [list(map(str, v)) for v in r.violations[:10]]})]


def run_dimension_identity(case: str, max_degree: int, **_) -> list[CheckResult]:
    from .orbit import dimension_identity_check

    m_max = max(max_degree, 8)
    r = dimension_identity_check(m_max, min(6, m_max))
    return [CheckResult("dimension_identity", case, {"algebra": "sp(4)", "swap": [1, 2], "m_max": m_max},
                        r.verdict, {"rows": r.rows})]


def run_word_identity(case: str, max_degree: int, **_) -> list[CheckResult]:
    from itertools import product

    from .decompose import identity_2_12

    D = min(max_degree, 6)
    bad, count = [], 0
    for e in product(range(D + 1), repeat=4):
        if sum(e) > D or e[0] + e[2] < e[1] + e[3]:
            continue
        count += 1
        r = identity_2_12(e)
        if r.verdict != "PASS":
            bad.append(r.to_dict())
    return [CheckResult("word_identity", case, {"algebra": "sp(4)", "swap": [1, 3], "max_degree": D},
                        _verdict(not bad), {"tuples": count, "failures": bad[:10]})]


def run_commutator_identity(case: str, n: int, **_) -> list[CheckResult]:
    from .decompose import so_odd_commutator_identity

    d = so_odd_commutator_identity(n)
    return [CheckResult("commutator_identity", case, d["params"], d["verdict"],
                        {"lhs": d["lhs"], "rhs": d["rhs"]})]


def run_claims(case: str, claims: list[str], **_) -> list[CheckResult]:
    from .claims import CLAIMS, check_claims

    anchors = {c.claim_id: c for c in CLAIMS}
    out = []
    for cid in claims:
        res = check_claims([cid])
        details = {"anchor": anchors[cid].anchor, "instances": [r.to_dict() for r in res]}
        if anchors[cid].erratum:
            details["erratum"] = anchors[cid].erratum
        out.append(CheckResult("weights", case, {"claim": cid, "instances": len(res)},
                               _verdict(all(r.ok for r in res)), details))
    return out


def run_parity_split(case: str, n: int, max_degree: int, **_) -> list[CheckResult]:
    from .orbit import parity_split_check

    r = parity_split_check(n, min(max_degree, 5))
    return [CheckResult("parity_split", case, {"n": n, "bound": min(max_degree, 5)}, r.verdict, {"rows": r.rows})]


RUNNERS: dict[str, Callable[..., list[CheckResult]]] = {
    "bracket": run_bracket,
    "centrality": run_centrality,
    "catalog": run_catalog,
    "decomposition": run_decomposition,
    "families": run_families,
    "orbit_families": run_orbit_families,
    "flag_series": run_flag_series,
    "certificates": run_certificates,
    "form_sweep": run_form_sweep,
    "so_odd_form": run_so_odd_form,
    "dimension_identity": run_dimension_identity,
    "word_identity": run_word_identity,
    "commutator_identity": run_commutator_identity,
    "claims": run_claims,
    "parity_split": run_parity_split,
}


def run_task(task: tuple) -> list[CheckResult]:
    name, case, kwargs = task
    return RUNNERS[name](case=case, **kwargs)


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Case:
    case_id: str
    anchor: str
    family: str
    n: int
    swap: tuple
    model: str = "A"
    s: int | None = None
    description: str = ""
    catalog: str | None = None
    theorem: str | None = None
    families: tuple = ()
    flag: str | None = None
    claims: tuple = ()
    certificate_grades: bool = False
    extras: tuple = ()

    def context(self) -> RepresentationContext:
        return make_context(self.family, self.n, self.swap, self.model)

    def row(self) -> dict:
        ctx = self.context()
        return {"case": self.case_id, "anchor": self.anchor, "context": ctx.describe(),
                "description": self.description}

    def tasks(self, max_degree: int, grades: list | None = None, cap: int = DEFAULT_MONOMIAL_CAP) -> list[tuple]:
        base = {"family": self.family, "n": self.n, "swap": self.swap, "model": self.model}
        out: list[tuple] = [("bracket", self.case_id, dict(base)), ("centrality", self.case_id, dict(base))]
        claim_bound = min(max_degree, 3)
        gr = grades if grades is not None else default_grades(self.model, max_degree)
        sk = {} if self.s is None else {"s": self.s}
        if self.catalog:
            out.append(("catalog", self.case_id, {"catalog": self.catalog, "n": self.n, "max_degree": max_degree,
                                                  "cap": cap}))
        if self.theorem:
            out.append(("decomposition", self.case_id, {"theorem": self.theorem, "n": self.n, "grades": gr,
                                                        "max_degree": max_degree, "cap": cap, **sk}))
        for fam in self.families:
            out.append(("families", self.case_id, {"family": fam, "n": self.n, "grades": gr,
                                                   "max_degree": max_degree, "cap": cap, **sk}))
        if self.flag:
            out.append(("flag_series", self.case_id, {"config": self.flag, "n": self.n, "max_degree": max_degree,
                                                      **sk}))
        if self.certificate_grades:
            cg = grades if grades is not None else default_grades(self.model, claim_bound)
            if self.theorem:
                out.append(("certificates", self.case_id, {"theorem": self.theorem, "n": self.n, "grades": cg,
                                                           "max_degree": max_degree, "cap": cap, **sk}))
            else:
                cg = [g for g in cg if g != 0] if self.case_id == "sp4_case2" else cg
                out.append(("certificates", self.case_id, {"theorem": None, "n": self.n, "grades": cg,
                                                           "max_degree": max_degree, "family": self.family,
                                                           "swap": self.swap, "model": self.model, "cap": cap}))
        for name in self.extras:
            out.append((name, self.case_id, {"n": self.n, "max_degree": max_degree}))
        if self.claims:
            out.append(("claims", self.case_id, {"claims": list(self.claims)}))
        return out


def _r(a: int, b: int) -> tuple:
    return tuple(range(a, b + 1))


CASES: dict[str, Case] = {c.case_id: c for c in [
    Case("sl_canonical", "canonical action", "sl", 3, (), description="T empty: the canonical action"),
    Case("gl_form", "Lemma 2.2", "gl", 4, (), description="transpose-adjointness of the diagonal form",
         extras=("form_sweep",)),
    Case("sp4_case1", "Lemma 2.5", "sp", 2, (1,), catalog="lemma_2_5", claims=("lemma_2_5",),
         certificate_grades=True, description="sp(4), T={1}"),
    Case("sp4_case2", "Lemma 2.6/2.7", "sp", 2, (1, 2), catalog="lemma_2_6",
         claims=("lemma_2_6", "lemma_2_7"), certificate_grades=True, extras=("dimension_identity",),
         description="sp(4), T={1,2}; A_<0> splits into two orbits"),
    Case("sp4_case3", "Theorem 2.10 a)", "sp", 2, (1, 3), catalog="sp4_no_singular",
         extras=("word_identity",), description="sp(4), T={1,3}; no singular vectors"),
    Case("sp_case2", "Lemma 2.9 / Theorem 2.10", "sp", 3, (1, 2, 3), catalog="lemma_2_9",
         claims=("thm_2_10_b", "thm_2_10_e", "thm_2_10_f"), extras=("parity_split", "orbit_families"),
         description="sp(2n), T={1..n}, n=3"),
    Case("so_even_case1", "Theorem 3.3", "so_even", 2, (1, 2), catalog="lemma_3_2", theorem="thm_3_3",
         families=("F_3_12", "F_3_13"), claims=("thm_3_3",), certificate_grades=True,
         description="so(2n), T={1..n}"),
    Case("so_even_case2", "Theorem 3.4", "so_even", 2, (1,), catalog="so_even_case2_1", theorem="thm_3_4",
         families=("F_3_23",), flag="thm_3_4", claims=("thm_3_4",), certificate_grades=True,
         description="so(2n), T={1..n-1}"),
    Case("so_even_case3", "Theorem 3.5", "so_even", 3, (1,), s=1, catalog="so_even_case2_2", theorem="thm_3_5",
         families=("F_3_25",), flag="thm_3_5", claims=("thm_3_5",), certificate_grades=True,
         description="so(2n), T={1..s}, s<n-1"),
    Case("so_odd_case1", "Lemma 4.1 / Theorem 4.2", "so_odd", 2, (2, 3), catalog="lemma_4_1", theorem="thm_4_2",
         families=("F_4_2",), flag="thm_4_2", claims=("thm_4_2",), certificate_grades=True,
         extras=("commutator_identity", "so_odd_form"), description="so(2n+1), T={2..n+1}"),
    Case("so_odd_case2", "Theorem 4.3", "so_odd", 2, (2,), s=1, catalog="so_odd_case2", theorem="thm_4_3",
         families=("F_4_3",), flag="thm_4_3", claims=("thm_4_3",), certificate_grades=True,
         description="so(2n+1), T={2..s+1}, s<n"),
    Case("sl_double_case1", "Lemma 5.1 / Theorem 5.2", "sl", 2, (1, 2), "B", catalog="lemma_5_1",
         theorem="thm_5_2", families=("F_5_1", "F_5_2"), claims=("thm_5_2",), certificate_grades=True,
         description="sl(n) double family, T={1..n}"),
    Case("sl_double_case2", "Lemma 5.3 / Theorem 5.4", "sl", 2, (1,), "B", catalog="lemma_5_3", theorem="thm_5_4",
         families=("F_5_4",), flag="thm_5_4", claims=("thm_5_4",), certificate_grades=True,
         description="sl(n) double family, T={1..n-1}"),
    Case("sl_double_case3", "Theorem 5.5", "sl", 3, (1,), "B", s=1, theorem="thm_5_5",
         families=("F_5_5",), flag="thm_5_5", claims=("thm_5_5",), certificate_grades=True,
         description="sl(n) double family, T={1..s}, s<n-1"),
]}


def list_cases() -> list[dict]:
    return [c.row() for c in CASES.values()]


def cases_for_context(ctx: RepresentationContext) -> list[Case]:
    return [c for c in CASES.values() if c.context() == ctx]


def _sized(case: Case, n: int) -> Case:
    """The same case at another rank; swap sets follow the case's shape."""
    from dataclasses import replace

    if n == case.n:
        return case
    shapes = {
        "sp4_case2": None, "sp4_case1": None, "sp4_case3": None, "gl_form": None, "sl_canonical": (),
        "sp_case2": _r(1, n), "so_even_case1": _r(1, n), "so_even_case2": _r(1, n - 1),
        "so_even_case3": _r(1, case.s or 1), "so_odd_case1": _r(2, n + 1), "so_odd_case2": _r(2, (case.s or 1) + 1),
        "sl_double_case1": _r(1, n), "sl_double_case2": _r(1, n - 1), "sl_double_case3": _r(1, case.s or 1),
    }
    swap = shapes.get(case.case_id)
    if swap is None:
        raise ValueError(f"case {case.case_id} is defined for n = {case.n} only")
    return replace(case, n=n, swap=swap)


def case_at(case_id: str, n: int | None = None) -> Case:
    if case_id not in CASES:
        raise KeyError(case_id)
    c = CASES[case_id]
    return c if n is None else _sized(c, n)


def generic_tasks(ctx: RepresentationContext) -> list[tuple]:
    base = {"family": ctx.spec.family, "n": ctx.spec.n, "swap": tuple(sorted(ctx.partition.T)),
            "model": ctx.model}
    label = f"{ctx.spec.family}:{ctx.spec.n}:{base['swap']}"
    return [("bracket", label, dict(base)), ("centrality", label, dict(base))]
