"""Kernels of Delta / eta on slices and the direct-sum decompositions they give."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable

from .lie import AlgebraSpec
from .linalg import IncrementalBasis, span_rank
from .poly import Polynomial, grlex_key
from .rep import RepresentationContext
from .slices import (
    DEFAULT_MONOMIAL_CAP,
    SliceEscapeError,
    SliceSpec,
    adapted_weights,
    enumerate_slice,
    image_polys,
    joint_kernel,
    operator_shift,
)
from .weyl import WeylOperator, apply


def operator_grade_shift(ctx: RepresentationContext, op: WeylOperator):
    shifts = set()
    for m, d in op.terms:
        diff = tuple(a - b for a, b in zip(m, d))
        shifts.add(ctx.grade_of_monomial(diff))
    if len(shifts) != 1:
        raise ValueError(f"operator is not grade-homogeneous: shifts {sorted(shifts, key=str)}")
    return shifts.pop()


def _shift_grade(grade, delta, sign=1):
    if isinstance(grade, tuple):
        return tuple(g + sign * d for g, d in zip(grade, delta))
    return grade + sign * delta


def _op(ctx: RepresentationContext, name: str) -> WeylOperator:
    if name == "delta":
        return ctx.delta
    if name == "eta":
        return ctx.eta
    raise ValueError(f"operator must be 'delta' or 'eta', not {name!r}")


def slice_of(ctx: RepresentationContext, grade, degree: int, cap: int = DEFAULT_MONOMIAL_CAP):
    return enumerate_slice(SliceSpec(ctx, grade, degree, adapted_weights(ctx)), cap)


def kernel_slice(ctx: RepresentationContext, operator: str, grade, degree: int,
                 cap: int = DEFAULT_MONOMIAL_CAP) -> list[Polynomial]:
    """Basis of ker(operator) on one (grade, adapted weighted degree) piece."""
    return joint_kernel([_op(ctx, operator)], slice_of(ctx, grade, degree, cap).monomials)


def image_slice(ctx: RepresentationContext, operator: str, grade, degree: int,
                cap: int = DEFAULT_MONOMIAL_CAP) -> list[Polynomial]:
    """Spanning set of operator(source piece) landing in the (grade, degree) piece."""
    op = _op(ctx, operator)
    w = adapted_weights(ctx)
    (wshift,) = operator_shift(op, w)
    src_grade = _shift_grade(grade, operator_grade_shift(ctx, op), -1)
    src_degree = degree - wshift
    if src_degree < 0:
        return []
    src = enumerate_slice(SliceSpec(ctx, src_grade, src_degree, w), cap)
    return [p for p in image_polys(op, src.monomials) if not p.is_zero()]


@dataclass
class DecompositionReport:
    case: str
    params: dict
    dims: dict
    verdict: str
    witness: str | None = None
    condition: str | None = None

    def to_dict(self) -> dict:
        d = {"case": self.case, "params": self.params, "dims": self.dims, "verdict": self.verdict}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.condition is not None:
            d["condition"] = self.condition
        return d


def direct_sum_check(ctx: RepresentationContext, grade, degree: int, kernel_op: str,
                     case: str = "", cap: int = DEFAULT_MONOMIAL_CAP) -> DecompositionReport:
    """piece = ker(kernel_op) (+) other_op(source piece), checked by exact dimensions."""
    image_op = "eta" if kernel_op == "delta" else "delta"
    piece = slice_of(ctx, grade, degree, cap)
    K = joint_kernel([_op(ctx, kernel_op)], piece.monomials)
    I = image_slice(ctx, image_op, grade, degree, cap)
    members = set(piece.monomials)
    for p in I:
        if any(e not in members for e in p.terms):
            raise SliceEscapeError(f"{image_op} image leaves the piece grade={grade} degree={degree}")
    Kv = [dict(p.terms) for p in K]
    Iv = [dict(p.terms) for p in I]
    dk, di = len(K), span_rank(Iv)
    ds = span_rank(Kv + Iv)
    dims = {"slice": len(piece), "kernel": dk, "image": di, "intersection": dk + di - ds}
    ok = ds == len(piece) and dims["intersection"] == 0
    witness = None
    if not ok:
        if ds < len(piece):
            basis = IncrementalBasis(grlex_key)
            for v in Kv + Iv:
                basis.add(v)
            miss = next(e for e in piece.monomials if not basis.contains({e: 1}))
            witness = f"not covered: {ctx.fmt(Polynomial.monomial(miss))}"
        else:
            witness = f"kernel and image share a {dims['intersection']}-dimensional subspace"
    g = list(grade) if isinstance(grade, tuple) else grade
    params = {"context": ctx.describe(), "grade": g, "degree": degree,
              "weights": list(adapted_weights(ctx)), "kernel_of": kernel_op, "image_of": image_op}
    return DecompositionReport(case, params, dims, "PASS" if ok else "FAIL", witness)


# ---------------------------------------------------------------------------
# decomposition statements


@dataclass(frozen=True)
class Decomposition:
    case_id: str
    anchor: str
    make_ctx: Callable[..., RepresentationContext] = field(repr=False)
    kernel_for: Callable[..., str] = field(repr=False)
    condition: Callable[..., bool] = field(repr=False)
    condition_text: str = ""
    bipartite: bool = False


def _so_even(n, T):
    return RepresentationContext.build(AlgebraSpec("so_even", n), T)


def _so_odd(n, T):
    return RepresentationContext.build(AlgebraSpec("so_odd", n), T)


def _sl_b(n, T):
    return RepresentationContext.build(AlgebraSpec("sl", n), T, "B")


DECOMPOSITIONS: dict[str, Decomposition] = {
    "thm_3_3": Decomposition(
        "thm_3_3", "Theorem 3.3", lambda n, s=None: _so_even(n, range(1, n + 1)),
        lambda g, n, s=None: "eta" if g >= 0 else "delta", lambda g, n, s=None: True, "all k"),
    "thm_3_4": Decomposition(
        "thm_3_4", "Theorem 3.4", lambda n, s=None: _so_even(n, range(1, n)),
        lambda g, n, s=None: "delta", lambda g, n, s=None: g <= 0, "k <= 0"),
    "thm_3_5": Decomposition(
        "thm_3_5", "Theorem 3.5", lambda n, s=1: _so_even(n, range(1, s + 1)),
        lambda g, n, s=1: "delta", lambda g, n, s=1: g <= -(n - s - 1), "k <= -(n-s-1)"),
    "thm_4_2": Decomposition(
        "thm_4_2", "Theorem 4.2", lambda n, s=None: _so_odd(n, range(2, n + 2)),
        lambda g, n, s=None: "delta", lambda g, n, s=None: True, "all k"),
    "thm_4_3": Decomposition(
        "thm_4_3", "Theorem 4.3", lambda n, s=1: _so_odd(n, range(2, s + 2)),
        lambda g, n, s=1: "delta", lambda g, n, s=1: True, "all k"),
    "thm_5_2": Decomposition(
        "thm_5_2", "Theorem 5.2", lambda n, s=None: _sl_b(n, range(1, n + 1)),
        lambda g, n, s=None: "delta" if g[0] + g[1] <= 0 else "eta", lambda g, n, s=None: True,
        "all (l1, l2)", True),
    "thm_5_4": Decomposition(
        "thm_5_4", "Theorem 5.4", lambda n, s=None: _sl_b(n, range(1, n)),
        lambda g, n, s=None: "delta", lambda g, n, s=None: g[0] + g[1] <= 0 or g[0] > 0,
        "l1 + l2 <= 0 or l1 > 0", True),
    "thm_5_5": Decomposition(
        "thm_5_5", "Theorem 5.5", lambda n, s=1: _sl_b(n, range(1, s + 1)),
        lambda g, n, s=1: "delta",
        lambda g, n, s=1: g[0] + g[1] <= -(n - s - 1) or g[0] > -(n - s - 1),
        "l1 + l2 <= -(n-s-1) or l1 > -(n-s-1)", True),
}


def check_decomposition(case_id: str, n: int, grade, degree: int, s: int | None = None,
                        cap: int = DEFAULT_MONOMIAL_CAP) -> DecompositionReport:
    dec = DECOMPOSITIONS[case_id]
    kw = {} if s is None else {"s": s}
    ctx = dec.make_ctx(n, **kw)
    if not dec.condition(grade, n, **kw):
        g = list(grade) if isinstance(grade, tuple) else grade
        return DecompositionReport(case_id, {"context": ctx.describe(), "grade": g, "degree": degree},
                                   {}, "SKIPPED", condition=dec.condition_text)
    return direct_sum_check(ctx, grade, degree, dec.kernel_for(grade, n, **kw), case_id, cap)


# ---------------------------------------------------------------------------
# the operator-word identity for sp(4), T = {1, 3}


@dataclass
class IdentityReport:
    exponents: tuple
    k: int
    lhs: str
    rhs: str
    verdict: str

    def to_dict(self) -> dict:
        return {"exponents": list(self.exponents), "k": self.k, "lhs": self.lhs, "rhs": self.rhs,
                "verdict": self.verdict}


def identity_2_12(exponents: tuple[int, int, int, int], k: int | None = None,
                  ctx: RepresentationContext | None = None) -> IdentityReport:
    """x1^k1 x2^k2 x3^k3 x4^k4 = c * E42^k4 E13^k3 (E21 - E34)^(k2+k4) . x1^k in sp(4), T={1,3},
    with c = (-1)^(k2+k3+k4) k1! k2! / ((k1+k3)! (k2+k4)!) and k = k1 + k3 - k2 - k4 >= 0."""
    from .lie import E

    k1, k2, k3, k4 = exponents
    if min(exponents) < 0:
        raise ValueError("exponents must be nonnegative")
    kk = k1 + k3 - k2 - k4
    if k is not None and k != kk:
        raise ValueError(f"k = {k} but k1 + k3 - k2 - k4 = {kk}")
    if kk < 0:
        raise ValueError("the identity starts from x1^k, so k1 + k3 - k2 - k4 must be >= 0")
    ctx = ctx or RepresentationContext.build(AlgebraSpec("sp", 2), [1, 3])
    nv = ctx.nvars
    lowering = ctx.rho(E(2, 1, 4) - E(3, 4, 4))
    e13, e42 = ctx.rho(E(1, 3, 4)), ctx.rho(E(4, 2, 4))
    f = Polynomial.var(1, nv) ** kk
    for _ in range(k2 + k4):
        f = apply(lowering, f)
    for _ in range(k3):
        f = apply(e13, f)
    for _ in range(k4):
        f = apply(e42, f)
    c = Fraction((-1) ** (k2 + k3 + k4) * factorial(k1) * factorial(k2),
                 factorial(k1 + k3) * factorial(k2 + k4))
    lhs = Polynomial.monomial((k1, k2, k3, k4))
    rhs = f.scale(c)
    return IdentityReport(tuple(exponents), kk, ctx.fmt(lhs), ctx.fmt(rhs), "PASS" if lhs == rhs else "FAIL")


# ---------------------------------------------------------------------------
# Delta on the Case 2 singular vectors


def delta_eta_power(ctx: RepresentationContext, base: Polynomial, l: int) -> Polynomial:
    f = base
    for _ in range(l):
        f = apply(ctx.eta, f)
    return apply(ctx.delta, f)


def so_odd_commutator_rhs(ctx: RepresentationContext) -> WeylOperator:
    """4 x1 d1 + 4 sum_i (x_{n+i+1} d_{n+i+1} - x_{i+1} d_{i+1}) + 2, for so(2n+1), T = {2..n+1}."""
    n, nv = ctx.spec.n, ctx.nvars
    t = WeylOperator.term
    op = t(nv, mul=(1,), diff=(1,), c=4) + WeylOperator.scalar(nv).scale(2)
    for i in range(1, n + 1):
        op = op + t(nv, mul=(n + i + 1,), diff=(n + i + 1,), c=4) + t(nv, mul=(i + 1,), diff=(i + 1,), c=-4)
    return op


def so_odd_commutator_identity(n: int) -> dict:
    from .weyl import commutator

    ctx = RepresentationContext.build(AlgebraSpec("so_odd", n), range(2, n + 2))
    lhs = commutator(ctx.delta, ctx.eta)
    rhs = so_odd_commutator_rhs(ctx)
    names = ctx.names()
    return {"case": "so_odd_commutator", "params": {"n": n, "context": ctx.describe()},
            "lhs": lhs.format(names), "rhs": rhs.format(names), "verdict": "PASS" if lhs == rhs else "FAIL"}
