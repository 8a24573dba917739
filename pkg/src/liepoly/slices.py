"""Finite slices of the graded polynomial modules and operators restricted to them.

A slice fixes the grade (an integer in the single-family ring, a pair
``(l1, l2)`` in the double-family ring) and a weighted degree.  The weights
default to 1, but Delta and eta need not be homogeneous in total degree (e.g.
``d1^2 - 2*x2*d4`` for so(5)), so ``adapted_weights`` finds small positive
integer weights under which both are homogeneous.  Weighted-degree pieces are
finite and Delta/eta map pieces to pieces.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .linalg import ExactMatrix, nullspace_rows, rank_rows
from .poly import Polynomial, grlex_key, monomials_of_weighted_degree
from .rep import RepresentationContext, UnsupportedError
from .weyl import WeylOperator, apply

DEFAULT_MONOMIAL_CAP = 20000


class SliceCapExceeded(RuntimeError):
    def __init__(self, what: str, count: int, cap: int):
        super().__init__(f"{what}: {count} monomials exceeds cap {cap}")
        self.what = what
        self.count = count
        self.cap = cap

    def __reduce__(self):
        return (SliceCapExceeded, (self.what, self.count, self.cap))


class SliceEscapeError(ValueError):
    """An operator image has terms outside the declared codomain slice."""


def operator_shift(op: WeylOperator, weights: Sequence[int]) -> set[int]:
    return {sum(w * (a - b) for w, a, b in zip(weights, m, d)) for (m, d) in op.terms}


@lru_cache(maxsize=None)
def adapted_weights(ctx: RepresentationContext) -> tuple[int, ...]:
    """Smallest positive weights (entries <= 3) making Delta and eta homogeneous.

    Contexts without Delta/eta use all-ones weights.
    """
    nv = ctx.nvars
    try:
        ops = [ctx.delta, ctx.eta]
    except UnsupportedError:
        return (1,) * nv
    best = None
    for w in product((1, 2, 3), repeat=nv):
        if best is not None and (max(w), sum(w)) >= (max(best), sum(best)):
            continue
        sd, se = operator_shift(ops[0], w), operator_shift(ops[1], w)
        if len(sd) == 1 and len(se) == 1 and sd.pop() == -se.pop():
            best = w
    if best is None:
        raise UnsupportedError(f"no adapted weights found for {ctx.describe()}")
    return best


def weighted_degree(alpha: Sequence[int], weights: Sequence[int]) -> int:
    return sum(w * a for w, a in zip(weights, alpha))


@dataclass(frozen=True)
class SliceSpec:
    ctx: RepresentationContext
    grade: object
    degree: int
    weights: tuple | None = None

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        if self.weights is not None and len(self.weights) != self.ctx.nvars:
            raise ValueError("weight vector has wrong length")
        if self.ctx.model == "B" and not (isinstance(self.grade, tuple) and len(self.grade) == 2):
            raise ValueError("double-family slices are graded by (l1, l2)")

    @property
    def w(self) -> tuple[int, ...]:
        return self.weights if self.weights is not None else (1,) * self.ctx.nvars

    def describe(self) -> dict:
        g = list(self.grade) if isinstance(self.grade, tuple) else self.grade
        return {"grade": g, "degree": self.degree, "weights": list(self.w)}


@dataclass(frozen=True)
class SliceBasis:
    spec: SliceSpec
    monomials: tuple

    def __len__(self):
        return len(self.monomials)

    @property
    def index(self) -> dict:
        return {e: i for i, e in enumerate(self.monomials)}

    def to_json(self) -> str:
        return json.dumps([list(e) for e in self.monomials])

    def polynomials(self) -> list[Polynomial]:
        return [Polynomial.monomial(e) for e in self.monomials]


def enumerate_slice(spec: SliceSpec, cap: int = DEFAULT_MONOMIAL_CAP) -> SliceBasis:
    ctx = spec.ctx
    out = []
    count = 0
    for e in monomials_of_weighted_degree(spec.w, spec.degree):
        count += 1
        if count > 50 * cap:
            raise SliceCapExceeded(f"slice {spec.describe()}", count, 50 * cap)
        if ctx.grade_of_monomial(e) == spec.grade:
            out.append(e)
            if len(out) > cap:
                raise SliceCapExceeded(f"slice {spec.describe()}", len(out), cap)
    out.sort(key=grlex_key, reverse=True)
    return SliceBasis(spec, tuple(out))


def monomials_up_to(ctx: RepresentationContext, grade, max_degree: int, weights=None,
                    cap: int = DEFAULT_MONOMIAL_CAP) -> list[tuple]:
    """All monomials of the given grade with weighted degree <= max_degree."""
    w = weights or (1,) * ctx.nvars
    out = []
    for d in range(max_degree + 1):
        out += enumerate_slice(SliceSpec(ctx, grade, d, tuple(w)), cap).monomials
        if len(out) > cap:
            raise SliceCapExceeded(f"grade {grade} up to degree {max_degree}", len(out), cap)
    return out


def operator_matrix(op: WeylOperator, domain: SliceBasis, codomain: SliceBasis) -> ExactMatrix:
    idx = codomain.index
    cols = []
    for e in domain.monomials:
        img = apply(op, Polynomial.monomial(e))
        col = {}
        for f, c in img.terms.items():
            if f not in idx:
                raise SliceEscapeError(f"image of {e} has term {f} outside the codomain slice")
            col[idx[f]] = c
        cols.append(col)
    return ExactMatrix.from_columns(cols, len(codomain))


def _stacked_rows(ops: Sequence[WeylOperator], monomials: Sequence[tuple]) -> list[dict]:
    """Rows of the stacked matrices of ``ops`` on span(monomials), rows indexed on the fly."""
    rows: dict = {}
    for j, e in enumerate(monomials):
        p = Polynomial.monomial(e)
        for k, op in enumerate(ops):
            for f, c in apply(op, p).terms.items():
                rows.setdefault((k, f), {})[j] = c
    return list(rows.values())


def joint_kernel(ops: Sequence[WeylOperator], monomials: Sequence[tuple]) -> list[Polynomial]:
    """Basis of the common kernel of ``ops`` on span(monomials), leading coefficient 1.

    The basis is in reduced form with respect to the grlex-descending order of
    ``monomials``, so it is canonical for the subspace.
    """
    monomials = sorted(monomials, key=grlex_key, reverse=True)
    if not monomials:
        return []
    nv = len(monomials[0])
    vecs = nullspace_rows(_stacked_rows(ops, monomials), len(monomials))
    return [Polynomial(nv, {monomials[i]: c for i, c in enumerate(v) if c}).normalized() for v in vecs]


def image_polys(op: WeylOperator, monomials: Sequence[tuple]) -> list[Polynomial]:
    return [apply(op, Polynomial.monomial(e)) for e in monomials]


def rank_of_polys(polys: Iterable[Polynomial]) -> int:
    keys: dict = {}
    rows = []
    for p in polys:
        rows.append({keys.setdefault(e, len(keys)): c for e, c in p.terms.items()})
    return rank_rows(rows, len(keys))


def coordinates(p: Polynomial, basis: SliceBasis) -> list[Fraction]:
    idx = basis.index
    v = [Fraction(0)] * len(basis)
    for e, c in p.terms.items():
        if e not in idx:
            raise SliceEscapeError(f"term {e} not in slice")
        v[idx[e]] = c
    return v
