"""Swap-partition representations of matrix Lie algebras on polynomial rings.

For a partition {S, T} of the variable indices, the matrix unit E_ij acts by

    i, j in S:       x_i d_j
    i in S, j in T:  -x_i x_j
    i in T, j in S:  d_i d_j
    i, j in T:       -x_j d_i - delta_ij

This is the canonical action x_i d_j conjugated by the Weyl-algebra
automorphism x_i -> d_i, d_i -> -x_i for i in T, so it represents all of
gl(N).  The double-family model (variables x_1..x_n, y_1..y_n) adds
-y_j d_{y_i} to every E_ij and swaps only x-variables.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .lie import (
    AlgebraError,
    AlgebraSpec,
    LieElement,
    WeightVector,
    basis,
    cartan_and_positive,
    coroots,
    in_algebra,
    negative_root_vectors,
)
from .poly import Polynomial, default_names
from .weyl import WeylOperator, diagonal_eigenvalue


class UnsupportedError(ValueError):
    pass


@dataclass(frozen=True)
class SwapPartition:
    N: int
    T: frozenset

    def __post_init__(self):
        object.__setattr__(self, "T", frozenset(self.T))
        bad = [i for i in self.T if not 1 <= i <= self.N]
        if bad:
            raise ValueError(f"swap indices {sorted(bad)} outside 1..{self.N}")

    @property
    def S(self) -> frozenset:
        return frozenset(range(1, self.N + 1)) - self.T

    @classmethod
    def parse(cls, text: str, N: int) -> "SwapPartition":
        text = text.strip()
        if not text:
            return cls(N, frozenset())
        try:
            idx = [int(t) for t in text.split(",")]
        except ValueError:
            raise ValueError(f"bad swap list {text!r}") from None
        return cls(N, frozenset(idx))

    def label(self) -> str:
        return ",".join(str(i) for i in sorted(self.T))

    def __str__(self):
        return "T={" + self.label() + "}"


@dataclass(frozen=True)
class PartitionProfile:
    S1: frozenset
    S2: frozenset
    T1: frozenset
    T2: frozenset


def profile(partition: SwapPartition, n: int, offset: int = 0) -> PartitionProfile:
    """Classify the pairs (i, n+i).  With ``offset=1`` (odd orthogonal case)
    the pairs are (i, n+i) for i in 2..n+1."""
    T = partition.T
    sets: dict[str, set] = {"S1": set(), "S2": set(), "T1": set(), "T2": set()}
    for i in range(1 + offset, n + 1 + offset):
        a, b = i in T, (n + i) in T
        key = ("T" if a else "S") + ("1" if a == b else "2")
        sets[key].add(i)
    return PartitionProfile(*(frozenset(sets[k]) for k in ("S1", "S2", "T1", "T2")))


def _generator_A(i: int, j: int, T: frozenset, nvars: int) -> WeylOperator:
    it, jt = i in T, j in T
    if not it and not jt:
        return WeylOperator.term(nvars, mul=(i,), diff=(j,))
    if not it and jt:
        return WeylOperator.term(nvars, mul=(i, j), c=-1)
    if it and not jt:
        return WeylOperator.term(nvars, diff=(i, j))
    op = WeylOperator.term(nvars, mul=(j,), diff=(i,), c=-1)
    if i == j:
        op = op - WeylOperator.scalar(nvars)
    return op


@dataclass(frozen=True)
class RepresentationContext:
    spec: AlgebraSpec
    partition: SwapPartition
    model: str = "A"

    def __post_init__(self):
        if self.model not in ("A", "B"):
            raise ValueError("model must be 'A' or 'B'")
        if self.model == "B" and self.spec.family not in ("sl", "gl"):
            raise ValueError("the double-family model is defined for sl and gl")
        if self.partition.N != self.spec.N:
            raise ValueError(f"partition arity {self.partition.N} vs ambient size {self.spec.N}")
        if self.spec.family == "so_odd" and 1 in self.partition.T:
            raise ValueError(
                "so(2n+1) requires 1 in S; the case 1 in T is equivalent by symmetry"
            )

    @classmethod
    def build(cls, spec: AlgebraSpec, swap: Iterable[int] | str = (), model: str = "A"):
        part = (
            SwapPartition.parse(swap, spec.N)
            if isinstance(swap, str)
            else SwapPartition(spec.N, frozenset(swap))
        )
        return cls(spec, part, model)

    @property
    def nvars(self) -> int:
        return 2 * self.spec.N if self.model == "B" else self.spec.N

    @property
    def n_x(self) -> int | None:
        return self.spec.N if self.model == "B" else None

    def names(self) -> list[str]:
        return default_names(self.nvars, self.n_x)

    def poly(self, text: str) -> Polynomial:
        from .poly import parse_polynomial

        return parse_polynomial(text, self.nvars, self.n_x)

    def fmt(self, p) -> str:
        return p.format(self.names())

    def describe(self) -> str:
        m = " double-family" if self.model == "B" else ""
        return f"{self.spec.label}{m} {self.partition}"

    # -- the action -------------------------------------------------------
    @cached_property
    def _generators(self) -> dict:
        N = self.spec.N
        nv = self.nvars
        T = self.partition.T
        out = {}
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                op = _generator_A(i, j, T, nv)
                if self.model == "B":
                    op = op - WeylOperator.term(nv, mul=(N + j,), diff=(N + i,))
                out[(i, j)] = op
        return out

    def rho_unit(self, i: int, j: int) -> WeylOperator:
        return self._generators[(i, j)]

    def rho(self, g: LieElement, check: bool = True) -> WeylOperator:
        if g.size != self.spec.N:
            raise AlgebraError("matrix size does not match the algebra")
        if check and self.spec.family != "gl" and not _member(self.spec, g):
            raise AlgebraError(f"{g} is not in {self.spec.label}")
        op = WeylOperator.zero(self.nvars)
        for (i, j), c in sorted(g.entries.items()):
            op = op + self._generators[(i, j)].scale(c)
        return op

    @cached_property
    def basis_ops(self) -> list[tuple[LieElement, WeylOperator]]:
        return [(g, self.rho(g, check=False)) for g in basis(self.spec)]

    @cached_property
    def positive_ops(self) -> list[WeylOperator]:
        return [self.rho(e, check=False) for e in cartan_and_positive(self.spec)[1]]

    @cached_property
    def negative_ops(self) -> list[WeylOperator]:
        return [self.rho(e, check=False) for e in negative_root_vectors(self.spec)]

    @cached_property
    def coroot_ops(self) -> list[WeylOperator]:
        return [self.rho(h, check=False) for h in coroots(self.spec)]

    def weight_of_monomial(self, alpha: Sequence[int]) -> tuple[Fraction, ...]:
        return tuple(diagonal_eigenvalue(op, alpha) for op in self.coroot_ops)

    def weight(self, p: Polynomial) -> WeightVector:
        """Weight of a weight vector; raises if p is not one."""
        ws = {self.weight_of_monomial(e) for e in p.terms}
        if len(ws) != 1:
            raise ValueError("not a weight vector" if ws else "zero vector has no weight")
        return WeightVector(ws.pop())

    # -- grading ------------------------------------------------------------
    def grade_of_monomial(self, alpha: Sequence[int]):
        N = self.spec.N
        T = self.partition.T
        g = sum(-a if (i + 1) in T else a for i, a in enumerate(alpha[:N]))
        if self.model == "B":
            return (g, sum(alpha[N:]))
        return g

    def grade(self, p: Polynomial):
        gs = {self.grade_of_monomial(e) for e in p.terms}
        if len(gs) > 1:
            from .poly import MixedGradeError

            raise MixedGradeError(f"terms have grades {sorted(gs)}")
        return gs.pop() if gs else None

    # -- Delta / eta ----------------------------------------------------------
    def _pair_ops(self):
        f = self.spec.family
        if f not in ("so_even", "so_odd") and not (self.model == "B" and f in ("sl", "gl")):
            raise UnsupportedError(f"no Laplace-type operator for {self.spec.label} in model {self.model}")

    @cached_property
    def delta(self) -> WeylOperator:
        return self._laplace(True)

    @cached_property
    def eta(self) -> WeylOperator:
        return self._laplace(False)

    def _laplace(self, is_delta: bool) -> WeylOperator:
        self._pair_ops()
        nv = self.nvars
        t = WeylOperator.term
        op = WeylOperator.zero(nv)
        f = self.spec.family
        n = self.spec.n
        if self.model == "B":
            N = self.spec.N
            for i in range(1, N + 1):
                if i in self.partition.T:
                    op = op + (t(nv, mul=(i,), diff=(N + i,), c=-1) if is_delta
                               else t(nv, mul=(N + i,), diff=(i,)))
                else:
                    op = op + (t(nv, diff=(i, N + i)) if is_delta else t(nv, mul=(i, N + i)))
            return op
        offset = 1 if f == "so_odd" else 0
        pr = profile(self.partition, n, offset)
        for i in pr.S1:
            op = op + (t(nv, diff=(i, n + i)) if is_delta else t(nv, mul=(i, n + i)))
        for i in pr.T1:
            op = op + (t(nv, mul=(i, n + i)) if is_delta else t(nv, diff=(i, n + i)))
        for i in pr.S2:
            op = op + (t(nv, mul=(n + i,), diff=(i,), c=-1) if is_delta else t(nv, mul=(i,), diff=(n + i,)))
        for i in pr.T2:
            op = op + (t(nv, mul=(i,), diff=(n + i,), c=-1) if is_delta else t(nv, mul=(n + i,), diff=(i,)))
        if f == "so_odd":
            lead = t(nv, diff=(1, 1)) if is_delta else t(nv, mul=(1, 1))
            op = lead + op.scale(2)
        return op


_member_cache: dict = {}


def _member(spec: AlgebraSpec, g: LieElement) -> bool:
    key = (spec, g)
    if key not in _member_cache:
        _member_cache[key] = in_algebra(spec, g)
    return _member_cache[key]


def delta_operator(ctx: RepresentationContext) -> WeylOperator:
    return ctx.delta


def eta_operator(ctx: RepresentationContext) -> WeylOperator:
    return ctx.eta


def rho(ctx: RepresentationContext, g: LieElement) -> WeylOperator:
    return ctx.rho(g)


def all_partitions(spec: AlgebraSpec, model: str = "A") -> list[SwapPartition]:
    """Every admissible partition (for so(2n+1), those with 1 in S)."""
    N = spec.N
    pool = list(range(2, N + 1)) if spec.family == "so_odd" else list(range(1, N + 1))
    out = []
    for r in range(len(pool) + 1):
        for T in combinations(pool, r):
            out.append(SwapPartition(N, frozenset(T)))
    return out


def bracket_fidelity(ctx: RepresentationContext) -> list[tuple[LieElement, LieElement]]:
    """Pairs of basis elements whose operator commutator disagrees with the matrix bracket."""
    from .lie import bracket
    from .weyl import commutator

    ops = ctx.basis_ops
    bad = []
    for a in range(len(ops)):
        for b in range(a + 1, len(ops)):
            ga, oa = ops[a]
            gb, ob = ops[b]
            if commutator(oa, ob) != ctx.rho(bracket(ga, gb), check=False):
                bad.append((ga, gb))
    return bad
