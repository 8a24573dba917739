"""The diagonal bilinear form (x^a | x^b) = delta_ab (-1)^{sum_{i in T} a_i} a! and what it certifies.

For the double-family ring the form is taken on the merged variable list
x_1..x_n, y_1..y_n with the sign over swapped x-indices only; this is the
reading under which y_i plays the role of x_{n+i}, and it is reported as
derived rather than stated.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Sequence

from .lie import AlgebraSpec, LieElement
from .poly import ArityError, Polynomial, monomials_of_degree
from .rep import RepresentationContext, SwapPartition
from .slices import DEFAULT_MONOMIAL_CAP, adapted_weights, joint_kernel, monomials_up_to
from .weyl import apply

CAVEAT = ("truncation-level evidence for the hypotheses of the irreducibility criterion "
          "(single singular line v with (v|v) != 0) up to the degree cap; not a proof")


def monomial_norm(alpha: Sequence[int], T: Iterable[int]) -> int:
    sign = (-1) ** sum(alpha[i - 1] for i in T if i <= len(alpha))
    return sign * prod(factorial(a) for a in alpha)


def form(ctx: RepresentationContext, p: Polynomial, q: Polynomial) -> Fraction:
    if p.nvars != ctx.nvars or q.nvars != ctx.nvars:
        raise ArityError("form arguments must live in the context's ring")
    T = ctx.partition.T
    small, big = (p, q) if len(p.terms) <= len(q.terms) else (q, p)
    total = Fraction(0)
    qt = big.terms
    for e, c in small.terms.items():
        d = qt.get(e)
        if d:
            total += c * d * monomial_norm(e, T)
    return total


def gram(ctx: RepresentationContext, monomials: Sequence[tuple]) -> list[list[Fraction]]:
    T = ctx.partition.T
    n = len(monomials)
    G = [[Fraction(0)] * n for _ in range(n)]
    for i, e in enumerate(monomials):
        G[i][i] = Fraction(monomial_norm(e, T))
    return G


def adjoint_check(ctx: RepresentationContext, g: LieElement, alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """(g.x^alpha | x^beta) == (x^alpha | g^t.x^beta)."""
    a, b = Polynomial.monomial(alpha), Polynomial.monomial(beta)
    lhs = form(ctx, apply(ctx.rho(g, check=False), a), b)
    rhs = form(ctx, a, apply(ctx.rho(g.transpose(), check=False), b))
    return lhs == rhs


@dataclass
class SweepResult:
    N: int
    partitions: int
    generators: int
    pairs: int
    violations: list

    @property
    def verdict(self) -> str:
        return "PASS" if not self.violations else "FAIL"


def contravariance_sweep(N: int, max_degree: int) -> SweepResult:
    """All partitions of 1..N, all E_ij, all monomial pairs of degree <= max_degree."""
    from itertools import combinations

    spec = AlgebraSpec("gl", N)
    mons = [e for d in range(max_degree + 1) for e in monomials_of_degree(N, d)]
    violations = []
    checked = 0
    parts = [T for r in range(N + 1) for T in combinations(range(1, N + 1), r)]
    for T in parts:
        ctx = RepresentationContext(spec, SwapPartition(N, frozenset(T)))
        norms = {e: monomial_norm(e, T) for e in mons}
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                op, opt = ctx.rho_unit(i, j), ctx.rho_unit(j, i)
                img = {a: apply(op, Polynomial.monomial(a)).terms for a in mons}
                imgt = {b: apply(opt, Polynomial.monomial(b)).terms for b in mons}
                for a in mons:
                    ia = img[a]
                    for b in mons:
                        lhs = ia.get(b, 0) * norms[b]
                        rhs = imgt[b].get(a, 0) * norms[a]
                        checked += 1
                        if lhs != rhs:
                            violations.append((T, (i, j), a, b))
    return SweepResult(N, len(parts), N * N, checked, violations)


@dataclass
class Certificate:
    case: str
    degree_cap: int
    witnesses: list
    norms: list
    verdict: str
    caveat: str = CAVEAT

    def to_dict(self) -> dict:
        return {"case": self.case, "degree_cap": self.degree_cap, "singular_witnesses": self.witnesses,
                "norms": self.norms, "verdict": self.verdict, "caveat": self.caveat}


def module_monomials(ctx: RepresentationContext, grade, max_degree: int, harmonic: str | None = None,
                     cap: int = DEFAULT_MONOMIAL_CAP) -> list[tuple]:
    """Truncation of A_<grade>: total degree <= D, or for a harmonic piece every adapted-weight
    piece of weighted degree <= D * max(weight), which contains all monomials of degree <= D."""
    if harmonic is None:
        return monomials_up_to(ctx, grade, max_degree, cap=cap)
    w = adapted_weights(ctx)
    return monomials_up_to(ctx, grade, max_degree * max(w), weights=w, cap=cap)


def module_singular_vectors(ctx: RepresentationContext, grade, max_degree: int, harmonic: str | None = None,
                            cap: int = DEFAULT_MONOMIAL_CAP) -> list[Polynomial]:
    """Singular vectors of A_<grade> (or of its Delta/eta kernel) inside the truncation."""
    mons = module_monomials(ctx, grade, max_degree, harmonic, cap)
    ops = list(ctx.positive_ops)
    if harmonic == "delta":
        ops.append(ctx.delta)
    elif harmonic == "eta":
        ops.append(ctx.eta)
    spaces: dict = {}
    for e in mons:
        spaces.setdefault(ctx.weight_of_monomial(e), []).append(e)
    out = []
    for w in sorted(spaces):
        out += joint_kernel(ops, spaces[w])
    return out


def irreducibility_certificate(ctx: RepresentationContext, grade, max_degree: int, harmonic: str | None = None,
                               case: str = "", cap: int = DEFAULT_MONOMIAL_CAP) -> Certificate:
    vecs = module_singular_vectors(ctx, grade, max_degree, harmonic, cap)
    norms = [form(ctx, v, v) for v in vecs]
    ok = len(vecs) == 1 and norms[0] != 0
    return Certificate(case or ctx.describe(), max_degree, [ctx.fmt(v) for v in vecs],
                       [str(c) for c in norms], "PASS" if ok else "FAIL")


def so_odd_adjoint_sweep(n: int, max_degree: int) -> SweepResult:
    """Adjointness for the so(2n+1) basis under its own index convention, every admissible T."""
    from .lie import basis
    from .rep import all_partitions

    spec = AlgebraSpec("so_odd", n)
    N = spec.N
    mons = [e for d in range(max_degree + 1) for e in monomials_of_degree(N, d)]
    parts = all_partitions(spec)
    gens = basis(spec)
    violations = []
    checked = 0
    for part in parts:
        ctx = RepresentationContext(spec, part)
        norms = {e: monomial_norm(e, part.T) for e in mons}
        for g in gens:
            op, opt = ctx.rho(g, check=False), ctx.rho(g.transpose(), check=False)
            img = {a: apply(op, Polynomial.monomial(a)).terms for a in mons}
            imgt = {b: apply(opt, Polynomial.monomial(b)).terms for b in mons}
            for a in mons:
                for b in mons:
                    checked += 1
                    if img[a].get(b, 0) * norms[b] != imgt[b].get(a, 0) * norms[a]:
                        violations.append((tuple(sorted(part.T)), str(g), a, b))
    return SweepResult(N, len(parts), len(gens), checked, violations)
