"""Series solutions of flag-type equations (T1 + T2) f = 0.

Given h with T1(h) = 0 and a factor g, the candidate solution is

    f = sum_{i >= 0} (-T1inv T2)^i (h g)

where T1inv is a right inverse of T1 given monomial by monomial.  The sum
terminates when T2 strictly lowers a filtration degree that T1inv does not
raise; the solver stops at the first zero term and gives up after a cap.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .poly import Polynomial
from .rep import RepresentationContext
from .weyl import WeylOperator, apply

MonomialInverse = Callable[[tuple], tuple[Fraction, tuple]]


class SeriesDidNotTerminate(RuntimeError):
    pass


@dataclass(frozen=True)
class FlagSolverConfig:
    name: str
    ctx: RepresentationContext
    T1: WeylOperator
    T2: WeylOperator
    t1_inverse: MonomialInverse = field(repr=False)
    filtration: Callable[[tuple], int] = field(repr=False)
    description: str = ""

    def invert(self, p: Polynomial) -> Polynomial:
        terms: dict = {}
        for e, c in p.terms.items():
            s, f = self.t1_inverse(e)
            terms[f] = terms.get(f, 0) + c * s
        return Polynomial(p.nvars, terms)

    def check_right_inverse(self, p: Polynomial) -> bool:
        return apply(self.T1, self.invert(p)) == p

    def check_filtration(self, samples) -> bool:
        """T2 lowers the filtration degree on every sample monomial."""
        for e in samples:
            img = apply(self.T2, Polynomial.monomial(e))
            if any(self.filtration(f) >= self.filtration(e) for f in img.terms):
                return False
        return True


def xu_solve(config: FlagSolverConfig, h: Polynomial, g: Polynomial, max_iter: int = 500) -> Polynomial:
    if not apply(config.T1, h).is_zero():
        raise ValueError("h must satisfy T1(h) = 0")
    term = h * g
    total = term
    for _ in range(max_iter):
        img = apply(config.T2, term)
        if img.is_zero():
            break
        if not config.check_right_inverse(img):
            raise ArithmeticError(f"{config.name}: T1inv is not a right inverse on the working span")
        term = -config.invert(img)
        total = total + term
    else:
        raise SeriesDidNotTerminate(
            f"{config.name}: no termination after {max_iter} steps; T2 must lower the filtration degree"
        )
    if not apply(config.T1 + config.T2, total).is_zero():
        raise ArithmeticError(f"{config.name}: series output is not annihilated by T1 + T2")
    return total


def _pair_inverse(a: int, b: int) -> MonomialInverse:
    """x^e -> x_a x_b x^e / ((e_a + 1)(e_b + 1)), right inverse of d_a d_b (1-based)."""

    def inv(e):
        f = list(e)
        f[a - 1] += 1
        f[b - 1] += 1
        return Fraction(1, (e[a - 1] + 1) * (e[b - 1] + 1)), tuple(f)

    return inv


def _square_inverse(a: int) -> MonomialInverse:
    def inv(e):
        f = list(e)
        f[a - 1] += 2
        return Fraction(1, (e[a - 1] + 1) * (e[a - 1] + 2)), tuple(f)

    return inv


def _sum_of(indices: list[int]) -> Callable[[tuple], int]:
    return lambda e: sum(e[i - 1] for i in indices)


def _config(name: str, ctx: RepresentationContext, T1: WeylOperator, inv, filt, desc: str,
            T2: WeylOperator | None = None) -> FlagSolverConfig:
    return FlagSolverConfig(name, ctx, T1, ctx.delta - T1 if T2 is None else T2, inv, filt, desc)


def thm_3_4(n: int) -> FlagSolverConfig:
    from .lie import AlgebraSpec

    ctx = RepresentationContext.build(AlgebraSpec("so_even", n), range(1, n))
    T1 = WeylOperator.term(ctx.nvars, diff=(n, 2 * n))
    return _config("thm_3_4", ctx, T1, _pair_inverse(n, 2 * n), _sum_of([n + i for i in range(1, n)]),
                   "so(2n), T={1..n-1}: T1 = d_n d_2n")


def thm_3_5(n: int, s: int) -> FlagSolverConfig:
    from .lie import AlgebraSpec

    if not 1 <= s < n - 1:
        raise ValueError("requires 1 <= s < n-1")
    ctx = RepresentationContext.build(AlgebraSpec("so_even", n), range(1, s + 1))
    T1 = WeylOperator.term(ctx.nvars, diff=(n, 2 * n))
    return _config("thm_3_5", ctx, T1, _pair_inverse(n, 2 * n), _sum_of([n + i for i in range(1, n)]),
                   f"so(2n), T={{1..{s}}}: T1 = d_n d_2n")


def thm_4_2(n: int) -> FlagSolverConfig:
    from .lie import AlgebraSpec

    ctx = RepresentationContext.build(AlgebraSpec("so_odd", n), range(2, n + 2))
    T1 = WeylOperator.term(ctx.nvars, diff=(1, 1))
    return _config("thm_4_2", ctx, T1, _square_inverse(1), _sum_of([n + i + 1 for i in range(1, n + 1)]),
                   "so(2n+1), T={2..n+1}: T1 = d_1^2")


def thm_4_3(n: int, s: int) -> FlagSolverConfig:
    from .lie import AlgebraSpec

    ctx = RepresentationContext.build(AlgebraSpec("so_odd", n), range(2, s + 2))
    T1 = WeylOperator.term(ctx.nvars, diff=(1, 1))
    return _config("thm_4_3", ctx, T1, _square_inverse(1), _sum_of([n + i + 1 for i in range(1, n + 1)]),
                   f"so(2n+1), T={{2..{s + 1}}}: T1 = d_1^2")


def thm_5_4(n: int) -> FlagSolverConfig:
    from .lie import AlgebraSpec

    ctx = RepresentationContext.build(AlgebraSpec("sl", n), range(1, n), "B")
    T1 = WeylOperator.term(ctx.nvars, diff=(n, 2 * n))
    return _config("thm_5_4", ctx, T1, _pair_inverse(n, 2 * n), _sum_of([n + i for i in range(1, n)]),
                   "sl(n) double family, T={1..n-1}: T1 = dx_n dy_n")


def thm_5_5(n: int, s: int) -> FlagSolverConfig:
    from .lie import AlgebraSpec

    if not 1 <= s < n - 1:
        raise ValueError("requires 1 <= s < n-1")
    ctx = RepresentationContext.build(AlgebraSpec("sl", n), range(1, s + 1), "B")
    T1 = WeylOperator.term(ctx.nvars, diff=(n, 2 * n))
    return _config("thm_5_5", ctx, T1, _pair_inverse(n, 2 * n), _sum_of([n + i for i in range(1, n)]),
                   f"sl(n) double family, T={{1..{s}}}: T1 = dx_n dy_n")


def lemma_4_1(n: int) -> FlagSolverConfig:
    """The positive root vector E_{n+1,1} - E_{1,2n+1} on functions of x_1, x_{n+1}, x_{2n+1}."""
    from .lie import AlgebraSpec

    ctx = RepresentationContext.build(AlgebraSpec("so_odd", n), range(2, n + 2))
    nv = ctx.nvars
    T1 = WeylOperator.term(nv, diff=(1, n + 1))
    T2 = WeylOperator.term(nv, mul=(1,), diff=(2 * n + 1,), c=-1)
    return _config("lemma_4_1", ctx, T1, _pair_inverse(1, n + 1), _sum_of([2 * n + 1]),
                   "so(2n+1): T1 = d_{n+1} d_1, T2 = -x_1 d_{2n+1}", T2)


CONFIGS = {
    "thm_3_4": thm_3_4,
    "thm_3_5": thm_3_5,
    "thm_4_2": thm_4_2,
    "thm_4_3": thm_4_3,
    "thm_5_4": thm_5_4,
    "thm_5_5": thm_5_5,
    "lemma_4_1": lemma_4_1,
}


@dataclass
class SeriesComparison:
    config: str
    params: dict
    checked: int
    mismatches: list
    verdict: str

    def to_dict(self) -> dict:
        return {"case": self.config, "params": self.params, "checked": self.checked,
                "mismatches": self.mismatches, "verdict": self.verdict}


def _split(alpha: tuple, keep: list[int]) -> tuple[Polynomial, Polynomial]:
    h = [0] * len(alpha)
    g = list(alpha)
    for k in keep:
        h[k - 1] = alpha[k - 1]
        g[k - 1] = 0
    return Polynomial.monomial(tuple(h)), Polynomial.monomial(tuple(g))


def compare_with_family(name: str, n: int, s: int | None = None, max_degree: int = 4) -> SeriesComparison:
    """Run the solver on h * g for every admissible monomial x^alpha = h g of degree <= max_degree
    and compare with the closed-form series element for alpha, coefficient by coefficient.

    h is the part of x^alpha in the variables T1 differentiates; admissibility means T1(h) = 0.
    """
    from .families import series_so_even, series_so_odd
    from .poly import monomials_of_degree

    cfg = CONFIGS[name](n) if s is None else CONFIGS[name](n, s)
    odd = name in ("thm_4_2", "thm_4_3")
    ss = s if s is not None else (n if odd else n - 1)
    delta = cfg.ctx.delta
    checked, bad = 0, []
    for d in range(max_degree + 1):
        for a in monomials_of_degree(cfg.ctx.nvars, d):
            if odd:
                if a[0] > 1:
                    continue
                h, g = _split(a, [1])
                closed = series_so_odd(n, ss, a)
            else:
                if a[n - 1] and a[2 * n - 1]:
                    continue
                h, g = _split(a, [n, 2 * n])
                closed = series_so_even(n, ss, a)
            f = xu_solve(cfg, h, g)
            checked += 1
            if f != closed or not apply(delta, f).is_zero():
                bad.append(list(a))
    params = {"n": n, "max_degree": max_degree, "context": cfg.ctx.describe()}
    if s is not None:
        params["s"] = s
    return SeriesComparison(name, params, checked, bad, "PASS" if not bad else "FAIL")
