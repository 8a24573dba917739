"""Registry of (highest-weight vector, weight) statements and their exact check.

Each claim builds a context and a vector for one parameter value and states
the weight in fundamental-weight coordinates.  The check confirms the vector
is singular, sits in the stated module (grade, and Delta or eta kernel where
the module is a harmonic piece) and has exactly that weight.  Where the
stated weight is inconsistent with the vector, the claim records both the
literal and the corrected coordinates; the literal value must then fail and
the corrected one must hold.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterator

from .lie import AlgebraSpec
from .poly import Polynomial
from .rep import RepresentationContext
from .singular import f_pq, is_singular
from .weyl import apply


def L(rank: int, pairs: list[tuple[int, int]]) -> tuple[Fraction, ...]:
    v = [Fraction(0)] * rank
    for i, c in pairs:
        if 1 <= i <= rank:
            v[i - 1] += c
    return tuple(v)


@dataclass(frozen=True)
class Instance:
    ctx: RepresentationContext
    vector: Polynomial
    grade: object
    module: str  # "", "delta" (harmonic) or "eta"
    weight: tuple
    literal: tuple | None = None  # the stated value when it differs from `weight`
    label: str = ""


@dataclass(frozen=True)
class Claim:
    claim_id: str
    anchor: str
    instances: Callable[[], Iterator[Instance]] = field(repr=False)
    erratum: str = ""


def _ctx(family, n, T, model="A"):
    return RepresentationContext.build(AlgebraSpec(family, n), T, model)


def _x(ctx, i):
    return Polynomial.var(i, ctx.nvars)


def _lemma_2_5():
    ctx = _ctx("sp", 2, [1])
    for k in range(0, 4):
        yield Instance(ctx, _x(ctx, 2) ** k, k, "", L(2, [(1, -(k + 1)), (2, k)]), label=f"x2^{k}")
    for k in range(1, 4):
        yield Instance(ctx, _x(ctx, 1) ** k, -k, "", L(2, [(1, -(k + 1))]), label=f"x1^{k}")


def _lemma_2_6():
    ctx = _ctx("sp", 2, [1, 2])
    for k in range(1, 4):
        w = L(2, [(1, k), (2, -(k + 1))])
        yield Instance(ctx, _x(ctx, 4) ** k, k, "", w, label=f"x4^{k}")
        yield Instance(ctx, _x(ctx, 2) ** k, -k, "", w, label=f"x2^{k}")


def _lemma_2_7():
    ctx = _ctx("sp", 2, [1, 2])
    yield Instance(ctx, Polynomial.constant(4), 0, "", L(2, [(2, -1)]), label="1")
    yield Instance(ctx, ctx.poly("x1*x4 - x2*x3"), 0, "", L(2, [(2, -2)]), label="u")


def _thm_2_10_b():
    for n in (2, 3):
        for t in range(1, n):
            ctx = _ctx("sp", n, range(1, t + 1))
            for k in range(0, 4):
                yield Instance(ctx, _x(ctx, t + 1) ** k, k, "", L(n, [(t, -(k + 1)), (t + 1, k)]),
                               label=f"n={n} t={t} x{t + 1}^{k}")
            for k in range(-3, 0):
                yield Instance(ctx, _x(ctx, t) ** (-k), k, "", L(n, [(t - 1, -k), (t, k - 1)]),
                               label=f"n={n} t={t} x{t}^{-k}")


def _thm_2_10_e():
    for n in (2, 3):
        ctx = _ctx("sp", n, range(1, n + 1))
        for k in range(1, 4):
            w = L(n, [(n - 1, k), (n, -(k + 1))])
            yield Instance(ctx, _x(ctx, 2 * n) ** k, k, "", w, label=f"n={n} x{2 * n}^{k}")
            yield Instance(ctx, _x(ctx, n) ** k, -k, "", w, label=f"n={n} x{n}^{k}")


def _thm_2_10_f():
    for n in (2, 3):
        ctx = _ctx("sp", n, range(1, n + 1))
        yield Instance(ctx, Polynomial.constant(ctx.nvars), 0, "", L(n, [(n, -1)]), label=f"n={n} 1")
        u = ctx.poly(f"x{n - 1}*x{2 * n} - x{n}*x{2 * n - 1}")
        stated = L(n, [(n, -2)])
        true = L(n, [(n - 2, 1), (n, -2)])
        yield Instance(ctx, u, 0, "", true, None if true == stated else stated, label=f"n={n} u")


def _thm_3_3():
    for n in (2, 3):
        ctx = _ctx("so_even", n, range(1, n + 1))
        for k in range(0, 4):
            yield Instance(ctx, _x(ctx, 2 * n) ** k, k, "eta", L(n, [(n - 1, k), (n, -(k + 2))]),
                           label=f"n={n} x{2 * n}^{k}")
        for k in range(-3, 0):
            yield Instance(ctx, _x(ctx, n) ** (-k), k, "delta", L(n, [(n - 1, -k), (n, k - 2)]),
                           label=f"n={n} x{n}^{-k}")


def _thm_3_4():
    for n in (2, 3):
        ctx = _ctx("so_even", n, range(1, n))
        for k in range(-3, 1):
            yield Instance(ctx, _x(ctx, n - 1) ** (-k), k, "delta",
                           L(n, [(n - 2, -k), (n - 1, k - 1), (n, k - 1)]), label=f"n={n} x{n - 1}^{-k}")


def _thm_3_5():
    n, s = 3, 1
    ctx = _ctx("so_even", n, range(1, s + 1))
    for k in range(-3, -(n - s - 1) + 1):
        yield Instance(ctx, _x(ctx, s) ** (-k), k, "delta", L(n, [(s - 1, -k), (s, k - 1)]),
                       label=f"x{s}^{-k}")


def _thm_4_2():
    for n in (2, 3):
        ctx = _ctx("so_odd", n, range(2, n + 2))
        for k in range(1, 4):
            yield Instance(ctx, f_pq(n, 1, k - 1), k, "delta", L(n, [(n - 1, k - 1), (n, -2 * k)]),
                           label=f"n={n} f_1,{k - 1}")
        for k in range(-3, 1):
            yield Instance(ctx, _x(ctx, n + 1) ** (-k), k, "delta", L(n, [(n - 1, -k), (n, 2 * (k - 1))]),
                           label=f"n={n} x{n + 1}^{-k}")


def _thm_4_3():
    for n in (2, 3):
        for s in range(1, n):
            ctx = _ctx("so_odd", n, range(2, s + 2))
            for k in range(0, 4):
                top = k if s < n - 1 else 2 * k
                yield Instance(ctx, _x(ctx, s + 2) ** k, k, "delta", L(n, [(s, -(k + 1)), (s + 1, top)]),
                               label=f"n={n} s={s} x{s + 2}^{k}")
            for k in range(-3, 0):
                yield Instance(ctx, _x(ctx, s + 1) ** (-k), k, "delta", L(n, [(s - 1, -k), (s, k - 1)]),
                               label=f"n={n} s={s} x{s + 1}^{-k}")


def _b_grades():
    for l1 in range(-3, 4):
        for l2 in range(0, 4):
            yield l1, l2


def _thm_5_2():
    for n in (2, 3):
        ctx = _ctx("sl", n, range(1, n + 1), "B")
        u = ctx.poly(f"x{n - 1}*y{n} - x{n}*y{n - 1}")
        xn, yn = _x(ctx, n), _x(ctx, 2 * n)
        r = n - 1
        for l1, l2 in _b_grades():
            if l1 + l2 <= 0:
                v = xn ** (-l1 - l2) * u ** l2
                yield Instance(ctx, v, (l1, l2), "delta", L(r, [(n - 2, l2), (n - 1, -(l1 + l2))]),
                               label=f"n={n} ({l1},{l2})")
            elif l1 <= 0:
                v = yn ** (l1 + l2) * u ** (-l1)
                yield Instance(ctx, v, (l1, l2), "eta", L(r, [(n - 2, -l1), (n - 1, l1 + l2)]),
                               label=f"n={n} ({l1},{l2})")


def _thm_5_4():
    for n in (2, 3):
        s = n - 1
        ctx = _ctx("sl", n, range(1, s + 1), "B")
        nv = ctx.nvars
        r = n - 1
        for l1, l2 in _b_grades():
            if l1 + l2 <= 0:
                v = _x(ctx, s) ** (-l1) * _x(ctx, 2 * n) ** l2
                yield Instance(ctx, v, (l1, l2), "delta", L(r, [(n - 2, -l1), (n - 1, l1 + l2 - 1)]),
                               label=f"n={n} ({l1},{l2})")
            elif l1 > 0:
                terms = {}
                for t in range(l2 + 1):
                    e = [0] * nv
                    e[s - 1], e[n - 1], e[n + s - 1], e[2 * n - 1] = t, l1 + t, l2 - t, t
                    terms[tuple(e)] = Fraction(factorial(l1) * factorial(l2),
                                               factorial(t) * factorial(l1 + t) * factorial(l2 - t))
                yield Instance(ctx, Polynomial(nv, terms), (l1, l2), "delta",
                               L(r, [(n - 2, l2), (n - 1, -(l1 + l2 + 1))]), label=f"n={n} ({l1},{l2})")


def _thm_5_5():
    n, s = 3, 1
    ctx = _ctx("sl", n, range(1, s + 1), "B")
    r = n - 1
    for l1, l2 in _b_grades():
        if not (l1 + l2 <= -(n - s - 1) or l1 > -(n - s - 1)):
            continue
        if l1 <= 0:
            v = _x(ctx, s) ** (-l1) * _x(ctx, 2 * n) ** l2
            w = L(r, [(s - 1, -l1), (s, l1 - 1), (n - 1, l2)])
        else:
            v = _x(ctx, s + 1) ** l1 * _x(ctx, 2 * n) ** l2
            w = L(r, [(s, -(l1 + 1)), (s + 1, l1), (n - 1, l2)])
        yield Instance(ctx, v, (l1, l2), "delta", w, label=f"({l1},{l2})")


CLAIMS: list[Claim] = [
    Claim("lemma_2_5", "Lemma 2.5", _lemma_2_5),
    Claim("lemma_2_6", "Lemma 2.6", _lemma_2_6),
    Claim("lemma_2_7", "Lemma 2.7", _lemma_2_7),
    Claim("thm_2_10_b", "Theorem 2.10 b)", _thm_2_10_b),
    Claim("thm_2_10_e", "Theorem 2.10 e)", _thm_2_10_e),
    Claim("thm_2_10_f", "Theorem 2.10 f)", _thm_2_10_f,
          "weight of x_{n-1}x_{2n} - x_n x_{2n-1} is lambda_{n-2} - 2 lambda_n for n >= 3"),
    Claim("thm_3_3", "Theorem 3.3", _thm_3_3),
    Claim("thm_3_4", "Theorem 3.4", _thm_3_4),
    Claim("thm_3_5", "Theorem 3.5", _thm_3_5),
    Claim("thm_4_2", "Theorem 4.2", _thm_4_2),
    Claim("thm_4_3", "Theorem 4.3", _thm_4_3),
    Claim("thm_5_2", "Theorem 5.2", _thm_5_2),
    Claim("thm_5_4", "Theorem 5.4", _thm_5_4),
    Claim("thm_5_5", "Theorem 5.5", _thm_5_5,
          "branch by the sign of l1 (the printed branch condition does not separate the two cases)"),
]


@dataclass
class ClaimResult:
    claim_id: str
    label: str
    singular: bool
    in_module: bool
    weight_ok: bool
    literal_rejected: bool | None
    found: list

    @property
    def ok(self) -> bool:
        return self.singular and self.in_module and self.weight_ok and self.literal_rejected is not False

    def to_dict(self) -> dict:
        return {"claim": self.claim_id, "label": self.label, "singular": self.singular,
                "in_module": self.in_module, "weight_ok": self.weight_ok,
                "literal_rejected": self.literal_rejected, "weight": self.found,
                "verdict": "PASS" if self.ok else "FAIL"}


def check_instance(claim_id: str, inst: Instance) -> ClaimResult:
    ctx = inst.ctx
    v = inst.vector
    sing = is_singular(ctx, v)
    try:
        in_mod = ctx.grade(v) == inst.grade
    except ValueError:
        in_mod = False
    if inst.module:
        op = ctx.delta if inst.module == "delta" else ctx.eta
        in_mod = in_mod and apply(op, v).is_zero()
    try:
        w = ctx.weight(v).coords
    except ValueError:
        w = None
    lit = None if inst.literal is None else (w != tuple(inst.literal))
    return ClaimResult(claim_id, inst.label, sing, in_mod, w == tuple(inst.weight), lit,
                       [str(c) for c in w] if w is not None else [])


def check_claims(ids: list[str] | None = None) -> list[ClaimResult]:
    out = []
    for claim in CLAIMS:
        if ids and claim.claim_id not in ids:
            continue
        for inst in claim.instances():
            out.append(check_instance(claim.claim_id, inst))
    return out
