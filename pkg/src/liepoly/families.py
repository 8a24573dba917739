"""Closed-form basis families and their verification against exact kernels and orbits.

Two shapes occur.  Product families multiply powers of single variables with
powers of the 2x2 minors u_ij = x_i x_{n+j} - x_j x_{n+i} (y_j = x_{n+j} in
the double-family ring), subject to two exclusion rules: k_ij k_t = 0 for
i < j < t, and no nested pairs (k_ij k_{i1,j1} = 0 for i < i1, j > j1).
Series families are indexed by an exponent vector alpha; each element is a
finite sum over shift vectors r with factorial coefficients and has x^alpha
as its r = 0 term.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb, factorial
from typing import Callable, Iterator

from .lie import AlgebraSpec
from .linalg import span_rank
from .poly import Polynomial
from .rep import RepresentationContext
from .slices import DEFAULT_MONOMIAL_CAP, adapted_weights
from .decompose import kernel_slice, slice_of
from .weyl import apply


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))


def admissible(kt: tuple, kij: dict) -> bool:
    """The two exclusion rules on (k_t) and (k_ij)."""
    n = len(kt)
    for (i, j), c in kij.items():
        if not c:
            continue
        if any(kt[t - 1] for t in range(j + 1, n + 1)):
            return False
        for (i1, j1), c1 in kij.items():
            if c1 and i < i1 and j > j1:
                return False
    return True


def minor(i: int, j: int, n: int, nvars: int) -> Polynomial:
    v = lambda a: Polynomial.var(a, nvars)
    return v(i) * v(n + j) - v(j) * v(n + i)


def product_parameters(n: int, ksum: int, psum: int) -> Iterator[tuple[tuple, dict]]:
    prs = pairs(n)
    for kt in compositions(ksum, n):
        for kp in compositions(psum, len(prs)):
            kij = dict(zip(prs, kp))
            if admissible(kt, kij):
                yield kt, kij


def product_element(n: int, nvars: int, kt: tuple, kij: dict, offset: int) -> Polynomial:
    """prod x_{offset+t}^{k_t} prod u_ij^{k_ij}."""
    f = Polynomial.constant(nvars)
    for t, k in enumerate(kt, 1):
        if k:
            f = f * Polynomial.var(offset + t, nvars) ** k
    for (i, j), k in kij.items():
        if k:
            f = f * minor(i, j, n, nvars) ** k
    return f


def symmetrized_element(n: int, nvars: int, kt: tuple, kij: dict) -> Polynomial:
    """sum_{|r| = |k|/2} |r|! prod C(k_t, r_t) x_t^(k_t - r_t) x_{n+t}^(r_t), times the minors."""
    K = sum(kt)
    terms: dict = {}
    for r in compositions(K // 2, n):
        if any(rt > k for rt, k in zip(r, kt)):
            continue
        c = factorial(K // 2)
        e = [0] * nvars
        for t, (k, rt) in enumerate(zip(kt, r)):
            c *= comb(k, rt)
            e[t] += k - rt
            e[n + t] += rt
        terms[tuple(e)] = terms.get(tuple(e), 0) + c
    f = Polynomial(nvars, terms)
    for (i, j), k in kij.items():
        if k:
            f = f * minor(i, j, n, nvars) ** k
    return f


def _add(terms: dict, e: list, c):
    key = tuple(e)
    terms[key] = terms.get(key, 0) + c


def series_so_even(n: int, s: int, alpha: tuple) -> Polynomial:
    """Harmonic series element for so(2n), T = {1..s} (s = n-1 gives the simpler family).

    Shifts r_1..r_{n-1}; r_i moves x_{n+i} onto x_i (i <= s) or removes x_j x_{n+j}
    (s < j < n, with sign and r_j! C(alpha_j, r_j)); each unit of |r| adds x_n x_{2n}.
    """
    nv = 2 * n
    an, a2n = alpha[n - 1], alpha[2 * n - 1]
    terms: dict = {}
    ranges = [range(alpha[n + i - 1] + 1) for i in range(1, n)]
    for r in product(*ranges):
        R = sum(r)
        sign = 1
        c = Fraction(factorial(an) * factorial(a2n) * factorial(R), factorial(an + R) * factorial(a2n + R))
        e = list(alpha)
        ok = True
        for i in range(1, n):
            ri = r[i - 1]
            c *= comb(alpha[n + i - 1], ri)
            e[n + i - 1] -= ri
            if i <= s:
                e[i - 1] += ri
            else:
                if ri > alpha[i - 1]:
                    ok = False
                    break
                c *= comb(alpha[i - 1], ri) * factorial(ri)
                sign *= (-1) ** ri
                e[i - 1] -= ri
        if not ok:
            continue
        e[n - 1] += R
        e[2 * n - 1] += R
        _add(terms, e, sign * c)
    return Polynomial(nv, terms)


def series_so_odd(n: int, s: int, alpha: tuple) -> Polynomial:
    """Harmonic series element for so(2n+1), T = {2..s+1}; s = n is the all-swapped case.

    alpha_1 = epsilon in {0, 1}; r_{i+1} moves x_{n+i+1} onto x_{i+1} (i <= s) or removes
    x_{j+1} x_{n+j+1} (j > s); each unit of |r| adds x_1^2.
    """
    nv = 2 * n + 1
    eps = alpha[0]
    terms: dict = {}
    ranges = [range(alpha[n + i] + 1) for i in range(1, n + 1)]
    for r in product(*ranges):
        R = sum(r)
        sign = 1
        c = Fraction(2 ** R * factorial(eps) * factorial(R), factorial(eps + 2 * R))
        e = list(alpha)
        ok = True
        for i in range(1, n + 1):
            ri = r[i - 1]
            c *= comb(alpha[n + i], ri)
            e[n + i] -= ri
            if i <= s:
                e[i] += ri
            else:
                if ri > alpha[i]:
                    ok = False
                    break
                c *= comb(alpha[i], ri) * factorial(ri)
                sign *= (-1) ** ri
                e[i] -= ri
        if not ok:
            continue
        e[0] += 2 * R
        _add(terms, e, sign * c)
    return Polynomial(nv, terms)


# In the double-family ring y_i sits at index n+i, so the so(2n) series applies verbatim.
series_sl_double = series_so_even


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    family_id: str
    anchor: str
    make_ctx: Callable[..., RepresentationContext] = field(repr=False)
    target: str  # "kernel:delta", "kernel:eta" or "orbit:<seed>"
    description: str = ""


def _so_even(n, T):
    return RepresentationContext.build(AlgebraSpec("so_even", n), T)


def _so_odd(n, T):
    return RepresentationContext.build(AlgebraSpec("so_odd", n), T)


def _sl_b(n, T):
    return RepresentationContext.build(AlgebraSpec("sl", n), T, "B")


def _sp_t(n):
    return RepresentationContext.build(AlgebraSpec("sp", n), range(1, n + 1))


FAMILIES: dict[str, FamilySpec] = {
    "F_2_17": FamilySpec("F_2_17", "Theorem 2.10 f), basis of U(G).1", lambda n, s=None: _sp_t(n),
                         "orbit:1", "symmetrized products, sum k_ij even"),
    "F_2_18": FamilySpec("F_2_18", "Theorem 2.10 f), basis of U(G).u", lambda n, s=None: _sp_t(n),
                         "orbit:u", "symmetrized products, sum k_ij odd"),
    "F_3_12": FamilySpec("F_3_12", "Theorem 3.3, k >= 0", lambda n, s=None: _so_even(n, range(1, n + 1)),
                         "kernel:eta", "prod x_{n+t}^k_t prod u_ij^k_ij"),
    "F_3_13": FamilySpec("F_3_13", "Theorem 3.3, k < 0", lambda n, s=None: _so_even(n, range(1, n + 1)),
                         "kernel:delta", "prod x_t^k_t prod u_ij^k_ij"),
    "F_3_23": FamilySpec("F_3_23", "Theorem 3.4", lambda n, s=None: _so_even(n, range(1, n)),
                         "kernel:delta", "series, alpha_n alpha_2n = 0"),
    "F_3_25": FamilySpec("F_3_25", "Theorem 3.5", lambda n, s=1: _so_even(n, range(1, s + 1)),
                         "kernel:delta", "signed series, alpha_n alpha_2n = 0"),
    "F_4_2": FamilySpec("F_4_2", "Theorem 4.2", lambda n, s=None: _so_odd(n, range(2, n + 2)),
                        "kernel:delta", "series in x_1^2, alpha_1 in {0,1}"),
    "F_4_3": FamilySpec("F_4_3", "Theorem 4.3", lambda n, s=1: _so_odd(n, range(2, s + 2)),
                        "kernel:delta", "signed series in x_1^2, alpha_1 in {0,1}"),
    "F_5_1": FamilySpec("F_5_1", "Theorem 5.2, l1 + l2 <= 0", lambda n, s=None: _sl_b(n, range(1, n + 1)),
                        "kernel:delta", "prod x_t^k_t prod (x_i y_j - x_j y_i)^k_ij"),
    "F_5_2": FamilySpec("F_5_2", "Theorem 5.2, l1 + l2 > 0", lambda n, s=None: _sl_b(n, range(1, n + 1)),
                        "kernel:eta", "prod y_t^k_t prod (x_i y_j - x_j y_i)^k_ij"),
    "F_5_4": FamilySpec("F_5_4", "Theorem 5.4", lambda n, s=None: _sl_b(n, range(1, n)),
                        "kernel:delta", "series, alpha_n beta_n = 0"),
    "F_5_5": FamilySpec("F_5_5", "Theorem 5.5", lambda n, s=1: _sl_b(n, range(1, s + 1)),
                        "kernel:delta", "signed series, alpha_n beta_n = 0"),
}


def family_context(family_id: str, n: int, s: int | None = None) -> RepresentationContext:
    fam = FAMILIES[family_id]
    return fam.make_ctx(n) if s is None else fam.make_ctx(n, s)


def enumerate_family(family_id: str, n: int, grade, degree: int, s: int | None = None,
                     cap: int = DEFAULT_MONOMIAL_CAP) -> list[Polynomial]:
    """Family elements lying in the (grade, adapted weighted degree) piece."""
    if family_id not in FAMILIES:
        raise KeyError(f"unknown family {family_id!r}; known: {sorted(FAMILIES)}")
    ctx = family_context(family_id, n, s)
    nv = ctx.nvars
    w = adapted_weights(ctx)
    out: list[Polynomial] = []
    if family_id in ("F_2_17", "F_2_18"):
        if grade != 0 or degree % 2:
            return []
        m = degree // 2
        want_odd = family_id == "F_2_18"
        for P in range(m + 1):
            if (P % 2 == 1) != want_odd:
                continue
            K = 2 * (m - P)
            for kt, kij in product_parameters(n, K, P):
                out.append(symmetrized_element(n, nv, kt, kij))
        return out
    if family_id in ("F_3_12", "F_3_13"):
        ksum = grade if family_id == "F_3_12" else -grade
        if ksum < 0 or (degree - ksum) % 2 or degree < ksum:
            return []
        off = n if family_id == "F_3_12" else 0
        return [product_element(n, nv, kt, kij, off)
                for kt, kij in product_parameters(n, ksum, (degree - ksum) // 2)]
    if family_id in ("F_5_1", "F_5_2"):
        l1, l2 = grade
        if degree != l2 - l1:
            return []
        if family_id == "F_5_1":
            ksum, psum, off = -l1 - l2, l2, 0
        else:
            ksum, psum, off = l1 + l2, -l1, n
        if ksum < 0 or psum < 0:
            return []
        return [product_element(n, nv, kt, kij, off) for kt, kij in product_parameters(n, ksum, psum)]
    piece = slice_of(ctx, grade, degree, cap)
    for alpha in piece.monomials:
        if family_id in ("F_4_2", "F_4_3"):
            if alpha[0] > 1:
                continue
            ss = n if family_id == "F_4_2" else (s or 1)
            out.append(series_so_odd(n, ss, alpha))
            continue
        if alpha[n - 1] and alpha[2 * n - 1]:
            continue
        if family_id in ("F_3_23", "F_5_4"):
            out.append(series_so_even(n, n - 1, alpha))
        else:
            out.append(series_so_even(n, s or 1, alpha))
    return out


@dataclass
class FamilyReport:
    case: str
    params: dict
    dims: dict
    verdict: str
    witness: str | None = None

    def to_dict(self) -> dict:
        d = {"case": self.case, "params": self.params, "dims": self.dims, "verdict": self.verdict}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


def verify_family(family_id: str, n: int, grade, degree: int, s: int | None = None,
                  target_basis: list[Polynomial] | None = None,
                  cap: int = DEFAULT_MONOMIAL_CAP) -> FamilyReport:
    """(a) members lie in the target, (b) members are independent, (c) count = dim(target).

    Kernel targets are computed here; orbit targets must be passed as ``target_basis``.
    """
    fam = FAMILIES[family_id]
    ctx = family_context(family_id, n, s)
    elems = enumerate_family(family_id, n, grade, degree, s, cap)
    if fam.target.startswith("kernel:"):
        op = fam.target.split(":")[1]
        if target_basis is None:
            target_basis = kernel_slice(ctx, op, grade, degree, cap)
        opr = ctx.delta if op == "delta" else ctx.eta
        outside = [p for p in elems if not apply(opr, p).is_zero()]
    else:
        if target_basis is None:
            raise ValueError("orbit targets need an explicit target_basis")
        T = [dict(p.terms) for p in target_basis]
        rT = span_rank(T)
        outside = [p for p in elems if span_rank(T + [dict(p.terms)]) > rT]
    E = [dict(p.terms) for p in elems]
    rank_e = span_rank(E)
    dim_t = span_rank([dict(p.terms) for p in target_basis])
    ok = not outside and rank_e == len(elems) and len(elems) == dim_t
    witness = None
    if outside:
        witness = f"not in target: {ctx.fmt(outside[0])}"
    elif rank_e != len(elems):
        witness = f"{len(elems)} elements span only {rank_e} dimensions"
    elif len(elems) != dim_t:
        witness = f"{len(elems)} elements vs target dimension {dim_t}"
    g = list(grade) if isinstance(grade, tuple) else grade
    params = {"context": ctx.describe(), "n": n, "grade": g, "degree": degree,
              "weights": list(adapted_weights(ctx)), "target": fam.target}
    if s is not None:
        params["s"] = s
    dims = {"elements": len(elems), "rank": rank_e, "target": dim_t, "outside": len(outside)}
    return FamilyReport(family_id, params, dims, "PASS" if ok else "FAIL", witness)
