"""Normal-ordered differential operators with polynomial coefficients.

A term ``(mul, diff) -> c`` stands for ``c * x^mul * d^diff`` with every
multiplication written to the left of every derivative.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb
from types import MappingProxyType
from typing import Mapping, Sequence

from .poly import (
    ArityError,
    Polynomial,
    _coerce,
    check_exponent,
    default_names,
    format_terms,
    grlex_key,
    parse_terms,
    var_slot,
)


def falling(a: int, k: int) -> int:
    out = 1
    for j in range(k):
        out *= a - j
    return out


class WeylOperator:
    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping | None = None):
        self.nvars = nvars
        clean: dict = {}
        for (m, d), c in (terms or {}).items():
            m, d = tuple(m), tuple(d)
            if len(m) != nvars or len(d) != nvars:
                raise ArityError("operator term has wrong arity")
            c = _coerce(c)
            v = clean.get((m, d), 0) + c
            if v:
                clean[(m, d)] = v
            else:
                clean.pop((m, d), None)
        self._terms = clean

    @classmethod
    def _raw(cls, nvars, terms):
        op = object.__new__(cls)
        op.nvars = nvars
        op._terms = terms
        return op

    @classmethod
    def zero(cls, nvars: int) -> "WeylOperator":
        return cls._raw(nvars, {})

    @classmethod
    def scalar(cls, nvars: int, c=1) -> "WeylOperator":
        z = (0,) * nvars
        c = _coerce(c)
        return cls._raw(nvars, {(z, z): c} if c else {})

    identity = scalar

    @classmethod
    def term(cls, nvars: int, mul: Sequence[int] = (), diff: Sequence[int] = (), c=1) -> "WeylOperator":
        """``c * prod(x_i for i in mul) * prod(d_j for j in diff)``, indices 1-based with repeats."""
        m = [0] * nvars
        d = [0] * nvars
        for i in mul:
            m[i - 1] += 1
        for j in diff:
            d[j - 1] += 1
        return cls(nvars, {(tuple(m), tuple(d)): c})

    @classmethod
    def x(cls, i: int, nvars: int) -> "WeylOperator":
        return cls.term(nvars, mul=(i,))

    @classmethod
    def d(cls, i: int, nvars: int) -> "WeylOperator":
        return cls.term(nvars, diff=(i,))

    @classmethod
    def multiplication(cls, p: Polynomial) -> "WeylOperator":
        z = (0,) * p.nvars
        return cls._raw(p.nvars, {(e, z): c for e, c in p.terms.items()})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def items(self):
        return sorted(
            self._terms.items(),
            key=lambda t: (grlex_key(t[0][0] + t[0][1]), t[0][0]),
            reverse=True,
        )

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def order(self) -> int:
        return max((sum(d) for _, d in self._terms), default=0)

    def _check(self, other):
        if not isinstance(other, WeylOperator):
            raise TypeError("expected a WeylOperator")
        if other.nvars != self.nvars:
            raise ArityError(f"operator arity {self.nvars} vs {other.nvars}")

    def __eq__(self, other):
        if not isinstance(other, WeylOperator):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def __add__(self, other: "WeylOperator") -> "WeylOperator":
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return WeylOperator._raw(self.nvars, out)

    def __neg__(self):
        return WeylOperator._raw(self.nvars, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "WeylOperator":
        c = _coerce(c)
        if not c:
            return WeylOperator.zero(self.nvars)
        return WeylOperator._raw(self.nvars, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, WeylOperator):
            return compose(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __call__(self, p: Polynomial) -> Polynomial:
        return apply(self, p)

    def format(self, names: Sequence[str] | None = None) -> str:
        names = names or default_names(self.nvars)

        def factors(key):
            m, d = key
            out = []
            for a, name in zip(m, names):
                out += [name] if a == 1 else ([f"{name}^{a}"] if a else [])
            for a, name in zip(d, names):
                dn = "d" + name[1:] if name.startswith("x") else "d" + name
                out += [dn] if a == 1 else ([f"{dn}^{a}"] if a else [])
            return out

        return format_terms(self.items(), names, suffix=factors)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"WeylOperator({self.nvars}, {self.format()!r})"


def apply(op: WeylOperator, p: Polynomial) -> Polynomial:
    if op.nvars != p.nvars:
        raise ArityError(f"operator arity {op.nvars} vs polynomial arity {p.nvars}")
    out: dict = {}
    pterms = p.terms.items()
    for (m, d), c in op._terms.items():
        dvars = [(i, k) for i, k in enumerate(d) if k]
        for e, pc in pterms:
            coef = c * pc
            ok = True
            for i, k in dvars:
                if e[i] < k:
                    ok = False
                    break
                coef *= falling(e[i], k)
            if not ok:
                continue
            f = tuple(ei - di + mi for ei, di, mi in zip(e, d, m))
            v = out.get(f, 0) + coef
            if v:
                out[f] = v
            else:
                del out[f]
    for f in out:
        check_exponent(f)
    return Polynomial._raw(p.nvars, out)


def compose(a: WeylOperator, b: WeylOperator) -> WeylOperator:
    """Normal-ordered product: apply(compose(a, b), p) == apply(a, apply(b, p))."""
    a._check(b)
    n = a.nvars
    out: dict = {}
    for (ma, da), ca in a._terms.items():
        for (mb, db), cb in b._terms.items():
            # move d^da past x^mb: sum over k of prod C(da,k) falling(mb,k) x^(mb-k) d^(da-k)
            overlap = [i for i in range(n) if da[i] and mb[i]]
            ranges = [range(min(da[i], mb[i]) + 1) for i in overlap]
            for ks in product(*ranges):
                coef = ca * cb
                m = list(ma)
                d = list(db)
                k_full = [0] * n
                for i, k in zip(overlap, ks):
                    k_full[i] = k
                    coef *= comb(da[i], k) * falling(mb[i], k)
                for i in range(n):
                    m[i] += mb[i] - k_full[i]
                    d[i] += da[i] - k_full[i]
                key = (tuple(m), tuple(d))
                v = out.get(key, 0) + coef
                if v:
                    out[key] = v
                else:
                    del out[key]
    return WeylOperator._raw(n, out)


def commutator(a: WeylOperator, b: WeylOperator) -> WeylOperator:
    return compose(a, b) - compose(b, a)


def parse_operator(text: str, nvars: int, n_x: int | None = None) -> WeylOperator:
    """Parse e.g. ``-1*x1*x2 - d3*d4``.  ``d<i>`` is the derivative in slot i
    (with ``n_x`` set, ``dy<i>`` is not supported; use slot numbers)."""
    if text.strip() == "0":
        return WeylOperator.zero(nvars)
    out: dict = {}
    for c, factors in parse_terms(text):
        m = [0] * nvars
        d = [0] * nvars
        seen_d = False
        for letter, i, p in factors:
            if letter == "d":
                if i > nvars:
                    raise IndexError(f"d{i} outside ring")
                d[i - 1] += p
                seen_d = True
            else:
                if seen_d:
                    raise ValueError("variables must precede derivatives in normal order")
                m[var_slot(letter, i, nvars, n_x)] += p
        key = (tuple(m), tuple(d))
        out[key] = out.get(key, 0) + c
    return WeylOperator(nvars, out)


def diagonal_eigenvalue(op: WeylOperator, alpha: Sequence[int]) -> Fraction:
    """Eigenvalue of an operator built from x^e d^e terms on the monomial x^alpha."""
    total = Fraction(0)
    for (m, d), c in op._terms.items():
        if m != d:
            raise ValueError("operator is not diagonal on monomials")
        v = c
        for a, k in zip(alpha, d):
            if k:
                v *= falling(a, k)
        total += v
    return total
