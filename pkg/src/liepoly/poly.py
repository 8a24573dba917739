"""Exact sparse multivariate polynomials over the rationals.

A polynomial is a map from exponent tuples to nonzero ``Fraction``
coefficients.  Values are immutable once built.  Display and iteration use
graded lexicographic order, highest term first.
"""
from __future__ import annotations

import re
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

Exponent = tuple

MAX_EXPONENT = 2**31 - 1


class ArityError(ValueError):
    """Operands live in rings with different numbers of variables."""


class MixedGradeError(ValueError):
    """A grade was requested for a polynomial whose terms disagree."""


def grlex_key(e: Exponent):
    return (sum(e), e)


def check_exponent(e: Exponent) -> Exponent:
    for v in e:
        if v > MAX_EXPONENT:
            raise OverflowError(f"exponent {v} exceeds {MAX_EXPONENT}")
    return e


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


class Polynomial:
    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None):
        self.nvars = nvars
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nvars:
                    raise ArityError(f"exponent {e} has length {len(e)}, ring has {nvars}")
                if any(v < 0 for v in e):
                    raise ValueError(f"negative exponent in {e}")
                c = _coerce(c)
                if c:
                    clean[e] = clean.get(e, 0) + c
                    if not clean[e]:
                        del clean[e]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Polynomial":
        # trusted constructor: keys valid, no zero coefficients
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c=1) -> "Polynomial":
        c = _coerce(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> "Polynomial":
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def var(cls, i: int, nvars: int) -> "Polynomial":
        """The variable x_i, 1-based."""
        if not 1 <= i <= nvars:
            raise IndexError(f"variable index {i} outside 1..{nvars}")
        e = [0] * nvars
        e[i - 1] = 1
        return cls._raw(nvars, {tuple(e): Fraction(1)})

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def items(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in grlex order, highest first."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def __iter__(self) -> Iterator[Exponent]:
        return iter(sorted(self._terms, key=grlex_key, reverse=True))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "Polynomial") -> None:
        if not isinstance(other, Polynomial):
            raise TypeError("expected a Polynomial")
        if other.nvars != self.nvars:
            raise ArityError(f"ring arity {self.nvars} vs {other.nvars}")

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = _coerce(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {e: v * c for e, v in self._terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        out = {e: c for e, c in out.items() if c}
        for e in out:
            check_exponent(e)
        return Polynomial._raw(self.nvars, out)

    def __rmul__(self, other) -> "Polynomial":
        return self.__mul__(other)

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def partial_derivative(self, var: int) -> "Polynomial":
        if not 1 <= var <= self.nvars:
            raise IndexError(f"variable index {var} outside 1..{self.nvars}")
        i = var - 1
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return Polynomial._raw(self.nvars, out)

    def coefficient(self, alpha: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(alpha), Fraction(0))

    def total_degree(self) -> int:
        """Largest total degree of a term; the zero polynomial has degree -1."""
        return max((sum(e) for e in self._terms), default=-1)

    def min_degree(self) -> int:
        return min((sum(e) for e in self._terms), default=-1)

    def weighted_degrees(self, weights: Sequence[int]) -> set[int]:
        return {sum(w * a for w, a in zip(weights, e)) for e in self._terms}

    def grade(self, S: Iterable[int], T: Iterable[int]) -> int:
        """Sum of S-exponents minus sum of T-exponents, uniform over terms."""
        S = [i - 1 for i in S]
        T = [i - 1 for i in T]
        grades = {sum(e[i] for i in S) - sum(e[i] for i in T) for e in self._terms}
        if len(grades) > 1:
            raise MixedGradeError(f"terms have grades {sorted(grades)}")
        return grades.pop() if grades else 0

    def leading(self) -> tuple[Exponent, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=grlex_key)
        return e, self._terms[e]

    def normalized(self) -> "Polynomial":
        """Scalar multiple with leading grlex coefficient 1."""
        if not self._terms:
            return self
        return self.scale(1 / self.leading()[1])

    def substitute_index(self, mapping: Sequence[int], nvars: int) -> "Polynomial":
        """Rename variable i (1-based) to mapping[i-1] in a ring of ``nvars`` variables."""
        out = {}
        for e, c in self._terms.items():
            f = [0] * nvars
            for i, a in enumerate(e):
                if a:
                    f[mapping[i] - 1] += a
            out[tuple(f)] = out.get(tuple(f), 0) + c
        return Polynomial(nvars, out)

    def format(self, names: Sequence[str] | None = None) -> str:
        return format_terms(self.items(), names or default_names(self.nvars))

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self.format()!r})"


def default_names(nvars: int, n_x: int | None = None) -> list[str]:
    """``x1..xN``; with ``n_x`` given, the trailing variables are ``y1..``."""
    if n_x is None:
        return [f"x{i}" for i in range(1, nvars + 1)]
    return [f"x{i}" for i in range(1, n_x + 1)] + [f"y{i}" for i in range(1, nvars - n_x + 1)]


def _factor_string(e: Exponent, names: Sequence[str]) -> list[str]:
    out = []
    for a, name in zip(e, names):
        if a == 1:
            out.append(name)
        elif a:
            out.append(f"{name}^{a}")
    return out


def format_terms(items, names: Sequence[str], suffix=None) -> str:
    """Shared pretty printer.  ``items`` yields (key, coeff); ``suffix`` maps a
    key to its list of factor strings (defaults to monomial factors)."""
    if suffix is None:
        suffix = lambda e: _factor_string(e, names)
    parts = []
    for key, c in items:
        factors = suffix(key)
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


_TOKEN = re.compile(r"\s*(?:(\d+)(?:/(\d+))?|([xyd])(\d+)(?:\^(\d+))?|([+\-*]))")


def parse_terms(text: str) -> list[tuple[Fraction, list[tuple[str, int, int]]]]:
    """Split the term grammar into (coefficient, [(letter, index, power)])."""
    pos = 0
    text = text.strip()
    terms = []
    sign = 1
    coeff = None
    factors: list[tuple[str, int, int]] = []
    expecting = True  # at the start of a term
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        pos = m.end()
        num, den, letter, idx, power, op = m.groups()
        if op and op in "+-":
            if not expecting:
                terms.append((sign * (coeff if coeff is not None else 1), factors))
                sign, coeff, factors = 1, None, []
            elif coeff is not None or factors:
                raise ValueError(f"dangling operator in {text!r}")
            if op == "-":
                sign = -sign
            expecting = True
        elif op == "*":
            if expecting and coeff is None and not factors:
                raise ValueError(f"misplaced '*' in {text!r}")
        elif num is not None:
            if coeff is not None or factors:
                raise ValueError(f"unexpected number in {text!r}")
            coeff = Fraction(int(num), int(den) if den else 1)
            expecting = False
        else:
            i = int(idx)
            if i < 1:
                raise ValueError("variable indices are 1-based")
            factors.append((letter, i, int(power) if power else 1))
            expecting = False
    if expecting:
        if terms or coeff is not None or factors:
            raise ValueError(f"incomplete expression {text!r}")
        raise ValueError("empty expression")
    terms.append((sign * (coeff if coeff is not None else 1), factors))
    return terms


def var_slot(letter: str, i: int, nvars: int, n_x: int | None) -> int:
    """0-based slot of a named variable."""
    if letter == "x":
        limit = nvars if n_x is None else n_x
        if i > limit:
            raise IndexError(f"x{i} outside ring")
        return i - 1
    if n_x is None:
        raise ValueError("y variables need a two-family ring")
    if i > nvars - n_x:
        raise IndexError(f"y{i} outside ring")
    return n_x + i - 1


def parse_polynomial(text: str, nvars: int, n_x: int | None = None) -> Polynomial:
    """Parse e.g. ``1/3*x1^3*x3 + x1*x5``.  ``n_x`` enables ``y`` tokens."""
    if text.strip() == "0":
        return Polynomial.zero(nvars)
    out: dict = {}
    for c, factors in parse_terms(text):
        e = [0] * nvars
        for letter, i, p in factors:
            if letter == "d":
                raise ValueError("derivative token in a polynomial")
            e[var_slot(letter, i, nvars, n_x)] += p
        e = tuple(e)
        out[e] = out.get(e, 0) + c
    return Polynomial(nvars, out)


def monomials_of_degree(nvars: int, d: int) -> Iterator[Exponent]:
    """All exponent vectors of total degree d."""
    if nvars == 0:
        if d == 0:
            yield ()
        return
    if nvars == 1:
        yield (d,)
        return
    for a in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - a):
            yield (a,) + rest


def monomials_of_weighted_degree(weights: Sequence[int], d: int) -> Iterator[Exponent]:
    """All exponent vectors with sum(w_i * a_i) == d; weights positive."""
    if not weights:
        if d == 0:
            yield ()
        return
    w = weights[0]
    for a in range(d // w, -1, -1):
        for rest in monomials_of_weighted_degree(weights[1:], d - a * w):
            yield (a,) + rest
