"""Matrix models of gl, sl, sp, so in the split block convention.

Indices are 1-based.  For sp(2n) and so(2n) the blocks are paired as
(i, n+i); for so(2n+1) row/column 1 is the odd coordinate and the pairs are
(i+1, n+i+1).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

FAMILIES = ("gl", "sl", "sp", "so_even", "so_odd")


class AlgebraError(ValueError):
    pass


class LieElement:
    __slots__ = ("size", "_entries")

    def __init__(self, size: int, entries: Mapping[tuple[int, int], object] | None = None):
        self.size = size
        clean = {}
        for (i, j), c in (entries or {}).items():
            if not (1 <= i <= size and 1 <= j <= size):
                raise IndexError(f"entry ({i},{j}) outside {size}x{size}")
            c = Fraction(c)
            v = clean.get((i, j), 0) + c
            if v:
                clean[(i, j)] = v
            else:
                clean.pop((i, j), None)
        self._entries = clean

    @property
    def entries(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._entries)

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.size == other.size and self._entries == other._entries

    def __hash__(self):
        return hash((self.size, frozenset(self._entries.items())))

    def __add__(self, other: "LieElement") -> "LieElement":
        if other.size != self.size:
            raise AlgebraError("size mismatch")
        out = dict(self._entries)
        for k, c in other._entries.items():
            out[k] = out.get(k, 0) + c
        return LieElement(self.size, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "LieElement":
        return LieElement(self.size, {k: v * c for k, v in self._entries.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def matmul(self, other: "LieElement") -> "LieElement":
        rows: dict[int, list] = {}
        for (k, j), c in other._entries.items():
            rows.setdefault(k, []).append((j, c))
        out: dict = {}
        for (i, k), a in self._entries.items():
            for j, b in rows.get(k, ()):
                out[(i, j)] = out.get((i, j), 0) + a * b
        return LieElement(self.size, out)

    def transpose(self) -> "LieElement":
        return LieElement(self.size, {(j, i): c for (i, j), c in self._entries.items()})

    def flatten(self) -> list[Fraction]:
        v = [Fraction(0)] * (self.size * self.size)
        for (i, j), c in self._entries.items():
            v[(i - 1) * self.size + (j - 1)] = c
        return v

    def is_zero(self) -> bool:
        return not self._entries

    def __str__(self):
        if not self._entries:
            return "0"
        parts = []
        for (i, j), c in sorted(self._entries.items()):
            name = f"E{i},{j}"
            if c == 1:
                parts.append(f"+ {name}")
            elif c == -1:
                parts.append(f"- {name}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {abs(c)}*{name}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    __repr__ = __str__


def E(i: int, j: int, size: int) -> LieElement:
    return LieElement(size, {(i, j): 1})


def bracket(a: LieElement, b: LieElement) -> LieElement:
    if a.size != b.size:
        raise AlgebraError("size mismatch")
    return a.matmul(b) - b.matmul(a)


@dataclass(frozen=True)
class AlgebraSpec:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise AlgebraError(f"unknown family {self.family!r}")
        if self.n < 1 or (self.family == "sl" and self.n < 2):
            raise AlgebraError(f"invalid rank parameter {self.n} for {self.family}")

    @property
    def N(self) -> int:
        if self.family in ("sp", "so_even"):
            return 2 * self.n
        if self.family == "so_odd":
            return 2 * self.n + 1
        return self.n

    @property
    def rank(self) -> int:
        return self.n - 1 if self.family == "sl" else self.n

    @property
    def label(self) -> str:
        return {
            "gl": f"gl({self.n})",
            "sl": f"sl({self.n})",
            "sp": f"sp({2 * self.n})",
            "so_even": f"so({2 * self.n})",
            "so_odd": f"so({2 * self.n + 1})",
        }[self.family]

    def __str__(self):
        return self.label


def parse_algebra(text: str, n: int | None = None) -> AlgebraSpec:
    """Accepts ``sp:2``, ``so:4``, ``so:5``, ``so:2n`` / ``so:2n+1`` (with n),
    ``sl:3``, ``gl:3``.  For sp the number is n (matrix size 2n); for so it is
    the matrix size unless written symbolically."""
    m = re.fullmatch(r"\s*(gl|sl|sp|so)\s*:\s*(\S+)\s*", text)
    if not m:
        raise AlgebraError(f"cannot parse algebra {text!r}")
    fam, arg = m.groups()
    if arg in ("n", "2n", "2n+1"):
        if n is None:
            raise AlgebraError(f"{text!r} needs an explicit --n")
        if fam == "so":
            return AlgebraSpec("so_odd" if arg == "2n+1" else "so_even", n)
        return AlgebraSpec(fam, n)
    if not arg.isdigit():
        raise AlgebraError(f"bad size {arg!r}")
    k = int(arg)
    if n is not None and fam in ("gl", "sl", "sp") and n != k:
        raise AlgebraError(f"--n {n} disagrees with {text!r}")
    if fam == "so":
        if k < 3:
            raise AlgebraError("so needs matrix size >= 3")
        spec = AlgebraSpec("so_odd", (k - 1) // 2) if k % 2 else AlgebraSpec("so_even", k // 2)
        if n is not None and spec.n != n:
            raise AlgebraError(f"--n {n} disagrees with {text!r}")
        return spec
    return AlgebraSpec(fam, k)


def _spanning_set(spec: AlgebraSpec) -> list[LieElement]:
    n, N = spec.n, spec.N
    f = spec.family
    out: list[LieElement] = []
    if f == "gl":
        out = [E(i, j, N) for i in range(1, n + 1) for j in range(1, n + 1)]
    elif f == "sl":
        out = [E(i, j, N) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
        out += [E(i, i, N) - E(i + 1, i + 1, N) for i in range(1, n)]
    elif f == "sp":
        out = [E(i, j, N) - E(n + j, n + i, N) for i in range(1, n + 1) for j in range(1, n + 1)]
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                if i == j:
                    out += [E(n + i, i, N), E(i, n + i, N)]
                else:
                    out += [E(n + i, j, N) + E(n + j, i, N), E(i, n + j, N) + E(j, n + i, N)]
    elif f == "so_even":
        out = [E(i, j, N) - E(n + j, n + i, N) for i in range(1, n + 1) for j in range(1, n + 1)]
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out += [E(i, n + j, N) - E(j, n + i, N), E(n + j, i, N) - E(n + i, j, N)]
    elif f == "so_odd":
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                out.append(E(i + 1, j + 1, N) - E(n + j + 1, n + i + 1, N))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out += [
                    E(i + 1, n + j + 1, N) - E(j + 1, n + i + 1, N),
                    E(n + j + 1, i + 1, N) - E(n + i + 1, j + 1, N),
                ]
        for i in range(1, n + 1):
            out += [E(i + 1, 1, N) - E(1, n + i + 1, N), E(1, i + 1, N) - E(n + i + 1, 1, N)]
    return out


@lru_cache(maxsize=None)
def _basis_cached(spec: AlgebraSpec) -> tuple[LieElement, ...]:
    from .linalg import IncrementalBasis

    echelon = IncrementalBasis()
    out = []
    for g in _spanning_set(spec):
        vec = {k: c for k, c in enumerate(g.flatten()) if c}
        if echelon.add(vec):
            out.append(g)
    return tuple(out)


def basis(spec: AlgebraSpec) -> list[LieElement]:
    return list(_basis_cached(spec))


def in_algebra(spec: AlgebraSpec, g: LieElement) -> bool:
    from .linalg import IncrementalBasis

    if g.size != spec.N:
        return False
    echelon = IncrementalBasis()
    for b in _basis_cached(spec):
        echelon.add({k: c for k, c in enumerate(b.flatten()) if c})
    return echelon.contains({k: c for k, c in enumerate(g.flatten()) if c})


def cartan_and_positive(spec: AlgebraSpec) -> tuple[list[LieElement], list[LieElement]]:
    n, N = spec.n, spec.N
    f = spec.family
    if f == "gl":
        cartan = [E(i, i, N) for i in range(1, n + 1)]
        pos = [E(i, j, N) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    elif f == "sl":
        cartan = [E(i, i, N) - E(i + 1, i + 1, N) for i in range(1, n)]
        pos = [E(i, j, N) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    elif f == "sp":
        cartan = [E(i, i, N) - E(n + i, n + i, N) for i in range(1, n + 1)]
        pos = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                pos += [E(i, j, N) - E(n + j, n + i, N), E(i, n + j, N) + E(j, n + i, N)]
        pos += [E(i, n + i, N) for i in range(1, n + 1)]
    elif f == "so_even":
        cartan = [E(i, i, N) - E(n + i, n + i, N) for i in range(1, n + 1)]
        pos = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                pos += [E(i, j, N) - E(n + j, n + i, N), E(i, n + j, N) - E(j, n + i, N)]
    else:
        cartan = [E(i + 1, i + 1, N) - E(n + i + 1, n + i + 1, N) for i in range(1, n + 1)]
        pos = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                pos += [
                    E(i + 1, j + 1, N) - E(n + j + 1, n + i + 1, N),
                    E(i + 1, n + j + 1, N) - E(j + 1, n + i + 1, N),
                ]
        pos += [E(i + 1, 1, N) - E(1, n + i + 1, N) for i in range(1, n + 1)]
    return cartan, pos


def negative_root_vectors(spec: AlgebraSpec) -> list[LieElement]:
    """Transposes of the positive root vectors; each lies in the algebra."""
    return [e.transpose() for e in cartan_and_positive(spec)[1]]


def coroots(spec: AlgebraSpec) -> list[LieElement]:
    """h_1..h_rank, dual to the fundamental weights.

    sp: h_i = mu_i - mu_{i+1}, h_n = mu_n with mu_i = E_ii - E_{n+i,n+i}.
    so(2n): h_n = mu_{n-1} + mu_n.  so(2n+1): h_n = 2 mu_n (shifted indices).
    gl: the diagonal units, so coordinates are epsilon-coordinates.
    """
    n, N = spec.n, spec.N
    f = spec.family
    if f == "gl":
        return [E(i, i, N) for i in range(1, n + 1)]
    if f == "sl":
        return [E(i, i, N) - E(i + 1, i + 1, N) for i in range(1, n)]
    off = 1 if f == "so_odd" else 0
    mu = [E(i + off, i + off, N) - E(n + i + off, n + i + off, N) for i in range(1, n + 1)]
    hs = [mu[i] - mu[i + 1] for i in range(n - 1)]
    if f == "sp":
        hs.append(mu[n - 1])
    elif f == "so_even":
        if n == 1:
            hs.append(mu[0])
        else:
            hs.append(mu[n - 2] + mu[n - 1])
    else:
        hs.append(mu[n - 1].scale(2))
    return hs


@dataclass(frozen=True)
class WeightVector:
    coords: tuple[Fraction, ...]

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coords, 1):
            if c:
                terms.append(f"{c}*l{i}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def as_list(self) -> list[str]:
        return [str(c) for c in self.coords]


def weight_coordinates(spec: AlgebraSpec, h_values: Mapping[int, object] | Sequence) -> WeightVector:
    """Coordinates c_i = weight(h_i) in the fundamental-weight basis.

    ``h_values`` maps coroot index i (1-based) to the eigenvalue, or is a
    sequence in coroot order.
    """
    r = spec.rank
    if not isinstance(h_values, Mapping):
        h_values = {i + 1: v for i, v in enumerate(h_values)}
    missing = [i for i in range(1, r + 1) if i not in h_values]
    if missing:
        raise AlgebraError(f"missing coroot values for h_{missing}")
    extra = set(h_values) - set(range(1, r + 1))
    if extra:
        raise AlgebraError(f"unknown coroot indices {sorted(extra)}")
    return WeightVector(tuple(Fraction(h_values[i]) for i in range(1, r + 1)))
