"""Exact linear algebra over Q.

Rows are scaled to primitive integer vectors and eliminated without fractions
(each update is ``p*row - a*pivot_row`` followed by content removal).  Rows are
sparse dicts so that operator matrices, which are mostly zero, stay cheap.
Pivots are the first nonzero entry in column order.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Hashable, Iterable, Mapping, Sequence


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def _integer_row(row: Mapping[int, object]) -> dict[int, int]:
    fr = {k: Fraction(v) for k, v in row.items() if v}
    if not fr:
        return {}
    d = 1
    for v in fr.values():
        d = lcm(d, v.denominator)
    return _primitive({k: int(v * d) for k, v in fr.items()})


def rref_rows(rows: Iterable[Mapping[int, object]], ncols: int) -> tuple[list[dict[int, int]], list[int]]:
    """Reduced row echelon form of sparse rows.

    Returns (pivot_rows, pivot_cols): pivot_rows[r] has a nonzero at
    pivot_cols[r] and zeros at every other pivot column.
    """
    work = [r for r in (_integer_row(r) for r in rows) if r]
    pivot_rows: list[dict[int, int]] = []
    pivot_cols: list[int] = []
    alive = list(range(len(work)))
    used = [False] * len(work)
    piv_order: list[tuple[int, int]] = []
    for col in range(ncols):
        piv = None
        for i in alive:
            if not used[i] and col in work[i]:
                piv = i
                break
        if piv is None:
            continue
        used[piv] = True
        piv_order.append((col, piv))
        prow = work[piv]
        p = prow[col]
        for i in alive:
            if i == piv:
                continue
            a = work[i].get(col)
            if not a:
                continue
            g = gcd(p, a)
            mp, ma = p // g, a // g
            row = {k: v * mp for k, v in work[i].items()}
            for k, v in prow.items():
                nv = row.get(k, 0) - ma * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
            work[i] = _primitive(row)
        alive = [i for i in alive if work[i]]
    for col, i in piv_order:
        pivot_rows.append(work[i])
        pivot_cols.append(col)
    return pivot_rows, pivot_cols


def nullspace_rows(rows: Iterable[Mapping[int, object]], ncols: int) -> list[list[Fraction]]:
    """Basis of {v : row . v = 0 for all rows}, first nonzero entry of each vector = 1."""
    prows, pcols = rref_rows(rows, ncols)
    pivset = set(pcols)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(prows, pcols):
            a = row.get(f)
            if a:
                v[pc] = Fraction(-a, row[pc])
        lead = next(c for c in v if c)
        basis.append([c / lead for c in v])
    return basis


def rank_rows(rows: Iterable[Mapping[int, object]], ncols: int) -> int:
    return len(rref_rows(rows, ncols)[0])


class ExactMatrix:
    """Dense rational matrix; elimination is delegated to the sparse kernel."""

    def __init__(self, rows: int, cols: int, entries: Sequence[Sequence[object]] | None = None):
        self.rows = rows
        self.cols = cols
        if entries is None:
            entries = [[0] * cols for _ in range(rows)]
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("entries do not match the stated shape")
        self.entries = [[Fraction(c) for c in r] for r in entries]

    @classmethod
    def from_columns(cls, columns: Sequence[Mapping[int, object]], nrows: int) -> "ExactMatrix":
        m = cls(nrows, len(columns))
        for j, col in enumerate(columns):
            for i, c in col.items():
                m.entries[i][j] = Fraction(c)
        return m

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def sparse_rows(self) -> list[dict[int, Fraction]]:
        return [{j: c for j, c in enumerate(r) if c} for r in self.entries]

    def rank(self) -> int:
        return rank_rows(self.sparse_rows(), self.cols)

    def nullspace(self) -> list[list[Fraction]]:
        return nullspace_rows(self.sparse_rows(), self.cols)

    def column(self, j: int) -> list[Fraction]:
        return [r[j] for r in self.entries]

    def is_zero(self) -> bool:
        return all(not c for r in self.entries for c in r)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.entries == other.entries and self.rows == other.rows and self.cols == other.cols

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"


def rank(M: ExactMatrix) -> int:
    return M.rank()


def nullspace(M: ExactMatrix) -> list[list[Fraction]]:
    return M.nullspace()


def _as_sparse(v) -> dict:
    if isinstance(v, Mapping):
        return {k: c for k, c in v.items() if c}
    return {k: c for k, c in enumerate(v) if c}


def _index_vectors(vectors: Sequence) -> tuple[list[dict[int, object]], int]:
    keys: dict[Hashable, int] = {}
    rows = []
    for v in vectors:
        sv = _as_sparse(v)
        rows.append({keys.setdefault(k, len(keys)): c for k, c in sv.items()})
    return rows, len(keys)


def span_rank(vectors: Sequence) -> int:
    """Rank of a family of vectors given as dicts (any hashable keys) or lists."""
    rows, ncols = _index_vectors(vectors)
    return rank_rows(rows, ncols)


def sum_and_intersection(U: Sequence, V: Sequence) -> tuple[int, int]:
    """(dim(U+V), dim(U ∩ V)) for the spans of two vector families."""
    ru, rv = span_rank(U), span_rank(V)
    s = span_rank(list(U) + list(V))
    return s, ru + rv - s


class IncrementalBasis:
    """Echelon basis of a growing subspace of sparse vectors.

    Each stored vector has a distinct pivot (its largest key under ``order``)
    with coefficient 1.  Adding reduces against stored pivots first.
    """

    def __init__(self, order: Callable | None = None):
        self.order = order or (lambda k: k)
        self.pivots: dict[Hashable, dict] = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, v: Mapping) -> dict:
        v = {k: Fraction(c) for k, c in v.items() if c}
        piv = self.pivots
        order = self.order
        while True:
            cands = [k for k in v if k in piv]
            if not cands:
                return v
            k = max(cands, key=order)
            c = v[k]
            for kk, bc in piv[k].items():
                nv = v.get(kk, 0) - c * bc
                if nv:
                    v[kk] = nv
                else:
                    v.pop(kk, None)

    def add(self, v: Mapping) -> bool:
        """Insert v; return True if it enlarged the span."""
        r = self.reduce(v)
        if not r:
            return False
        k = max(r, key=self.order)
        c = r[k]
        self.pivots[k] = {kk: cc / c for kk, cc in r.items()}
        return True

    def contains(self, v: Mapping) -> bool:
        return not self.reduce(v)

    def vectors(self) -> list[dict]:
        return [dict(self.pivots[k]) for k in sorted(self.pivots, key=self.order, reverse=True)]
