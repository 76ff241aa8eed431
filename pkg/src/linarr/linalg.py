"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`. Internally every row is cleared to a
primitive integer vector and eliminated fraction-free, so the working
entries stay integers and coefficient growth is held down by content
removal after each update.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``. Decimal notation is rejected."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"not an exact rational literal: {text!r}")
    value = Fraction(text.replace(" ", ""))
    return value


def format_rational(q: Fraction | int) -> str:
    return str(Fraction(q))


class DimensionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# integer row kernels


def primitive(row: Sequence[int]) -> list[int]:
    """Divide an integer vector by its content; the sign is left alone."""
    g = gcd(*row)
    if g in (0, 1):
        return list(row)
    return [a // g for a in row]


def normalize_sign(row: list[int]) -> list[int]:
    for a in row:
        if a:
            return row if a > 0 else [-b for b in row]
    return row


def integer_row(row: Iterable[Fraction | int]) -> list[int]:
    """Scale a rational vector to a primitive integer vector (same span)."""
    row = list(row)
    den = 1
    for a in row:
        if isinstance(a, Fraction) and a.denominator != 1:
            den = lcm(den, a.denominator)
    out = [int(a * den) if den != 1 else int(a) for a in row]
    return primitive(out)


def canonical_vector(row: Iterable[Fraction | int]) -> list[int]:
    """Primitive integer form with the first nonzero entry positive."""
    return normalize_sign(integer_row(row))


def _sparse_primitive(row: dict[int, int]) -> dict[int, int]:
    g = gcd(*row.values())
    if g == 1:
        return row
    return {k: v // g for k, v in row.items()}


def _combine(row: dict[int, int], prow: dict[int, int], c: int) -> dict[int, int]:
    """Clear column ``c`` of ``row`` with ``prow``; result is primitive."""
    a, p = row[c], prow[c]
    g = gcd(a, p)
    mp, ma = p // g, a // g
    new = {k: mp * v for k, v in row.items()} if mp != 1 else dict(row)
    for k, v in prow.items():
        t = new.get(k, 0) - ma * v
        if t:
            new[k] = t
        else:
            new.pop(k, None)
    return _sparse_primitive(new) if new else new


def sparse_echelon(rows: Iterable[dict[int, int]], reduced: bool = False):
    """Fraction-free echelon form of sparse integer rows ``{col: value}``.

    Rows are bucketed by leading column. For each column the candidate with
    the smallest pivot bit length (then fewest nonzeros) becomes the pivot and
    the other candidates are reduced against it. ``reduced=True`` also clears
    the entries above each pivot. Returns ``(rows, pivot_cols)``.
    """
    buckets: dict[int, list[dict[int, int]]] = {}
    heap: list[int] = []
    for r in rows:
        if r:
            r = _sparse_primitive(dict(r))
            lead = min(r)
            if lead not in buckets:
                buckets[lead] = []
                heapq.heappush(heap, lead)
            buckets[lead].append(r)
    out: list[dict[int, int]] = []
    pivots: list[int] = []
    while heap:
        c = heapq.heappop(heap)
        cand = buckets.pop(c)
        best = min(range(len(cand)), key=lambda i: (abs(cand[i][c]).bit_length(), len(cand[i])))
        prow = cand[best]
        for i, r in enumerate(cand):
            if i == best:
                continue
            r = _combine(r, prow, c)
            if r:
                lead = min(r)
                if lead not in buckets:
                    buckets[lead] = []
                    heapq.heappush(heap, lead)
                buckets[lead].append(r)
        out.append(prow)
        pivots.append(c)
    if reduced:
        for i in range(len(out) - 1, -1, -1):
            c = pivots[i]
            prow = out[i]
            for j in range(i):
                if c in out[j]:
                    out[j] = _combine(out[j], prow, c)
    return out, pivots


def to_sparse(row: Sequence[int]) -> dict[int, int]:
    return {i: a for i, a in enumerate(row) if a}


def to_dense(row: dict[int, int], ncols: int) -> list[int]:
    out = [0] * ncols
    for i, a in row.items():
        out[i] = a
    return out


def echelon(rows: Iterable[Sequence[int]], ncols: int, reduced: bool = False):
    """Dense front end to :func:`sparse_echelon`; returns dense integer rows."""
    ech, piv = sparse_echelon((to_sparse(r) for r in rows), reduced)
    return [to_dense(r, ncols) for r in ech], piv


@dataclass(frozen=True)
class RatMatrix:
    """Dense rational matrix, row-major, immutable."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RatMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise DimensionError("column count needed for an empty matrix")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged rows")
        flat = tuple(Fraction(a) for r in rows for a in r)
        return cls(len(rows), cols, flat)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_list(self) -> list[tuple[Fraction, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def transpose(self) -> "RatMatrix":
        return RatMatrix.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)], self.rows)

    def apply(self, v: Sequence) -> list[Fraction]:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for {self.cols} columns")
        return [sum((a * b for a, b in zip(self.row(i), v)), Fraction(0))
                for i in range(self.rows)]

    def integer_rows(self) -> list[list[int]]:
        return [integer_row(self.row(i)) for i in range(self.rows)]


def _as_int_rows(m) -> tuple[list[list[int]], int]:
    if isinstance(m, RatMatrix):
        return m.integer_rows(), m.cols
    rows, ncols = m
    return [integer_row(r) for r in rows], ncols


def rank(m: RatMatrix) -> int:
    rows, _ = _as_int_rows(m)
    return len(sparse_echelon(to_sparse(r) for r in rows)[0])


def rank_of_rows(rows: Iterable[Sequence], ncols: int) -> int:
    return len(sparse_echelon(to_sparse(integer_row(r)) for r in rows)[0])


def kernel_from_rref(rref: list, pivots: list[int], ncols: int) -> list[list[int]]:
    """Kernel basis from reduced echelon rows (dense lists or sparse dicts)."""
    sparse = [r if isinstance(r, dict) else to_sparse(r) for r in rref]
    pivot_set = set(pivots)
    by_col: dict[int, list[tuple[int, dict]]] = {}
    for row, pc in zip(sparse, pivots):
        for j in row:
            if j != pc:
                by_col.setdefault(j, []).append((pc, row))
    basis = []
    for j in range(ncols):
        if j in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[j] = Fraction(1)
        for pc, row in by_col.get(j, ()):
            v[pc] = Fraction(-row[j], row[pc])
        basis.append(canonical_vector(v))
    return basis


def kernel_basis(m: RatMatrix | tuple) -> list[list[int]]:
    """Basis of the right null space as canonical primitive integer vectors.

    One vector per non-pivot column ``j`` of the reduced echelon form, with
    coordinate ``j`` set and the pivot coordinates solved for.
    """
    rows, ncols = _as_int_rows(m)
    rref, pivots = sparse_echelon((to_sparse(r) for r in rows), reduced=True)
    return kernel_from_rref(rref, pivots, ncols)


def solve(m: RatMatrix, b: Sequence) -> list[Fraction] | None:
    """One exact solution of ``m x = b``; ``None`` when inconsistent."""
    if len(b) != m.rows:
        raise DimensionError(f"right-hand side of length {len(b)} for {m.rows} rows")
    aug = [list(m.row(i)) + [Fraction(b[i])] for i in range(m.rows)]
    rows = [integer_row(r) for r in aug]
    rref, pivots = echelon(rows, m.cols + 1, reduced=True)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Fraction(0)] * m.cols
    for row, pc in zip(rref, pivots):
        x[pc] = Fraction(row[m.cols], row[pc])
    return x


class RowSpace:
    """Incrementally maintained reduced echelon basis of a row space.

    Used for membership and reduction queries (``v`` modulo the span).
    """

    def __init__(self, ncols: int, rows: Iterable[Sequence] = ()):
        self.ncols = ncols
        rref, piv = echelon([integer_row(r) for r in rows], ncols, reduced=True)
        self.rows = rref
        self.pivots = piv

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence) -> list[int]:
        """Primitive integer remainder of ``v`` after clearing every pivot column."""
        w = integer_row(v)
        for row, pc in zip(self.rows, self.pivots):
            a = w[pc]
            if not a:
                continue
            p = row[pc]
            g = gcd(a, p)
            w = primitive([(p // g) * x - (a // g) * y for x, y in zip(w, row)])
        return w

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def extended(self, rows: Iterable[Sequence]) -> "RowSpace":
        return RowSpace(self.ncols, list(self.rows) + [integer_row(r) for r in rows])
