"""Exact dense linear algebra over the rationals.

Everything downstream (hom spaces, resolutions, tensor products) bottoms
out in the four operations here: :func:`rref`, :func:`kernel_basis`,
:func:`solve` and :func:`quotient`.  Entries are ``fractions.Fraction``
values, so every result is exact; there are no tolerances anywhere.

The elimination kernel itself runs on integer rows (each rational row is
scaled by the lcm of its denominators, which changes neither row space
nor solution set).  Two interchangeable backends provide it: a compiled
Cython core and a pure-Python twin.  The compiled one is preferred at
import time; set ``RECTILT_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import lcm

if os.environ.get("RECTILT_PURE"):
    from . import _rowred_py as _rowred
else:
    try:
        from . import _rowred_c as _rowred  # type: ignore[attr-defined]
    except ImportError:
        from . import _rowred_py as _rowred

BACKEND = _rowred.BACKEND

_ZERO = Fraction(0)
_ONE = Fraction(1)


def format_fraction(x: Fraction) -> str:
    """Canonical string form: ``"0"``, ``"-3"``, ``"5/7"``."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(s) -> Fraction:
    return Fraction(s)


class Mat:
    """An immutable rows x cols matrix of Fractions.

    Zero-row and zero-column matrices are first class; they show up
    constantly as maps to or from zero spaces.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimensions")
        entries = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError(f"entry grid does not match shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    # -- constructors ------------------------------------------------

    @classmethod
    def from_rows(cls, entries) -> "Mat":
        entries = [list(r) for r in entries]
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        return cls(rows, cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        return cls(rows, cols, [[_ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(n, n, [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def column(cls, values) -> "Mat":
        values = list(values)
        return cls(len(values), 1, [[v] for v in values])

    # -- basics ------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(format_fraction(x) for x in row) for row in self.entries)
        return f"Mat({self.rows}x{self.cols}: [{body}])"

    def __getitem__(self, rc):
        i, j = rc
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def row(self, i) -> list:
        return list(self.entries[i])

    def col(self, j) -> list:
        return [self.entries[i][j] for i in range(self.rows)]

    # -- arithmetic --------------------------------------------------

    def __add__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        return Mat(self.rows, self.cols,
                   [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        return Mat(self.rows, self.cols,
                   [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)])

    def __neg__(self) -> "Mat":
        return Mat(self.rows, self.cols, [[-a for a in row] for row in self.entries])

    def scale(self, c) -> "Mat":
        c = Fraction(c)
        return Mat(self.rows, self.cols, [[c * a for a in row] for row in self.entries])

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ocols = other.cols
        out = []
        for i in range(self.rows):
            srow = self.entries[i]
            orow = [_ZERO] * ocols
            for k in range(self.cols):
                a = srow[k]
                if a == 0:
                    continue
                trow = other.entries[k]
                for j in range(ocols):
                    b = trow[j]
                    if b != 0:
                        orow[j] += a * b
            out.append(orow)
        return Mat(self.rows, ocols, out)

    def transpose(self) -> "Mat":
        return Mat(self.cols, self.rows,
                   [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def _same_shape(self, other: "Mat"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    # -- stacking ----------------------------------------------------

    @staticmethod
    def hstack(mats, rows: int | None = None) -> "Mat":
        mats = list(mats)
        if not mats:
            if rows is None:
                raise ValueError("hstack of nothing needs an explicit row count")
            return Mat.zeros(rows, 0)
        rows = mats[0].rows
        if any(m.rows != rows for m in mats):
            raise ValueError("hstack row mismatch")
        entries = [[x for m in mats for x in m.entries[i]] for i in range(rows)]
        return Mat(rows, sum(m.cols for m in mats), entries)

    @staticmethod
    def vstack(mats, cols: int | None = None) -> "Mat":
        mats = list(mats)
        if not mats:
            if cols is None:
                raise ValueError("vstack of nothing needs an explicit column count")
            return Mat.zeros(0, cols)
        cols = mats[0].cols
        if any(m.cols != cols for m in mats):
            raise ValueError("vstack column mismatch")
        entries = [row for m in mats for row in m.entries]
        return Mat(sum(m.rows for m in mats), cols, entries)

    @staticmethod
    def block_diag(mats) -> "Mat":
        mats = list(mats)
        rows = sum(m.rows for m in mats)
        cols = sum(m.cols for m in mats)
        out = [[_ZERO] * cols for _ in range(rows)]
        r0 = c0 = 0
        for m in mats:
            for i in range(m.rows):
                row = out[r0 + i]
                ment = m.entries[i]
                for j in range(m.cols):
                    row[c0 + j] = ment[j]
            r0 += m.rows
            c0 += m.cols
        return Mat(rows, cols, out)

    def submatrix(self, row_range, col_range) -> "Mat":
        rr = list(row_range)
        cc = list(col_range)
        return Mat(len(rr), len(cc), [[self.entries[i][j] for j in cc] for i in rr])

    # -- serialization -----------------------------------------------

    def to_json(self):
        return [[format_fraction(x) for x in row] for row in self.entries]

    @classmethod
    def from_json(cls, data, rows: int | None = None, cols: int | None = None) -> "Mat":
        entries = [[parse_fraction(x) for x in row] for row in data]
        r = len(entries) if rows is None else rows
        if entries:
            c = len(entries[0])
        elif cols is not None:
            c = cols
        else:
            c = 0
        if rows is not None and len(entries) != rows and entries:
            raise ValueError("matrix JSON row count mismatch")
        if not entries and r > 0:
            # n x 0 matrices serialize as [] only when rows are implied
            entries = [[] for _ in range(r)]
        return cls(r, c, entries)


# -- elimination-backed operations ------------------------------------


def _to_int_rows(mat: Mat, extra: Mat | None = None):
    """Scale each (possibly augmented) row to integers."""
    out = []
    for i in range(mat.rows):
        row = list(mat.entries[i]) + (list(extra.entries[i]) if extra is not None else [])
        mult = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * mult) for x in row])
    return out


def rref(mat: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form and its pivot columns.

    The RREF of a matrix is unique, so the output is independent of the
    backend; pivots are strictly increasing.
    """
    if mat.rows == 0 or mat.cols == 0:
        return Mat.zeros(mat.rows, mat.cols), []
    reduced, pivots = _rowred.reduce_rows(_to_int_rows(mat), mat.cols)
    out = []
    for row, c in zip(reduced, pivots):
        p = Fraction(row[c])
        out.append([Fraction(x) / p for x in row])
    for _ in range(mat.rows - len(out)):
        out.append([_ZERO] * mat.cols)
    return Mat(mat.rows, mat.cols, out), pivots


def rank(mat: Mat) -> int:
    return len(rref(mat)[1])


def kernel_basis(mat: Mat) -> Mat:
    """Columns spanning the null space, one per free column of the RREF.

    The basis is canonical: free variable ``j`` contributes the vector
    with 1 at position ``j`` and the negated RREF column above the
    pivots, in increasing ``j`` order.
    """
    r, pivots = rref(mat)
    pivot_set = set(pivots)
    free = [j for j in range(mat.cols) if j not in pivot_set]
    cols = []
    for j in free:
        v = [_ZERO] * mat.cols
        v[j] = _ONE
        for i, c in enumerate(pivots):
            v[c] = -r.entries[i][j]
        cols.append(v)
    return Mat(mat.cols, len(cols), [[col[i] for col in cols] for i in range(mat.cols)])


def solve(mat: Mat, rhs: Mat) -> Mat | None:
    """An exact solution ``X`` of ``mat @ X = rhs``, or None if none exists.

    The particular solution is canonical: all free variables are zero.
    """
    if mat.rows != rhs.rows:
        raise ValueError("solve: row counts differ")
    if mat.cols == 0:
        return Mat.zeros(0, rhs.cols) if rhs.is_zero() else None
    if mat.rows == 0:
        return Mat.zeros(mat.cols, rhs.cols)
    reduced, pivots = _rowred.reduce_rows(_to_int_rows(mat, rhs), mat.cols + rhs.cols)
    if pivots and pivots[-1] >= mat.cols:
        return None
    out = [[_ZERO] * rhs.cols for _ in range(mat.cols)]
    for row, c in zip(reduced, pivots):
        p = Fraction(row[c])
        for j in range(rhs.cols):
            out[c][j] = Fraction(row[mat.cols + j]) / p
    return Mat(mat.cols, rhs.cols, out)


def col_basis(mat: Mat) -> Mat:
    """Canonical basis of the column space (RREF rows transposed)."""
    r, pivots = rref(mat.transpose())
    cols = [r.row(i) for i in range(len(pivots))]
    return Mat(mat.rows, len(cols), [[col[i] for col in cols] for i in range(mat.rows)])


def quotient(ambient_dim: int, subspace: Mat) -> tuple[int, Mat]:
    """The quotient of ``Q^ambient_dim`` by the column span of ``subspace``.

    Returns ``(dim, projection)`` with the projection surjective and its
    kernel exactly the span.  Canonical choice: the quotient coordinates
    are the non-pivot coordinates of the span's RREF basis.
    """
    if subspace.rows != ambient_dim:
        raise ValueError("subspace columns live in the wrong ambient dimension")
    r, pivots = rref(subspace.transpose())
    rk = len(pivots)
    dim = ambient_dim - rk
    basis_cols = [r.row(i) for i in range(rk)]
    complement = [j for j in range(ambient_dim) if j not in set(pivots)]
    change = Mat(ambient_dim, ambient_dim,
                 [[(basis_cols[k][i] if k < rk else (_ONE if complement[k - rk] == i else _ZERO))
                   for k in range(ambient_dim)]
                  for i in range(ambient_dim)])
    inv = solve(change, Mat.identity(ambient_dim))
    assert inv is not None, "change of basis must be invertible"
    proj = inv.submatrix(range(rk, ambient_dim), range(ambient_dim))
    return dim, proj


def intersect_columns(a: Mat, b: Mat) -> Mat:
    """Canonical basis of colspan(a) ∩ colspan(b)."""
    if a.rows != b.rows:
        raise ValueError("ambient dimensions differ")
    k = kernel_basis(Mat.hstack([a, b], rows=a.rows))
    top = k.submatrix(range(a.cols), range(k.cols))
    return col_basis(a @ top)
