"""Exact rational vectors and matrices.

Scalars are ``fractions.Fraction``; a vector is a tuple of Fractions and a
matrix is a :class:`QMatrix`.  Nothing here ever touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import UsageError

QVector = tuple  # tuple[Fraction, ...]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/2"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def qvec(values: Iterable) -> QVector:
    return tuple(as_rational(v) for v in values)


@dataclass(frozen=True)
class QMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major, rows*cols Fractions

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise UsageError(
                f"QMatrix needs {self.rows * self.cols} entries, got {len(self.entries)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "QMatrix":
        rows = [qvec(r) for r in rows]
        if cols is None:
            if not rows:
                raise UsageError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise UsageError("ragged matrix rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    def row(self, i: int) -> QVector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_list(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def col(self, j: int) -> QVector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def transpose(self) -> "QMatrix":
        return QMatrix.from_rows([self.col(j) for j in range(self.cols)], cols=self.rows)

    def apply(self, v: Sequence) -> QVector:
        if len(v) != self.cols:
            raise UsageError(f"vector of length {len(v)} does not match {self.cols} columns")
        v = qvec(v)
        return tuple(sum((a * b for a, b in zip(self.row(i), v)), Fraction(0))
                     for i in range(self.rows))

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise UsageError("matrix dimensions do not match")
        cols = [other.col(j) for j in range(other.cols)]
        return QMatrix.from_rows(
            [[sum((a * b for a, b in zip(self.row(i), c)), Fraction(0)) for c in cols]
             for i in range(self.rows)], cols=other.cols)


def rref(rows: Sequence[Sequence], ncols: int | None = None):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    m = [list(qvec(r)) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def primitive_form(v: Sequence) -> tuple:
    """Positive rescaling of ``v`` to coprime integers (sign kept)."""
    v = qvec(v)
    if all(x == 0 for x in v):
        raise ValueError("primitive_form of the zero vector")
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def _matrix_rows(M) -> tuple[list, int]:
    if isinstance(M, QMatrix):
        return M.row_list(), M.cols
    rows = [qvec(r) for r in M]
    if not rows:
        raise UsageError("empty row list: pass a QMatrix to fix the column count")
    return rows, len(rows[0])


def kernel_basis(M) -> list[tuple]:
    """Canonical basis of the right null space {x : Mx = 0}.

    The basis vectors, stacked as rows, are in reduced echelon form and each
    is then scaled to coprime integers; the pivot entry keeps its positive
    sign.  A zero matrix gives the standard basis, an injective one ``[]``.
    """
    rows, ncols = _matrix_rows(M)
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    raw = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, pc in zip(red, pivots):
            x[pc] = -r[f]
        raw.append(x)
    if not raw:
        return []
    basis, _ = rref(raw, ncols)
    return [primitive_form(b) for b in basis]


def solve_linear(M, b: Sequence):
    """One exact solution of Mx = b (free variables set to zero), or None."""
    rows, ncols = _matrix_rows(M)
    if len(b) != len(rows):
        raise UsageError(f"right-hand side has length {len(b)}, matrix has {len(rows)} rows")
    aug = [list(r) + [as_rational(bi)] for r, bi in zip(rows, b)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in zip(red, pivots):
        x[pc] = r[ncols]
    return tuple(x)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((as_rational(a) * as_rational(b) for a, b in zip(u, v)), Fraction(0))
