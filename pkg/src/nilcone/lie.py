"""Lie brackets given by structure constants on a fixed basis.

Indices are 1-based everywhere in the public API, matching the usual
``mu(e_i, e_j) = sum_k c_ij^k e_k`` notation.  Vectors are 0-based tuples.

Only *diagonal* derivations are considered: the basis is assumed to be one in
which a maximal torus of derivations is diagonal.  For an arbitrary input
basis the diagonal derivations may be a proper subspace of a maximal torus,
and then the cone computed downstream is not the cone of the algebra.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, JacobiViolation, NonCoordinateCenter, UsageError
from .exact import QMatrix, as_rational, dot, kernel_basis, qvec, rank, rref, solve_linear


@dataclass(frozen=True)
class LieBracket:
    """Sparse structure constants; only pairs i < j are stored, no zeros."""
    dim: int
    terms: tuple  # ((i, j), ((k, c), ...)) sorted by (i, j) then k

    @classmethod
    def from_triples(cls, dim: int, triples: Iterable) -> "LieBracket":
        """Build from (i, j, k, c) meaning mu(e_i, e_j) += c e_k.

        Pairs with i > j are folded in by antisymmetry; i == j is rejected.
        """
        acc: dict = {}
        for i, j, k, c in triples:
            for idx in (i, j, k):
                if not 1 <= idx <= dim:
                    raise IndexOutOfRange(f"index {idx} outside 1..{dim}")
            if i == j:
                raise UsageError(f"mu(e{i}, e{i}) must vanish; got a coefficient")
            c = as_rational(c)
            if i > j:
                i, j, c = j, i, -c
            acc[(i, j, k)] = acc.get((i, j, k), Fraction(0)) + c
        pairs: dict = {}
        for (i, j, k), c in sorted(acc.items()):
            if c != 0:
                pairs.setdefault((i, j), []).append((k, c))
        return cls(dim, tuple((ij, tuple(kc)) for ij, kc in sorted(pairs.items())))

    def triples(self):
        for (i, j), kcs in self.terms:
            for k, c in kcs:
                yield i, j, k, c

    def coeff(self, i: int, j: int, k: int) -> Fraction:
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        for ij, kcs in self.terms:
            if ij == (i, j):
                for kk, c in kcs:
                    if kk == k:
                        return sign * c
        return Fraction(0)

    def tensor(self) -> list:
        """Dense antisymmetric array C[i][j][k] (0-based)."""
        n = self.dim
        C = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for i, j, k, c in self.triples():
            C[i - 1][j - 1][k - 1] = c
            C[j - 1][i - 1][k - 1] = -c
        return C

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        x, y = qvec(x), qvec(y)
        out = [Fraction(0)] * self.dim
        for i, j, k, c in self.triples():
            w = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1]
            if w:
                out[k - 1] += c * w
        return tuple(out)

    def basis_bracket(self, i: int, j: int) -> tuple:
        n = self.dim
        return self.bracket(_unit(n, i), _unit(n, j))

    def scaled(self, s) -> "LieBracket":
        s = as_rational(s)
        return LieBracket.from_triples(self.dim, ((i, j, k, s * c) for i, j, k, c in self.triples()))

    def norm_squared(self) -> Fraction:
        return sum((c * c for *_, c in self.triples()), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def to_dict(self) -> dict:
        return {"dim": self.dim,
                "brackets": [{"i": i, "j": j, "k": k, "c": str(c)} for i, j, k, c in self.triples()]}


def _unit(n, i):
    return tuple(Fraction(int(r == i - 1)) for r in range(n))


@dataclass(frozen=True)
class Weight:
    lower: tuple  # (i, j), i < j
    target: int
    vector: tuple  # diagonal of E_kk - E_ii - E_jj

    def label(self) -> str:
        i, j = self.lower
        return f"F_{i}{j}^{self.target}"


@dataclass(frozen=True)
class TorusParam:
    """Linear parametrization p -> Diag(P p) of diagonal derivations.

    ``matrix`` is n x m with integer entries; column q is the diagonal
    derivation obtained from the q-th unit parameter.  Row k is the weight
    functional of the basis vector e_k.
    """
    dim: int
    rank: int
    matrix: tuple  # n rows of m ints
    names: tuple = ()

    def __post_init__(self):
        if len(self.matrix) != self.dim or any(len(r) != self.rank for r in self.matrix):
            raise UsageError("torus matrix has the wrong shape")
        if self.rank and rank(self.matrix, self.rank) != self.rank:
            raise UsageError("torus columns are linearly dependent")
        names = tuple(self.names) or tuple(f"p{q + 1}" for q in range(self.rank))
        if len(names) != self.rank:
            raise UsageError("wrong number of parameter names")
        object.__setattr__(self, "names", names)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], names=()) -> "TorusParam":
        n = len(columns[0])
        return cls(n, len(columns), tuple(tuple(c[r] for c in columns) for r in range(n)), tuple(names))

    def columns(self) -> list:
        return [tuple(r[q] for r in self.matrix) for q in range(self.rank)]

    def diag(self, p: Sequence) -> tuple:
        if len(p) != self.rank:
            raise UsageError(f"parameter vector has length {len(p)}, torus rank is {self.rank}")
        p = qvec(p)
        return tuple(dot(r, p) for r in self.matrix)

    def trace_form(self) -> tuple:
        return tuple(sum(r[q] for r in self.matrix) for q in range(self.rank))

    def same_space(self, other: "TorusParam") -> bool:
        if self.dim != other.dim or self.rank != other.rank:
            return False
        return rank(self.columns() + other.columns(), self.dim) == self.rank


# -- operations ---------------------------------------------------------------

def jacobi_residual(mu: LieBracket, i: int, j: int, k: int) -> tuple:
    n = mu.dim
    x, y, z = _unit(n, i), _unit(n, j), _unit(n, k)
    terms = (mu.bracket(mu.bracket(x, y), z),
             mu.bracket(mu.bracket(y, z), x),
             mu.bracket(mu.bracket(z, x), y))
    return tuple(a + b + c for a, b, c in zip(*terms))


def check_jacobi(mu: LieBracket) -> LieBracket:
    for i, j, k in combinations(range(1, mu.dim + 1), 3):
        res = jacobi_residual(mu, i, j, k)
        if any(res):
            raise JacobiViolation(i, j, k, res)
    return mu


def validate(dim: int, triples: Iterable) -> LieBracket:
    """Build a bracket from raw (i, j, k, c) data and check the Jacobi identity."""
    return check_jacobi(LieBracket.from_triples(dim, triples))


def _span_basis(vectors, n):
    vectors = [v for v in vectors if any(v)]
    return rref(vectors, n)[0] if vectors else []


def lower_central_series(mu: LieBracket) -> list:
    """Bases (reduced echelon) of n, [n,n], [n,[n,n]], ... until it stabilises."""
    n = mu.dim
    current = [_unit(n, i) for i in range(1, n + 1)]
    series = [current]
    while current:
        nxt = _span_basis([mu.bracket(_unit(n, i), v) for i in range(1, n + 1) for v in current], n)
        if len(nxt) == len(current):
            break
        series.append(nxt)
        current = nxt
    return series


def is_nilpotent(mu: LieBracket) -> bool:
    return not lower_central_series(mu)[-1]


def derivation_constraints(mu: LieBracket) -> list:
    """Rows e_k - e_i - e_j, one per nonzero c_ij^k: diagonal derivations are
    exactly the kernel of this matrix."""
    rows = []
    for i, j, k, _ in mu.triples():
        row = [0] * mu.dim
        row[k - 1] += 1
        row[i - 1] -= 1
        row[j - 1] -= 1
        rows.append(tuple(row))
    return rows


def diagonal_derivation_space(mu: LieBracket) -> TorusParam:
    """Canonical parametrization of {d : Diag(d) is a derivation of mu}.

    Parameter q is named after the pivot coordinate of the q-th basis vector,
    so e.g. filiform algebras get D = Diag(d1, d2, d1 + d2, ...).
    """
    n = mu.dim
    rows = derivation_constraints(mu)
    M = QMatrix.from_rows(rows, cols=n) if rows else QMatrix(0, n, ())
    basis = kernel_basis(M)
    names = []
    for b in basis:
        pivot = next(i for i, x in enumerate(b) if x != 0)
        names.append(f"d{pivot + 1}")
    if not basis:
        return TorusParam(n, 0, tuple(() for _ in range(n)), ())
    return TorusParam.from_columns(basis, names)


def is_derivation(mu: LieBracket, D: Sequence[Sequence]) -> bool:
    """Check D[x,y] = [Dx,y] + [x,Dy] on all basis pairs (D as a row list)."""
    n = mu.dim
    Dm = QMatrix.from_rows(D, cols=n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ei, ej = _unit(n, i), _unit(n, j)
            lhs = Dm.apply(mu.bracket(ei, ej))
            rhs1 = mu.bracket(Dm.apply(ei), ej)
            rhs2 = mu.bracket(ei, Dm.apply(ej))
            if any(a != b + c for a, b, c in zip(lhs, rhs1, rhs2)):
                return False
    return True


def is_nice_basis(mu: LieBracket) -> bool:
    """Single target per bracket pair, and for each target the pairs hitting
    it are pairwise disjoint."""
    by_target: dict = {}
    for (i, j), kcs in mu.terms:
        if len(kcs) != 1:
            return False
        by_target.setdefault(kcs[0][0], []).append((i, j))
    for pairs in by_target.values():
        seen = set()
        for i, j in pairs:
            if i in seen or j in seen:
                return False
            seen.update((i, j))
    return True


def weights_of(mu: LieBracket) -> list:
    out = []
    for i, j, k, _ in mu.triples():
        v = [0] * mu.dim
        v[k - 1] += 1
        v[i - 1] -= 1
        v[j - 1] -= 1
        out.append(Weight((i, j), k, tuple(v)))
    return out


@dataclass(frozen=True)
class Center:
    basis: tuple  # reduced echelon basis of the center
    indices: tuple | None  # 1-based coordinate indices, None if not coordinate

    @property
    def is_coordinate(self) -> bool:
        return self.indices is not None


def center(mu: LieBracket) -> Center:
    n = mu.dim
    C = mu.tensor()
    # x is central iff sum_r x_r C[r][i][k] = 0 for every i, k
    rows = [tuple(C[r][i][k] for r in range(n)) for i in range(n) for k in range(n)]
    rows = [r for r in rows if any(r)]
    basis = tuple(kernel_basis(QMatrix.from_rows(rows, cols=n) if rows else QMatrix(0, n, ())))
    if all(sum(1 for x in b if x) == 1 for b in basis):
        idx = tuple(sorted(next(i for i, x in enumerate(b) if x) + 1 for b in basis))
        return Center(basis, idx)
    return Center(basis, None)


def necessary_condition(mu: LieBracket, torus: TorusParam, p: Sequence) -> bool:
    """tr D(p) > 0 and D(p) positive on every central basis vector."""
    z = center(mu)
    if not z.is_coordinate:
        raise NonCoordinateCenter("center is not spanned by basis vectors")
    d = torus.diag(p)
    return sum(d) > 0 and all(d[k - 1] > 0 for k in z.indices)


def transform(mu: LieBracket, g: Sequence[Sequence]) -> LieBracket:
    """(g.mu)(x, y) = g mu(g^-1 x, g^-1 y) for an invertible rational matrix g."""
    n = mu.dim
    G = QMatrix.from_rows(g, cols=n)
    cols = []
    for q in range(n):
        col = solve_linear(G, _unit(n, q + 1))
        if col is None:
            raise UsageError("transform needs an invertible matrix")
        cols.append(col)
    triples = []
    for i in range(n):
        for j in range(i + 1, n):
            v = G.apply(mu.bracket(cols[i], cols[j]))
            for k, c in enumerate(v):
                if c:
                    triples.append((i + 1, j + 1, k + 1, c))
    return LieBracket.from_triples(n, triples)
