"""The moment map of GL(n) acting on skew-symmetric brackets.

For a bracket mu != 0 the moment map m(mu) is the symmetric matrix with

    <m(mu), E> = <E.mu, mu> / |mu|^2     for every symmetric E,

where E.mu = E mu(., .) - mu(E ., .) - mu(., E .) is the derived action and
the inner product on brackets makes {(e^i ^ e^j) (x) e_k : i < j} orthonormal.
The result is exact; its trace is always -1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotNice, UsageError, ZeroBracket
from .lie import LieBracket, is_nice_basis, weights_of


@dataclass(frozen=True)
class SymMatrix:
    dim: int
    rows: tuple  # full square storage, kept exactly symmetric

    def __post_init__(self):
        n = self.dim
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise UsageError("SymMatrix has the wrong shape")
        for i in range(n):
            for j in range(i + 1, n):
                if self.rows[i][j] != self.rows[j][i]:
                    raise UsageError("matrix is not symmetric")

    @classmethod
    def diagonal_of(cls, diag: Sequence) -> "SymMatrix":
        n = len(diag)
        return cls(n, tuple(tuple(Fraction(diag[i]) if i == j else Fraction(0) for j in range(n))
                            for i in range(n)))

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.dim)), Fraction(0))

    def diagonal(self) -> tuple:
        return tuple(self.rows[i][i] for i in range(self.dim))

    def is_diagonal(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.dim) for j in range(self.dim) if i != j)

    def conjugate(self, k: Sequence[Sequence]) -> "SymMatrix":
        """k M k^T."""
        n = self.dim
        k = [[Fraction(x) for x in r] for r in k]
        km = [[sum((k[i][a] * self.rows[a][j] for a in range(n)), Fraction(0)) for j in range(n)]
              for i in range(n)]
        return SymMatrix(n, tuple(tuple(sum((km[i][a] * k[j][a] for a in range(n)), Fraction(0))
                                        for j in range(n)) for i in range(n)))

    def to_lists(self) -> list:
        return [list(r) for r in self.rows]


def derived_action(E: Sequence[Sequence], C: list) -> list:
    """(E.mu) as a dense tensor, for a dense bracket tensor C[i][j][k]."""
    n = len(C)
    out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                v = Fraction(0)
                for l in range(n):
                    if E[k][l]:
                        v += E[k][l] * C[i][j][l]
                    if E[l][i]:
                        v -= E[l][i] * C[l][j][k]
                    if E[l][j]:
                        v -= E[l][j] * C[i][l][k]
                out[i][j][k] = v
    return out


def _action_entry(E: dict, C: list, i: int, j: int, k: int) -> Fraction:
    """(E.mu)_ij^k for a sparse symmetric E given as {(a, b): value}."""
    v = Fraction(0)
    for (a, b), e in E.items():
        if a == k:
            v += e * C[i][j][b]
        if b == i:
            v -= e * C[a][j][k]
        if b == j:
            v -= e * C[i][a][k]
    return v


def moment_map(mu: LieBracket) -> SymMatrix:
    if mu.is_zero():
        raise ZeroBracket("the moment map is undefined at mu = 0")
    n = mu.dim
    C = mu.tensor()
    norm2 = mu.norm_squared()
    support = [(i - 1, j - 1, k - 1, c) for i, j, k, c in mu.triples()]
    M = [[Fraction(0)] * n for _ in range(n)]
    for r in range(n):
        for s in range(r, n):
            E = {(r, s): 1} if r == s else {(r, s): 1, (s, r): 1}
            val = sum((_action_entry(E, C, i, j, k) * c for i, j, k, c in support), Fraction(0)) / norm2
            if r == s:
                M[r][r] = val
            else:
                # <M, E_rs + E_sr> = 2 M_rs
                M[r][s] = M[s][r] = val / 2
    return SymMatrix(n, tuple(tuple(row) for row in M))


def moment_map_nice(mu: LieBracket) -> SymMatrix:
    """Nice-basis shortcut: sum of c^2 F_ij^k over |mu|^2, a convex
    combination of the weights."""
    if mu.is_zero():
        raise ZeroBracket("the moment map is undefined at mu = 0")
    if not is_nice_basis(mu):
        raise NotNice("moment_map_nice needs a nice basis")
    norm2 = mu.norm_squared()
    diag = [Fraction(0)] * mu.dim
    for w, (*_, c) in zip(weights_of(mu), mu.triples()):
        for q, x in enumerate(w.vector):
            diag[q] += c * c * x
    return SymMatrix.diagonal_of([d / norm2 for d in diag])
