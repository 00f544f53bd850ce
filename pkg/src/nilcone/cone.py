"""The open convex cone of diagonal derivations built from the moment map.

For a nice basis the moment map of the closure of the diagonal-group orbit is
the convex hull of the weights F_1..F_k.  A diagonal derivation D(p) is then
in the cone iff

    D(p) = a_1 F_1 + ... + a_k F_k + E,   a_i > 0,  E diagonal positive,
    tr D(p) > 0,

which is a finite system of strict linear inequalities in (a, p).  The a_i
are projected out by Fourier-Motzkin and the result is minimized.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import EmptyCone, NotNice, UsageError
from .exact import qvec
from .lie import (LieBracket, TorusParam, Weight,
                  diagonal_derivation_space, is_nice_basis, is_nilpotent, weights_of)
from .polyhedra import (MixedSystem, StrictSystem, is_feasible, minimize,
                        project, project_mixed)


@dataclass(frozen=True)
class ConeSpec:
    algebra_id: str
    torus: TorusParam
    system: StrictSystem
    weights: tuple = ()

    def to_dict(self) -> dict:
        d = self.system.to_dict()
        d["algebra"] = self.algebra_id
        d["torus"] = [list(r) for r in self.torus.matrix]
        d["weights"] = [w.label() for w in self.weights]
        return d


def _check_torus(mu: LieBracket, torus: TorusParam | None) -> TorusParam:
    canonical = diagonal_derivation_space(mu)
    if torus is None:
        return canonical
    if not torus.same_space(canonical):
        raise UsageError("the given torus parametrization does not span the diagonal derivations")
    return torus


def _preconditions(mu: LieBracket, torus: TorusParam | None):
    if not is_nilpotent(mu):
        raise UsageError("the bracket is not nilpotent")
    if not is_nice_basis(mu):
        raise NotNice("the cone construction needs a nice basis")
    torus = _check_torus(mu, torus)
    if torus.rank < 1:
        raise EmptyCone("no nonzero diagonal derivations")
    return torus, weights_of(mu)


def defining_rows(weights: Sequence[Weight], torus: TorusParam):
    """Rows over (a_1..a_k, p_1..p_m): a_i > 0, E_jj > 0, tr D(p) > 0."""
    k, m = len(weights), torus.rank
    a_pos = [tuple(int(q == i) for q in range(k)) + (0,) * m for i in range(k)]
    diag_pos = []
    for j in range(torus.dim):
        diag_pos.append(tuple(-w.vector[j] for w in weights) + tuple(torus.matrix[j]))
    trace = (0,) * k + torus.trace_form()
    return a_pos, diag_pos, trace


def build_cone(mu: LieBracket, torus: TorusParam | None = None, algebra_id: str = "") -> ConeSpec:
    """Minimal H-representation of the cone over the torus parameters.

    ``torus`` optionally fixes the coordinates (it must span the same space
    as the diagonal derivations); by default the canonical parametrization of
    :func:`diagonal_derivation_space` is used.
    """
    torus, weights = _preconditions(mu, torus)
    k = len(weights)
    a_pos, diag_pos, trace = defining_rows(weights, torus)
    names = tuple(f"a{i + 1}" for i in range(k)) + torus.names
    S = StrictSystem(k + torus.rank, tuple(a_pos + diag_pos + [trace]), names)
    # eliminate a_k first, then a_{k-1}, ...
    P = project(S, list(range(k - 1, -1, -1)))
    if not is_feasible(P):
        raise EmptyCone("no diagonal derivation satisfies the cone conditions")
    return ConeSpec(algebra_id, torus, minimize(P).rename(torus.names), tuple(weights))


def build_cone_relaxed(mu: LieBracket, torus: TorusParam | None = None) -> MixedSystem:
    """Same construction with a_i >= 0 and sum(a_i) > 0 instead of a_i > 0.

    The result is a mixed strict/closed system over the torus parameters; it
    should describe the same set as :func:`build_cone`.
    """
    torus, weights = _preconditions(mu, torus)
    k = len(weights)
    a_pos, diag_pos, trace = defining_rows(weights, torus)
    some_a = (1,) * k + (0,) * torus.rank
    names = tuple(f"a{i + 1}" for i in range(k)) + torus.names
    M = MixedSystem(k + torus.rank, tuple(diag_pos + [trace, some_a]), tuple(a_pos), names)
    return project_mixed(M, list(range(k - 1, -1, -1)))


def cone_membership(mu: LieBracket, p: Sequence, torus: TorusParam | None = None) -> bool:
    """Is D(p) in the cone?  Decided at fixed p by feasibility in the a_i alone."""
    torus, weights = _preconditions(mu, torus)
    d = torus.diag(qvec(p))
    if sum(d) <= 0:
        return False
    k = len(weights)
    # homogenize with t > 0: rows over (a_1..a_k, t)
    rows = [tuple(int(q == i) for q in range(k)) + (0,) for i in range(k)]
    for j in range(torus.dim):
        rows.append(tuple(Fraction(-w.vector[j]) for w in weights) + (d[j],))
    rows.append((0,) * k + (1,))
    return is_feasible(StrictSystem(k + 1, tuple(rows)))


def product_cone(spec: ConeSpec, extra: int) -> ConeSpec:
    """Cone of the algebra plus ``extra`` abelian factors: each new diagonal
    entry just has to be positive."""
    if extra < 0:
        raise UsageError("extra must be nonnegative")
    if extra == 0:
        return spec
    n, m = spec.torus.dim, spec.torus.rank
    rows = [tuple(r) + (0,) * extra for r in spec.torus.matrix]
    for e in range(extra):
        rows.append((0,) * m + tuple(int(q == e) for q in range(extra)))
    new_names = tuple(f"d{n + e + 1}" for e in range(extra))
    torus = TorusParam(n + extra, m + extra, tuple(rows), spec.torus.names + new_names)
    forms = [tuple(f) + (0,) * extra for f in spec.system.forms]
    forms += [(0,) * m + tuple(int(q == e) for q in range(extra)) for e in range(extra)]
    system = StrictSystem(m + extra, tuple(forms), torus.names)
    return ConeSpec(f"{spec.algebra_id}+R^{extra}", torus, system, spec.weights)
