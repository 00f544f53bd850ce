"""Homogeneous systems of strict linear inequalities, exactly.

A :class:`StrictSystem` is a finite list of integer forms ``l`` each read as
``l.x > 0``; its solution set is an open convex cone.  Forms are stored in
canonical form: coprime integers, no duplicates, sorted lexicographically.
The one exception is the infeasibility marker, a single all-zero form
(``0 > 0``), which Fourier-Motzkin elimination produces when it derives a
contradiction.

Redundancy and implication are decided with Farkas' lemma: on a nonempty
open cone, ``l > 0`` is implied iff ``l`` lies in the conic hull of the
forms.  Conic-hull membership is an exact LP (see :mod:`nilcone.lp`).

:class:`MixedSystem` additionally carries closed forms (``c.x >= 0``).  It is
only needed to compare the relaxed-coefficient construction against the
strict one.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import lp
from .errors import InfeasibleInput, TooManyVars, Unbounded, UsageError
from .exact import as_rational, dot, primitive_form, qvec, rank, rref

MAX_SLICE_VARS = 4


def default_names(n: int) -> tuple:
    return tuple(f"x{i + 1}" for i in range(n))


def _canon_strict(forms, nvars):
    out = set()
    for f in forms:
        f = tuple(f)
        if len(f) != nvars:
            raise UsageError(f"form {f} has length {len(f)}, expected {nvars}")
        if all(x == 0 for x in f):
            return ((0,) * nvars,)
        out.add(primitive_form(f))
    return tuple(sorted(out))


def _canon_closed(forms, nvars, strict):
    out = set()
    for f in forms:
        f = tuple(f)
        if len(f) != nvars:
            raise UsageError(f"form {f} has length {len(f)}, expected {nvars}")
        if all(x == 0 for x in f):
            continue
        out.add(primitive_form(f))
    return tuple(sorted(out - set(strict)))


@dataclass(frozen=True)
class StrictSystem:
    nvars: int
    forms: tuple
    var_names: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "forms", _canon_strict(self.forms, self.nvars))
        names = tuple(self.var_names) or default_names(self.nvars)
        if len(names) != self.nvars:
            raise UsageError(f"{len(names)} variable names for {self.nvars} variables")
        object.__setattr__(self, "var_names", names)

    @classmethod
    def of(cls, forms, var_names=None, nvars=None) -> "StrictSystem":
        forms = [tuple(f) for f in forms]
        if nvars is None:
            if var_names:
                nvars = len(var_names)
            elif forms:
                nvars = len(forms[0])
            else:
                raise UsageError("cannot infer nvars of an empty system")
        return cls(nvars, tuple(forms), tuple(var_names or ()))

    @property
    def is_marked_infeasible(self) -> bool:
        return len(self.forms) == 1 and not any(self.forms[0])

    def rename(self, var_names) -> "StrictSystem":
        return StrictSystem(self.nvars, self.forms, tuple(var_names))

    def to_text(self, sep="; ") -> str:
        return sep.join(format_form(f, self.var_names) + " > 0" for f in self.forms)

    def __str__(self):
        return self.to_text()

    def to_dict(self) -> dict:
        return {"vars": list(self.var_names), "forms": [list(f) for f in self.forms]}

    @classmethod
    def from_dict(cls, data: dict) -> "StrictSystem":
        names = data["vars"]
        return cls(len(names), tuple(tuple(int(x) for x in f) for f in data["forms"]), tuple(names))


@dataclass(frozen=True)
class MixedSystem:
    nvars: int
    strict: tuple
    closed: tuple = ()
    var_names: tuple = ()

    def __post_init__(self):
        strict = _canon_strict(self.strict, self.nvars)
        object.__setattr__(self, "strict", strict)
        if len(strict) == 1 and not any(strict[0]):
            object.__setattr__(self, "closed", ())
        else:
            object.__setattr__(self, "closed", _canon_closed(self.closed, self.nvars, strict))
        names = tuple(self.var_names) or default_names(self.nvars)
        object.__setattr__(self, "var_names", names)

    @property
    def is_marked_infeasible(self) -> bool:
        return len(self.strict) == 1 and not any(self.strict[0])

    @classmethod
    def from_strict(cls, S: StrictSystem) -> "MixedSystem":
        return cls(S.nvars, S.forms, (), S.var_names)


@dataclass(frozen=True)
class SlicePolytope:
    """Closure of a cone cut by ``normal.x = level``, as vertices."""
    nvars: int
    normal: tuple
    level: Fraction
    vertices: tuple
    facets: tuple
    incidence: tuple  # per facet, the indices of the vertices it contains
    var_names: tuple = ()

    @property
    def facet_count(self) -> int:
        return len(self.facets)


def format_form(form: Sequence, names: Sequence[str]) -> str:
    parts = []
    for c, name in zip(form, names):
        if c == 0:
            continue
        mag = abs(c)
        term = name if mag == 1 else f"{mag}*{name}"
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts) if parts else "0"


# -- elimination --------------------------------------------------------------

def _drop(v, var):
    return v[:var] + v[var + 1:]


def _combine(p, q, var):
    a, b = p[var], -q[var]
    return tuple(b * x + a * y for k, (x, y) in enumerate(zip(p, q)) if k != var)


def _eliminate_rows(strict, closed, var):
    rows = [(f, True) for f in strict] + [(f, False) for f in closed]
    pos = [r for r in rows if r[0][var] > 0]
    neg = [r for r in rows if r[0][var] < 0]
    new_strict, new_closed = [], []
    for f, s in rows:
        if f[var] == 0:
            (new_strict if s else new_closed).append(_drop(f, var))
    for p, sp in pos:
        for q, sq in neg:
            (new_strict if (sp or sq) else new_closed).append(_combine(p, q, var))
    return new_strict, new_closed


def fm_eliminate(S: StrictSystem, var: int) -> StrictSystem:
    """Project out variable ``var`` by Fourier-Motzkin pairing.

    Every form positive in ``var`` is paired with every form negative in it;
    forms not involving ``var`` are carried over.  No redundancy removal
    beyond deduplication.
    """
    if not 0 <= var < S.nvars:
        raise UsageError(f"variable index {var} out of range for {S.nvars} variables")
    names = _drop(S.var_names, var)
    if S.is_marked_infeasible:
        return StrictSystem(S.nvars - 1, ((0,) * (S.nvars - 1),), names)
    strict, _ = _eliminate_rows(S.forms, (), var)
    return StrictSystem(S.nvars - 1, tuple(strict), names)


def fm_eliminate_mixed(M: MixedSystem, var: int) -> MixedSystem:
    if not 0 <= var < M.nvars:
        raise UsageError(f"variable index {var} out of range for {M.nvars} variables")
    names = _drop(M.var_names, var)
    if M.is_marked_infeasible:
        return MixedSystem(M.nvars - 1, ((0,) * (M.nvars - 1),), (), names)
    strict, closed = _eliminate_rows(M.strict, M.closed, var)
    return MixedSystem(M.nvars - 1, tuple(strict), tuple(closed), names)


# -- implication --------------------------------------------------------------

def _implied(strict, closed, form, need_strict: bool) -> bool:
    """Is ``form`` a nonnegative combination of the rows (using a strict row
    with positive weight when ``need_strict``)?  Sound without any
    feasibility assumption; complete when the rows have a solution."""
    cols = list(strict) + list(closed)
    n = len(form)
    if not cols:
        return False if need_strict else not any(form)
    A = [[c[r] for c in cols] for r in range(n)]
    obj = [1] * len(strict) + [0] * len(closed)
    res = lp.maximize(obj, A, form)
    if res.status == lp.INFEASIBLE:
        return False
    if not need_strict:
        return True
    return res.status == lp.UNBOUNDED or res.value > 0


def in_conic_hull(forms: Sequence[Sequence], form: Sequence) -> bool:
    """Exact test of form = sum(lam_i * forms_i) with lam >= 0."""
    if not forms:
        return not any(form)
    n = len(form)
    A = [[f[r] for f in forms] for r in range(n)]
    return lp.feasible(A, form, len(forms))


def _prune(strict, closed):
    """Drop rows implied by the remaining ones (solution set unchanged)."""
    strict, closed = list(strict), list(closed)
    i = 0
    while i < len(strict):
        others = strict[:i] + strict[i + 1:]
        if _implied(others, closed, strict[i], True):
            strict.pop(i)
        else:
            i += 1
    i = 0
    while i < len(closed):
        others = closed[:i] + closed[i + 1:]
        if _implied(strict, others, closed[i], False):
            closed.pop(i)
        else:
            i += 1
    return strict, closed


def project(S: StrictSystem, variables: Sequence[int]) -> StrictSystem:
    """Eliminate several variables (indices into S), pruning after each step."""
    M = project_mixed(MixedSystem.from_strict(S), variables)
    return StrictSystem(M.nvars, M.strict, M.var_names)


def project_mixed(M: MixedSystem, variables: Sequence[int]) -> MixedSystem:
    # variables are original indices, eliminated in the order given
    remaining = list(range(M.nvars))
    for v in variables:
        idx = remaining.index(v)
        remaining.pop(idx)
        M = fm_eliminate_mixed(M, idx)
        if M.is_marked_infeasible:
            continue
        strict, closed = _prune(M.strict, M.closed)
        M = MixedSystem(M.nvars, tuple(strict), tuple(closed), M.var_names)
    return M


def is_feasible(S: StrictSystem) -> bool:
    """Is there x with every form positive?  Decided by eliminating all
    variables and looking for the contradiction 0 > 0."""
    if S.is_marked_infeasible:
        return False
    return not project(S, list(range(S.nvars))).is_marked_infeasible


def is_feasible_mixed(M: MixedSystem) -> bool:
    if M.is_marked_infeasible:
        return False
    return not project_mixed(M, list(range(M.nvars))).is_marked_infeasible


def implies(S: StrictSystem, form: Sequence, strict: bool = True) -> bool:
    """Does every solution of S satisfy form > 0 (or >= 0 if not strict)?
    S must be feasible for a negative answer to be meaningful."""
    if strict and not any(form):
        return False
    return in_conic_hull(S.forms, form)


def minimize(S: StrictSystem) -> StrictSystem:
    """Irredundant subsystem with the same solution set (canonical scan order)."""
    if not is_feasible(S):
        raise InfeasibleInput("cannot minimize an infeasible system")
    kept = list(S.forms)
    i = 0
    while i < len(kept):
        if in_conic_hull(kept[:i] + kept[i + 1:], kept[i]):
            kept.pop(i)
        else:
            i += 1
    return StrictSystem(S.nvars, tuple(kept), S.var_names)


def contains(S: StrictSystem, x: Sequence) -> bool:
    if len(x) != S.nvars:
        raise UsageError(f"point has length {len(x)}, system has {S.nvars} variables")
    x = qvec(x)
    return all(dot(f, x) > 0 for f in S.forms)


def _as_mixed(S) -> MixedSystem:
    return S if isinstance(S, MixedSystem) else MixedSystem.from_strict(S)


def systems_equal(A, B) -> bool:
    """Do two feasible systems (strict or mixed) have the same solution set?"""
    A, B = _as_mixed(A), _as_mixed(B)
    if A.nvars != B.nvars:
        raise UsageError("systems live in different dimensions")
    if not (is_feasible_mixed(A) and is_feasible_mixed(B)):
        raise InfeasibleInput("systems_equal needs feasible systems")
    for X, Y in ((A, B), (B, A)):
        for f in X.strict:
            if not _implied(Y.strict, Y.closed, f, True):
                return False
        for f in X.closed:
            if not _implied(Y.strict, Y.closed, f, False):
                return False
    return True


def product(A: StrictSystem, B: StrictSystem) -> StrictSystem:
    """Cartesian product of two open cones: forms zero-padded and stacked."""
    pa, pb = (0,) * B.nvars, (0,) * A.nvars
    forms = [tuple(f) + pa for f in A.forms] + [pb + tuple(f) for f in B.forms]
    return StrictSystem(A.nvars + B.nvars, tuple(forms), A.var_names + B.var_names)


# -- slices -------------------------------------------------------------------

def _normal_sign(forms, normal, nvars) -> int:
    """+1 (or -1) if normal (or -normal) is positive on the closed cone
    minus 0; 0 if the slice is unbounded.

    The closed cone of a feasible strict system is full-dimensional, so this
    holds iff the forms have full rank and s * (+-normal) = sum((1 + mu_i) f_i)
    for some s, mu >= 0.  s = 0 cannot occur: no positive combination of the
    forms vanishes on a feasible system (Gordan).
    """
    if rank(forms, nvars) < nvars:
        return 0
    m = len(forms)
    for sign in (1, -1):
        A = [[f[r] for f in forms] + [-sign * normal[r]] for r in range(nvars)]
        b = [-sum(f[r] for f in forms) for r in range(nvars)]
        if lp.feasible(A, b, m + 1):
            return sign
    return 0


def slice_vertices(S: StrictSystem, normal: Sequence, level) -> SlicePolytope:
    """Vertices of the closure of {x in S : normal.x = level}.

    Brute force over every (nvars-1)-subset of the irredundant forms,
    intersected with the normalization hyperplane.
    """
    n = S.nvars
    if n > MAX_SLICE_VARS:
        raise TooManyVars(f"slice enumeration supports at most {MAX_SLICE_VARS} variables, got {n}")
    normal = tuple(as_rational(a) for a in normal)
    level = as_rational(level)
    if len(normal) != n:
        raise UsageError("normalization has the wrong length")
    if not is_feasible(S):
        raise InfeasibleInput("cannot slice an empty cone")
    F = minimize(S).forms
    sign = _normal_sign(F, normal, n)
    if sign == 0:
        raise Unbounded("the slice is unbounded: the closed cone meets normal.x = 0 away from 0")
    if sign * level <= 0:
        raise InfeasibleInput(f"the slice normal.x = {level} misses the cone")
    verts = set()
    for subset in combinations(F, n - 1):
        aug = [tuple(f) + (0,) for f in subset] + [normal + (level,)]
        red, pivots = rref(aug, n + 1)
        if pivots != list(range(n)):
            continue  # not a single point
        x = tuple(r[n] for r in red)
        if all(dot(f, x) >= 0 for f in F):
            verts.add(x)
    if not verts:
        raise InfeasibleInput(f"the slice normal.x = {level} misses the cone")
    verts = tuple(sorted(verts))
    facets, incidence = [], []
    for f in F:
        tight = [i for i, v in enumerate(verts) if dot(f, v) == 0]
        if n > 1 and rank([tuple(verts[i]) + (Fraction(1),) for i in tight], n + 1) >= n - 1 and tight:
            facets.append(f)
            incidence.append(tuple(tight))
    return SlicePolytope(n, normal, level, verts, tuple(facets), tuple(incidence), S.var_names)
