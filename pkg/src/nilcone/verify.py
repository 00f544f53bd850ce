"""Golden checks against the published values, one function per acceptance
criterion.  Each returns a :class:`CheckResult`; ``run_all`` collects them in
a fixed order so the report is deterministic."""
from __future__ import annotations

import random
import time
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import catalog
from .cone import build_cone, build_cone_relaxed, cone_membership, product_cone
from .exact import as_rational, format_rational
from .io import load_expected
from .lie import LieBracket, TorusParam, necessary_condition, transform
from .moment import moment_map, moment_map_nice
from .polyhedra import (StrictSystem, contains, fm_eliminate, minimize, project,
                        slice_vertices, systems_equal)


@dataclass
class CheckResult:
    criterion: int
    title: str
    passed: bool = True
    details: list = field(default_factory=list)
    seconds: float = 0.0

    def fail(self, msg: str) -> None:
        self.passed = False
        self.details.append(msg)

    def expect(self, ok: bool, msg: str) -> None:
        if not ok:
            self.fail(msg)


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 20240501
    moment_samples: int = 500
    moment_catalog_samples: int = 2
    points_per_cone: int = 200
    fm_systems: int = 60
    fm_points: int = 40


@lru_cache(maxsize=None)
def _cone(id_: str):
    e = catalog.get(id_)
    return build_cone(e.bracket, e.expected_torus, id_)


def _diff(got: StrictSystem, want: StrictSystem) -> str:
    return f"got [{got.to_text()}], expected [{want.to_text()}]"


# -- 1 ------------------------------------------------------------------------

DIM5_IDS = ("n1", "n2", "n3", "n5", "n6", "n7", "n8")


def check_dim5(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult(1, "dimension-5 cones")
    for id_ in DIM5_IDS:
        t = time.perf_counter()
        spec = _cone(id_)
        dt = time.perf_counter() - t
        want = catalog.get(id_).expected_cone
        res.expect(systems_equal(spec.system, want), f"{id_}: {_diff(spec.system, want)}")
        res.expect(dt < 1.0, f"{id_}: took {dt:.2f} s")
    return res


# -- 2 ------------------------------------------------------------------------

def _vertex_set(rows) -> set:
    return {tuple(as_rational(x) for x in v) for v in rows}


def _fmt_vertices(vs) -> str:
    return " ".join("(" + ", ".join(format_rational(x) for x in v) + ")" for v in sorted(vs))


def trace_slice(id_: str, level=1):
    spec = _cone(id_)
    return slice_vertices(spec.system, spec.torus.trace_form(), level)


def check_n6_slice(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult(2, "n6 slice at trace 1")
    want = load_expected()["slices"]["n6"]
    poly = trace_slice("n6", as_rational(want["level"]))
    got = set(poly.vertices)
    exp = _vertex_set(want["vertices"])
    res.expect(got == exp, f"vertices {_fmt_vertices(got)} != {_fmt_vertices(exp)}")
    res.expect(poly.facet_count == want["facet_count"],
               f"{poly.facet_count} facets, expected {want['facet_count']}")
    return res


# -- 3 ------------------------------------------------------------------------

def check_heisenberg(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult(3, "Heisenberg algebras")
    for n in (1, 2, 3):
        t = time.perf_counter()
        spec = _cone(f"heisenberg({n})")
        dt = time.perf_counter() - t
        closed = catalog.heisenberg_closed_form(n)
        res.expect(systems_equal(spec.system, closed), f"n={n}: {_diff(spec.system, closed)}")
        if n == 3:
            res.expect(dt < 10.0, f"n=3 pipeline took {dt:.2f} s")
    for n in range(1, 7):
        count = len(catalog.heisenberg_closed_form(n).forms)
        res.expect(count == 3 ** n, f"closed form n={n} has {count} forms, expected {3 ** n}")

    slices = load_expected()["slices"]
    printed_h7 = catalog.published_cone("heisenberg(3)")
    res.expect(systems_equal(_cone("heisenberg(3)").system, printed_h7),
               "printed h7 inequalities differ from the pipeline")
    for id_, cone_id in (("n4", "heisenberg(2)"), ("heisenberg(3)", "heisenberg(3)")):
        want = slices[id_]
        poly = slice_vertices(_cone(cone_id).system, want["normal"], as_rational(want["level"]))
        if "vertices" in want:
            exp = _vertex_set(want["vertices"])
            res.expect(set(poly.vertices) == exp,
                       f"{id_} slice: {_fmt_vertices(poly.vertices)} != {_fmt_vertices(exp)}")
        res.expect(len(poly.vertices) == want["vertex_count"],
                   f"{id_} slice: {len(poly.vertices)} vertices, expected {want['vertex_count']}")
        res.expect(poly.facet_count == want["facet_count"],
                   f"{id_} slice: {poly.facet_count} facets, expected {want['facet_count']}")
    return res


# -- 4 ------------------------------------------------------------------------

def check_filiform(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult(4, "standard filiform algebras")
    for n in range(4, 11):
        spec = _cone(f"filiform({n})")
        closed = catalog.filiform_closed_form(n)
        res.expect(systems_equal(spec.system, closed), f"n={n}: {_diff(spec.system, closed)}")
    l5, n1 = _cone("filiform(5)").system, _cone("n1").system
    res.expect(systems_equal(l5, n1), f"L5 vs n1: {_diff(l5, n1)}")
    return res


# -- 5 ------------------------------------------------------------------------

# h3 in the coordinates used for n7 (Diag(d1, d2, d1 + d2)) instead of the
# Heisenberg family's Diag(d1, d2 - d1, d2); an explicit change of torus.
H3_AS_N7 = TorusParam(3, 2, ((1, 0), (0, 1), (1, 1)), ("d1", "d2"))


def check_products(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult(5, "abelian product law")
    h3 = build_cone(catalog.get("heisenberg(1)").bracket, H3_AS_N7, "heisenberg(1)")
    for target, base, extra in (("n7", h3, 2), ("n8", _cone("filiform(4)"), 1)):
        got = _cone(target).system
        prod = product_cone(base, extra).system
        res.expect(systems_equal(got, prod), f"{target} vs {base.algebra_id} x R^{extra}: {_diff(got, prod)}")
    return res


# -- 6 ------------------------------------------------------------------------

def _rand_q(rng: random.Random, lo=-4, hi=4, den=3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def random_bracket(rng: random.Random, max_dim: int = 5) -> LieBracket:
    """A random nonzero skew bracket (Jacobi not imposed)."""
    while True:
        n = rng.randint(2, max_dim)
        triples = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for k in range(1, n + 1):
                    if rng.random() < 0.3:
                        triples.append((i, j, k, _rand_q(rng)))
        mu = LieBracket.from_triples(n, triples)
        if not mu.is_zero():
            return mu


def random_signed_permutation(rng: random.Random, n: int) -> list:
    perm = list(range(n))
    rng.shuffle(perm)
    return [[rng.choice((1, -1)) if perm[i] == j else 0 for j in range(n)] for i in range(n)]


def check_moment(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult(6, "moment map properties")
    rng = random.Random(cfg.seed)
    for s in range(cfg.moment_samples):
        mu = random_bracket(rng)
        m = moment_map(mu)
        res.expect(m.trace() == -1, f"sample {s}: trace {m.trace()}")
        c = _rand_q(rng, 1, 5)
        res.expect(moment_map(mu.scaled(c)) == m, f"sample {s}: not scale invariant")
        g = random_signed_permutation(rng, mu.dim)
        res.expect(moment_map(transform(mu, g)) == m.conjugate(g),
                   f"sample {s}: not equivariant under a signed permutation")
    for id_ in catalog.ids():
        base = catalog.get(id_).bracket
        for _ in range(cfg.moment_catalog_samples):
            mu = LieBracket.from_triples(base.dim, [(i, j, k, Fraction(rng.randint(1, 9), rng.randint(1, 4)))
                                                    for i, j, k, _c in base.triples()])
            res.expect(moment_map_nice(mu) == moment_map(mu), f"{id_}: nice formula differs")
    return res


# -- 7 ------------------------------------------------------------------------

def interior_points(spec, count: int, rng: random.Random) -> list:
    """Strictly positive combinations of every vertex of the trace-1 slice."""
    poly = slice_vertices(spec.system, spec.torus.trace_form(), 1)
    pts = []
    for _ in range(count):
        w = [Fraction(rng.randint(1, 20), rng.randint(1, 5)) for _ in poly.vertices]
        scale = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        pts.append(tuple(scale * sum((wi * v[q] for wi, v in zip(w, poly.vertices)), Fraction(0))
                         for q in range(spec.system.nvars)))
    return pts


def check_necessary(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult(7, "necessary condition on cone points")
    rng = random.Random(cfg.seed + 7)
    for id_ in catalog.ids():
        e = catalog.get(id_)
        spec = _cone(id_)
        for p in interior_points(spec, cfg.points_per_cone, rng):
            if not contains(spec.system, p):
                res.fail(f"{id_}: sample {p} is not interior")
                break
            if not necessary_condition(e.bracket, e.expected_torus, p):
                res.fail(f"{id_}: necessary condition fails at {p}")
                break
    n1 = catalog.get("n1")
    p = (-1, 2)
    res.expect(n1.expected_torus.diag(p) == (-1, 2, 1, 0, -1), "n1 torus does not give Diag(-1,2,1,0,-1)")
    res.expect(not cone_membership(n1.bracket, p, n1.expected_torus), "Diag(-1,2,1,0,-1) accepted by the cone")
    res.expect(not necessary_condition(n1.bracket, n1.expected_torus, p),
               "Diag(-1,2,1,0,-1) passes the necessary condition")
    return res


# -- 8 ------------------------------------------------------------------------

def interval_feasible(forms, fixed, var: int) -> bool:
    """Is there x_var making every form positive, the other coordinates fixed?"""
    lo, hi = None, None
    for f in forms:
        r = sum((Fraction(c) * x for q, (c, x) in enumerate(zip(f, fixed)) if q != var), Fraction(0))
        c = f[var]
        if c == 0:
            if r <= 0:
                return False
        elif c > 0:
            b = -r / c
            lo = b if lo is None else max(lo, b)
        else:
            b = -r / c
            hi = b if hi is None else min(hi, b)
    return lo is None or hi is None or lo < hi


def random_system(rng: random.Random, nvars: int = 3) -> StrictSystem:
    k = rng.randint(2, 7)
    forms = [tuple(rng.randint(-3, 3) for _ in range(nvars)) for _ in range(k)]
    forms = [f for f in forms if any(f)] or [(1,) + (0,) * (nvars - 1)]
    return StrictSystem(nvars, tuple(forms))


def check_polyhedra(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult(8, "polyhedra kernel")
    for id_ in catalog.ids():
        e = catalog.get(id_)
        spec = _cone(id_)
        systems = [spec.system]
        if e.expected_cone is not None:
            systems.append(e.expected_cone)
        if id_.startswith("heisenberg"):
            systems.append(catalog.heisenberg_closed_form(int(id_[11:-1])))
        for S in systems:
            res.expect(systems_equal(minimize(S), S), f"{id_}: minimize changed the solution set")
        relaxed = build_cone_relaxed(e.bracket, e.expected_torus)
        res.expect(systems_equal(relaxed, spec.system), f"{id_}: relaxed build differs")
    rng = random.Random(cfg.seed + 8)
    for s in range(cfg.fm_systems):
        S = random_system(rng)
        var = rng.randrange(3)
        pure, pruned = fm_eliminate(S, var), project(S, [var])
        for _ in range(cfg.fm_points):
            x = tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(3))
            truth = interval_feasible(S.forms, x, var)
            rest = x[:var] + x[var + 1:]
            for name, P in (("pure", pure), ("pruned", pruned)):
                if contains(P, rest) != truth:
                    res.fail(f"system {s} [{S.to_text()}], x{var + 1} eliminated ({name}): "
                             f"disagrees with the interval oracle at {x}")
                    break
    return res


CHECKS: tuple[Callable[[VerifyConfig], CheckResult], ...] = (
    check_dim5, check_n6_slice, check_heisenberg, check_filiform,
    check_products, check_moment, check_necessary, check_polyhedra,
)


def run_check(fn, cfg: VerifyConfig) -> CheckResult:
    t = time.perf_counter()
    try:
        res = fn(cfg)
    except Exception as exc:  # report, never crash the table
        res = CheckResult(CHECKS.index(fn) + 1, fn.__name__)
        res.fail(f"raised {type(exc).__name__}: {exc}")
    res.seconds = time.perf_counter() - t
    return res


def run_all(cfg: VerifyConfig | None = None) -> list:
    cfg = cfg or VerifyConfig()
    return [run_check(fn, cfg) for fn in CHECKS]


def format_table(results) -> str:
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"[{status}] {r.criterion}. {r.title} ({r.seconds:.2f} s)")
        lines.extend(f"       {d}" for d in r.details)
    ok = sum(r.passed for r in results)
    lines.append(f"{ok}/{len(results)} criteria passed")
    return "\n".join(lines) + "\n"
