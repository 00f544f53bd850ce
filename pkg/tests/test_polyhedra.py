import random
from fractions import Fraction
from itertools import product as cartesian

import pytest
from hypothesis import given, strategies as st

from nilcone import catalog, lp
from nilcone.errors import InfeasibleInput, TooManyVars, Unbounded, UsageError
from nilcone.exact import dot
from nilcone.polyhedra import (MixedSystem, StrictSystem, contains, fm_eliminate, implies,
                               in_conic_hull, is_feasible, is_feasible_mixed, minimize, product,
                               project, project_mixed, slice_vertices, systems_equal)
from nilcone.verify import interval_feasible, random_system
from strategies import nonzero_int_vector


def S(*forms, names=None):
    return StrictSystem.of(forms, names)


# -- independent oracles -------------------------------------------------------

def gordan_feasible(forms, nvars):
    """Strict feasibility via Gordan: infeasible iff some nonzero
    nonnegative combination of the forms vanishes."""
    m = len(forms)
    A = [[f[r] for f in forms] for r in range(nvars)] + [[1] * m]
    return not lp.feasible(A, [0] * nvars + [1], m)


def recession_direction(forms, normal, nvars):
    """Is there x != 0 with forms(x) >= 0 and normal.x = 0?  Searched as
    sigma * x_j >= 1 for each coordinate and sign, x split as u - v."""
    m = len(forms)
    for j, sigma in cartesian(range(nvars), (1, -1)):
        # columns: u (n), v (n), slacks for forms (m), slack t
        ncols = 2 * nvars + m + 1
        rows, rhs = [], []
        for q, f in enumerate(forms):
            row = list(f) + [-c for c in f] + [0] * (m + 1)
            row[2 * nvars + q] = -1
            rows.append(row)
            rhs.append(0)
        rows.append(list(normal) + [-c for c in normal] + [0] * (m + 1))
        rhs.append(0)
        row = [0] * ncols
        row[j], row[nvars + j], row[-1] = sigma, -sigma, -1
        rows.append(row)
        rhs.append(1)
        if lp.feasible(rows, rhs, ncols):
            return True
    return False


# -- canonical form and printing ----------------------------------------------

def test_canonicalization_and_text():
    s = S((6, 4), (3, 1), (3, 2), names=("d1", "d2"))
    assert s.forms == ((3, 1), (3, 2))
    assert s.to_text() == "3*d1 + d2 > 0; 3*d1 + 2*d2 > 0"
    assert S((0, -1), (2, 0), names=("x", "y")).to_text() == "-y > 0; x > 0"


def test_zero_form_collapses_to_marker():
    s = S((1, 0), (0, 0))
    assert s.is_marked_infeasible and s.forms == ((0, 0),)


def test_json_round_trip():
    s = S((3, 1), (3, 2), names=("d1", "d2"))
    assert s.to_dict() == {"vars": ["d1", "d2"], "forms": [[3, 1], [3, 2]]}
    assert StrictSystem.from_dict(s.to_dict()) == s


# -- Fourier-Motzkin -----------------------------------------------------------

def test_single_pairing():
    # variables (a, x, y): a - x > 0, y - a > 0
    assert fm_eliminate(S((1, -1, 0), (-1, 0, 1)), 0).forms == ((-1, 1),)


def test_contradiction_gives_marker():
    assert fm_eliminate(S((1,), (-1,)), 0).is_marked_infeasible


def test_n1_elimination_chain():
    from nilcone.cone import defining_rows
    from nilcone.lie import weights_of
    e = catalog.get("n1")
    a_pos, diag_pos, trace = defining_rows(weights_of(e.bracket), e.expected_torus)
    full = StrictSystem(5, tuple(a_pos + diag_pos + [trace]), ("a", "b", "c", "d1", "d2"))
    after_c = fm_eliminate(full, 2)
    assert (0, -1, 5, 2) in after_c.forms  # 5 d1 + 2 d2 > b
    after_b = fm_eliminate(after_c, 1)
    assert is_feasible(after_b)


@given(st.integers(0, 10 ** 6))
def test_projection_matches_interval_oracle(seed):
    rng = random.Random(seed)
    s = random_system(rng)
    var = rng.randrange(3)
    pure, pruned = fm_eliminate(s, var), project(s, [var])
    for _ in range(15):
        x = tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(3))
        rest = x[:var] + x[var + 1:]
        truth = interval_feasible(s.forms, x, var)
        assert contains(pure, rest) == truth
        assert contains(pruned, rest) == truth


@given(st.integers(0, 10 ** 6))
def test_feasibility_matches_gordan(seed):
    s = random_system(random.Random(seed))
    assert is_feasible(s) == gordan_feasible(s.forms, 3)


def test_mixed_projection_keeps_closed_rows():
    # a >= 0, x - a > 0  ->  x > 0 ;   a > 0, x - a >= 0 -> x > 0
    M = MixedSystem(2, ((-1, 1),), ((1, 0),))
    assert project_mixed(M, [0]).strict == ((1,),)
    M = MixedSystem(2, ((1, 0),), ((-1, 1),))
    assert project_mixed(M, [0]).strict == ((1,),)
    # a >= 0, -a >= 0, x > 0 is feasible
    assert is_feasible_mixed(MixedSystem(2, ((0, 1),), ((1, 0), (-1, 0))))


# -- feasibility, minimization, membership -----------------------------------

def test_feasibility_examples():
    assert is_feasible(S((1,)))
    assert not is_feasible(S((1,), (-1,)))
    n1 = catalog.get("n1").expected_cone
    assert is_feasible(n1) and contains(n1, (1, 0))


def test_minimize_examples():
    assert minimize(S((1, 0), (0, 1), (1, 1))).forms == ((0, 1), (1, 0))
    with pytest.raises(InfeasibleInput):
        minimize(S((1,), (-1,)))


def test_h5_closed_form_minimizes_to_eight():
    h5 = catalog.heisenberg_closed_form(2)
    assert len(h5.forms) == 9
    small = minimize(h5)
    assert len(small.forms) == 8
    assert (0, 0, 1) not in small.forms  # (d1 + d3) + (-d1 + 2 d3) = 3 d3
    assert systems_equal(small, catalog.published_cone("n4"))


def test_filiform6_raw_system():
    from nilcone.cone import defining_rows
    from nilcone.lie import weights_of
    e = catalog.get("filiform(6)")
    w = weights_of(e.bracket)
    a_pos, diag_pos, trace = defining_rows(w, e.expected_torus)
    raw = StrictSystem(len(w) + 2, tuple(a_pos + diag_pos + [trace]))
    projected = project(raw, list(range(len(w) - 1, -1, -1)))
    assert minimize(projected).forms == ((2, 1), (4, 1))


def test_contains_examples():
    n1 = catalog.get("n1").expected_cone
    assert not contains(n1, (-1, 3))
    assert not contains(n1, (0, 0))
    with pytest.raises(UsageError):
        contains(n1, (1, 0, 0))


def test_trace_is_implied_for_n1():
    n1 = catalog.get("n1").expected_cone
    trace = catalog.get("n1").expected_torus.trace_form()
    assert trace == (7, 4)
    # 7 d1 + 4 d2 = 2/3 (3 d1 + d2) + 5/3 (3 d1 + 2 d2)
    assert tuple(Fraction(2, 3) * a + Fraction(5, 3) * b for a, b in zip((3, 1), (3, 2))) == trace
    assert implies(n1, trace)
    assert not implies(n1, (1, 0))


def test_systems_equal_examples():
    assert systems_equal(S((1, 0), (0, 1)), S((2, 0), (0, 3), (1, 1)))
    assert not systems_equal(S((1, 0)), S((0, 1)))
    with pytest.raises(InfeasibleInput):
        systems_equal(S((1,), (-1,)), S((1,)))


def test_product():
    assert product(S((1,)), S((1,))).forms == ((0, 1), (1, 0))


@given(st.lists(nonzero_int_vector(3), min_size=1, max_size=5), st.lists(st.integers(1, 7), min_size=5, max_size=5))
def test_rescaling_and_duplication_keep_the_set(forms, scales):
    s = StrictSystem(3, tuple(forms))
    if not is_feasible(s):
        return
    scaled = StrictSystem(3, tuple(tuple(k * x for x in f) for f, k in zip(forms, scales)) + tuple(forms))
    assert systems_equal(s, scaled)
    m = minimize(s)
    assert systems_equal(s, m)
    for i, f in enumerate(m.forms):
        assert not in_conic_hull(m.forms[:i] + m.forms[i + 1:], f)


# -- slices -----------------------------------------------------------------

def test_n6_trace_slice():
    spec_sys = catalog.get("n6").expected_cone
    trace = catalog.get("n6").expected_torus.trace_form()
    poly = slice_vertices(spec_sys, trace, 1)
    half, third = Fraction(1, 2), Fraction(1, 3)
    assert set(poly.vertices) == {(0, half, 0), (0, 0, half), (1, -half, -half),
                                  (-third, 2 * third, third), (-third, third, 2 * third)}
    assert poly.facet_count == 5


def test_slice_errors():
    with pytest.raises(Unbounded):
        slice_vertices(S((1, 0)), (0, 1), 1)
    with pytest.raises(InfeasibleInput):
        slice_vertices(S((1, 0), (0, 1)), (1, 1), -1)
    with pytest.raises(TooManyVars):
        slice_vertices(StrictSystem(5, tuple(tuple(int(i == j) for j in range(5)) for i in range(5))),
                       (1,) * 5, 1)


@given(st.integers(0, 10 ** 6))
def test_random_slices(seed):
    rng = random.Random(seed)
    s = random_system(rng)
    normal = tuple(rng.randint(-2, 2) for _ in range(3))
    if not is_feasible(s) or not any(normal):
        return
    unbounded = recession_direction(minimize(s).forms, normal, 3)
    try:
        poly = slice_vertices(s, normal, 1)
    except Unbounded:
        assert unbounded
        return
    except InfeasibleInput:
        assert not unbounded
        return
    assert not unbounded
    for v in poly.vertices:
        assert dot(normal, v) == 1
        assert all(dot(f, v) >= 0 for f in s.forms)
    for a in poly.vertices:
        for b in poly.vertices:
            mid = tuple((x + y) / 2 for x, y in zip(a, b))
            if all(dot(f, mid) > 0 for f in s.forms):
                assert contains(s, mid)
    for f, tight in zip(poly.facets, poly.incidence):
        assert len(tight) >= 2 and all(dot(f, poly.vertices[i]) == 0 for i in tight)


@given(st.lists(nonzero_int_vector(3), max_size=4))
def test_orthant_slices_are_bounded(extra):
    s = StrictSystem(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1)) + tuple(extra))
    if not is_feasible(s):
        return
    assert not recession_direction(minimize(s).forms, (1, 1, 1), 3)
    poly = slice_vertices(s, (1, 1, 1), 1)
    m = minimize(s)
    assert poly.facet_count == len(m.forms)
    for v in poly.vertices:
        assert sum(v) == 1 and all(dot(f, v) >= 0 for f in m.forms)
    # every vertex sits on at least two facets of the polygon
    for i in range(len(poly.vertices)):
        assert sum(i in tight for tight in poly.incidence) >= 2
