"""Moment map: the implementation pairs E.mu with mu for every symmetric E.
The oracle here is the explicit formula in terms of mu(X, e_i) and
mu(e_i, e_j), which differs from the normalised map by the factor
2 / |mu|^2."""
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nilcone import catalog
from nilcone.errors import NotNice, UsageError, ZeroBracket
from nilcone.lie import LieBracket, transform
from nilcone.moment import SymMatrix, derived_action, moment_map, moment_map_nice
from nilcone.verify import random_bracket, random_signed_permutation
from strategies import positive_rational


def explicit_formula(mu):
    n = mu.dim
    C = mu.tensor()  # C[i][j][k] = <mu(e_i, e_j), e_k>
    M = [[Fraction(0)] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            a = sum((C[x][i][j] * C[y][i][j] for i in range(n) for j in range(n)), Fraction(0))
            b = sum((C[i][j][x] * C[i][j][y] for i in range(n) for j in range(n)), Fraction(0))
            M[x][y] = -a / 2 + b / 4
    s = 2 / mu.norm_squared()
    return SymMatrix(n, tuple(tuple(s * v for v in row) for row in M))


def dense_pairing(mu, E):
    """<E.mu, mu> through the full dense derived action."""
    C = mu.tensor()
    A = derived_action(E, C)
    n = mu.dim
    return sum((A[i][j][k] * C[i][j][k] for i in range(n) for j in range(i + 1, n) for k in range(n)),
               Fraction(0))


bracket_seeds = st.integers(0, 10 ** 6)


def test_h3():
    assert moment_map(catalog.get("heisenberg(1)").bracket) == SymMatrix.diagonal_of([-1, -1, 1])


def test_h5():
    m = moment_map(catalog.get("n4").bracket)
    assert m == SymMatrix.diagonal_of([Fraction(-1, 2)] * 4 + [1])


def test_n1_nice_formula():
    assert moment_map_nice(catalog.get("n1").bracket).diagonal() == (
        -1, Fraction(-1, 3), 0, 0, Fraction(1, 3))


def test_errors():
    with pytest.raises(ZeroBracket):
        moment_map(LieBracket.from_triples(3, []))
    with pytest.raises(NotNice):
        moment_map_nice(LieBracket.from_triples(4, [(1, 2, 3, 1), (1, 2, 4, 1)]))
    with pytest.raises(UsageError):
        SymMatrix(2, ((1, 2), (3, 4)))


@given(bracket_seeds)
def test_matches_explicit_formula(seed):
    mu = random_bracket(random.Random(seed), 4)
    assert moment_map(mu) == explicit_formula(mu)


@given(bracket_seeds)
def test_sparse_pairing_matches_dense(seed):
    mu = random_bracket(random.Random(seed), 4)
    m = moment_map(mu)
    rng = random.Random(seed + 1)
    n = mu.dim
    E = [[0] * n for _ in range(n)]
    for r in range(n):
        for s in range(r, n):
            E[r][s] = E[s][r] = rng.randint(-3, 3)
    lhs = sum((m.rows[r][s] * E[r][s] for r in range(n) for s in range(n)), Fraction(0))
    assert lhs == dense_pairing(mu, E) / mu.norm_squared()


@given(bracket_seeds, positive_rational)
def test_trace_and_scale_invariance(seed, c):
    mu = random_bracket(random.Random(seed))
    m = moment_map(mu)
    assert m.trace() == -1
    assert moment_map(mu.scaled(c)) == m
    assert moment_map(mu.scaled(-c)) == m


@given(bracket_seeds)
def test_signed_permutation_equivariance(seed):
    rng = random.Random(seed)
    mu = random_bracket(rng)
    g = random_signed_permutation(rng, mu.dim)
    assert moment_map(transform(mu, g)) == moment_map(mu).conjugate(g)


@pytest.mark.parametrize("id_", [i for i in catalog.ids() if catalog.get(i).bracket.dim <= 7])
@given(data=st.data())
def test_nice_equals_general(id_, data):
    base = catalog.get(id_).bracket
    slots = list(base.triples())
    cs = data.draw(st.lists(positive_rational, min_size=len(slots), max_size=len(slots)))
    mu = LieBracket.from_triples(base.dim, [(i, j, k, c) for (i, j, k, _), c in zip(slots, cs)])
    m = moment_map(mu)
    assert m.is_diagonal()
    assert moment_map_nice(mu) == m
