from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nilcone import catalog
from nilcone.errors import IndexOutOfRange, JacobiViolation, NonCoordinateCenter, UsageError
from nilcone.lie import (LieBracket, TorusParam, center, check_jacobi, diagonal_derivation_space,
                         is_derivation, is_nice_basis, is_nilpotent, lower_central_series,
                         necessary_condition, transform, validate, weights_of)
from strategies import positive_rational


def test_jacobi_violation_is_located():
    with pytest.raises(JacobiViolation) as info:
        validate(3, [(1, 2, 3, 1), (2, 3, 1, 1), (1, 3, 3, 1)])
    assert info.value.triple == (1, 2, 3)
    assert any(info.value.residual)


def test_abelian_is_valid_nilpotent_and_has_full_torus():
    mu = validate(3, [])
    assert is_nilpotent(mu)
    t = diagonal_derivation_space(mu)
    assert t.rank == 3 and t.matrix == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert weights_of(mu) == []
    assert center(mu).indices == (1, 2, 3)


def test_bad_indices():
    with pytest.raises(IndexOutOfRange):
        LieBracket.from_triples(3, [(1, 4, 2, 1)])
    with pytest.raises(UsageError):
        LieBracket.from_triples(3, [(2, 2, 1, 1)])


def test_antisymmetry_folding():
    mu = LieBracket.from_triples(3, [(2, 1, 3, 1)])
    assert list(mu.triples()) == [(1, 2, 3, Fraction(-1))]


def test_solvable_not_nilpotent():
    assert not is_nilpotent(validate(2, [(1, 2, 2, 1)]))


def test_nice_basis_examples():
    assert not is_nice_basis(LieBracket.from_triples(4, [(1, 2, 3, 1), (1, 2, 4, 1)]))
    # two pairs sharing e1 hit the same target
    assert not is_nice_basis(LieBracket.from_triples(4, [(1, 2, 4, 1), (1, 3, 4, 1)]))
    assert is_nice_basis(catalog.get("n6").bracket)


def test_filiform_lower_central_series_lengths():
    series = lower_central_series(catalog.get("filiform(6)").bracket)
    assert [len(s) for s in series] == [6, 4, 3, 2, 1, 0]


@pytest.mark.parametrize("id_, names", [
    ("n1", ("d1", "d2")), ("n2", ("d1",)), ("n6", ("d1", "d2", "d3")),
    ("n7", ("d1", "d2", "d4", "d5")), ("n8", ("d1", "d2", "d5")), ("filiform(7)", ("d1", "d2")),
])
def test_canonical_torus_names(id_, names):
    assert diagonal_derivation_space(catalog.get(id_).bracket).names == names


@pytest.mark.parametrize("id_", catalog.ids())
def test_torus_columns_are_derivations(id_):
    e = catalog.get(id_)
    for col in e.expected_torus.columns():
        D = [[col[r] if r == s else 0 for s in range(len(col))] for r in range(len(col))]
        assert is_derivation(e.bracket, D)


def test_non_derivation_detected():
    mu = catalog.get("heisenberg(1)").bracket
    assert not is_derivation(mu, [[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    assert is_derivation(mu, [[0, 1, 0], [0, 0, 0], [0, 0, 0]])  # inner


def test_centers():
    assert center(catalog.get("n1").bracket).indices == (5,)
    assert center(catalog.get("n7").bracket).indices == (3, 4, 5)
    # e1 + e2 central, e1 and e2 not
    mu = LieBracket.from_triples(3, [(1, 3, 3, 1), (2, 3, 3, -1)])
    assert not center(mu).is_coordinate


def test_necessary_condition_examples():
    e = catalog.get("n1")
    assert not necessary_condition(e.bracket, e.expected_torus, (-1, 2))
    assert necessary_condition(e.bracket, e.expected_torus, (1, 0))
    assert not necessary_condition(e.bracket, e.expected_torus, (0, 0))
    mu = LieBracket.from_triples(3, [(1, 3, 3, 1), (2, 3, 3, -1)])
    with pytest.raises(NonCoordinateCenter):
        necessary_condition(mu, TorusParam(3, 1, ((1,), (1,), (0,))), (1,))


def test_torus_shape_checks():
    with pytest.raises(UsageError):
        TorusParam(2, 2, ((1, 1), (1, 1)))
    with pytest.raises(UsageError):
        TorusParam(2, 1, ((1,), (1,))).diag((1, 2))


@given(st.lists(positive_rational, min_size=3, max_size=3))
def test_rescaled_catalog_brackets_stay_lie_algebras(cs):
    base = catalog.get("n1").bracket
    mu = LieBracket.from_triples(5, [(i, j, k, c) for (i, j, k, _), c in zip(base.triples(), cs)])
    check_jacobi(mu)
    assert is_nilpotent(mu) and is_nice_basis(mu)


@given(st.permutations(range(5)))
def test_transform_by_permutation_preserves_jacobi(perm):
    g = [[1 if perm[i] == j else 0 for j in range(5)] for i in range(5)]
    mu = transform(catalog.get("n6").bracket, g)
    check_jacobi(mu)
    assert mu.norm_squared() == catalog.get("n6").bracket.norm_squared()
