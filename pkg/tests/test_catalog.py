import pytest

from nilcone import catalog
from nilcone.cone import build_cone
from nilcone.errors import BadParameter, UnknownId
from nilcone.polyhedra import StrictSystem, minimize, systems_equal


def test_aliases():
    assert catalog.get("h5").bracket == catalog.get("n4").bracket
    assert catalog.get("L5").bracket == catalog.get("n1").bracket
    assert catalog.get("filiform(5)").bracket == catalog.get("n1").bracket
    assert list(catalog.get("heisenberg(1)").bracket.triples()) == [(1, 2, 3, 1)]


def test_errors():
    with pytest.raises(UnknownId):
        catalog.get("n9")
    with pytest.raises(BadParameter):
        catalog.get("filiform(2)")
    with pytest.raises(BadParameter):
        catalog.get("h4")
    with pytest.raises(BadParameter):
        catalog.filiform_closed_form(3)


def test_heisenberg_closed_form_small():
    assert catalog.heisenberg_closed_form(1).forms == tuple(sorted([(0, 1), (1, 1), (-1, 2)]))
    assert len(catalog.heisenberg_closed_form(4).forms) == 81


@pytest.mark.parametrize("n", range(1, 7))
def test_heisenberg_closed_form_count(n):
    assert len(catalog.heisenberg_closed_form(n).forms) == 3 ** n


@pytest.mark.parametrize("n", [1, 2, 3])
def test_heisenberg_minimal_count(n):
    # d_{n+1} > 0 is the one redundant form: (d_{n+1} + d_1) + (2 d_{n+1} - d_1)
    assert len(minimize(catalog.heisenberg_closed_form(n)).forms) == 3 ** n - 1


@pytest.mark.parametrize("n, forms", [
    (4, ((1, 1), (2, 1))),
    (5, ((3, 1), (3, 2))),
    (10, ((4, 1), (8, 1))),
])
def test_filiform_closed_form(n, forms):
    assert catalog.filiform_closed_form(n).forms == forms


def test_filiform4_matches_n8_prefix():
    n8 = catalog.get("n8").expected_cone.forms
    assert {f[:2] for f in n8 if f[2] == 0} == set(catalog.filiform_closed_form(4).forms)


@pytest.mark.parametrize("n", range(4, 11))
def test_filiform_pipeline(n):
    e = catalog.get(f"filiform({n})")
    assert systems_equal(build_cone(e.bracket, e.expected_torus).system, e.expected_cone)


def test_published_h7_system_is_minimal():
    printed = catalog.published_cone("heisenberg(3)")
    assert len(printed.forms) == 26
    assert minimize(printed) == printed
    assert systems_equal(printed, catalog.heisenberg_closed_form(3))


def test_ids_are_all_loadable():
    for i in catalog.ids():
        e = catalog.get(i)
        assert isinstance(e.expected_cone, StrictSystem)
