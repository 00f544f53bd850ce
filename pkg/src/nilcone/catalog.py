"""Built-in algebras: the dimension-5 table, Heisenberg and standard filiform
families, with their published tori and cones, plus the closed-form cone
generators for the two families."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .errors import BadParameter, UnknownId
from .lie import (LieBracket, TorusParam, check_jacobi, diagonal_derivation_space,
                  is_nice_basis, is_nilpotent)
from .io import load_expected
from .polyhedra import StrictSystem


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    bracket: LieBracket
    expected_torus: TorusParam
    expected_cone: StrictSystem | None = None
    note: str = ""


def _bracket(dim, pairs):
    return LieBracket.from_triples(dim, [(i, j, k, 1) for i, j, k in pairs])


def _torus(rows, names):
    return TorusParam(len(rows), len(names), tuple(tuple(r) for r in rows), tuple(names))


# dimension 5: brackets and diagonal torus (rows are basis vectors); the
# published cones live in data/expected.json
_DIM5 = {
    "n1": ([(1, 2, 3), (1, 3, 4), (1, 4, 5)],
           [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1]], ("d1", "d2")),
    "n2": ([(1, 2, 3), (1, 3, 4), (1, 4, 5), (2, 3, 5)],
           [[1], [2], [3], [4], [5]], ("d1",)),
    # tori of n3 and n5 are not printed with their cones; these are forced by the bracket
    "n3": ([(1, 2, 4), (2, 3, 5), (1, 4, 5)],
           [[1, 0], [0, 1], [2, 0], [1, 1], [2, 1]], ("d1", "d2")),
    "n5": ([(1, 2, 3), (1, 3, 4), (2, 3, 5)],
           [[1, 0], [0, 1], [1, 1], [2, 1], [1, 2]], ("d1", "d2")),
    "n6": ([(1, 2, 4), (1, 3, 5)],
           [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1]], ("d1", "d2", "d3")),
    # n7 and n8: free center directions keep their own index as the parameter name
    "n7": ([(1, 2, 3)],
           [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
           ("d1", "d2", "d4", "d5")),
    "n8": ([(1, 2, 3), (1, 3, 4)],
           [[1, 0, 0], [0, 1, 0], [1, 1, 0], [2, 1, 0], [0, 0, 1]], ("d1", "d2", "d5")),
}

STANDARD_IDS = ("n1", "n2", "n3", "n4", "n5", "n6", "n7", "n8",
                "heisenberg(1)", "heisenberg(2)", "heisenberg(3)",
                "filiform(4)", "filiform(5)", "filiform(6)", "filiform(7)",
                "filiform(8)", "filiform(9)", "filiform(10)")


def heisenberg_bracket(n: int) -> LieBracket:
    if n < 1:
        raise BadParameter("Heisenberg algebras need n >= 1")
    top = 2 * n + 1
    return _bracket(top, [(2 * i - 1, 2 * i, top) for i in range(1, n + 1)])


def heisenberg_torus(n: int) -> TorusParam:
    """D = Diag(d1, d_{n+1} - d1, ..., dn, d_{n+1} - dn, d_{n+1})."""
    top = 2 * n + 1
    rows = [[0] * (n + 1) for _ in range(top)]
    for i in range(n):
        rows[2 * i][i] = 1
        rows[2 * i + 1][i] = -1
        rows[2 * i + 1][n] = 1
    rows[top - 1][n] = 1
    return _torus(rows, tuple(f"d{q + 1}" for q in range(n + 1)))


def filiform_bracket(n: int) -> LieBracket:
    if n < 3:
        raise BadParameter("filiform algebras need n >= 3")
    return _bracket(n, [(1, i, i + 1) for i in range(2, n)])


def filiform_torus(n: int) -> TorusParam:
    """D = Diag(d1, d2, d1 + d2, 2 d1 + d2, ..., (n-2) d1 + d2)."""
    rows = [[1, 0], [0, 1]] + [[i, 1] for i in range(1, n - 1)]
    return _torus(rows, ("d1", "d2"))


def heisenberg_closed_form(n: int) -> StrictSystem:
    """All 3^n forms (l+1) d_{n+1} +- d_{i1} +- ... +- d_{ik} with l minus signs."""
    if n < 1:
        raise BadParameter("Heisenberg closed form needs n >= 1")
    forms = []
    for k in range(n + 1):
        for subset in combinations(range(n), k):
            for signs in product((1, -1), repeat=k):
                f = [0] * (n + 1)
                for idx, s in zip(subset, signs):
                    f[idx] = s
                f[n] = signs.count(-1) + 1
                forms.append(tuple(f))
    return StrictSystem(n + 1, tuple(forms), heisenberg_torus(n).names)


def filiform_closed_form(n: int) -> StrictSystem:
    """(n-2) d1 + d2 > 0 and (n-1)(n-2)/2 d1 + (n-1) d2 > 0, primitive."""
    if n < 4:
        raise BadParameter("filiform closed form needs n >= 4")
    forms = ((n - 2, 1), ((n - 1) * (n - 2) // 2, n - 1))
    return StrictSystem(2, forms, ("d1", "d2"))


def published_cone(id_: str) -> StrictSystem:
    return StrictSystem.from_dict(load_expected()["cones"][id_])


_FAMILY = re.compile(r"^(heisenberg|filiform)\((-?\d+)\)$")
_SHORT = re.compile(r"^(h|L)(-?\d+)$")


def _entry(id_: str) -> CatalogEntry:
    if id_ in _DIM5:
        pairs, rows, names = _DIM5[id_]
        return CatalogEntry(id_, _bracket(5, pairs), _torus(rows, names), published_cone(id_))
    if id_ == "n4":
        return CatalogEntry("n4", heisenberg_bracket(2), heisenberg_torus(2), published_cone("n4"),
                            "the 5-dimensional Heisenberg algebra")
    m = _FAMILY.match(id_)
    if m is None:
        s = _SHORT.match(id_)
        if s is None:
            raise UnknownId(f"unknown algebra id {id_!r}")
        num = int(s.group(2))
        if s.group(1) == "h":
            if num < 3 or num % 2 == 0:
                raise BadParameter("Heisenberg dimension must be odd and >= 3")
            return _entry(f"heisenberg({(num - 1) // 2})")
        return _entry(f"filiform({num})")
    family, num = m.group(1), int(m.group(2))
    if family == "heisenberg":
        return CatalogEntry(id_, heisenberg_bracket(num), heisenberg_torus(num), heisenberg_closed_form(num))
    bracket = filiform_bracket(num)
    cone = filiform_closed_form(num) if num >= 4 else None
    return CatalogEntry(id_, bracket, filiform_torus(num), cone)


@lru_cache(maxsize=None)
def get(id_: str) -> CatalogEntry:
    """Look up an entry; checks bracket, nilpotency, niceness and torus."""
    e = _entry(id_.strip())
    check_jacobi(e.bracket)
    if not (is_nilpotent(e.bracket) and is_nice_basis(e.bracket)):
        raise AssertionError(f"catalog entry {id_} is not a nice nilpotent bracket")
    if not e.expected_torus.same_space(diagonal_derivation_space(e.bracket)):
        raise AssertionError(f"catalog torus of {id_} does not match its diagonal derivations")
    return e


def ids() -> tuple:
    return STANDARD_IDS
