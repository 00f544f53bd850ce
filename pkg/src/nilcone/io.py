"""Reading and writing algebras, systems, slices and matrices.

Rationals are always written as "p/q" strings (just "p" when q = 1).
"""
from __future__ import annotations

import csv
import io as _io
import json
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import UsageError
from .exact import as_rational, format_rational
from .lie import LieBracket, validate
from .moment import SymMatrix
from .polyhedra import SlicePolytope, StrictSystem


def algebra_from_dict(data: dict) -> LieBracket:
    try:
        dim = int(data["dim"])
        entries = data["brackets"]
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed algebra description: {exc}") from None
    triples = []
    for b in entries:
        i, j, k = int(b["i"]), int(b["j"]), int(b["k"])
        if i >= j:
            raise UsageError(f"bracket entries need i < j, got ({i}, {j})")
        c = b["c"]
        if isinstance(c, float):
            raise UsageError("coefficients must be integers or rational strings")
        triples.append((i, j, k, as_rational(c)))
    return validate(dim, triples)


def load_algebra(path) -> LieBracket:
    with open(path, encoding="utf-8") as fh:
        return algebra_from_dict(json.load(fh))


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def system_from_json(text: str) -> StrictSystem:
    return StrictSystem.from_dict(json.loads(text))


def vertex_rows(poly: SlicePolytope) -> list:
    return [[format_rational(x) for x in v] for v in poly.vertices]


def slice_to_dict(poly: SlicePolytope) -> dict:
    return {
        "vars": list(poly.var_names),
        "normal": [format_rational(a) for a in poly.normal],
        "level": format_rational(poly.level),
        "vertices": vertex_rows(poly),
        "facets": [list(f) for f in poly.facets],
        "incidence": [list(ix) for ix in poly.incidence],
    }


def slice_to_csv(poly: SlicePolytope) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(vertex_rows(poly))
    return buf.getvalue()


def read_vertex_csv(text: str) -> list:
    return [tuple(as_rational(x) for x in row) for row in csv.reader(_io.StringIO(text)) if row]


def matrix_to_dict(M: SymMatrix) -> dict:
    return {"dim": M.dim, "rows": [[format_rational(x) for x in r] for r in M.rows]}


def matrix_from_dict(data: dict) -> SymMatrix:
    return SymMatrix(int(data["dim"]), tuple(tuple(as_rational(x) for x in r) for r in data["rows"]))


def matrix_to_text(M: SymMatrix) -> str:
    cells = [[format_rational(x) for x in r] for r in M.rows]
    width = max((len(c) for r in cells for c in r), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells) + "\n"


@lru_cache(maxsize=None)
def load_expected() -> dict:
    """Published reference values shipped with the package."""
    text = resources.files("nilcone").joinpath("data/expected.json").read_text(encoding="utf-8")
    return json.loads(text)


def write_output(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        import sys
        sys.stdout.write(text)
