"""Write plot data for the polytope slices: one CSV of vertices and one JSON
with facets and vertex incidence per slice.

    python scripts/export_slices.py --outdir slices/
"""
import argparse
from dataclasses import dataclass, field
from pathlib import Path

from nilcone import catalog
from nilcone.cone import build_cone
from nilcone.io import dump_json, slice_to_csv, slice_to_dict
from nilcone.polyhedra import slice_vertices


@dataclass(frozen=True)
class SliceJob:
    name: str
    algebra: str
    normal: tuple | None  # None means the trace form
    level: str = "1"


@dataclass(frozen=True)
class Config:
    outdir: Path = Path("slices")
    jobs: tuple = field(default=(
        SliceJob("n6_trace1", "n6", None),
        SliceJob("n1_trace1", "n1", None),
        SliceJob("h5_d3eq1", "heisenberg(2)", (0, 0, 1)),
        SliceJob("h7_d4eq1", "heisenberg(3)", (0, 0, 0, 1)),
        SliceJob("n7_trace1", "n7", None),
    ))


def run(cfg: Config) -> None:
    cfg.outdir.mkdir(parents=True, exist_ok=True)
    for job in cfg.jobs:
        e = catalog.get(job.algebra)
        spec = build_cone(e.bracket, e.expected_torus, job.algebra)
        normal = job.normal or spec.torus.trace_form()
        poly = slice_vertices(spec.system, normal, job.level)
        (cfg.outdir / f"{job.name}.csv").write_text(slice_to_csv(poly))
        (cfg.outdir / f"{job.name}.json").write_text(dump_json(slice_to_dict(poly)))
        print(f"{job.name}: {len(poly.vertices)} vertices, {poly.facet_count} facets")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--outdir", type=Path, default=Config.outdir)
    run(Config(outdir=ap.parse_args().outdir))
