"""Recompute every cone in the catalog, compare with the stored published
values and print the acceptance table.

    python scripts/reproduce_all.py [--seed N]
"""
import argparse
import sys
import time
from dataclasses import dataclass

from nilcone import catalog
from nilcone.cone import build_cone
from nilcone.polyhedra import systems_equal
from nilcone.verify import VerifyConfig, format_table, run_all


@dataclass(frozen=True)
class Config:
    seed: int = VerifyConfig.seed
    show_cones: bool = True


def main(cfg: Config) -> int:
    if cfg.show_cones:
        for id_ in catalog.ids():
            e = catalog.get(id_)
            t = time.perf_counter()
            spec = build_cone(e.bracket, e.expected_torus, id_)
            dt = time.perf_counter() - t
            match = "matches" if systems_equal(spec.system, e.expected_cone) else "DIFFERS"
            print(f"{id_:14} {len(spec.system.forms):3d} forms  {dt:6.2f} s  {match}")
            if len(spec.system.forms) <= 6:
                print(f"{'':14} {spec.system.to_text()}")
        print()
    results = run_all(VerifyConfig(seed=cfg.seed))
    print(format_table(results), end="")
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--quiet", action="store_true", help="only print the acceptance table")
    args = ap.parse_args()
    sys.exit(main(Config(seed=args.seed, show_cones=not args.quiet)))
