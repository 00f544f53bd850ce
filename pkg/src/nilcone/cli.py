"""Command-line front end.

    nilcone catalog [ID]
    nilcone cone ALGEBRA
    nilcone slice ALGEBRA --trace T
    nilcone moment-map ALGEBRA
    nilcone check ALGEBRA --derivation p1,p2,...
    nilcone verify

ALGEBRA is a catalog id (n1, h5, heisenberg(3), filiform(7), ...) or a path to
an algebra JSON file.  Exit status: 0 success, 1 domain error or failed
verification, 2 usage error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog
from .cone import build_cone, cone_membership
from .errors import (BadParameter, IndexOutOfRange, NilconeError, UnknownId, UsageError)
from .exact import as_rational, format_rational
from .io import (dump_json, load_algebra, matrix_to_dict, matrix_to_text, slice_to_csv,
                 slice_to_dict, write_output)
from .lie import center, necessary_condition
from .moment import moment_map
from .polyhedra import slice_vertices
from .verify import VerifyConfig, format_table, run_all

USAGE_ERRORS = (UsageError, UnknownId, BadParameter, IndexOutOfRange)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error [usage]: {message}\n")
        raise SystemExit(2)


def resolve(source: str):
    """(id, bracket, torus or None) for a catalog id or an algebra file."""
    path = Path(source)
    if source.endswith(".json") or path.is_file():
        if not path.is_file():
            raise UsageError(f"no such algebra file: {source}")
        return path.stem, load_algebra(path), None
    e = catalog.get(source)
    return e.id, e.bracket, e.expected_torus


def _rationals(text: str) -> list:
    try:
        return [as_rational(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError, TypeError):
        raise UsageError(f"cannot read rational list {text!r}") from None


def _check_format(args, allowed):
    if args.format not in allowed:
        raise UsageError(f"{args.command} supports --format {'|'.join(allowed)}")


def cmd_catalog(args) -> str:
    if args.id:
        _check_format(args, ("json", "text"))
        e = catalog.get(args.id)
        return dump_json(e.bracket.to_dict())
    entries = [(i, catalog.get(i).bracket.dim) for i in catalog.ids()]
    if args.format == "json":
        return dump_json([{"id": i, "dim": d} for i, d in entries])
    if args.format == "csv":
        return "".join(f"{i},{d}\n" for i, d in entries)
    width = max(len(i) for i, _ in entries)
    return "".join(f"{i.ljust(width)}  dim {d}\n" for i, d in entries)


def cmd_cone(args) -> str:
    _check_format(args, ("text", "json"))
    id_, mu, torus = resolve(args.algebra)
    spec = build_cone(mu, torus, id_)
    if args.format == "json":
        return dump_json(spec.to_dict())
    return spec.system.to_text() + "\n"


def cmd_slice(args) -> str:
    id_, mu, torus = resolve(args.algebra)
    try:
        level = as_rational(args.trace)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot read trace value {args.trace!r}") from None
    spec = build_cone(mu, torus, id_)
    poly = slice_vertices(spec.system, spec.torus.trace_form(), level)
    if args.format == "csv":
        return slice_to_csv(poly)
    if args.format == "json":
        return dump_json(slice_to_dict(poly))
    lines = ["vertices (" + ", ".join(poly.var_names) + "):"]
    lines += ["  (" + ", ".join(format_rational(x) for x in v) + ")" for v in poly.vertices]
    lines.append(f"facets: {poly.facet_count}")
    return "\n".join(lines) + "\n"


def cmd_moment(args) -> str:
    _check_format(args, ("text", "json"))
    _, mu, _ = resolve(args.algebra)
    M = moment_map(mu)
    return dump_json(matrix_to_dict(M)) if args.format == "json" else matrix_to_text(M)


def cmd_check(args) -> str:
    _check_format(args, ("text", "json"))
    id_, mu, torus = resolve(args.algebra)
    spec = build_cone(mu, torus, id_)
    p = _rationals(args.derivation)
    if len(p) != spec.torus.rank:
        raise UsageError(f"--derivation needs {spec.torus.rank} values ({', '.join(spec.torus.names)})")
    in_cone = cone_membership(mu, p, spec.torus)
    necessary = necessary_condition(mu, spec.torus, p) if center(mu).is_coordinate else None
    diag = [format_rational(x) for x in spec.torus.diag(p)]
    if args.format == "json":
        return dump_json({"derivation": diag, "in_cone": in_cone, "necessary_condition": necessary})
    nec = "n/a" if necessary is None else str(necessary).lower()
    return (f"D = Diag({', '.join(diag)})\n"
            f"in_cone: {str(in_cone).lower()}\n"
            f"necessary_condition: {nec}\n")


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "csv"), default="text")
    fmt.add_argument("--out", help="write output here instead of stdout")

    parser = _Parser(prog="nilcone", description="Exact cones of diagonal derivations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("catalog", parents=[fmt], help="list built-in algebras or export one")
    p.add_argument("id", nargs="?")
    for name, helptext in (("cone", "minimal inequalities of the cone"),
                           ("moment-map", "exact moment map"),
                           ("slice", "vertices of a trace slice"),
                           ("check", "membership of a derivation")):
        p = sub.add_parser(name, parents=[fmt], help=helptext)
        p.add_argument("algebra")
        if name == "slice":
            p.add_argument("--trace", required=True)
        if name == "check":
            p.add_argument("--derivation", required=True)
    p = sub.add_parser("verify", parents=[fmt], help="run every golden check")
    p.add_argument("--seed", type=int, default=None)
    return parser


COMMANDS = {"catalog": cmd_catalog, "cone": cmd_cone, "slice": cmd_slice,
            "moment-map": cmd_moment, "check": cmd_check}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            cfg = VerifyConfig() if args.seed is None else VerifyConfig(seed=args.seed)
            results = run_all(cfg)
            if args.format == "json":
                text = dump_json([{"criterion": r.criterion, "title": r.title, "passed": r.passed,
                                   "details": r.details} for r in results])
            else:
                text = format_table(results)
            write_output(text, args.out)
            return 0 if all(r.passed for r in results) else 1
        write_output(COMMANDS[args.command](args), args.out)
        return 0
    except USAGE_ERRORS as exc:
        sys.stderr.write(f"error [{type(exc).__name__}]: {exc}\n")
        return 2
    except NilconeError as exc:
        sys.stderr.write(f"error [{type(exc).__name__}]: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
