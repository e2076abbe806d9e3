"""Command-line front end.

Exit codes: 0 all checks passed, 1 a check failed (output still written),
2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from .constants import SobolevIndex, embedding_constant, gn_constant, young_factor
from .extremizer import ExtremizerSpec, extremizer_grid, gaussian, random_band_limited
from .gridio import save_grid
from .quadrature import lorentzian_mass
from .spectral import GridSpec, default_points, norms
from .verifier import (
    DEFAULT_BOX,
    EXACT_SHARPNESS_TOL,
    GRID_SHARPNESS_TOL,
    INEQUALITY_TOL,
    YOUNG_TOL,
    check_all,
    check_young,
    lambda_sweep,
    sharpness_ratio,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

SWEEP_GAP_TOL = 1e-3
QUADRATURE_TOL = 1e-8

REPORT_COLUMNS = [
    "function", "seed", "inequality_id", "lhs", "rhs", "ratio", "constant_used",
    "tolerance", "passed", "degenerate", "equality_expected",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _num(x: float) -> str:
    return format(x, ".17g")


def _index(args) -> SobolevIndex:
    try:
        return SobolevIndex(args.n, args.s)
    except ValueError as exc:
        raise UsageError(f"{exc} (the inequalities need s > n/2)") from None


def _grid(args) -> GridSpec:
    if args.n not in (1, 2, 3):
        raise UsageError(f"grid commands support n in {{1, 2, 3}}, got n={args.n}")
    try:
        return GridSpec(args.n, args.N or default_points(args.n), args.L)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _dump_json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _header(args, idx: SobolevIndex) -> dict:
    return {"library_version": __version__, "command": args.command, "n": idx.n, "s": idx.s}


def _build_function(kind: str, g: GridSpec, idx: SobolevIndex, seed: int):
    if kind == "gaussian":
        return gaussian(g, 0.5)
    if kind == "extremizer":
        return extremizer_grid(ExtremizerSpec(idx), g)
    return random_band_limited(g, seed)


def cmd_constant(args) -> int:
    idx = _index(args)
    value = {"gn": gn_constant, "embedding": embedding_constant, "young": young_factor}[args.kind](idx)
    print(f"{value:#.15g}")
    return EXIT_OK


def cmd_table(args) -> int:
    pairs = []
    for n in args.n:
        for s in args.s:
            try:
                pairs.append(SobolevIndex(n, s))
            except ValueError as exc:
                if not args.skip_invalid:
                    raise UsageError(f"{exc} (the inequalities need s > n/2; see --skip-invalid)") from None
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "s", "K_gn", "C_embedding", "young_factor"])
    for idx in pairs:
        writer.writerow([idx.n, _num(idx.s), _num(gn_constant(idx)),
                         _num(embedding_constant(idx)), _num(young_factor(idx))])
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    idx = _index(args)
    g = _grid(args)
    if args.seeds < 1:
        raise UsageError("--seeds must be at least 1")
    seeds = list(range(args.seed, args.seed + args.seeds)) if args.function == "random" else [args.seed]
    rows = []
    for seed in seeds:
        u = _build_function(args.function, g, idx, seed)
        if args.export_dir:
            save_grid(u, Path(args.export_dir) / f"{args.function}_{seed}.grid")
        reports = check_all(u, idx, args.tol)
        b = norms(u, idx.s)
        if b.l2 > 0.0 and b.hs_semi > 0.0:
            reports.append(check_young(b.l2, b.hs_semi, idx, args.young_tol))
        for rep in reports:
            rows.append({"function": args.function, "seed": seed, **rep.to_dict()})
    all_passed = all(r["passed"] for r in rows)
    if args.format == "json":
        doc = _header(args, idx)
        doc.update({
            "function": args.function,
            "grid": {"n": g.n, "N": g.N, "L": g.L},
            "all_passed": all_passed,
            "reports": rows,
        })
        text = _dump_json(doc)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "s", "N", "L", *REPORT_COLUMNS])
        for r in rows:
            cells = [r[c] for c in REPORT_COLUMNS]
            cells = [_num(c) if isinstance(c, float) else c for c in cells]
            writer.writerow([idx.n, _num(idx.s), g.N, _num(g.L), *cells])
        text = buf.getvalue()
    _emit(text, args.out)
    return EXIT_OK if all_passed else EXIT_FAILED


def cmd_sharpness(args) -> int:
    idx = _index(args)
    if args.method == "grid":
        g = _grid(args)
        ratio = sharpness_ratio(idx, "grid", g.N, g.L)
        ok = 1.0 - GRID_SHARPNESS_TOL <= ratio <= 1.0 + INEQUALITY_TOL
    else:
        ratio = sharpness_ratio(idx, "exact")
        ok = abs(ratio - 1.0) <= EXACT_SHARPNESS_TOL
    print(f"{ratio:#.10g}")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_sweep(args) -> int:
    idx = _index(args)
    g = _grid(args)
    if args.points < 16:
        raise UsageError("--points must be at least 16")
    u = _build_function(args.function, g, idx, args.seed)
    result = lambda_sweep(u, idx, args.points)
    doc = _header(args, idx)
    doc.update({"function": args.function, "seed": args.seed,
                "grid": {"n": g.n, "N": g.N, "L": g.L}})
    doc.update(result.to_dict())
    ok = (not result.degenerate) and result.brackets and abs(result.min_relative_gap) <= SWEEP_GAP_TOL
    doc["passed"] = ok
    _emit(_dump_json(doc), args.out)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_quadrature(args) -> int:
    idx = _index(args)
    mass = lorentzian_mass(idx)
    ok = mass.relative_error <= QUADRATURE_TOL
    doc = _header(args, idx)
    doc.update({
        "quadrature": mass.quadrature,
        "closed_form": mass.closed_form,
        "relative_error": mass.relative_error,
        "tolerance": QUADRATURE_TOL,
        "passed": ok,
    })
    _emit(_dump_json(doc), args.out)
    return EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="supnorm", description="Sharp supnorm constants in H^s(R^n) and their verification.")
    parser.add_argument("--version", action="version", version=f"supnorm {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def index_args(p):
        p.add_argument("--n", type=int, required=True, help="spatial dimension")
        p.add_argument("--s", type=float, required=True, help="regularity order, s > n/2")

    def grid_args(p):
        p.add_argument("--N", type=int, default=None, help="points per axis (power of two)")
        p.add_argument("--L", type=float, default=DEFAULT_BOX, help="box side length")

    p = sub.add_parser("constant", help="print one sharp constant")
    index_args(p)
    p.add_argument("--kind", choices=["gn", "embedding", "young"], default="gn")
    p.set_defaults(func=cmd_constant)

    p = sub.add_parser("table", help="CSV table of constants")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--s", type=float, nargs="+", required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--skip-invalid", action="store_true", help="drop pairs with s <= n/2")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check the inequalities on grid functions")
    index_args(p)
    grid_args(p)
    p.add_argument("--function", choices=["gaussian", "extremizer", "random"], required=True)
    p.add_argument("--seeds", type=int, default=1, help="number of random functions")
    p.add_argument("--seed", type=int, default=0, help="first seed")
    p.add_argument("--tol", type=float, default=INEQUALITY_TOL)
    p.add_argument("--young-tol", type=float, default=YOUNG_TOL)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", default=None)
    p.add_argument("--export-dir", default=None, help="also save each function as a grid file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sharpness", help="interpolation ratio of the extremizer")
    index_args(p)
    grid_args(p)
    p.add_argument("--method", choices=["grid", "exact"], default="exact")
    p.set_defaults(func=cmd_sharpness)

    p = sub.add_parser("sweep-lambda", help="sample the dilation objective")
    index_args(p)
    grid_args(p)
    p.add_argument("--function", choices=["gaussian", "extremizer", "random"], required=True)
    p.add_argument("--points", type=int, default=512)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("quadrature-check", help="Lorentzian mass: quadrature vs closed form")
    index_args(p)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_quadrature)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"supnorm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
