"""Command-line front end.

Commands: ``catalog list``, ``residual``, ``surface sample``, ``family``,
``identity``, ``geometry classify``.  Exit code 0 when all checks pass the
tolerance, 1 on a violation, 2 on usage errors.  Given the same arguments and
seed, output files are byte-identical across runs.
"""

from __future__ import annotations

import argparse
import math
import re
import sys

import numpy as np

from . import geometry, identities, pde, weierstrass
from .core import CentralDiff, with_backend
from .errors import SolitonLabError
from .family import (
    calibrate_offsets,
    catalog_whitham,
    conjugacy_check,
    associate_family,
    helicoid_catenoid_pair,
    soliton_family,
    whitham_constraint_defect,
    whitham_verify,
)
from .pde import GridSpec
from .reportio import csv_text, fmt, json_text, obj_mesh_text


class _Parser(argparse.ArgumentParser):
    def __init__(self, *a, **kw):
        super().__init__(*a, **kw)
        # accept grid specs and complex literals that start with a minus sign
        # (e.g. --grid -1:1:-1:1:21:21) as option values, not option names
        self._negative_number_matcher = re.compile(r"^-\d[\d.:eEjJ+-]*$")

    def error(self, message):
        # single-line machine-parsable usage error
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _write(path, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _cmd_catalog(args) -> int:
    lines = ["# pde solutions"]
    for e in pde.catalog():
        lines.append(f"{e.name}  [{e.equation.value}]  domain: {e.domain_note}")
    lines.append("# surfaces")
    lines.extend(weierstrass.SURFACE_NAMES)
    lines.append("# weierstrass data")
    lines.extend(weierstrass.SURFACE_NAMES)
    lines.append("# identities")
    lines.extend(sorted(identities.REGISTRY))
    lines.append("# conjugate pairs")
    lines.append("helicoid-catenoid")
    _write(args.out, "\n".join(lines) + "\n")
    return 0


def _cmd_residual(args) -> int:
    entry = pde.solution(args.solution, k=args.k, margin=args.margin)
    fld = entry.field
    if args.backend == "central":
        fld = with_backend(fld, CentralDiff(args.h))
    grid = GridSpec.parse(args.grid) if args.grid else pde.DEFAULT_GRIDS[args.solution]
    report = pde.residual_sweep(fld, entry.equation, grid, name=entry.name)
    _write(args.out, json_text(report.to_json_dict()))
    if report.max_abs > args.tolerance:
        print(f"FAIL max_abs={fmt(report.max_abs)} > tolerance={fmt(args.tolerance)}",
              file=sys.stderr)
        return 1
    return 0


def _cmd_surface(args) -> int:
    surf = weierstrass.catalog_surface(args.name)
    grid = GridSpec.parse(args.grid) if args.grid else GridSpec(-2.0, 2.0, -2.0, 2.0, 21, 21)
    pts = grid.points()
    values, excluded = [], []
    for (u, v) in pts:
        zeta = complex(u, v)
        if surf.excluded(zeta):
            values.append((math.nan,) * 3)
            excluded.append(True)
            continue
        p = surf.eval(zeta)
        values.append((p.x, p.y, p.z))
        excluded.append(False)
    kind = args.format or ("obj" if args.out and args.out.endswith(".obj") else "csv")
    if kind == "obj":
        text = obj_mesh_text(pts, values, excluded, grid.na, grid.nb)
    else:
        rows = [(u, v, *val) for (u, v), val, ex in zip(pts, values, excluded) if not ex]
        text = csv_text(("u", "v", "x", "y", "z"), rows)
    _write(args.out, text)
    return 0


def _cmd_geometry(args) -> int:
    if args.solution == "example1":
        fld = geometry.example1_graph()
    else:
        fld = pde.solution(args.solution, k=args.k, margin=args.margin).field
    grid = GridSpec.parse(args.grid) if args.grid else GridSpec(-2.0, 2.0, -2.0, 2.0, 21, 21)
    rows = geometry.classify_grid(fld, grid)
    _write(args.out, csv_text(("y", "z", "class", "H"), rows))
    return 0


def _cmd_family(args) -> int:
    if args.pair != "helicoid-catenoid":
        print(f"error: unknown pair {args.pair!r}", file=sys.stderr)
        return 2
    pair = helicoid_catenoid_pair()
    thetas = [float(t) for t in args.theta_list.split(",")]
    rng = np.random.default_rng(args.seed)
    # sample points in an annulus avoiding the puncture and the branch cut
    radii = rng.uniform(0.5, 2.0, args.num_points)
    angles = rng.uniform(-0.85 * math.pi, 0.85 * math.pi, args.num_points)
    zetas = [r * complex(math.cos(a), math.sin(a)) for r, a in zip(radii, angles)]
    out = []
    worst = 0.0
    for theta in thetas:
        surf = associate_family(pair, theta)
        iso = [geometry.isothermal_check(surf, z) for z in zetas]
        cr = [conjugacy_check(pair, z) for z in zetas]
        wp = calibrate_offsets(catalog_whitham(theta), pair)
        wh = [whitham_verify(wp, soliton_family(pair, theta, z)) for z in zetas]
        con = [whitham_constraint_defect(wp, z) for z in zetas]
        rec = {
            "theta": theta,
            "max_defects": {
                "conformal": max(d[0] for d in iso),
                "cross": max(d[1] for d in iso),
                "harmonic": max(d[2] for d in iso),
                "cauchy_riemann": max(cr),
            },
            "whitham_defects": {
                "d1": max(d[0] for d in wh),
                "d2": max(d[1] for d in wh),
                "d3": max(d[2] for d in wh),
                "constraint": max(con),
            },
        }
        worst = max(worst, *rec["max_defects"].values(),
                    *rec["whitham_defects"].values())
        out.append(rec)
    _write(args.out, json_text({"pair": args.pair, "seed": args.seed, "results": out}))
    if worst > args.tolerance:
        print(f"FAIL max defect={fmt(worst)} > tolerance={fmt(args.tolerance)}",
              file=sys.stderr)
        return 1
    return 0


def _cmd_identity(args) -> int:
    spec = identities.REGISTRY.get(args.name)
    if spec is None:
        print(f"error: unknown identity {args.name!r}", file=sys.stderr)
        return 2
    if args.name in ("ram_cos_product", "ram_arctan_sum"):
        if args.X is None or args.A is None:
            print("error: this identity needs --X and --A", file=sys.stderr)
            return 2
        ident_args = ((complex(args.X), complex(args.A))
                      if args.name == "ram_cos_product"
                      else (float(args.X), float(args.A)))
    else:
        if args.zeta is None:
            print("error: this identity needs --zeta", file=sys.stderr)
            return 2
        ident_args = (complex(args.zeta),)
    K_list = [int(k) for k in args.K.split(",")]
    results = identities.convergence_order(spec, ident_args, K_list)
    if args.name == "ram_arctan_sum" and args.tail_correction:
        results = [identities.ram_arctan_sum(*ident_args, K=r.K, tail_correction=True)
                   for r in results]
    table = [{
        "K": r.K,
        "partial_re": r.partial.real,
        "partial_im": r.partial.imag,
        "lhs": [r.lhs.real, r.lhs.imag],
        "abs_err": r.abs_err,
        "est_order": r.est_order,
    } for r in results]
    _write(args.out, json_text({"name": args.name, "table": table}))
    return 0


def build_parser() -> _Parser:
    p = _Parser(prog="solitonlab",
                description="Born-Infeld solitons and maximal surfaces: "
                            "residual sweeps, surface export, family and "
                            "identity verification")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", parents=[], description="list catalog content")
    csub = c.add_subparsers(dest="subcommand", required=True)
    cl = csub.add_parser("list")
    cl.add_argument("--out", default=None)
    cl.set_defaults(fn=_cmd_catalog)

    r = sub.add_parser("residual", description="residual sweep of a catalog solution")
    r.add_argument("--solution", required=True, choices=pde.catalog_names())
    r.add_argument("--grid", default=None,
                   help="a_min:a_max:b_min:b_max:na:nb (default: per solution)")
    r.add_argument("--backend", choices=("exact", "central"), default="exact")
    r.add_argument("--h", type=float, default=1e-4, help="central-difference step")
    r.add_argument("--k", type=float, default=1.0, help="helicoid family parameter")
    r.add_argument("--margin", type=float, default=pde.DEFAULT_MARGIN)
    r.add_argument("--tolerance", type=float, default=1e-6)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--out", default=None)
    r.set_defaults(fn=_cmd_residual)

    s = sub.add_parser("surface", description="sample catalog surfaces")
    ssub = s.add_subparsers(dest="subcommand", required=True)
    sp = ssub.add_parser("sample")
    sp.add_argument("--name", required=True, choices=weierstrass.SURFACE_NAMES)
    sp.add_argument("--grid", default=None)
    sp.add_argument("--format", choices=("csv", "obj"), default=None)
    sp.add_argument("--out", default=None)
    sp.set_defaults(fn=_cmd_surface)

    g = sub.add_parser("geometry", description="causal classification sweeps")
    gsub = g.add_subparsers(dest="subcommand", required=True)
    gc = gsub.add_parser("classify")
    gc.add_argument("--solution", default="example1")
    gc.add_argument("--grid", default=None)
    gc.add_argument("--k", type=float, default=1.0)
    gc.add_argument("--margin", type=float, default=pde.DEFAULT_MARGIN)
    gc.add_argument("--out", default=None)
    gc.set_defaults(fn=_cmd_geometry)

    f = sub.add_parser("family", description="associate family and Whitham checks")
    f.add_argument("--pair", default="helicoid-catenoid")
    f.add_argument("--theta-list", default="0,0.5235987755982988,0.7853981633974483,"
                                           "1.0471975511965976,1.5707963267948966")
    f.add_argument("--num-points", type=int, default=20)
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--tolerance", type=float, default=1e-6)
    f.add_argument("--out", default=None)
    f.set_defaults(fn=_cmd_family)

    i = sub.add_parser("identity", description="identity convergence tables")
    i.add_argument("--name", required=True)
    i.add_argument("--X", default=None)
    i.add_argument("--A", default=None)
    i.add_argument("--zeta", default=None)
    i.add_argument("--K", default="100,1000,10000", help="comma-separated K list")
    i.add_argument("--tail-correction", action="store_true")
    i.add_argument("--out", default=None)
    i.set_defaults(fn=_cmd_identity)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except SolitonLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
