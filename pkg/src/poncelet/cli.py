"""Command-line front end: family generation, sweeps, claim verification, and
SVG rendering.

Exit codes: 0 pass/success, 1 claim failed, 2 usage/invalid input, 3 I/O
error, 4 inconclusive.  The environment variable PONCELET_TOL overrides the
headline claim tolerance of every verifier.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import experiments
from .centers import CenterIndex
from .experiments import (
    REFERENCE_CONFIG,
    config_corpus,
    sweep,
    verify_all,
)
from .family import (
    FamilyConfig,
    caustic_of,
    contains_equilateral,
    equilateral_lambda,
    stationary_x110_prediction,
    triangle_at,
)
from .geom import GeometryError, set_kernel_tolerance
from .render import render_family_svg

SCHEMA_VERSION = 1

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_INCONCLUSIVE = 4


class UsageError(ValueError):
    pass


def parse_complex(text: str) -> complex:
    """Parse 'a', 'a+bi', 'a-bi', 'bi', 'i' complex literals (j also accepted)."""
    s = text.strip().replace(" ", "").replace("i", "j")
    if s in ("j", "+j"):
        s = "1j"
    elif s == "-j":
        s = "-1j"
    try:
        value = complex(s)
    except ValueError:
        raise UsageError(f"cannot parse complex literal {text!r}") from None
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise UsageError(f"complex literal {text!r} is not finite")
    return value


def format_complex(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}i"


def parse_centers(text: str) -> list[CenterIndex]:
    names = [part for part in text.replace(";", ",").split(",") if part.strip()]
    if not names:
        raise UsageError("empty center list")
    try:
        return [CenterIndex.from_name(name) for name in names]
    except GeometryError as exc:
        raise UsageError(str(exc)) from None


def _config_from_args(args) -> FamilyConfig:
    try:
        return FamilyConfig(parse_complex(args.f), parse_complex(args.g))
    except GeometryError as exc:
        raise UsageError(str(exc)) from None


def _claim_tol() -> float | None:
    raw = os.environ.get("PONCELET_TOL")
    if raw is None:
        return None
    try:
        value = float(raw)
    except ValueError:
        raise UsageError(f"PONCELET_TOL is not a number: {raw!r}") from None
    if not (value > 0.0 and math.isfinite(value)):
        raise UsageError("PONCELET_TOL must be a positive number")
    return value


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        raise IOError(f"cannot write {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_family(args) -> int:
    cfg = _config_from_args(args)
    lam = parse_complex(args.lam) if args.lam else 1.0 + 0j
    if abs(lam) == 0:
        raise UsageError("lambda must be nonzero")
    lam /= abs(lam)
    tri = triangle_at(cfg, lam)
    caustic = caustic_of(cfg)
    equilateral = contains_equilateral(cfg)
    payload = {
        "schema": SCHEMA_VERSION,
        "f": format_complex(cfg.f),
        "g": format_complex(cfg.g),
        "lambda": format_complex(lam),
        "vertices": [format_complex(v) for v in tri.vertices],
        "caustic": {
            "center": format_complex(complex(caustic.center)),
            "semi_major": caustic.a,
            "semi_minor": caustic.b,
            "rotation": caustic.theta,
        },
        "contains_equilateral": equilateral,
    }
    if equilateral and abs(cfg.focus_product) > 1e-12:
        payload["equilateral_lambda"] = format_complex(equilateral_lambda(cfg))
        payload["stationary_x110"] = format_complex(stationary_x110_prediction(cfg))
    if args.json:
        _write_text(args.out, json.dumps(payload, indent=2) + "\n")
    else:
        lines = [
            f"family f={payload['f']} g={payload['g']} lambda={payload['lambda']}",
            "vertices: " + ", ".join(payload["vertices"]),
            (f"caustic: center={payload['caustic']['center']} "
             f"a={caustic.a:.12g} b={caustic.b:.12g} theta={caustic.theta:.12g}"),
            f"contains_equilateral: {equilateral}",
        ]
        if "equilateral_lambda" in payload:
            lines.append(f"equilateral_lambda: {payload['equilateral_lambda']}")
            lines.append(f"stationary_x110: {payload['stationary_x110']}")
        _write_text(args.out, "\n".join(lines) + "\n")
    return EXIT_PASS


def _sweep_rows(cfg: FamilyConfig, count: int, centers: list[CenterIndex]):
    result = sweep(cfg, count, set(centers))
    rows = []
    for s in result.samples:
        row: list[str] = [f"{s.phase:.17g}"]
        for v in s.triangle.vertices:
            row.extend((f"{v.real:.17g}", f"{v.imag:.17g}"))
        for idx in centers:
            value = s.centers.get(idx)
            if value is None:
                row.extend(("nan", "nan"))
            else:
                row.extend((f"{value.real:.17g}", f"{value.imag:.17g}"))
        row.append("|".join(sorted(s.flags)))
        rows.append(row)
    return rows


def cmd_sweep(args) -> int:
    cfg = _config_from_args(args)
    if args.n < 16:
        raise UsageError("sweep needs at least 16 samples")
    centers = parse_centers(args.centers)
    rows = _sweep_rows(cfg, args.n, centers)
    header = ["lambda_phase", "v1x", "v1y", "v2x", "v2y", "v3x", "v3y"]
    for idx in centers:
        header.extend((f"{idx.value}_x", f"{idx.value}_y"))
    header.append("flags")
    if args.format == "csv":
        text = "\n".join([",".join(header)] + [",".join(r) for r in rows]) + "\n"
    else:
        text = json.dumps({
            "schema": SCHEMA_VERSION,
            "f": format_complex(cfg.f),
            "g": format_complex(cfg.g),
            "columns": header,
            "rows": rows,
        }, indent=2) + "\n"
    _write_text(args.out, text)
    return EXIT_PASS


def _triangle_for_l35(args):
    """Reference member for the l35 verifiers: explicit --lambda wins, else a
    member phase drawn from --seed (skipping singular members)."""
    cfg = _config_from_args(args)
    if args.lam:
        lam = parse_complex(args.lam)
        return triangle_at(cfg, lam / abs(lam))
    rng = np.random.default_rng(args.seed)
    for _ in range(32):
        tri = triangle_at(cfg, complex(np.exp(1j * rng.uniform(0.0, 2.0 * math.pi))))
        if tri.side_spread() > 1e-3:
            return tri
    raise UsageError("could not draw a non-equilateral member; pass --lambda")


def cmd_verify(args) -> int:
    tol = _claim_tol()
    kwargs = {} if tol is None else {"tol": tol}
    pid = args.proposition
    if pid == "all":
        reports = verify_all(seed=args.seed, count=args.n, tol=tol)
    elif pid == "x110-stationary":
        reports = [experiments.verify_x110_stationary(_config_from_args(args), args.n, **kwargs)]
    elif pid == "x3233-circle":
        reports = [experiments.verify_x3233_circle(_config_from_args(args), args.n)]
    elif pid == "double-inv-1":
        k_point = parse_complex(args.k)
        a_eq = parse_complex(args.a_eq)
        reports = [experiments.verify_prop_double_inv(k_point, a_eq, args.m, **kwargs)]
    elif pid == "l35":
        t_ref = _triangle_for_l35(args)
        reports = [experiments.verify_prop_l35(
            t_ref, args.m, **({} if tol is None else {"dev_tol": tol}))]
    elif pid == "l35-vertex":
        t_ref = _triangle_for_l35(args)
        omega = (parse_complex(args.omega) if args.omega
                 else complex(_config_from_args(args).focus_sum) / 2.0)
        reports = [experiments.verify_prop_l35_vertex(t_ref, omega)]
    elif pid == "feuerbach":
        reports = [experiments.verify_feuerbach_stationary(_config_from_args(args), args.n, **kwargs)]
    elif pid == "x65-circle":
        reports = [experiments.verify_x65_circle(_config_from_args(args), args.n, **kwargs)]
    elif pid == "polar-equilateral":
        corpus = config_corpus(args.corpus // 2, args.corpus - args.corpus // 2, args.seed)
        reports = [experiments.verify_observation_polar_equilateral(corpus)]
    else:
        raise UsageError(f"unknown proposition id {args.proposition!r}")

    payload: dict | list
    if len(reports) == 1:
        payload = {"schema": SCHEMA_VERSION, **reports[0].to_dict()}
    else:
        payload = {"schema": SCHEMA_VERSION,
                   "reports": [r.to_dict() for r in reports]}
    _write_text(args.out, json.dumps(payload, indent=2) + "\n")
    for report in reports:
        print(f"{report.id}: {report.status}", file=sys.stderr)
    if any(not r.passed and not r.inconclusive for r in reports):
        return EXIT_FAIL
    if any(r.inconclusive for r in reports):
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


def cmd_render(args) -> int:
    cfg = _config_from_args(args)
    lam = parse_complex(args.lam) if args.lam else 1j
    if abs(lam) == 0:
        raise UsageError("lambda must be nonzero")
    _write_text(args.svg, render_family_svg(cfg, lam / abs(lam)))
    return EXIT_PASS


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _add_config_flags(parser, default_f="0.5", default_g=None) -> None:
    parser.add_argument("--f", default=default_f, help="first caustic focus, e.g. 0.2+0.6i")
    parser.add_argument("--g", default=default_g if default_g is not None
                        else format_complex(REFERENCE_CONFIG.g),
                        help="second caustic focus")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poncelet",
        description="Circle-inscribed Poncelet triangle families and their center loci.")
    parser.add_argument("--kernel-tol", type=float, default=None,
                        help="override the kernel degeneracy tolerance (default 1e-10)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_family = sub.add_parser("family", help="print one member and the family data")
    _add_config_flags(p_family)
    p_family.add_argument("--lambda", dest="lam", default=None,
                          help="unit-modulus member parameter (default 1)")
    p_family.add_argument("--json", action="store_true")
    p_family.add_argument("--out", default=None)
    p_family.set_defaults(fn=cmd_family)

    p_sweep = sub.add_parser("sweep", help="sample centers over the family")
    _add_config_flags(p_sweep)
    p_sweep.add_argument("--n", type=int, default=360)
    p_sweep.add_argument("--centers", default="X110",
                         help="comma-separated center names, e.g. X110,X3233")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--out", default=None)
    p_sweep.set_defaults(fn=cmd_sweep)

    p_verify = sub.add_parser("verify", help="run a claim verifier")
    p_verify.add_argument("proposition",
                          choices=("all", "x110-stationary", "x3233-circle",
                                   "double-inv-1", "l35", "l35-vertex",
                                   "feuerbach", "x65-circle", "polar-equilateral"))
    _add_config_flags(p_verify)
    p_verify.add_argument("--lambda", dest="lam", default=None,
                          help="member parameter picking the reference triangle (l35 ids)")
    p_verify.add_argument("--n", type=int, default=360, help="sweep sample count")
    p_verify.add_argument("--m", type=int, default=16, help="line sample count")
    p_verify.add_argument("--k", default="1", help="target circumcircle point (double-inv-1)")
    p_verify.add_argument("--a-eq", dest="a_eq", default="0.5+0.866025403784439i",
                          help="equilateral vertex on the circle (double-inv-1)")
    p_verify.add_argument("--omega", default=None, help="inconic center (l35-vertex)")
    p_verify.add_argument("--corpus", type=int, default=200,
                          help="corpus size (polar-equilateral)")
    p_verify.add_argument("--seed", type=int, default=7)
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(fn=cmd_verify)

    p_render = sub.add_parser("render", help="write an SVG figure")
    _add_config_flags(p_render)
    p_render.add_argument("--lambda", dest="lam", default=None,
                          help="member parameter (default i)")
    p_render.add_argument("--svg", required=True, help="output path")
    p_render.set_defaults(fn=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        if args.kernel_tol is not None:
            set_kernel_tolerance(args.kernel_tol)
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
