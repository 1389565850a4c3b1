"""
Command-line front end.

    acs6 validate   [FILE]          report on a {"matrix": ...} input
    acs6 convert    [FILE] --format matrix|form|cp3|chart
    acs6 nijenhuis  [FILE] --algebra su2xsu2|abelian|PATH [--sweep ...]
    acs6 scan-edge  --psi-steps N --phi-steps M
    acs6 catalog

FILE defaults to stdin. Exit codes: 0 ok, 1 validation rejected,
2 malformed input, 3 structure outside the affine chart.
"""
from __future__ import annotations

import argparse
import csv
import io as _io
import re
import sys
from itertools import product

import numpy as np

from . import io
from .acs_core import DEFAULT_TOL, validate
from .angle_param import TWO_PI, AngleParams, acs_matrices, corollary2_matrix
from .cp3_chart import chart_from_acs, chart_point_from_acs, edge01_from_sphere
from .errors import InvalidAlgebra, NotCompatible, OutsideChart
from .lie_geometry import (
    BUILTIN_ALGEBRAS,
    INTEGRABLE_TOL,
    calabi_eckmann_catalog,
    load_algebra,
    nijenhuis_norm,
    nijenhuis_norms,
    su2xsu2,
)
from .linalg6 import PAIRS, pfaffian

EXIT_OK, EXIT_REJECTED, EXIT_MALFORMED, EXIT_OUTSIDE_CHART = 0, 1, 2, 3

_ANGLE_RE = re.compile(r"^\s*([+-]?(?:\d+(?:\.\d*)?|\.\d+)?)\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$")


class CliError(Exception):
    def __init__(self, code: int, kind: str, message: str):
        super().__init__(message)
        self.code, self.kind, self.message = code, kind, message


def angle(text: str) -> float:
    """Float, or a multiple of pi such as ``pi/2``, ``-pi``, ``3*pi/4``."""
    m = _ANGLE_RE.match(text)
    if m is None:
        return float(text)
    coef = m.group(1)
    k = -1.0 if coef == "-" else 1.0 if coef in ("", "+") else float(coef)
    return k * np.pi / (float(m.group(2)) if m.group(2) else 1.0)


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(EXIT_MALFORMED, "MalformedInput", str(exc)) from exc


def _load_structure(path: str, args):
    obj = io.parse(_read(path))
    return io.structure_from_json(obj, strict_corollary2=args.strict_corollary2, tol=args.tol)


def cmd_validate(args, out) -> int:
    obj = io.parse(_read(args.input))
    if io.detect_format(obj) != "matrix":
        raise io.MalformedInput("validate takes a {\"matrix\": ...} object")
    report = validate(io.matrix_from_json(obj), args.tol)
    out.write(io.dumps(report.to_dict()) + "\n")
    return EXIT_OK if report.accepted else EXIT_REJECTED


def cmd_convert(args, out) -> int:
    j = _load_structure(args.input, args)
    target = args.format
    if target == "matrix":
        result = io.acs_to_json(j)
    elif target == "form":
        result = io.form_to_json(io.TwoForm.from_matrix(j.m))
    elif target in ("cp3", "chart") and j.orientation < 0:
        raise CliError(EXIT_REJECTED, "NotInZ", "structure has negative orientation and is not a point of CP^3")
    elif target == "cp3":
        result = io.point_to_json(chart_point_from_acs(j))
    elif target == "chart":
        result = io.chart_to_json(chart_from_acs(j))
    else:
        raise io.MalformedInput("the angle parametrization has no inverse; choose matrix, form, cp3 or chart")
    out.write(io.dumps(result) + "\n")
    return EXIT_OK


def _algebra(name: str):
    if name in BUILTIN_ALGEBRAS:
        return BUILTIN_ALGEBRAS[name]()
    return load_algebra(name)


def _sweep_angles(args) -> list[AngleParams]:
    if args.random is not None:
        if args.random < 1:
            raise io.MalformedInput("--random needs a positive sample count")
        rng = np.random.default_rng(args.seed)
        return [
            AngleParams(*rng.uniform(-np.pi / 2, np.pi / 2, 3), *rng.uniform(0.0, TWO_PI, 3))
            for _ in range(args.random)
        ]
    if args.steps < 1:
        raise io.MalformedInput("--steps must be at least 1")
    half = np.linspace(-np.pi / 2, np.pi / 2, args.steps) if args.steps > 1 else np.array([np.pi / 2])
    torus = np.linspace(0.0, TWO_PI, args.steps, endpoint=False)
    return [AngleParams(*t) for t in product(half, half, half, torus, torus, torus)]


def cmd_nijenhuis(args, out) -> int:
    g = _algebra(args.algebra)
    if args.sweep:
        params = _sweep_angles(args)
        if args.strict_corollary2:
            mats = np.stack([corollary2_matrix(p, strict=True).m for p in params])
        else:
            mats = acs_matrices([p.as_tuple() for p in params])
        norms = nijenhuis_norms(g, mats)
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["phi", "psi", "theta", "phi1", "phi2", "phi3", "norm"])
        for p, n in zip(params, norms):
            w.writerow([_fmt(v) for v in p.as_tuple()] + [_fmt(n)])
        return EXIT_OK
    if args.input is None:
        raise io.MalformedInput("a structure is required unless --sweep is given")
    j = _load_structure(args.input, args)
    report = nijenhuis_norm(g, j, args.integrable_tol)
    result = report.to_dict()
    result["algebra"] = g.name
    out.write(io.dumps(result) + "\n")
    return EXIT_OK


def cmd_scan_edge(args, out) -> int:
    if args.psi_steps < 1 or args.phi_steps < 1:
        raise io.MalformedInput("step counts must be at least 1")
    lo_psi, hi_psi = args.psi_range
    lo_phi, hi_phi = args.phi_range
    eps = 1e-12
    if not (-np.pi / 2 - eps <= lo_psi <= hi_psi <= np.pi / 2 + eps):
        raise io.MalformedInput("psi range must lie in [-pi/2, pi/2]")
    if not (-eps <= lo_phi <= hi_phi <= TWO_PI + eps):
        raise io.MalformedInput("phi range must lie in [0, 2 pi]")
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["psi", "phi"] + [f"w{i}{j}" for i, j in PAIRS] + ["pfaffian"])
    for psi in np.linspace(lo_psi, hi_psi, args.psi_steps):
        for phi in np.linspace(lo_phi, hi_phi, args.phi_steps):
            form = edge01_from_sphere(psi, phi)
            w.writerow([_fmt(psi), _fmt(phi)] + [_fmt(c) for c in form.coeff] + [_fmt(pfaffian(form))])
    return EXIT_OK


def cmd_catalog(args, out) -> int:
    g = su2xsu2()
    entries = []
    for e in calabi_eckmann_catalog():
        report = nijenhuis_norm(g, e.acs(), args.integrable_tol)
        entries.append({
            "edge": e.label,
            "sign": e.sign,
            "form": io.form_to_json(e.form)["form"],
            "nijenhuis_norm": report.norm,
            "integrable": report.integrable,
        })
    out.write(io.dumps({"algebra": g.name, "entries": entries}) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="acs6", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, structure=True):
        p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="validation tolerance")
        if structure:
            p.add_argument("--strict-corollary2", action="store_true",
                           help="build angle inputs from the closed-form entry table verbatim")

    p = sub.add_parser("validate", help="check a matrix for J^2 = -1, orthogonality, skewness, orientation")
    p.add_argument("input", nargs="?", default="-")
    common(p, structure=False)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("convert", help="re-express a structure in another format")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--format", "--to", dest="format", required=True,
                   choices=["matrix", "form", "cp3", "chart", "angles"])
    common(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("nijenhuis", help="Nijenhuis norm on a 6-dimensional Lie algebra")
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--algebra", default="su2xsu2", help="builtin name (su2xsu2, abelian) or JSON path")
    p.add_argument("--integrable-tol", type=float, default=INTEGRABLE_TOL)
    p.add_argument("--sweep", action="store_true", help="evaluate over an angle grid, CSV output")
    p.add_argument("--steps", type=int, default=3, help="grid points per angle for --sweep")
    p.add_argument("--random", type=int, default=None, help="random angle samples instead of a grid")
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_nijenhuis)

    p = sub.add_parser("scan-edge", help="grid over the edge E01 in sphere coordinates, CSV output")
    p.add_argument("--psi-steps", type=int, default=5)
    p.add_argument("--phi-steps", type=int, default=8)
    p.add_argument("--psi-range", type=angle, nargs=2, default=(-np.pi / 2, np.pi / 2), metavar=("MIN", "MAX"))
    p.add_argument("--phi-range", type=angle, nargs=2, default=(0.0, TWO_PI), metavar=("MIN", "MAX"))
    p.set_defaults(func=cmd_scan_edge)

    p = sub.add_parser("catalog", help="integrable catalog structures on su(2)+su(2)")
    p.add_argument("--integrable-tol", type=float, default=INTEGRABLE_TOL)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None, stdout=None) -> int:
    out = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    buf = _io.StringIO()
    try:
        code = args.func(args, buf)
    except OutsideChart as exc:
        code, buf = EXIT_OUTSIDE_CHART, _io.StringIO(io.dumps({"error": "OutsideChart", "message": str(exc)}) + "\n")
    except NotCompatible as exc:
        code, buf = EXIT_REJECTED, _io.StringIO(io.dumps({"error": "NotCompatible", "message": str(exc)}) + "\n")
    except (io.MalformedInput, InvalidAlgebra, ValueError) as exc:
        kind = type(exc).__name__ if isinstance(exc, (io.MalformedInput, InvalidAlgebra)) else "MalformedInput"
        code, buf = EXIT_MALFORMED, _io.StringIO(io.dumps({"error": kind, "message": str(exc)}) + "\n")
    except CliError as exc:
        code, buf = exc.code, _io.StringIO(io.dumps({"error": exc.kind, "message": exc.message}) + "\n")
    out.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
