"""JSON wire formats for structures, forms, points, chart coordinates and angles."""
from __future__ import annotations

import json

import numpy as np

from .acs_core import Acs, acs_from_form
from .angle_param import AngleParams, acs_from_angles, corollary2_matrix
from .cp3_chart import ChartCoords, ProjPoint, acs_from_chart, acs_from_point
from .linalg6 import PAIRS, TwoForm

FORMAT_KEYS = ("matrix", "form", "cp3", "chart", "angles")
ANGLE_NAMES = ("phi", "psi", "theta", "phi1", "phi2", "phi3")


class MalformedInput(ValueError):
    pass


def dumps(obj) -> str:
    # repr floats are shortest round-trip; sorted keys keep output byte-stable
    return json.dumps(obj, sort_keys=True, indent=2)


def _pair(z: complex) -> list[float]:
    z = complex(z)
    return [float(z.real) + 0.0, float(z.imag) + 0.0]


def _complex(v) -> complex:
    if not (isinstance(v, (list, tuple)) and len(v) == 2):
        raise MalformedInput(f"complex numbers are [re, im] pairs, got {v!r}")
    return complex(float(v[0]), float(v[1]))


def acs_to_json(j: Acs) -> dict:
    return {"matrix": [[float(x) for x in row] for row in j.m]}


def form_to_json(w: TwoForm) -> dict:
    return {"form": {f"{i}{j}": float(c) for (i, j), c in zip(PAIRS, w.coeff)}}


def point_to_json(p: ProjPoint) -> dict:
    return {"cp3": [_pair(z) for z in p.z]}


def chart_to_json(c: ChartCoords) -> dict:
    return {"chart": {"a": _pair(c.a), "b": _pair(c.b), "c": _pair(c.c)}}


def angles_to_json(p: AngleParams) -> dict:
    return {"angles": p.to_dict()}


def matrix_from_json(obj) -> np.ndarray:
    m = np.array(obj["matrix"], dtype=float)
    if m.shape != (6, 6):
        raise MalformedInput(f"matrix must be 6x6, got shape {m.shape}")
    return m


def form_from_json(obj) -> TwoForm:
    d = obj["form"]
    if not isinstance(d, dict):
        raise MalformedInput("form must be an object keyed by 'ij'")
    keys = {f"{i}{j}" for i, j in PAIRS}
    unknown = set(d) - keys
    if unknown:
        raise MalformedInput(f"unknown form keys {sorted(unknown)}")
    return TwoForm([float(d.get(f"{i}{j}", 0.0)) for i, j in PAIRS])


def point_from_json(obj) -> ProjPoint:
    z = obj["cp3"]
    if not (isinstance(z, list) and len(z) == 4):
        raise MalformedInput("cp3 takes four [re, im] pairs")
    return ProjPoint([_complex(v) for v in z])


def chart_from_json(obj) -> ChartCoords:
    d = obj["chart"]
    return ChartCoords(_complex(d["a"]), _complex(d["b"]), _complex(d["c"]))


def angles_from_json(obj) -> AngleParams:
    d = obj["angles"]
    return AngleParams(*(float(d[k]) for k in ANGLE_NAMES))


def detect_format(obj) -> str:
    if not isinstance(obj, dict):
        raise MalformedInput("input must be a JSON object")
    found = [k for k in FORMAT_KEYS if k in obj]
    if len(found) != 1:
        raise MalformedInput(f"expected exactly one of {FORMAT_KEYS}, found {found}")
    return found[0]


def parse(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from exc


def structure_from_json(obj, strict_corollary2: bool = False, tol: float = 1e-9) -> Acs:
    """Any supported format to an :class:`Acs`. Raises :class:`MalformedInput` on bad shape or keys."""
    fmt = detect_format(obj)
    try:
        if fmt == "matrix":
            return Acs(matrix_from_json(obj), tol)
        if fmt == "form":
            return acs_from_form(form_from_json(obj), tol)
        if fmt == "cp3":
            return acs_from_point(point_from_json(obj))
        if fmt == "chart":
            return acs_from_chart(chart_from_json(obj))
        p = angles_from_json(obj)
        return corollary2_matrix(p, strict=True) if strict_corollary2 else acs_from_angles(p)
    except (KeyError, TypeError) as exc:
        raise MalformedInput(f"malformed {fmt} input: {exc}") from exc
