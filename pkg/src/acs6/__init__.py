"""Orthogonal almost complex structures on R^6 and the twistor space SO(6)/U(3) = CP^3."""
from .acs_core import Acs, ValidationReport, acs_from_form, fundamental_form, standard_structure, validate
from .angle_param import AngleParams, acs_from_angles, corollary2_matrix, t3_act
from .cp3_chart import (
    ChartCoords,
    ProjPoint,
    acs_from_chart,
    acs_from_point,
    cayley_k,
    chart_from_acs,
    chart_point_from_acs,
)
from .errors import Acs6Error, InvalidAlgebra, NotCompatible, NotOnSphere, OutsideChart, Singular
from .lie_geometry import LieAlgebra6, calabi_eckmann_catalog, nijenhuis_norm, su2xsu2
from .linalg6 import TwoForm, pfaffian

__version__ = "0.1.0"

__all__ = [
    "Acs", "ValidationReport", "acs_from_form", "fundamental_form", "standard_structure", "validate",
    "AngleParams", "acs_from_angles", "corollary2_matrix", "t3_act",
    "ChartCoords", "ProjPoint", "acs_from_chart", "acs_from_point", "cayley_k", "chart_from_acs",
    "chart_point_from_acs",
    "Acs6Error", "InvalidAlgebra", "NotCompatible", "NotOnSphere", "OutsideChart", "Singular",
    "LieAlgebra6", "calabi_eckmann_catalog", "nijenhuis_norm", "su2xsu2",
    "TwoForm", "pfaffian",
]
