"""
Orthogonal almost complex structures on R^6 with the standard inner product.

An :class:`Acs` wraps a 6x6 matrix J (column j = J e_j) with J^2 = -1 and
J^T J = 1, hence J^T = -J. Its fundamental 2-form is read off the strict upper
triangle, omega = sum_{i<j} J_ij e^i ^ e^j, i.e. omega(X, Y) = <X, J Y>. With
this sign choice the four coordinate structures I0..I3 have the forms

    omega_0 =  e14 + e25 + e36      omega_2 = -e14 + e25 - e36
    omega_1 =  e14 - e25 - e36      omega_3 = -e14 - e25 + e36

and all of them carry Pfaffian +1 (the orientation class of the twistor space Z).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotCompatible
from .linalg6 import DIM, TwoForm, as_mat6, inf_norm, pfaffian

DEFAULT_TOL = 1e-9

# signs s_k of I_k e_{i+3} = s e_i, equivalently of the e^{i,i+3} coefficients
_STANDARD_SIGNS = {
    0: (1, 1, 1),
    1: (1, -1, -1),
    2: (-1, 1, -1),
    3: (-1, -1, 1),
}


@dataclass(frozen=True)
class ValidationReport:
    square_defect: float
    orth_defect: float
    skew_defect: float
    orientation: int
    tol: float = DEFAULT_TOL

    @property
    def accepted(self) -> bool:
        return max(self.square_defect, self.orth_defect, self.skew_defect) < self.tol

    @property
    def in_z(self) -> bool:
        """Accepted and in the positive orientation class."""
        return self.accepted and self.orientation > 0

    def to_dict(self) -> dict:
        return {
            "square_defect": self.square_defect,
            "orth_defect": self.orth_defect,
            "skew_defect": self.skew_defect,
            "orientation": self.orientation,
            "tol": self.tol,
            "accepted": self.accepted,
            "in_z": self.in_z,
        }


def validate(m, tol: float = DEFAULT_TOL) -> ValidationReport:
    m = as_mat6(m.m if isinstance(m, Acs) else m)
    eye = np.eye(DIM)
    pf = pfaffian(TwoForm.from_matrix(m))
    return ValidationReport(
        square_defect=inf_norm(m @ m + eye),
        orth_defect=inf_norm(m.T @ m - eye),
        skew_defect=inf_norm(m.T + m),
        orientation=int(np.sign(pf)),
        tol=tol,
    )


@dataclass(frozen=True, eq=False)
class Acs:
    """An orthogonal almost complex structure; construction validates at ``tol``."""

    m: np.ndarray
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        m = np.array(as_mat6(self.m), dtype=float)
        report = validate(m, self.tol)
        if not report.accepted:
            raise NotCompatible(
                "matrix is not an orthogonal almost complex structure "
                f"(square {report.square_defect:.2e}, orth {report.orth_defect:.2e}, "
                f"skew {report.skew_defect:.2e}, tol {self.tol:.1e})"
            )
        m.setflags(write=False)
        object.__setattr__(self, "m", m)

    @property
    def orientation(self) -> int:
        return int(np.sign(pfaffian(TwoForm.from_matrix(self.m))))

    @property
    def in_z(self) -> bool:
        return self.orientation > 0

    def conjugate(self, s) -> Acs:
        """S J S^-1 for an orthogonal S."""
        s = as_mat6(s)
        return Acs(s @ self.m @ s.T, self.tol)

    def allclose(self, other, atol: float = 1e-9) -> bool:
        other_m = other.m if isinstance(other, Acs) else np.asarray(other)
        return inf_norm(self.m - other_m) <= atol

    def __matmul__(self, other):
        return self.m @ (other.m if isinstance(other, Acs) else other)


def standard_structure(k: int) -> Acs:
    """The coordinate structure I_k, k = 0..3 (vertex k of the tetrahedron)."""
    if k not in _STANDARD_SIGNS:
        raise ValueError(f"standard structures are indexed 0..3, got {k}")
    m = np.zeros((DIM, DIM))
    for i, s in enumerate(_STANDARD_SIGNS[k]):
        m[i, i + 3] = s
        m[i + 3, i] = -s
    return Acs(m)


def fundamental_form(j: Acs) -> TwoForm:
    return TwoForm.from_matrix(j.m)


def acs_from_form(w: TwoForm, tol: float = DEFAULT_TOL) -> Acs:
    """The structure whose fundamental form is ``w``; NotCompatible otherwise."""
    return Acs(w.matrix(), tol)
