"""
The identification Z = SO(6)/U(3) ~ CP^3.

The affine chart [1, a, b, c] covers the neighbourhood U(I0) = {I : 1 - I I0
invertible}. Clearing denominators in the chart matrix gives an expression that
is quadratic in the homogeneous coordinates z and divided by |z|^2; it extends
continuously to all of CP^3 and is what :func:`acs_from_point` evaluates. The
inverse recovers the rank-one Hermitian projector z z* / |z|^2 from twelve
off-diagonal and three platform entries of J, then reads z off its best
conditioned row. Row 0 reproduces the affine inverse chart; rows 1..3 are the
same chart transported to the vertices I1..I3.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .acs_core import Acs, standard_structure
from .errors import NotOnSphere, OutsideChart
from .linalg6 import DIM, TwoForm, mat_inverse

CHART_CUTOFF = 1e-9
SPHERE_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class ProjPoint:
    """A point of CP^3 given by homogeneous coordinates (not all zero)."""

    z: np.ndarray

    def __post_init__(self):
        z = np.array(self.z, dtype=complex).reshape(-1)
        if z.shape != (4,):
            raise ValueError(f"CP^3 points have 4 homogeneous coordinates, got {z.size}")
        if not np.all(np.isfinite(z)) or np.max(np.abs(z)) == 0.0:
            raise ValueError("homogeneous coordinates must be finite and not all zero")
        z.setflags(write=False)
        object.__setattr__(self, "z", z)

    @classmethod
    def vertex(cls, k: int) -> ProjPoint:
        return cls(np.eye(4)[k])

    def canonical(self) -> np.ndarray:
        """Scaled so the coordinate of largest modulus is exactly 1 (first one on ties)."""
        k = int(np.argmax(np.abs(self.z)))
        w = self.z / self.z[k]
        w[k] = 1.0
        return w

    def affine(self, k: int = 0) -> np.ndarray:
        """The three coordinates z_i / z_k, i != k."""
        if abs(self.z[k]) == 0.0:
            raise OutsideChart(f"z{k} = 0")
        return np.delete(self.z / self.z[k], k)

    def projector(self) -> np.ndarray:
        """z z* / |z|^2, entry (i, k) = conj(z_i) z_k / |z|^2."""
        u = self.z / np.linalg.norm(self.z)
        return np.outer(np.conj(u), u)

    def same_point(self, other: ProjPoint, atol: float = 1e-9) -> bool:
        # projectors rather than canonical forms, which jump at ties in modulus
        return bool(np.max(np.abs(self.projector() - other.projector())) <= atol)


@dataclass(frozen=True)
class ChartCoords:
    a: complex
    b: complex
    c: complex
    x: float = field(init=False)

    def __post_init__(self):
        for name in "abc":
            object.__setattr__(self, name, complex(getattr(self, name)))
        # never an independent parameter
        object.__setattr__(self, "x", 1.0 + abs(self.a) ** 2 + abs(self.b) ** 2 + abs(self.c) ** 2)

    def as_array(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c])

    def point(self) -> ProjPoint:
        return ProjPoint([1.0, self.a, self.b, self.c])


def _homogeneous_matrix(z: np.ndarray) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    n = float(np.sum(np.abs(z) ** 2))
    p = np.abs(z) ** 2

    def h(i, j):
        return np.conj(z[i]) * z[j]

    m = np.zeros((DIM, DIM))
    m[0, 1] = 2 * (h(1, 2) + h(0, 3)).imag
    m[0, 2] = 2 * (h(1, 3) - h(0, 2)).imag
    m[0, 3] = n - 2 * p[2] - 2 * p[3]
    m[0, 4] = 2 * (h(1, 2) - h(0, 3)).real
    m[0, 5] = 2 * (h(1, 3) + h(0, 2)).real
    m[1, 2] = 2 * (h(2, 3) + h(0, 1)).imag
    m[1, 3] = 2 * (h(1, 2) + h(0, 3)).real
    m[1, 4] = n - 2 * p[1] - 2 * p[3]
    m[1, 5] = 2 * (h(2, 3) - h(0, 1)).real
    m[2, 3] = 2 * (h(1, 3) - h(0, 2)).real
    m[2, 4] = 2 * (h(2, 3) + h(0, 1)).real
    m[2, 5] = n - 2 * p[1] - 2 * p[2]
    m[3, 4] = 2 * (h(1, 2) - h(0, 3)).imag
    m[3, 5] = 2 * (h(1, 3) + h(0, 2)).imag
    m[4, 5] = 2 * (h(2, 3) - h(0, 1)).imag
    return (m - m.T) / n


def acs_from_chart(c: ChartCoords) -> Acs:
    """The structure at the chart point [1, a, b, c]."""
    a, b, cc, x = c.a, c.b, c.c, c.x
    ab, ac, bc = np.conj(a) * b, np.conj(a) * cc, np.conj(b) * cc
    m = np.zeros((DIM, DIM))
    m[0, 1] = 2 * (ab + cc).imag
    m[0, 2] = 2 * (ac - b).imag
    m[0, 3] = x - 2 * abs(b) ** 2 - 2 * abs(cc) ** 2
    m[0, 4] = 2 * (ab - cc).real
    m[0, 5] = 2 * (ac + b).real
    m[1, 2] = 2 * (bc + a).imag
    m[1, 3] = 2 * (ab + cc).real
    m[1, 4] = x - 2 * abs(a) ** 2 - 2 * abs(cc) ** 2
    m[1, 5] = 2 * (bc - a).real
    m[2, 3] = 2 * (ac - b).real
    m[2, 4] = 2 * (bc + a).real
    m[2, 5] = x - 2 * abs(a) ** 2 - 2 * abs(b) ** 2
    m[3, 4] = 2 * (ab - cc).imag
    m[3, 5] = 2 * (ac + b).imag
    m[4, 5] = 2 * (bc - a).imag
    return Acs((m - m.T) / x)


def chart_denominator(j: Acs) -> float:
    """1 + I14 + I25 + I36; equals 4 |z0|^2 / |z|^2 and vanishes exactly on the face z0 = 0."""
    m = j.m
    return float(1.0 + m[0, 3] + m[1, 4] + m[2, 5])


def chart_from_acs(j: Acs, cutoff: float = CHART_CUTOFF) -> ChartCoords:
    """Affine inverse chart; raises :class:`OutsideChart` on the face z0 = 0."""
    d = chart_denominator(j)
    if abs(d) < cutoff:
        raise OutsideChart(f"1 + I14 + I25 + I36 = {d:.3e}; the structure lies on the face z0 = 0")

    def I(i, k):
        return j.m[i - 1, k - 1]

    a = complex(I(3, 5) - I(2, 6), I(2, 3) - I(5, 6)) / d
    b = complex(I(1, 6) - I(3, 4), I(4, 6) - I(1, 3)) / d
    c = complex(I(2, 4) - I(1, 5), I(1, 2) - I(4, 5)) / d
    return ChartCoords(a, b, c)


def acs_from_point(p) -> Acs:
    """Structure of a point of CP^3 (a :class:`ProjPoint` or raw homogeneous coordinates)."""
    z = p.z if isinstance(p, ProjPoint) else ProjPoint(p).z
    return Acs(_homogeneous_matrix(z))


def hermitian_projector(j: Acs) -> np.ndarray:
    """The 4x4 matrix z z* / |z|^2 of the point corresponding to ``j``."""
    def I(i, k):
        return j.m[i - 1, k - 1]

    p = 0.25 * np.array([
        1 + I(1, 4) + I(2, 5) + I(3, 6),
        1 + I(1, 4) - I(2, 5) - I(3, 6),
        1 - I(1, 4) + I(2, 5) - I(3, 6),
        1 - I(1, 4) - I(2, 5) + I(3, 6),
    ])
    h = np.diag(p).astype(complex)
    # entry (i, k) is conj(z_i) z_k
    h[0, 1] = complex(I(3, 5) - I(2, 6), I(2, 3) - I(5, 6)) / 4
    h[0, 2] = complex(I(1, 6) - I(3, 4), I(4, 6) - I(1, 3)) / 4
    h[0, 3] = complex(I(2, 4) - I(1, 5), I(1, 2) - I(4, 5)) / 4
    h[1, 2] = complex(I(2, 4) + I(1, 5), I(1, 2) + I(4, 5)) / 4
    h[1, 3] = complex(I(3, 4) + I(1, 6), I(1, 3) + I(4, 6)) / 4
    h[2, 3] = complex(I(3, 5) + I(2, 6), I(2, 3) + I(5, 6)) / 4
    lower = np.tril_indices(4, -1)
    h[lower] = np.conj(h.T[lower])
    return h


def chart_point_from_acs(j: Acs) -> ProjPoint:
    """Total inverse of :func:`acs_from_point`, returned in canonical form."""
    if not j.in_z:
        raise ValueError("structure has negative orientation and is not a point of Z")
    h = hermitian_projector(j)
    k = int(np.argmax(h.diagonal().real))
    z = h[k] / h[k, k]
    return ProjPoint(ProjPoint(z).canonical())


# Vertex transport: F(z o sigma_k) = S_k F(z) S_k^T where F = acs_from_point and
# (z o sigma_k)_i = z_{sigma_k(i)}. Each sigma_k is the double transposition of
# (0 1 2 3) that sends 0 to k; each S_k is a diagonal sign flip with det +1.
VERTEX_PERMUTATIONS = {
    0: (0, 1, 2, 3),
    1: (1, 0, 3, 2),
    2: (2, 3, 0, 1),
    3: (3, 2, 1, 0),
}
_VERTEX_SIGNS = {
    0: (1, 1, 1, 1, 1, 1),
    1: (1, 1, -1, 1, -1, 1),
    2: (1, -1, -1, -1, -1, 1),
    3: (1, -1, 1, -1, 1, 1),
}


def vertex_transport(k: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Rotation S_k in SO(6) with S_k I0 S_k^T = I_k, and the matching coordinate permutation."""
    return np.diag(np.array(_VERTEX_SIGNS[k], dtype=float)), VERTEX_PERMUTATIONS[k]


def acs_from_point_transported(p) -> Acs:
    """Same map as :func:`acs_from_point`, computed through the affine chart at the
    vertex with the largest coordinate. Kept as an independent route for checks."""
    z = p.z if isinstance(p, ProjPoint) else ProjPoint(p).z
    k = int(np.argmax(np.abs(z)))
    s, perm = vertex_transport(k)
    w = z[list(perm)]
    base = acs_from_chart(ChartCoords(*(w[1:] / w[0])))
    return Acs(s.T @ base.m @ s)


@dataclass(frozen=True, eq=False)
class CayleyK:
    """Skew operator K with K I0 = -I0 K, block form ((A, B), (B, -A))."""

    k: np.ndarray

    @property
    def a_block(self) -> np.ndarray:
        return self.k[:3, :3]

    @property
    def b_block(self) -> np.ndarray:
        return self.k[:3, 3:]


def _cross_matrix(a, b, c) -> np.ndarray:
    return np.array([[0, -c, b], [c, 0, -a], [-b, a, 0]], dtype=complex)


def cayley_block_printed(c: ChartCoords) -> np.ndarray:
    """((A, B), (B, -A)) with A + iB = [[0, -c, b], [c, 0, -a], [-b, a, 0]], taken literally."""
    ab = _cross_matrix(c.a, c.b, c.c)
    return np.block([[ab.real, ab.imag], [ab.imag, -ab.real]])


def cayley_k(c: ChartCoords) -> CayleyK:
    """K = (1 - I I0)^-1 (1 + I I0) for I = acs_from_chart(c), in closed form.

    In the column convention this is the negative of the literal block pattern
    (equivalently A + iB = -[[0, -c, b], ...]); with it both
    K = (1 - I I0)^-1 (1 + I I0) and I = (1 - K) I0 (1 - K)^-1 hold.
    """
    return CayleyK(-cayley_block_printed(c))


def acs_from_cayley(k: CayleyK) -> Acs:
    eye = np.eye(DIM)
    i0 = standard_structure(0).m
    return Acs((eye - k.k) @ i0 @ mat_inverse(eye - k.k))


def cayley_from_acs(j: Acs) -> CayleyK:
    eye = np.eye(DIM)
    i0 = standard_structure(0).m
    return CayleyK(mat_inverse(eye - j.m @ i0) @ (eye + j.m @ i0))


def edge01_form(r: float, u: float, x_l: float, tol: float = SPHERE_TOL) -> TwoForm:
    """e14 + r(e25 + e36) + u(e23 + e65) + x(e26 + e53) with r^2 + u^2 + x^2 = 1."""
    defect = r * r + u * u + x_l * x_l - 1.0
    if abs(defect) > tol:
        raise NotOnSphere(f"r^2 + u^2 + x^2 - 1 = {defect:.3e}")
    return TwoForm.from_terms({
        (1, 4): 1.0,
        (2, 5): r, (3, 6): r,
        (2, 3): u, (6, 5): u,
        (2, 6): x_l, (5, 3): x_l,
    })


def edge01_from_sphere(psi: float, phi: float) -> TwoForm:
    return edge01_form(np.sin(psi), np.cos(phi) * np.cos(psi), np.sin(phi) * np.cos(psi))


def edge01_coords(w: TwoForm) -> tuple[float, float, float]:
    """(r, u, x) of a form on the edge E01; no check that the form lies on it."""
    return w[(2, 5)], w[(2, 3)], w[(2, 6)]


def edge01_sphere_coords(w: TwoForm) -> tuple[float, float]:
    """(psi, phi) of a form on E01, phi in [0, 2 pi); phi is arbitrary at the poles."""
    r, u, x_l = edge01_coords(w)
    psi = float(np.arcsin(np.clip(r, -1.0, 1.0)))
    phi = float(np.arctan2(x_l, u) % (2 * np.pi))
    return psi, phi


def edge01_point(s: float, c1: float, c2: float) -> ProjPoint:
    """The point [s, c1 + i c2, 0, 0] of E01."""
    return ProjPoint([s, complex(c1, c2), 0.0, 0.0])
