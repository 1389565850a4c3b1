"""
Six-angle parametrization of Z by compositions of plane rotations.

A structure is J = S I0 S^T with S the product of six plane rotations

    S = R_D1(phi1) R_D2(phi2) R_D3(phi3) R_beta R_alpha R_phi

where alpha = (psi + theta)/2, beta = (psi - theta)/2 and the platforms are
D1 = <e1, e4>, D2 = <e2, e5>, D3 = <e3, e6>. Read right to left, the frame is
turned by R_phi first and by the torus factors last, so the torus T^3 acts
from outside and the entries J14, J25, J36 do not see it.

Conventions (rotation(i, j, t) sends e_i to cos t e_i + sin t e_j):

    factor    plane     angle
    R_phi     (1, 6)    phi - pi/2
    R_alpha   (5, 1)    alpha - pi/2
    R_beta    (2, 4)    beta
    R_Dk      (k+3, k)  phi_k - pi/2

so every factor is the identity at the reference angles
phi = psi = theta = phi1 = phi2 = phi3 = pi/2, where J = I0. With these
choices J reproduces the closed-form entry table (:func:`corollary2_matrix`)
identically, J36 = sin(phi), and on the torus slice phi1 = phi2 = phi3 = pi/2
it reproduces the three-angle form (:func:`form_from_angles`).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .acs_core import Acs, standard_structure
from .linalg6 import DIM, TwoForm, rotation, wedge

HALF_PI = np.pi / 2
TWO_PI = 2 * np.pi

# printed entry -> reason; entries listed here are taken from the rotation
# composition instead of the closed-form table unless strict=True.
# The sampled comparison (scripts/errata_pass.py, ERRATA.md) found no disagreement.
ERRATA: dict[tuple[int, int], str] = {}


@dataclass(frozen=True)
class AngleParams:
    phi: float
    psi: float
    theta: float
    phi1: float
    phi2: float
    phi3: float

    def __post_init__(self):
        # phi, psi, theta documented on [-pi/2, pi/2]; the meridian families need [-pi, pi]
        for name in ("phi", "psi", "theta"):
            v = float(getattr(self, name))
            if not -np.pi - 1e-12 <= v <= np.pi + 1e-12:
                raise ValueError(f"{name} = {v} outside [-pi, pi]")
            object.__setattr__(self, name, v)
        for name in ("phi1", "phi2", "phi3"):
            v = float(getattr(self, name))
            if not -1e-12 <= v <= TWO_PI + 1e-12:
                raise ValueError(f"{name} = {v} outside [0, 2 pi]")
            object.__setattr__(self, name, v)

    @classmethod
    def reference(cls) -> AngleParams:
        return cls(HALF_PI, HALF_PI, HALF_PI, HALF_PI, HALF_PI, HALF_PI)

    @property
    def alpha(self) -> float:
        return 0.5 * (self.psi + self.theta)

    @property
    def beta(self) -> float:
        return 0.5 * (self.psi - self.theta)

    def as_tuple(self) -> tuple[float, ...]:
        return (self.phi, self.psi, self.theta, self.phi1, self.phi2, self.phi3)

    def to_dict(self) -> dict:
        return dict(zip(("phi", "psi", "theta", "phi1", "phi2", "phi3"), self.as_tuple()))


@dataclass(frozen=True)
class PlatformRotation:
    plane: tuple[int, int]
    angle: float

    def __post_init__(self):
        i, j = self.plane
        if i == j or not (1 <= i <= DIM and 1 <= j <= DIM):
            raise ValueError(f"bad plane {self.plane}")

    def matrix(self) -> np.ndarray:
        return rotation(self.plane[0], self.plane[1], self.angle)


def rotation_factors(p: AngleParams) -> list[PlatformRotation]:
    """Factors of S in matrix-product order, leftmost first."""
    return [
        PlatformRotation((4, 1), p.phi1 - HALF_PI),
        PlatformRotation((5, 2), p.phi2 - HALF_PI),
        PlatformRotation((6, 3), p.phi3 - HALF_PI),
        PlatformRotation((2, 4), p.beta),
        PlatformRotation((5, 1), p.alpha - HALF_PI),
        PlatformRotation((1, 6), p.phi - HALF_PI),
    ]


def rotation_composition(p: AngleParams) -> np.ndarray:
    s = np.eye(DIM)
    for f in rotation_factors(p):
        s = s @ f.matrix()
    return s


def acs_from_angles(p: AngleParams) -> Acs:
    s = rotation_composition(p)
    return Acs(s @ standard_structure(0).m @ s.T)


def _rotation_batch(i: int, j: int, t: np.ndarray) -> np.ndarray:
    r = np.broadcast_to(np.eye(DIM), t.shape + (DIM, DIM)).copy()
    c, s = np.cos(t), np.sin(t)
    i, j = i - 1, j - 1
    r[..., i, i], r[..., j, j] = c, c
    r[..., j, i], r[..., i, j] = s, -s
    return r


def acs_matrices(angles) -> np.ndarray:
    """Vectorized :func:`acs_from_angles` for an (n, 6) array of tuples, without validation."""
    a = np.atleast_2d(np.asarray(angles, dtype=float))
    phi, psi, theta, p1, p2, p3 = a.T
    alpha, beta = 0.5 * (psi + theta), 0.5 * (psi - theta)
    s = np.broadcast_to(np.eye(DIM), (len(a), DIM, DIM))
    for (i, j), t in (
        ((4, 1), p1 - HALF_PI),
        ((5, 2), p2 - HALF_PI),
        ((6, 3), p3 - HALF_PI),
        ((2, 4), beta),
        ((5, 1), alpha - HALF_PI),
        ((1, 6), phi - HALF_PI),
    ):
        s = s @ _rotation_batch(i, j, t)
    return s @ standard_structure(0).m @ np.swapaxes(s, -1, -2)


def torus_matrix(a1: float, a2: float, a3: float) -> np.ndarray:
    """Block rotation by a_k in the platform D_k = <e_k, e_{k+3}>."""
    return rotation(1, 4, a1) @ rotation(2, 5, a2) @ rotation(3, 6, a3)


def t3_act(j: Acs, a1: float, a2: float, a3: float) -> Acs:
    o = torus_matrix(a1, a2, a3)
    return Acs(o @ j.m @ o.T, j.tol)


def form_from_angles(phi: float, psi: float, theta: float) -> TwoForm:
    """Representative of a T^3-orbit:

    e3 ^ (sin phi e6 + cos phi f1) + (sin phi f1 - cos phi e6) ^ g4 + g2 ^ f5

    with f1 = sin a e1 + cos a e5, f5 = -cos a e1 + sin a e5,
    g2 = cos b e2 + sin b e4, g4 = -sin b e2 + cos b e4, a = (psi+theta)/2, b = (psi-theta)/2.
    """
    e = np.eye(DIM)
    a, b = 0.5 * (psi + theta), 0.5 * (psi - theta)
    f1 = np.sin(a) * e[0] + np.cos(a) * e[4]
    f5 = -np.cos(a) * e[0] + np.sin(a) * e[4]
    g2 = np.cos(b) * e[1] + np.sin(b) * e[3]
    g4 = -np.sin(b) * e[1] + np.cos(b) * e[3]
    m = (
        wedge(e[2], np.sin(phi) * e[5] + np.cos(phi) * f1)
        + wedge(np.sin(phi) * f1 - np.cos(phi) * e[5], g4)
        + wedge(g2, f5)
    )
    return TwoForm.from_matrix(m)


def _printed_entries(p: AngleParams) -> dict[tuple[int, int], float]:
    sa, ca = np.sin(p.alpha), np.cos(p.alpha)
    sb, cb = np.sin(p.beta), np.cos(p.beta)
    sf, cf = np.sin(p.phi), np.cos(p.phi)
    s1, c1 = np.sin(p.phi1), np.cos(p.phi1)
    s2, c2 = np.sin(p.phi2), np.cos(p.phi2)
    s3, c3 = np.sin(p.phi3), np.cos(p.phi3)
    return {
        (1, 2): sa * sb * (c1 * c2 - sf * s1 * s2) + ca * cb * (s1 * s2 - sf * c1 * c2),
        (1, 3): cf * (cb * c1 * c3 - sa * s1 * s3),
        (1, 4): sf * sa * cb + ca * sb,
        (1, 5): ca * cb * (sf * c1 * s2 + s1 * c2) - sa * sb * (sf * s1 * c2 + c1 * s2),
        (1, 6): -cf * (sa * s1 * c3 + cb * c1 * s3),
        (2, 3): cf * (ca * c2 * s3 + sb * s2 * c3),
        (2, 4): sa * sb * (s1 * c2 + sf * c1 * s2) - ca * cb * (sf * s1 * c2 + c1 * s2),
        (2, 5): sf * ca * sb + cb * sa,
        (2, 6): cf * (ca * c2 * c3 - sb * s2 * s3),
        (3, 4): cf * (sa * c1 * s3 + cb * s1 * c3),
        (3, 5): cf * (ca * s2 * s3 - sb * c2 * c3),
        (3, 6): sf,
        (4, 5): ca * cb * (c1 * c2 - sf * s1 * s2) - sa * sb * (sf * c1 * c2 - s1 * s2),
        (4, 6): cf * (cb * s1 * s3 - sa * c1 * c3),
        (5, 6): -cf * (ca * s2 * c3 + sb * c2 * s3),
    }


def corollary2_matrix(p: AngleParams, strict: bool = False) -> Acs:
    """J from the closed-form table of 15 trigonometric entries.

    With ``strict=False`` any entry listed in :data:`ERRATA` is replaced by the
    value from :func:`acs_from_angles`; ``strict=True`` uses the table verbatim.
    """
    entries = _printed_entries(p)
    if not strict and ERRATA:
        ref = acs_from_angles(p).m
        for i, j in ERRATA:
            entries[(i, j)] = ref[i - 1, j - 1]
    return Acs(TwoForm.from_terms(entries).matrix())


def errata_scan(n: int = 10_000, seed: int = 0, tol: float = 1e-9) -> dict[tuple[int, int], dict]:
    """Compare every table entry with the rotation composition on ``n`` random angle tuples.

    Returns ``{(i, j): {"max_error": e, "counterexample": angles}}`` for entries
    that disagree beyond ``tol``.
    """
    rng = np.random.default_rng(seed)
    sample = [random_angles(rng) for _ in range(n)]
    refs = acs_matrices([p.as_tuple() for p in sample])
    worst: dict[tuple[int, int], tuple[float, AngleParams]] = {}
    for p, ref in zip(sample, refs):
        for (i, j), v in _printed_entries(p).items():
            err = abs(v - ref[i - 1, j - 1])
            if err > tol and err > worst.get((i, j), (0.0, None))[0]:
                worst[(i, j)] = (err, p)
    return {k: {"max_error": e, "counterexample": q.to_dict()} for k, (e, q) in sorted(worst.items())}


def random_angles(rng: np.random.Generator) -> AngleParams:
    lo, hi = -HALF_PI, HALF_PI
    return AngleParams(*rng.uniform(lo, hi, 3), *rng.uniform(0.0, TWO_PI, 3))


def p_matrices(psi: float, theta: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The SO(4) frame change on <e1, e2, e4, e5> and its induced SO(3) x SO(3) pair.

    The 4x4 matrix acts on coordinates in the order (e1, e2, e4, e5). P+ and P-
    are its actions on the bases (e14+e25, e12+e54, e15+e42) and
    (e14-e25, e12-e54, e15-e42): rotations whose first columns are
    (sin psi, cos psi, 0) and (sin theta, -cos theta, 0).
    """
    a, b = 0.5 * (psi + theta), 0.5 * (psi - theta)
    m4 = np.array([
        [np.sin(a), 0.0, 0.0, -np.cos(a)],
        [0.0, np.cos(b), -np.sin(b), 0.0],
        [0.0, np.sin(b), np.cos(b), 0.0],
        [np.cos(a), 0.0, 0.0, np.sin(a)],
    ])
    sp, cp = np.sin(psi), np.cos(psi)
    st, ct = np.sin(theta), np.cos(theta)
    p_plus = np.array([[sp, -cp, 0.0], [cp, sp, 0.0], [0.0, 0.0, 1.0]])
    p_minus = np.array([[st, ct, 0.0], [-ct, st, 0.0], [0.0, 0.0, 1.0]])
    return m4, p_plus, p_minus


_D_INDEX = {1: 0, 2: 1, 4: 2, 5: 3}


def _d_wedge(i: int, j: int) -> np.ndarray:
    e = np.eye(4)
    return wedge(e[_D_INDEX[i]], e[_D_INDEX[j]])


def lambda2_bases() -> tuple[list[np.ndarray], list[np.ndarray]]:
    """Bases of the self-dual and anti-self-dual 2-forms on <e1, e2, e4, e5>."""
    w = _d_wedge
    plus = [w(1, 4) + w(2, 5), w(1, 2) + w(5, 4), w(1, 5) + w(4, 2)]
    minus = [w(1, 4) - w(2, 5), w(1, 2) - w(5, 4), w(1, 5) - w(4, 2)]
    return plus, minus


def induced_lambda2_action(m4: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Matrices of omega -> M omega M^T on the two bases of :func:`lambda2_bases`."""
    out = []
    for basis in lambda2_bases():
        a = np.zeros((3, 3))
        for col, b in enumerate(basis):
            img = m4 @ b @ m4.T
            for row, c in enumerate(basis):
                a[row, col] = np.sum(img * c) / np.sum(c * c)
        out.append(a)
    return out[0], out[1]
