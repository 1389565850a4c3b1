"""
Fixed-dimension linear algebra on R^6.

Matrices are plain ``(6, 6)`` float arrays in the column convention: column j
is the image of e_j. Skew 2-forms are stored as their 15 strictly-upper
coefficients, omega = sum_{i<j} coeff[ij] e^i ^ e^j.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import Singular

DIM = 6
SINGULAR_TOL = 1e-12

# (i, j) 1-based pairs, i < j, in lexicographic order: 12, 13, ..., 56
PAIRS: tuple[tuple[int, int], ...] = tuple(combinations(range(1, DIM + 1), 2))
PAIR_INDEX = {p: n for n, p in enumerate(PAIRS)}


def as_mat6(a) -> np.ndarray:
    m = np.asarray(a, dtype=float)
    if m.shape != (DIM, DIM):
        raise ValueError(f"expected a 6x6 matrix, got shape {m.shape}")
    return m


def identity() -> np.ndarray:
    return np.eye(DIM)


def mat_mul(a, b) -> np.ndarray:
    return as_mat6(a) @ as_mat6(b)


def mat_inverse(a, tol: float = SINGULAR_TOL) -> np.ndarray:
    """Inverse of a 6x6 matrix; raises :class:`Singular` if ``|det a| <= tol``."""
    m = as_mat6(a)
    det = np.linalg.det(m)
    if not np.isfinite(det) or abs(det) <= tol:
        raise Singular(f"|det| = {abs(det):.3e} is below the singularity tolerance {tol:.1e}")
    return np.linalg.solve(m, np.eye(DIM))


def inf_norm(a) -> float:
    """Max-abs entry norm, used for every defect measurement."""
    return float(np.max(np.abs(a)))


def rotation(i: int, j: int, angle: float) -> np.ndarray:
    """Rotation in the oriented plane <e_i, e_j> (1-based): e_i -> cos e_i + sin e_j."""
    if i == j or not (1 <= i <= DIM and 1 <= j <= DIM):
        raise ValueError(f"bad rotation plane ({i}, {j})")
    r = np.eye(DIM)
    c, s = np.cos(angle), np.sin(angle)
    r[i - 1, i - 1] = c
    r[j - 1, j - 1] = c
    r[j - 1, i - 1] = s
    r[i - 1, j - 1] = -s
    return r


def wedge(u, v) -> np.ndarray:
    """Skew matrix of the 2-form u ^ v (u, v coefficient vectors in the basis e^i)."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return np.outer(u, v) - np.outer(v, u)


@dataclass(frozen=True, eq=False)
class TwoForm:
    """A skew 2-form on R^6 stored by its 15 coefficients ``coeff[(i, j)]``, i < j."""

    coeff: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeff, dtype=float).reshape(-1)
        if c.shape != (len(PAIRS),):
            raise ValueError(f"a 2-form on R^6 has 15 coefficients, got {c.size}")
        c.setflags(write=False)
        object.__setattr__(self, "coeff", c)

    @classmethod
    def zero(cls) -> TwoForm:
        return cls(np.zeros(len(PAIRS)))

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], float]) -> TwoForm:
        """Build from ``{(i, j): c}``; pairs with i > j contribute with a sign flip."""
        m = np.zeros((DIM, DIM))
        for (i, j), c in terms.items():
            m += c * wedge(np.eye(DIM)[i - 1], np.eye(DIM)[j - 1])
        return cls.from_matrix(m)

    @classmethod
    def from_matrix(cls, m) -> TwoForm:
        m = as_mat6(m)
        return cls(np.array([m[i - 1, j - 1] for i, j in PAIRS]))

    def matrix(self) -> np.ndarray:
        m = np.zeros((DIM, DIM))
        for (i, j), c in zip(PAIRS, self.coeff):
            m[i - 1, j - 1] = c
            m[j - 1, i - 1] = -c
        return m

    def __getitem__(self, pair: tuple[int, int]) -> float:
        i, j = pair
        if i < j:
            return float(self.coeff[PAIR_INDEX[(i, j)]])
        if i > j:
            return -float(self.coeff[PAIR_INDEX[(j, i)]])
        return 0.0

    def __add__(self, other: TwoForm) -> TwoForm:
        return TwoForm(self.coeff + other.coeff)

    def __sub__(self, other: TwoForm) -> TwoForm:
        return TwoForm(self.coeff - other.coeff)

    def __neg__(self) -> TwoForm:
        return TwoForm(-self.coeff)

    def __mul__(self, k: float) -> TwoForm:
        return TwoForm(k * self.coeff)

    __rmul__ = __mul__

    def allclose(self, other: TwoForm, atol: float = 1e-12) -> bool:
        return bool(np.max(np.abs(self.coeff - other.coeff)) <= atol)

    def __repr__(self) -> str:
        terms = [f"{c:+.6g} e{i}{j}" for (i, j), c in zip(PAIRS, self.coeff) if c != 0.0]
        return "TwoForm(" + (" ".join(terms) if terms else "0") + ")"


def _matchings(idx: tuple[int, ...]) -> list[tuple[float, tuple[tuple[int, int], ...]]]:
    # perfect matchings with the signs of the first-row expansion
    if not idx:
        return [(1.0, ())]
    first, rest = idx[0], idx[1:]
    out = []
    for pos, j in enumerate(rest):
        sign = 1.0 if pos % 2 == 0 else -1.0
        sub = tuple(k for k in rest if k != j)
        out.extend((sign * s, ((first, j),) + m) for s, m in _matchings(sub))
    return out


_MATCHINGS = _matchings(tuple(range(DIM)))
_PF_SIGNS = np.array([s for s, _ in _MATCHINGS])
_PF_ROWS = np.array([[i for i, _ in m] for _, m in _MATCHINGS])
_PF_COLS = np.array([[j for _, j in m] for _, m in _MATCHINGS])


def pfaffian(w) -> float:
    """Pfaffian of a 2-form (or of a skew 6x6 matrix).

    Normalized so that Pf(e14 + e25 + e36) = +1; this is minus the Pfaffian of
    the skew matrix in the ordering (e1, ..., e6). Pf^2 = det holds either way.
    """
    m = w.matrix() if isinstance(w, TwoForm) else as_mat6(w)
    return float(-np.sum(_PF_SIGNS * np.prod(m[_PF_ROWS, _PF_COLS], axis=1)))
