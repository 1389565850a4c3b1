"""
Left-invariant structures on 6-dimensional Lie groups.

Structure constants are stored as ``c[i, j, k]`` with [e_i, e_j] = sum_k c[i, j, k] e_k
(0-based array indices). The Nijenhuis tensor of J is

    N(X, Y) = [JX, JY] - [X, Y] - J[JX, Y] - J[X, JY]

and its norm is the Frobenius norm over the 15 basis pairs e_a, e_b with a < b.
On su(2) + su(2) the cyclic unit constants [e1, e2] = e3 (and likewise on
e4, e5, e6) are used; the factor-2 Pauli normalization only rescales norms.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .acs_core import Acs, acs_from_form, standard_structure
from .angle_param import AngleParams
from .errors import InvalidAlgebra
from .linalg6 import DIM, TwoForm

JACOBI_TOL = 1e-12
INTEGRABLE_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class LieAlgebra6:
    c: np.ndarray
    name: str = ""

    def __post_init__(self):
        c = np.array(self.c, dtype=float)
        if c.shape != (DIM, DIM, DIM):
            raise InvalidAlgebra(f"structure constants must have shape (6, 6, 6), got {c.shape}")
        if not np.array_equal(c, -c.transpose(1, 0, 2)):
            raise InvalidAlgebra("structure constants are not antisymmetric in the lower indices")
        defect = jacobi_defect(c)
        if defect > JACOBI_TOL:
            raise InvalidAlgebra(f"Jacobi identity fails (max defect {defect:.3e})")
        c.setflags(write=False)
        object.__setattr__(self, "c", c)

    @classmethod
    def from_brackets(cls, brackets, name: str = "") -> LieAlgebra6:
        """From ``[(i, j, k, c), ...]`` (1-based, i < j), meaning c^k_ij = c."""
        c = np.zeros((DIM, DIM, DIM))
        for i, j, k, val in brackets:
            if not (1 <= i < j <= DIM and 1 <= k <= DIM):
                raise InvalidAlgebra(f"bad bracket indices ({i}, {j}, {k})")
            c[i - 1, j - 1, k - 1] += val
            c[j - 1, i - 1, k - 1] -= val
        return cls(c, name)

    def brackets(self) -> list[tuple[int, int, int, float]]:
        out = []
        for i in range(DIM):
            for j in range(i + 1, DIM):
                for k in range(DIM):
                    if self.c[i, j, k] != 0.0:
                        out.append((i + 1, j + 1, k + 1, float(self.c[i, j, k])))
        return out

    def to_dict(self) -> dict:
        return {
            "dim": DIM,
            "brackets": [{"i": i, "j": j, "k": k, "c": v} for i, j, k, v in self.brackets()],
        }


def jacobi_defect(c) -> float:
    c = np.asarray(c, dtype=float)
    # sum_m c^m_ij c^l_mk + c^m_jk c^l_mi + c^m_ki c^l_mj
    t = np.einsum("ijm,mkl->ijkl", c, c)
    total = t + t.transpose(1, 2, 0, 3) + t.transpose(2, 0, 1, 3)
    return float(np.max(np.abs(total)))


def load_algebra(path) -> LieAlgebra6:
    """Read ``{"dim": 6, "brackets": [{"i":1,"j":2,"k":3,"c":1.0}, ...]}``."""
    try:
        data = json.loads(Path(path).read_text())
        if data.get("dim") != DIM:
            raise InvalidAlgebra(f"dim must be {DIM}")
        entries = [(int(b["i"]), int(b["j"]), int(b["k"]), float(b["c"])) for b in data["brackets"]]
    except (OSError, ValueError, KeyError, TypeError, AttributeError) as exc:
        if isinstance(exc, InvalidAlgebra):
            raise
        raise InvalidAlgebra(f"cannot read structure constants from {path}: {exc}") from exc
    return LieAlgebra6.from_brackets(entries, name=str(path))


def su2xsu2() -> LieAlgebra6:
    cyc = [(1, 2, 3), (2, 3, 1), (3, 1, 2)]
    brackets = []
    for off in (0, 3):
        for i, j, k in cyc:
            i, j = i + off, j + off
            if i < j:
                brackets.append((i, j, k + off, 1.0))
            else:
                brackets.append((j, i, k + off, -1.0))
    return LieAlgebra6.from_brackets(brackets, name="su2xsu2")


def abelian() -> LieAlgebra6:
    return LieAlgebra6(np.zeros((DIM, DIM, DIM)), name="abelian")


BUILTIN_ALGEBRAS = {"su2xsu2": su2xsu2, "abelian": abelian}


def bracket(g: LieAlgebra6, x, y) -> np.ndarray:
    return np.einsum("i,j,ijk->k", np.asarray(x, float), np.asarray(y, float), g.c)


def _jmat(j) -> np.ndarray:
    return j.m if isinstance(j, Acs) else np.asarray(j, dtype=float)


def nijenhuis(g: LieAlgebra6, j, x, y) -> np.ndarray:
    m = _jmat(j)
    x = np.asarray(x, float)
    y = np.asarray(y, float)
    jx, jy = m @ x, m @ y
    return bracket(g, jx, jy) - bracket(g, x, y) - m @ bracket(g, jx, y) - m @ bracket(g, x, jy)


def nijenhuis_tensor(g: LieAlgebra6, j) -> np.ndarray:
    """``N[..., a, b, k]``: k-th component of N(e_a, e_b). Accepts a stack of matrices."""
    m = _jmat(j)
    c = g.c
    # u[a, j, k] = [J e_a, e_j]_k; [e_a, J e_b] = -u[b, a] by antisymmetry
    u = np.einsum("...ia,ijk->...ajk", m, c)
    t1 = np.einsum("...ajk,...jb->...abk", u, m)
    t3 = np.einsum("...abm,...km->...abk", u, m)
    t4 = -np.swapaxes(t3, -2, -3)
    return t1 - c - t3 - t4


def nijenhuis_norms(g: LieAlgebra6, mats) -> np.ndarray:
    """Norms for a stack of matrices of shape (n, 6, 6)."""
    n = nijenhuis_tensor(g, mats)
    iu = np.triu_indices(DIM, 1)
    return np.sqrt(np.sum(n[..., iu[0], iu[1], :] ** 2, axis=(-2, -1)))


@dataclass(frozen=True)
class NijenhuisReport:
    norm: float
    max_component: float
    tol: float = INTEGRABLE_TOL

    @property
    def integrable(self) -> bool:
        return self.norm < self.tol

    def to_dict(self) -> dict:
        return {
            "norm": self.norm,
            "max_component": self.max_component,
            "integrable": self.integrable,
            "tol": self.tol,
            "norm_convention": "frobenius over basis pairs a<b; unit cyclic su(2) constants",
        }


def nijenhuis_norm(g: LieAlgebra6, j, tol: float = INTEGRABLE_TOL) -> NijenhuisReport:
    n = nijenhuis_tensor(g, j)
    iu = np.triu_indices(DIM, 1)
    upper = n[iu[0], iu[1], :]
    return NijenhuisReport(
        norm=float(np.sqrt(np.sum(upper ** 2))),
        max_component=float(np.max(np.abs(upper))),
        tol=tol,
    )


def calabi_eckmann_structure() -> Acs:
    """I e1 = -e4, I e2 = -e3, I e5 = e6 (so the form is e14 + e23 - e56)."""
    m = np.zeros((DIM, DIM))
    for src, dst, s in ((1, 4, -1.0), (2, 3, -1.0), (5, 6, 1.0)):
        m[dst - 1, src - 1] = s
        m[src - 1, dst - 1] = -s
    return Acs(m)


@dataclass(frozen=True)
class CatalogEntry:
    edge: tuple[int, int]
    sign: int
    form: TwoForm

    @property
    def label(self) -> str:
        return f"E{self.edge[0]}{self.edge[1]}"

    def acs(self) -> Acs:
        return acs_from_form(self.form)


def calabi_eckmann_catalog() -> list[CatalogEntry]:
    """Twelve integrable structures on su(2) + su(2), two antipodal equator points per edge."""
    rows = [
        ((0, 1), lambda s: {(1, 4): 1, (2, 3): s, (5, 6): -s}),
        ((2, 3), lambda s: {(1, 4): -1, (2, 3): s, (5, 6): s}),
        ((0, 3), lambda s: {(1, 2): s, (4, 5): -s, (3, 6): 1}),
        ((1, 2), lambda s: {(1, 2): s, (4, 5): s, (3, 6): -1}),
        ((0, 2), lambda s: {(2, 5): 1, (4, 6): s, (1, 3): -s}),
        ((1, 3), lambda s: {(2, 5): -1, (4, 6): s, (1, 3): s}),
    ]
    return [
        CatalogEntry(edge, s, TwoForm.from_terms(terms(s)))
        for edge, terms in rows
        for s in (1, -1)
    ]


def is_block_offdiagonal(j, tol: float = 1e-9) -> bool:
    """True if J maps span(e1, e2, e3) into span(e4, e5, e6) and back."""
    m = _jmat(j)
    return bool(max(np.max(np.abs(m[:3, :3])), np.max(np.abs(m[3:, 3:]))) < tol)


def is_max_nonintegrable_angles(p: AngleParams, tol: float = 1e-9) -> bool:
    """cos phi1 = sin phi2 = sin phi3 = 0, or sin phi1 = cos phi2 = cos phi3 = 0, within ``tol``."""
    s = np.abs(np.sin([p.phi1, p.phi2, p.phi3]))
    c = np.abs(np.cos([p.phi1, p.phi2, p.phi3]))
    first = c[0] < tol and s[1] < tol and s[2] < tol
    second = s[0] < tol and c[1] < tol and c[2] < tol
    return bool(first or second)


def meridian_forms(side: str, t: float, printed: bool = False) -> TwoForm:
    """Meridian families through the edges E03 (side "plus") and E12 (side "minus").

        plus:  sin t (e14 + e25) + cos t (e15 + e42) + e36
        minus: sin t (e14 - e25) + cos t (e15 - e42) - e36

    ``printed=True`` gives the minus family with +e36 as originally written; those
    forms are still almost complex but have negative orientation.
    """
    if side not in ("plus", "minus"):
        raise ValueError(f"side must be 'plus' or 'minus', got {side!r}")
    if not -np.pi - 1e-12 <= t <= np.pi + 1e-12:
        raise ValueError(f"t = {t} outside [-pi, pi]")
    sg = 1.0 if side == "plus" else -1.0
    e36 = 1.0 if (side == "plus" or printed) else -1.0
    return TwoForm.from_terms({
        (1, 4): np.sin(t),
        (2, 5): sg * np.sin(t),
        (1, 5): np.cos(t),
        (4, 2): sg * np.cos(t),
        (3, 6): e36,
    })


def vertex_norms(g: LieAlgebra6) -> list[float]:
    return [nijenhuis_norm(g, standard_structure(k)).norm for k in range(4)]
