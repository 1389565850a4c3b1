import numpy as np
from hypothesis import strategies as st

from acs6.angle_param import AngleParams

finite = dict(allow_nan=False, allow_infinity=False)
HALF = np.pi / 2


@st.composite
def complex_in_disk(draw, radius=10.0):
    r = draw(st.floats(0.0, radius, **finite))
    t = draw(st.floats(0.0, 2 * np.pi, **finite))
    return complex(r * np.cos(t), r * np.sin(t))


@st.composite
def angle_params(draw):
    half = st.floats(-HALF, HALF, **finite)
    torus = st.floats(0.0, 2 * np.pi, **finite)
    return AngleParams(draw(half), draw(half), draw(half), draw(torus), draw(torus), draw(torus))


@st.composite
def rotations(draw):
    """Random element of SO(6) by QR of a gaussian matrix."""
    seed = draw(st.integers(0, 2**32 - 1))
    a = np.random.default_rng(seed).normal(size=(6, 6))
    q, r = np.linalg.qr(a)
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


