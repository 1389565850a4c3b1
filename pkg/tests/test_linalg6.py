import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from acs6.errors import Singular
from acs6.linalg6 import (
    PAIRS,
    TwoForm,
    as_mat6,
    inf_norm,
    mat_inverse,
    mat_mul,
    pfaffian,
    rotation,
    wedge,
)

coeffs = arrays(np.float64, (15,), elements=st.floats(-5, 5, allow_nan=False))


def test_pairs_are_lexicographic():
    assert len(PAIRS) == 15
    assert PAIRS[0] == (1, 2) and PAIRS[-1] == (5, 6)
    assert list(PAIRS) == sorted(PAIRS)


def test_as_mat6_rejects_wrong_shape():
    with pytest.raises(ValueError):
        as_mat6(np.eye(5))


def test_inverse_of_rotation_is_transpose():
    r = rotation(2, 5, 0.7) @ rotation(1, 6, -1.1)
    assert inf_norm(mat_inverse(r) - r.T) < 1e-14
    assert inf_norm(mat_mul(r, r.T) - np.eye(6)) < 1e-14


def test_singular_matrix_raises():
    m = np.eye(6)
    m[3, 3] = 0.0
    with pytest.raises(Singular):
        mat_inverse(m)


def test_rotation_sends_ei_towards_ej():
    r = rotation(1, 4, np.pi / 2)
    assert np.allclose(r[:, 0], np.eye(6)[3])
    assert np.isclose(np.linalg.det(r), 1.0)
    with pytest.raises(ValueError):
        rotation(3, 3, 0.1)


def test_from_terms_flips_reversed_pairs():
    w = TwoForm.from_terms({(4, 2): 1.0, (1, 5): 2.0})
    assert w[(2, 4)] == -1.0 and w[(4, 2)] == 1.0
    assert w[(1, 5)] == 2.0 and w[(3, 3)] == 0.0


@given(coeffs)
def test_matrix_round_trip(c):
    w = TwoForm(c)
    m = w.matrix()
    assert np.array_equal(m, -m.T)
    assert TwoForm.from_matrix(m).allclose(w, atol=0.0)


@given(coeffs)
def test_pfaffian_squared_is_determinant(c):
    w = TwoForm(c)
    with np.errstate(divide="ignore"):
        det = np.linalg.det(w.matrix())
    assert np.isclose(pfaffian(w) ** 2, det, rtol=1e-8, atol=1e-8)


def test_pfaffian_signs_of_coordinate_forms():
    assert pfaffian(TwoForm.from_terms({(1, 4): 1, (2, 5): 1, (3, 6): 1})) == 1.0
    assert pfaffian(TwoForm.from_terms({(1, 4): 1, (2, 5): 1, (3, 6): -1})) == -1.0
    # normalized so the coordinate structures are positive; e12 + e34 + e56 lands on the other side
    assert pfaffian(TwoForm.from_terms({(1, 2): 1, (3, 4): 1, (5, 6): 1})) == -1.0


@settings(max_examples=50)
@given(coeffs, st.integers(0, 2**32 - 1))
def test_pfaffian_transforms_by_determinant(c, seed):
    a = np.random.default_rng(seed).normal(size=(6, 6))
    w = TwoForm(c)
    lhs = pfaffian(TwoForm.from_matrix(a @ w.matrix() @ a.T))
    assert np.isclose(lhs, np.linalg.det(a) * pfaffian(w), rtol=1e-7, atol=1e-7)


def test_wedge_is_antisymmetric():
    u, v = np.arange(6.0), np.ones(6)
    assert np.array_equal(wedge(u, v), -wedge(v, u))


def test_twoform_arithmetic():
    a = TwoForm.from_terms({(1, 2): 1.0})
    b = TwoForm.from_terms({(3, 4): 2.0})
    assert (a + b - b).allclose(a)
    assert (2 * a)[(1, 2)] == 2.0
    assert (-a)[(2, 1)] == 1.0
    assert "e12" in repr(a)
    with pytest.raises(ValueError):
        TwoForm(np.zeros(14))
