import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from acs6.acs_core import Acs, acs_from_form, fundamental_form, standard_structure, validate
from acs6.errors import NotCompatible
from acs6.linalg6 import TwoForm, pfaffian

from strategies import rotations


def test_i0_definition():
    i0 = standard_structure(0)
    e = np.eye(6)
    assert np.array_equal(i0.m @ e[0], -e[3])
    r = validate(i0.m)
    assert (r.square_defect, r.orth_defect, r.skew_defect, r.orientation) == (0.0, 0.0, 0.0, 1)
    assert r.accepted and r.in_z


def test_standard_structures_distinct_and_positive():
    mats = [standard_structure(k) for k in range(4)]
    for a in range(4):
        assert mats[a].orientation == 1
        for b in range(a + 1, 4):
            assert not mats[a].allclose(mats[b])
    with pytest.raises(ValueError):
        standard_structure(4)


def test_identity_rejected():
    r = validate(np.eye(6))
    assert not r.accepted and r.square_defect == 2.0
    with pytest.raises(NotCompatible):
        Acs(np.eye(6))


def test_negative_orientation_is_accepted_but_outside_z():
    m = -standard_structure(0).m
    r = validate(m)
    assert r.accepted and r.orientation == -1 and not r.in_z
    assert Acs(m).orientation == -1


def test_report_dict_keys():
    d = validate(standard_structure(1).m).to_dict()
    assert {"square_defect", "orth_defect", "skew_defect", "orientation", "accepted", "in_z"} <= set(d)


def test_fundamental_form_of_i0():
    w = fundamental_form(standard_structure(0))
    assert w.allclose(TwoForm.from_terms({(1, 4): 1, (2, 5): 1, (3, 6): 1}))
    assert pfaffian(w) == 1.0


def test_form_round_trip_and_rejection():
    j = standard_structure(2)
    assert acs_from_form(fundamental_form(j)).allclose(j, atol=0.0)
    with pytest.raises(NotCompatible):
        acs_from_form(TwoForm.from_terms({(1, 2): 1.0}))
    with pytest.raises(NotCompatible):
        acs_from_form(TwoForm.from_terms({(1, 4): 2.0, (2, 5): 1, (3, 6): 1}))


@given(rotations(), st.integers(0, 3))
def test_conjugation_stability(s, k):
    j = standard_structure(k).conjugate(s)
    r = validate(j.m)
    assert r.accepted and r.orientation == 1
    # orthogonal with square -1 forces skew; checked independently
    assert np.max(np.abs(j.m + j.m.T)) < 1e-9


def test_matmul_composes():
    i0 = standard_structure(0)
    assert np.allclose(i0 @ i0, -np.eye(6))
