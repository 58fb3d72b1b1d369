import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tractlab.errors import InvalidConfigError
from tractlab.generic_model import (ALPHA, GenericConfig, fourier_amplitudes,
                                    generic_area_function, generic_profile, soft_rectify,
                                    vowel_point, vowel_targets)
from tractlab.mixing import CyclePoint

unit = st.floats(0, 1)
angle = st.floats(0, 2 * np.pi, exclude_max=True)


def test_alpha_value():
    assert ALPHA == pytest.approx(1.154701, abs=1e-6)


@pytest.mark.parametrize("rho,theta,expected", [
    (1.0, np.pi / 3, (1.0, 1.0)),
    (1.0, np.pi / 2, (0.0, ALPHA)),
    (0.0, 2.0, (0.0, 0.0)),
])
def test_fourier_amplitudes(rho, theta, expected):
    pair = fourier_amplitudes(CyclePoint(rho, theta))
    assert (pair.a1, pair.a2) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("y,expected", [(2.0, 2.0), (1.0, 1.0), (0.0, 0.367879441)])
def test_soft_rectify_examples(y, expected):
    assert soft_rectify(y) == pytest.approx(expected, abs=1e-9)


def test_soft_rectify_is_c1_at_one():
    h = 1e-7
    left = (soft_rectify(1.0) - soft_rectify(1.0 - h)) / h
    right = (soft_rectify(1.0 + h) - soft_rectify(1.0)) / h
    assert left == pytest.approx(1.0, abs=1e-6)
    assert right == pytest.approx(1.0, abs=1e-6)


@given(st.floats(-50, 50), st.floats(-50, 50))
def test_soft_rectify_monotone_and_positive(y1, y2):
    lo, hi = sorted((y1, y2))
    assert soft_rectify(lo) <= soft_rectify(hi)
    assert soft_rectify(lo) > 0


@given(st.floats(-30, 30))
def test_soft_rectify_branches(y):
    v = soft_rectify(y)
    if y >= 1:
        assert v == y
    else:
        assert 0 < v < 1


def test_neutral_is_uniform_unit_tube():
    area = generic_area_function(CyclePoint(0.0, 1.0))
    assert np.all(area.areas == 1.0)
    assert area.n == 120
    assert area.tubelet_length_cm == pytest.approx(17.5 / 120)


def test_endpoint_values_of_a():
    # evaluate the continuous profile directly at x = 0 and x = L
    a1, a2 = -2.0, 0.0
    at0 = soft_rectify(1 + a1 + a2)
    atL = soft_rectify(1 - a1 - a2)
    assert at0 == pytest.approx(np.exp(-2), abs=1e-12)
    assert atL == 3.0
    # midpoint samples approach these limits at the two ends
    area = generic_area_function(CyclePoint(1.0, np.pi), GenericConfig(n_tubelets=2000))
    assert area.areas[0] == pytest.approx(at0, rel=1e-4)
    assert area.areas[-1] == pytest.approx(atL, rel=1e-4)


def test_u_glottis_value():
    area = generic_area_function(CyclePoint(1.0, np.pi / 3), GenericConfig(n_tubelets=2000))
    assert area.areas[0] == pytest.approx(3.0, rel=1e-4)


def test_midpoint_sampling():
    cfg = GenericConfig(17.5, 120)
    x = cfg.positions()
    assert x[0] == pytest.approx(17.5 / 240)
    assert x[-1] == pytest.approx(17.5 - 17.5 / 240)


def test_config_validation():
    with pytest.raises(InvalidConfigError):
        GenericConfig(n_tubelets=99)
    with pytest.raises(InvalidConfigError):
        GenericConfig(length_cm=0.0)


def test_vowel_targets_order_and_lookups():
    targets = vowel_targets()
    assert [lab for lab, _ in targets] == ["ɨ", "u", "o", "ɔ", "a", "ɛ", "e", "i"]
    thetas = [t for _, t in targets]
    assert thetas == sorted(thetas)
    for label, (a1, a2) in {"a": (-2, 0), "i": (1, -1), "e": (0, -ALPHA), "ɨ": (2, 0),
                            "u": (1, 1), "o": (0, ALPHA), "ɔ": (-1, 1), "ɛ": (-1, -1)}.items():
        pair = fourier_amplitudes(vowel_point(label))
        assert (pair.a1, pair.a2) == pytest.approx((a1, a2), abs=1e-12), label
    assert dict(targets)["e"] == pytest.approx(3 * np.pi / 2)


@given(unit, angle)
def test_pre_rectification_antisymmetry(rho, theta):
    p = generic_profile(CyclePoint(rho, theta))
    q = generic_profile(CyclePoint(rho, theta + np.pi))
    np.testing.assert_allclose(p + q, 2.0, atol=1e-12)


@given(unit, angle)
def test_areas_strictly_positive(rho, theta):
    assert np.all(generic_area_function(CyclePoint(rho, theta)).areas > 0)


@given(st.floats(0.01, 1), angle)
def test_amplitudes_on_ellipse(rho, theta):
    pair = fourier_amplitudes(CyclePoint(rho, theta))
    r = (pair.a1 / (2 * rho)) ** 2 + (pair.a2 / (rho * ALPHA)) ** 2
    assert r == pytest.approx(1.0, abs=1e-12)
