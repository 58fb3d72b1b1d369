from types import SimpleNamespace

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tractlab.acoustics import FormantSet
from tractlab.analysis import (DctPair, DeviationPair, dct_coefficients, functional_check,
                               relative_deviations, se_estimate, within_bin_spread)
from tractlab.errors import InvalidInputError
from tractlab.experiments import SimulationRecord
from tractlab.generic_model import GenericConfig, generic_profile
from tractlab.mixing import CyclePoint
from tractlab.tube_models import drm_params_at, drm_profile

areas = st.lists(st.floats(0.01, 10), min_size=12, max_size=12)


def test_uniform_tube_offset():
    pair = dct_coefficients(np.ones(120))
    assert pair.a1_tilde == pytest.approx(-1 / 60, abs=1e-12)
    assert pair.a2_tilde == pytest.approx(-1 / 60, abs=1e-12)


def test_single_cosine():
    i = np.arange(1, 121)
    pair = dct_coefficients(1 + np.cos(np.pi * i / 120))
    assert pair.a1_tilde == pytest.approx(1 - 1 / 60, abs=1e-12)
    assert pair.a2_tilde == pytest.approx(-1 / 60, abs=1e-12)


def test_zeros():
    assert dct_coefficients(np.zeros(50)) == DctPair(0.0, 0.0)


@given(areas, areas, st.floats(-3, 3))
def test_linearity(a, b, c):
    a, b = np.array(a), np.array(b)
    pa, pb, pc = dct_coefficients(a), dct_coefficients(b), dct_coefficients(a + c * b)
    assert pc.a1_tilde == pytest.approx(pa.a1_tilde + c * pb.a1_tilde, abs=1e-9)
    assert pc.a2_tilde == pytest.approx(pa.a2_tilde + c * pb.a2_tilde, abs=1e-9)


def test_recovers_amplitudes_to_order_one_over_n():
    point = CyclePoint(0.5, 1.0)  # a1 = cos 1, a2 = 0.5 alpha sin 1
    a1 = np.cos(1.0)
    a2 = 0.5 * 4 / 3 * np.sin(np.pi / 3) * np.sin(1.0)
    errors = []
    for n in (120, 240, 480):
        pair = dct_coefficients(generic_profile(point, GenericConfig(n_tubelets=n)))
        err = max(abs(pair.a1_tilde - a1), abs(pair.a2_tilde - a2))
        assert err < 5 / n
        errors.append(err)
    assert errors[0] > errors[1] > errors[2]


@given(st.floats(0, 1), st.floats(0, 2 * np.pi, exclude_max=True))
def test_drm_antipodal_footprint(rho, theta):
    # opposite pre-rectification profiles sum to 2, so their pairs sum to 2 * (-2/n)
    p = dct_coefficients(drm_profile(drm_params_at(CyclePoint(rho, theta))))
    q = dct_coefficients(drm_profile(drm_params_at(CyclePoint(rho, theta + np.pi))))
    assert p.a1_tilde + q.a1_tilde == pytest.approx(-4 / 120, abs=1e-9)
    assert p.a2_tilde + q.a2_tilde == pytest.approx(-4 / 120, abs=1e-9)


def test_se_estimate_examples():
    pair = DctPair(0.2, -0.4)
    assert se_estimate(pair) == DeviationPair(pytest.approx(-0.14), pytest.approx(0.2))
    assert se_estimate(pair, biased=False) == DeviationPair(pytest.approx(-0.1),
                                                            pytest.approx(0.2))


def test_relative_deviations():
    d = relative_deviations(FormantSet(550.0, 1200.0), FormantSet(500.0, 1500.0))
    assert d.df1 == pytest.approx(0.1) and d.df2 == pytest.approx(-0.2)
    with pytest.raises(InvalidInputError):
        relative_deviations(FormantSet(550.0, 1200.0), SimpleNamespace(f1=0.0, f2=1500.0))


def _record(a1, a2, df1, df2, failed=False):
    return SimulationRecord("C1", 0, np.zeros(2), np.nan, np.nan, DctPair(a1, a2),
                            None, DeviationPair(df1, df2), failed)


def test_functional_on_exact_function():
    rng = np.random.default_rng(0)
    recs = [_record(a, b, -a / 2, -b / 2) for a, b in rng.uniform(-0.2, 0.2, (400, 2))]
    rep = functional_check(recs, bin_width=0.05, threshold=0.05)
    assert rep.functional and rep.spread_p95 < 0.05 / 2 + 1e-12
    same = [_record(0.01, 0.01, 0.3, 0.3) for _ in range(150)]
    rep = functional_check(same)
    assert rep.spread_p95 == 0.0 and rep.n_bins == 1 and rep.functional


def test_non_functional_scatter():
    rng = np.random.default_rng(1)
    recs = [_record(0.01, 0.01, *rng.uniform(-1, 1, 2)) for _ in range(200)]
    assert not functional_check(recs).functional


def test_failed_records_ignored_and_minimum_count():
    recs = [_record(0.0, 0.0, 0.0, 0.0) for _ in range(99)]
    recs += [_record(0.0, 0.0, 5.0, 5.0, failed=True) for _ in range(10)]
    with pytest.raises(InvalidInputError):
        functional_check(recs)
    rep = functional_check(recs + [_record(0.0, 0.0, 0.0, 0.0)])
    assert rep.n_records == 100 and rep.spread_p95 == 0.0


def test_bins_ignore_singletons_and_order():
    a1 = [0.01, 0.02, 0.51, 0.99]
    a2 = [0.01, 0.03, 0.51, 0.0]
    df = [0.0, 0.1, 0.5, 0.2]
    out = within_bin_spread(a1, a2, df, df, 0.05)
    assert len(out) == 1 and out[0][1] == 2 and out[0][2] == pytest.approx(0.1)
    rev = within_bin_spread(a1[::-1], a2[::-1], df[::-1], df[::-1], 0.05)
    assert rev == out


def test_report_json():
    recs = [_record(0.0, 0.0, 0.0, 0.0) for _ in range(100)]
    text = functional_check(recs).to_json()
    assert '"functional": true' in text
