import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dsss_radar import (
    BasebandSignal,
    CarrierConfig,
    ValidationError,
    chips_to_baseband,
    generate_msequence,
    make_frequency_plan,
)
from dsss_radar.waveform import FrequencyPlan


def test_one_sample_per_chip_is_identity():
    code = generate_msequence(3)
    sig = chips_to_baseband(code, 1e6, 1, 1)
    np.testing.assert_array_equal(sig.samples, code.chips)
    assert sig.sample_rate == 1e6


def test_sample_and_hold():
    code = generate_msequence(3)
    sig = chips_to_baseband(code, 1e6, 4, 1)
    assert len(sig) == 28
    for i, chip in enumerate(code.chips):
        assert np.all(sig.samples[4 * i: 4 * i + 4] == chip)
    assert sig.sample_rate == 4e6


def test_repetitions_and_power():
    code = generate_msequence(5)
    sig = chips_to_baseband(code, 2e6, 3, 4)
    assert len(sig) == 31 * 3 * 4
    assert sig.power == 1.0
    assert sig.duration == pytest.approx(31 * 4 / 2e6, rel=1e-15)


@settings(max_examples=25, deadline=None)
@given(spc=st.integers(1, 9), width=st.integers(2, 8))
def test_decimation_recovers_chips(spc, width):
    code = generate_msequence(width)
    sig = chips_to_baseband(code, 1e6, spc, 2)
    centers = sig.samples.real[spc // 2:: spc][: code.length]
    np.testing.assert_array_equal(centers, code.chips)


@pytest.mark.parametrize("kwargs", [{"chip_rate": 0}, {"samples_per_chip": 0}, {"repetitions": 0}])
def test_chips_to_baseband_validation(kwargs):
    args = {"chip_rate": 1e6, "samples_per_chip": 1, "repetitions": 1} | kwargs
    with pytest.raises(ValidationError):
        chips_to_baseband(generate_msequence(3), **args)


def test_signal_validation():
    with pytest.raises(ValidationError):
        BasebandSignal([], 1.0)
    with pytest.raises(ValidationError):
        BasebandSignal([1.0], 0.0)


def test_carrier_wavelength():
    assert CarrierConfig().wavelength_m == pytest.approx(0.124913524, abs=1e-9)
    assert CarrierConfig.nominal().wavelength_m == 0.125
    with pytest.raises(ValidationError):
        CarrierConfig(0.0)


def test_plan_3ghz_128_steps():
    plan = make_frequency_plan(2.4e9, 3e9, 128)
    assert plan.step_hz == 23437500.0
    # exact rational values c/step and c/bandwidth
    assert plan.unambiguous_range_m == pytest.approx(12.791144874666667, rel=1e-14)
    assert plan.bin_spacing_m == pytest.approx(0.09993081933333334, rel=1e-14)
    assert plan.frequencies[0] == 2.4e9
    assert plan.frequencies[-1] == pytest.approx(2.4e9 + 127 * 23437500.0)


def test_plan_two_steps():
    plan = make_frequency_plan(1e9, 2e6, 2)
    np.testing.assert_array_equal(plan.frequencies, [1e9, 1e9 + 1e6])


@settings(max_examples=50)
@given(
    start=st.floats(1e6, 1e11),
    bw=st.floats(1e3, 1e10),
    steps=st.integers(2, 4096),
)
def test_plan_identity(start, bw, steps):
    plan = make_frequency_plan(start, bw, steps)
    assert plan.bin_spacing_m * plan.steps == pytest.approx(plan.unambiguous_range_m, rel=1e-12)


@pytest.mark.parametrize("bw, steps", [(0, 10), (-1, 10), (1e9, 1), (1e9, 2.5)])
def test_plan_validation(bw, steps):
    with pytest.raises(ValidationError):
        make_frequency_plan(2.4e9, bw, steps)
    with pytest.raises(ValidationError):
        FrequencyPlan(2.4e9, 0.0, 8)
