import warnings
from dataclasses import replace

import numpy as np
import pytest

from slowlight_sg.constants import C
from slowlight_sg.exceptions import FitError, NoPeakError, PulseWindowError
from slowlight_sg.medium import MediumParams, calibrate_to_vg, eit_window, group_velocity
from slowlight_sg.pulse import (
    PulseTrace,
    fit_gaussian_peak,
    measure_vg,
    propagate_pulse,
    pulse_delay,
    vg_bias_scan,
    with_fit,
)

T = np.linspace(-1.0, 1.0, 2001)


def gaussian(t, t0, sigma, amp=1.0, base=0.0):
    return amp * np.exp(-0.5 * ((t - t0) / sigma) ** 2) + base


@pytest.fixture(scope="module")
def slow():
    return calibrate_to_vg(MediumParams(), 300.0)


def test_vacuum_delay_is_transit_time():
    vac = MediumParams(coupling_collective=0.0)
    delay, _ = pulse_delay(vac, sigma_t=1e-9)
    assert delay == pytest.approx(0.05 / C, rel=1e-3)
    assert delay == pytest.approx(1.67e-10, rel=5e-3)


def test_slow_light_delay(slow):
    delay, err = pulse_delay(slow, 10e-3)
    assert delay == pytest.approx(0.05 / 300.0, rel=0.02)
    assert delay == pytest.approx(1.67e-4, rel=0.02)
    assert err >= 0


def test_fit_agrees_with_argmax(slow):
    entry, exit = propagate_pulse(slow, 0.0, 10e-3)
    fit_delay = fit_gaussian_peak(exit).peak_time - fit_gaussian_peak(entry).peak_time
    raw_delay = exit.t[np.argmax(exit.intensity)] - entry.t[np.argmax(entry.intensity)]
    assert abs(fit_delay - raw_delay) <= exit.dt


def test_exact_gaussian_recovered():
    fit = fit_gaussian_peak(PulseTrace(T, gaussian(T, 0.123, 0.08, 2.0, 0.01)))
    assert fit.peak_time == pytest.approx(0.123, rel=1e-6)
    assert fit.sigma == pytest.approx(0.08, rel=1e-6)
    assert fit.residual < 1e-6


def test_noisy_gaussian_monte_carlo():
    sigma = 0.08
    clean = gaussian(T, 0.05, sigma)
    rng = np.random.default_rng(12345)
    t0 = np.array([fit_gaussian_peak(PulseTrace(T, clean + 0.01 * rng.standard_normal(T.size))).peak_time
                   for _ in range(100)])
    assert np.max(np.abs(t0 - 0.05)) < 0.05 * sigma
    print(f"t0 spread over 100 trials: {np.std(t0) / sigma:.2e} sigma")


def test_two_peaks_rejected():
    y = gaussian(T, -0.5, 0.05) + gaussian(T, 0.5, 0.05)
    with pytest.raises(FitError):
        fit_gaussian_peak(PulseTrace(T, y))


def test_flat_trace_has_no_peak():
    with pytest.raises(NoPeakError):
        fit_gaussian_peak(PulseTrace(T, np.ones_like(T)))


def test_with_fit_attaches_parameters():
    tr = with_fit(PulseTrace(T, gaussian(T, 0.0, 0.1)))
    assert tr.fit_peak_time == pytest.approx(0.0, abs=1e-9)
    assert tr.fit_sigma == pytest.approx(0.1, rel=1e-6)


@pytest.mark.parametrize("vg", [300.0, 1000.0])
def test_measured_vg_matches_dispersion(vg):
    m = calibrate_to_vg(MediumParams(), vg)
    sigma_t = 1.0 / (0.05 * eit_window(m))
    measured, unc = measure_vg(m, sigma_t)
    assert measured == pytest.approx(group_velocity(m), rel=0.02)
    assert unc >= 0


def test_delay_proportional_to_length(slow):
    d1, _ = pulse_delay(slow, 10e-3, L=0.05)
    d2, _ = pulse_delay(slow, 10e-3, L=0.10)
    assert d2 / d1 == pytest.approx(2.0, rel=1e-3)


def test_delay_stable_under_time_refinement(slow):
    coarse, _ = pulse_delay(slow, 10e-3, n_samples=2**13)
    fine, _ = pulse_delay(slow, 10e-3, n_samples=2**15)
    assert fine == pytest.approx(coarse, rel=1e-4)


def test_energy_not_created(slow):
    entry, exit = propagate_pulse(slow, 0.0, 10e-3)
    assert exit.energy <= entry.energy
    assert np.all(exit.intensity >= 0)


def test_energy_conserved_without_decoherence():
    m = calibrate_to_vg(MediumParams(gamma_c=0.0), 300.0)
    entry, exit = propagate_pulse(m, 0.0, 10e-3)
    assert exit.energy == pytest.approx(entry.energy, rel=1e-6)


def test_bandwidth_checks(slow):
    window = eit_window(slow)
    with pytest.warns(UserWarning):
        propagate_pulse(slow, 0.0, 1.0 / (0.5 * window))
    with pytest.raises(PulseWindowError):
        propagate_pulse(slow, 0.0, 1.0 / (2.0 * window))
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        propagate_pulse(slow, 0.0, 1.0 / (0.05 * window))


def test_bias_scan_reports_rows(slow):
    window = eit_window(slow)
    rows = vg_bias_scan(slow, [1.0 / (f * window) for f in (0.02, 0.1, 0.4)])
    assert [r[1] for r in rows] == pytest.approx([0.02, 0.1, 0.4])
    assert abs(rows[0][3]) < 0.02
    for _, _, vg, bias in rows:
        assert vg > 0 and np.isfinite(bias)


def test_vacuum_pulse_skips_window_check():
    vac = replace(MediumParams(), coupling_collective=0.0)
    propagate_pulse(vac, 0.0, 1e-9)
