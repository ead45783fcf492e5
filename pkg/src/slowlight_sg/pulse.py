"""
Group velocity "measured" the way it is done on the bench: send a Gaussian
pulse through the cell and fit a Gaussian to the delayed output.

The medium is linear in the signal, so propagation is done exactly in the
frequency domain: every spectral component picks up the complex phase
k(omega) n(omega) L of the cell.
"""

import warnings
from dataclasses import dataclass, replace

import numpy as np
from scipy.optimize import least_squares

from .constants import C
from .exceptions import NoPeakError, PoorFitError, PulseWindowError
from .medium import eit_window, group_velocity, susceptibility

DEFAULT_SIGMA_T = 10e-3
DEFAULT_SAMPLES = 2**14
MAX_RESIDUAL = 0.05
MIN_PEAK_TO_MEDIAN = 3.0


@dataclass(frozen=True)
class PulseTrace:
    t: np.ndarray
    intensity: np.ndarray
    fit_peak_time: float = None
    fit_sigma: float = None

    @property
    def dt(self):
        return float(self.t[1] - self.t[0])

    @property
    def energy(self):
        return float(np.sum(self.intensity) * self.dt)


@dataclass(frozen=True)
class GaussianFit:
    peak_time: float
    sigma: float
    residual: float
    amplitude: float
    baseline: float
    peak_time_err: float


def _gaussian(t, amplitude, t0, sigma, baseline):
    return amplitude * np.exp(-0.5 * ((t - t0) / sigma) ** 2) + baseline


def fit_gaussian_peak(trace):
    """Least-squares fit of ``A exp(-(t-t0)^2 / 2 sigma^2) + baseline``.

    Starts from the intensity moments, with the baseline guessed as the median
    of the first decile of samples. Raises ``NoPeakError`` when the maximum is
    less than 3x the median and ``PoorFitError`` when the RMS residual exceeds
    5 % of the fitted amplitude.
    """
    t = np.asarray(trace.t, dtype=float)
    y = np.asarray(trace.intensity, dtype=float)
    peak = y.max()
    median = np.median(y)
    if peak <= 0 or (median > 0 and peak / median < MIN_PEAK_TO_MEDIAN):
        raise NoPeakError("no peak: trace maximum is not dominant")

    baseline0 = float(np.median(y[: max(1, y.size // 10)]))
    w = np.clip(y - baseline0, 0.0, None)
    t0 = np.sum(t * w) / np.sum(w)
    sigma0 = np.sqrt(np.sum((t - t0) ** 2 * w) / np.sum(w))
    amp0 = peak - baseline0

    # fit in scaled units for conditioning
    u = (t - t0) / sigma0
    target = y / amp0
    sol = least_squares(lambda q: _gaussian(u, *q) - target, x0=(1.0, 0.0, 1.0, baseline0 / amp0),
                        method="lm", xtol=1e-14, ftol=1e-14, gtol=1e-14, max_nfev=10000)
    if not sol.success:
        raise PoorFitError(f"poor fit: {sol.message}")
    popt = sol.x

    amplitude = popt[0] * amp0
    resid = sol.fun * amp0
    rms = float(np.sqrt(np.mean(resid**2)) / abs(amplitude))
    if not np.isfinite(rms) or rms > MAX_RESIDUAL:
        raise PoorFitError(f"poor fit: residual RMS {rms:.3g} of peak")
    # covariance scaled by the residual variance, as for unweighted data
    dof = max(1, y.size - popt.size)
    cov = np.linalg.pinv(sol.jac.T @ sol.jac) * (np.sum(sol.fun**2) / dof)
    t0_err = float(np.sqrt(cov[1, 1])) * sigma0
    return GaussianFit(
        peak_time=float(t0 + popt[1] * sigma0),
        sigma=float(abs(popt[2]) * sigma0),
        residual=rms,
        amplitude=float(amplitude),
        baseline=float(popt[3] * amp0),
        peak_time_err=t0_err,
    )


def _check_bandwidth(medium, sigma_t):
    if medium.coupling_collective == 0:
        return
    window = eit_window(medium)
    ratio = (1.0 / sigma_t) / window if window > 0 else np.inf
    if ratio > 1.0:
        raise PulseWindowError(
            f"pulse exceeds window: bandwidth 1/sigma_t is {ratio:.3g}x the EIT window"
        )
    if ratio > 0.2:
        warnings.warn(f"pulse bandwidth is {ratio:.3g}x the EIT window; expect a biased delay", stacklevel=3)


def propagate_pulse(medium, delta_laser=0.0, sigma_t=DEFAULT_SIGMA_T, L=None, n_samples=DEFAULT_SAMPLES,
                    peak_power=1e-6):
    """Entry and exit traces of a Gaussian pulse (intensity rms width ``sigma_t``).

    The entry peak sits at t = 0. ``L`` defaults to the cell length.
    """
    L = medium.cell_length if L is None else L
    _check_bandwidth(medium, sigma_t)
    if medium.rabi_control > 0 and medium.coupling_collective > 0:
        delay_guess = L / group_velocity(medium)
    else:
        delay_guess = L / C
    span = 16.0 * sigma_t + 2.0 * abs(delay_guess)
    dt = span / n_samples
    t = -8.0 * sigma_t + dt * np.arange(n_samples)

    envelope = np.sqrt(peak_power) * np.exp(-(t**2) / (4.0 * sigma_t**2))
    # numpy's inverse transform carries exp(+i w t); the optical envelope
    # component at detuning d carries exp(-i d t), hence d = -w
    detuning = -2.0 * np.pi * np.fft.fftfreq(n_samples, dt)
    chi = susceptibility(medium, delta_laser + detuning).chi
    k = (medium.omega_s + detuning) / C
    # exp(i k n L) without the constant carrier phase omega_s L / c
    phase = detuning * L / C + k * 0.5 * np.real(chi) * L
    gain = np.exp(1j * phase - 0.5 * k * np.imag(chi) * L)
    out = np.fft.ifft(np.fft.fft(envelope) * gain)

    entry = PulseTrace(t=t, intensity=np.abs(envelope) ** 2)
    exit = PulseTrace(t=t, intensity=np.abs(out) ** 2)
    return entry, exit


def with_fit(trace):
    """Copy of ``trace`` carrying its Gaussian fit parameters."""
    fit = fit_gaussian_peak(trace)
    return replace(trace, fit_peak_time=fit.peak_time, fit_sigma=fit.sigma)


def pulse_delay(medium, sigma_t=DEFAULT_SIGMA_T, delta_laser=0.0, L=None, n_samples=DEFAULT_SAMPLES):
    """Fitted peak delay between exit and entry traces and its 1-sigma uncertainty, s."""
    entry, exit = propagate_pulse(medium, delta_laser, sigma_t, L, n_samples)
    fin, fout = fit_gaussian_peak(entry), fit_gaussian_peak(exit)
    delay = fout.peak_time - fin.peak_time
    return delay, float(np.hypot(fin.peak_time_err, fout.peak_time_err))


def measure_vg(medium, sigma_t=DEFAULT_SIGMA_T, delta_laser=0.0, n_samples=DEFAULT_SAMPLES):
    """Group velocity from the fitted pulse delay: (v_g, uncertainty) in m/s."""
    L = medium.cell_length
    delay, err = pulse_delay(medium, sigma_t, delta_laser, L, n_samples)
    vg = L / delay
    return vg, L * err / delay**2


def vg_bias_scan(medium, sigmas, n_samples=DEFAULT_SAMPLES):
    """Pulse-measured v_g against pulse duration, to expose the bandwidth bias.

    Returns rows ``(sigma_t, bandwidth / window, v_g measured, relative bias)``.
    """
    reference = group_velocity(medium)
    window = eit_window(medium)
    rows = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for s in sigmas:
            vg, _ = measure_vg(medium, s, n_samples=n_samples)
            rows.append((float(s), 1.0 / (s * window), vg, vg / reference - 1.0))
    return rows
