"""Self-check suite behind the ``validate`` command.

Each check returns ``(passed, measured value, tolerance)``; values are
deterministic so the report CSV is byte-stable between runs.
"""

from dataclasses import replace

import numpy as np

from .analysis import formula_sweep, extract_moment_from_sweep
from .beamprop import BeamSpec, deflection_at
from .constants import C, MU_B
from .fields import FieldMap, detuning_profile, detuning_slope
from .fock import FockSpace, fock_moment
from .medium import (
    MediumParams,
    calibrate_to_vg,
    dispersion_slope,
    group_velocity,
    susceptibility,
)
from .polariton import PolaritonState, from_coupling, sg_deflection
from .pulse import measure_vg

NARROW = BeamSpec(waist=5e-5)


def _rel(a, b):
    return abs(a - b) / abs(b)


def check_parity(p):
    p = replace(p, delta_one_photon=0.0)
    d = np.linspace(0.01, 3.0, 40) * p.rabi_control
    chi_p, chi_m = susceptibility(p, d).chi, susceptibility(p, -d).chi
    scale = np.max(np.abs(chi_p))
    err = max(np.max(np.abs(chi_p.real + chi_m.real)), np.max(np.abs(chi_p.imag - chi_m.imag))) / scale
    return err < 1e-12, err, 1e-12


def check_transparency_monotone(p):
    rates = np.linspace(0.0, 0.5, 6) * p.gamma_e
    im0 = [susceptibility(replace(p, gamma_c=g), 0.0).chi.imag for g in rates]
    steps = np.diff(im0)
    return bool(np.all(steps > 0)), float(np.min(steps)), 0.0


def check_normal_dispersion(p):
    slope = dispersion_slope(p, 0.0)
    return slope > 0, float(slope), 0.0


def check_group_velocity_fd(p):
    analytic = C / (1.0 + 0.5 * susceptibility(p, 0.0).chi.real + p.omega_s * dispersion_slope(p, 0.0))
    err = _rel(group_velocity(p), analytic)
    return err < 1e-3, err, 1e-3


def check_closed_loop(p):
    p = replace(p, gamma_c=0.0, delta_one_photon=0.0)
    err = _rel(from_coupling(p.rabi_control, p.coupling_collective, p.g_factor).v_g, group_velocity(p))
    return err < 0.01, err, 0.01


def check_fock(p):
    worst = 0.0
    for n in range(1, 6):
        for theta in (0.2, np.pi / 4, 1.2):
            ref = PolaritonState.from_theta(theta, p.g_factor).mu_pol
            worst = max(worst, _rel(fock_moment(FockSpace(n), theta, p.g_factor), ref))
    return worst < 1e-12, worst, 1e-12


def check_roundtrip(p, f):
    omegas = p.rabi_control * np.array([0.5, 1.0, 2.0])
    sweep = formula_sweep(omegas, p.coupling_collective, p.cell_length, f.grad_x, p.k, p.g_factor)
    mu, _ = extract_moment_from_sweep(sweep)
    ref = np.mean([from_coupling(o, p.coupling_collective, p.g_factor).mu_pol for o in omegas])
    err = _rel(mu, ref)
    return err < 1e-12, err, 1e-12


def check_zeeman_slope(p, f):
    x = np.linspace(-1e-3, 1e-3, 11)
    prof = detuning_profile(f, p.g_factor, 0.0, x)
    err = _rel(np.mean(np.diff(prof) / np.diff(x)), detuning_slope(f, p.g_factor))
    return err < 1e-9, err, 1e-9


def check_dual_model(p, f):
    m = calibrate_to_vg(replace(p, gamma_c=0.0, delta_one_photon=0.0), 300.0)
    wave = deflection_at(m, f, NARROW, 0.0).angle
    particle = sg_deflection(from_coupling(m.rabi_control, m.coupling_collective, m.g_factor),
                             m.cell_length, f.grad_x, m.k)
    err = _rel(wave, particle)
    return err < 0.05, err, 0.05


def check_gradient_reversal(p, f):
    a = deflection_at(p, f, BeamSpec(), 0.0).angle
    b = deflection_at(p, replace(f, grad_x=-f.grad_x), BeamSpec(), 0.0).angle
    err = abs(a + b) / abs(a)
    return err < 1e-9, err, 1e-9


def check_zero_gradient(p, f):
    a = abs(deflection_at(p, replace(f, grad_x=0.0), BeamSpec(), 0.0).angle)
    return a < 1e-9, a, 1e-9


def check_power_conservation(p, f):
    m = replace(p, gamma_c=0.0, delta_one_photon=0.0)
    t = deflection_at(m, replace(f, grad_x=0.0), BeamSpec(), 0.0).transmission
    err = abs(t - 1.0)
    return err < 1e-6, err, 1e-6


def check_pulse_vg(p):
    m = calibrate_to_vg(p, 300.0)
    err = _rel(measure_vg(m, 10e-3)[0], group_velocity(m))
    return err < 0.02, err, 0.02


def check_moment_scale(p):
    ps = PolaritonState.from_group_velocity(300.0, p.g_factor)
    err = _rel(ps.mu_pol, 2.0 * p.g_factor * MU_B * (1.0 - 300.0 / C))
    return err < 1e-12, err, 1e-12


def run_checks(medium=None, fmap=None):
    """Run every check; returns a list of ``(name, passed, value, tolerance)``."""
    p = MediumParams() if medium is None else medium
    f = FieldMap() if fmap is None else fmap
    checks = [
        ("susceptibility_parity", lambda: check_parity(p)),
        ("transparency_monotone_in_gamma_c", lambda: check_transparency_monotone(p)),
        ("normal_dispersion_at_resonance", lambda: check_normal_dispersion(p)),
        ("group_velocity_fd_vs_analytic", lambda: check_group_velocity_fd(p)),
        ("polariton_medium_closed_loop", lambda: check_closed_loop(p)),
        ("fock_moment_vs_analytic", lambda: check_fock(p)),
        ("polariton_moment_slow_light", lambda: check_moment_scale(p)),
        ("formula_extraction_roundtrip", lambda: check_roundtrip(p, f)),
        ("zeeman_profile_slope", lambda: check_zeeman_slope(p, f)),
        ("dual_model_narrow_beam", lambda: check_dual_model(p, f)),
        ("gradient_reversal", lambda: check_gradient_reversal(p, f)),
        ("zero_gradient_no_deflection", lambda: check_zero_gradient(p, f)),
        ("power_conservation_lossless", lambda: check_power_conservation(p, f)),
        ("pulse_vg_vs_dn_domega", lambda: check_pulse_vg(p)),
    ]
    results = []
    for name, fn in checks:
        passed, value, tol = fn()
        results.append((name, bool(passed), float(value), float(tol)))
    return results
