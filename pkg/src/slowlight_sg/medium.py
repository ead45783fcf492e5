"""
Linear response of a Lambda-type three-level medium to a weak signal field.

The signal couples |g-> to |e>, a strong control field of Rabi frequency
``rabi_control`` couples |g+> to |e>. In the weak-signal limit the medium is
fully described by the susceptibility

    chi(delta) = A (delta + i gamma_c) / [Omega^2/4 - (delta + i gamma_c)(delta + Delta + i Gamma/2)]

with ``delta`` the two-photon detuning and ``A = (g sqrt N)^2 / (2 omega_s)``.
With that choice of ``A`` the slow-light group index ``omega dn/domega`` at
``delta = 0`` equals ``(g sqrt N / Omega)^2`` for ``gamma_c = Delta = 0``, which is
exactly ``tan^2`` of the dark-polariton mixing angle.

All frequencies are angular frequencies in rad/s.
"""

import warnings
from dataclasses import dataclass, field, replace

import numpy as np

from .constants import C, GAMMA_RB_D1, TWO_PI
from .exceptions import (
    LosslessSingularError,
    ParameterError,
    UnreachableVelocityError,
    WindowTooNarrowError,
)

# bounds on the dimensionless coupling strength A / Gamma used by calibration
COUPLING_BOUNDS = (1e-12, 1e2)

# FD step for dn/domega, in units of the EIT window Omega^2/Gamma
_FD_STEP_FRACTION = 1e-3
_FD_RTOL = 1e-3
_FD_MAX_HALVINGS = 40


@dataclass(frozen=True)
class MediumParams:
    """Atomic and optical parameters of the vapor cell.

    Attributes
    ----------
    lambda_s : float
        Signal wavelength, m.
    cell_length : float
        Cell length L, m.
    rabi_control : float
        Control Rabi frequency Omega, rad/s.
    coupling_collective : float
        Collective coupling g sqrt(N), rad/s.
    gamma_e : float
        Excited-state decay rate Gamma, rad/s.
    gamma_c : float
        Ground-state coherence decay rate, rad/s.
    delta_one_photon : float
        One-photon detuning of the control field, rad/s.
    g_factor : float
        Hyperfine g-factor g_F.
    """

    lambda_s: float = 795e-9
    cell_length: float = 0.050
    rabi_control: float = TWO_PI * 500e3
    coupling_collective: float = 3.34e9
    gamma_e: float = GAMMA_RB_D1
    gamma_c: float = TWO_PI * 1e3
    delta_one_photon: float = 0.0
    g_factor: float = 0.5
    omega_s: float = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.lambda_s > 0:
            raise ParameterError(f"lambda_s must be positive, got {self.lambda_s}")
        if not self.cell_length > 0:
            raise ParameterError(f"cell_length must be positive, got {self.cell_length}")
        for name in ("rabi_control", "coupling_collective", "gamma_e", "gamma_c"):
            if getattr(self, name) < 0:
                raise ParameterError(f"{name} must be non-negative")
        if self.gamma_c == 0 and self.gamma_e == 0:
            raise LosslessSingularError("lossless-singular medium: gamma_c = gamma_e = 0")
        if not self.gamma_c < self.gamma_e:
            raise ParameterError("gamma_c must be smaller than gamma_e")
        object.__setattr__(self, "omega_s", TWO_PI * C / self.lambda_s)

    @property
    def k(self):
        """Free-space signal wavenumber, 1/m."""
        return TWO_PI / self.lambda_s

    @property
    def coupling_amplitude(self):
        """Prefactor A of the susceptibility, rad/s."""
        return self.coupling_collective**2 / (2.0 * self.omega_s)

    @property
    def coupling_strength(self):
        """Dimensionless coupling A/Gamma (half the peak two-level Im chi)."""
        return self.coupling_amplitude / self.gamma_e

    def with_coupling_strength(self, strength):
        """Copy with g sqrt(N) set so that ``coupling_strength == strength``."""
        amplitude = strength * self.gamma_e
        return replace(self, coupling_collective=float(np.sqrt(2.0 * self.omega_s * amplitude)))


@dataclass(frozen=True)
class ComplexSusceptibility:
    chi: complex
    delta: float


def eit_window(p):
    """Power-broadened transparency width Omega^2/Gamma, rad/s."""
    return p.rabi_control**2 / p.gamma_e


def _check_singular(p):
    if p.gamma_c == 0 and p.gamma_e == 0:
        raise LosslessSingularError("lossless-singular medium: gamma_c = gamma_e = 0")


def _chi(p, delta):
    delta = np.asarray(delta, dtype=float)
    two_photon = delta + 1j * p.gamma_c
    optical = delta + p.delta_one_photon + 0.5j * p.gamma_e
    denom = 0.25 * p.rabi_control**2 - two_photon * optical
    return p.coupling_amplitude * two_photon / denom


def susceptibility(p, delta):
    """Complex susceptibility at two-photon detuning ``delta`` (scalar or array)."""
    _check_singular(p)
    chi = _chi(p, delta)
    if np.ndim(chi) == 0:
        chi = complex(chi)
    return ComplexSusceptibility(chi=chi, delta=delta)


def susceptibility_slope(p, delta):
    """Analytic d chi / d delta, 1/(rad/s)."""
    _check_singular(p)
    delta = np.asarray(delta, dtype=float)
    two_photon = delta + 1j * p.gamma_c
    optical = delta + p.delta_one_photon + 0.5j * p.gamma_e
    denom = 0.25 * p.rabi_control**2 - two_photon * optical
    d_denom = -(two_photon + optical)
    return p.coupling_amplitude * (denom - two_photon * d_denom) / denom**2


def dispersion_slope(p, delta=0.0):
    """Analytic dn/d delta (equal to dn/domega for the signal), s/rad."""
    return 0.5 * np.real(susceptibility_slope(p, delta))


def refractive_index(p, delta):
    """Refractive index and intensity absorption coefficient.

    Returns
    -------
    n : float or ndarray
        ``1 + Re(chi)/2``.
    kappa : float or ndarray
        ``k Im(chi)``, 1/m; transmitted intensity is ``exp(-kappa L)``.
    """
    chi = susceptibility(p, delta).chi
    if np.max(np.abs(chi)) > 0.1:
        warnings.warn("|chi| > 0.1: dilute-medium index expansion is inaccurate", stacklevel=2)
    return 1.0 + 0.5 * np.real(chi), p.k * np.imag(chi)


def _half_re_chi_derivative(p, h):
    return 0.25 * (np.real(_chi(p, h)) - np.real(_chi(p, -h))) / h


def group_velocity(p):
    """Group velocity c / (n + omega dn/domega) at two-photon resonance, m/s.

    dn/domega comes from a central difference whose step starts at 1e-3 of the
    EIT window and is halved until two successive estimates agree to 0.1 %.
    """
    if not p.rabi_control > 0:
        raise ParameterError("group velocity needs an open EIT window (rabi_control > 0)")
    _check_singular(p)
    h = _FD_STEP_FRACTION * eit_window(p)
    prev = _half_re_chi_derivative(p, h)
    for _ in range(_FD_MAX_HALVINGS):
        h *= 0.5
        cur = _half_re_chi_derivative(p, h)
        if abs(cur - prev) <= _FD_RTOL * abs(cur):
            break
        prev = cur
    else:
        raise WindowTooNarrowError("window too narrow: dn/domega finite difference not converged")
    n0 = 1.0 + 0.5 * float(np.real(_chi(p, 0.0)))
    return C / (n0 + p.omega_s * cur)


def calibrate_to_vg(p, target_vg, rtol=1e-5):
    """Return a copy of ``p`` whose coupling gives ``group_velocity == target_vg``.

    Bisection on log(A/Gamma) inside ``COUPLING_BOUNDS``. ``target_vg == c``
    returns the uncoupled medium.
    """
    if not 0 < target_vg <= C:
        raise ParameterError(f"target velocity must lie in (0, c], got {target_vg}")
    if target_vg == C:
        return replace(p, coupling_collective=0.0)

    lo, hi = np.log(COUPLING_BOUNDS[0]), np.log(COUPLING_BOUNDS[1])

    def vg_at(log_strength):
        return group_velocity(p.with_coupling_strength(np.exp(log_strength)))

    # v_g falls monotonically with coupling
    if vg_at(hi) > target_vg or vg_at(lo) < target_vg:
        raise UnreachableVelocityError(
            f"unreachable velocity {target_vg} m/s: coupling strength outside {COUPLING_BOUNDS}"
        )
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        vg = vg_at(mid)
        if abs(vg - target_vg) <= rtol * target_vg:
            break
        if vg > target_vg:
            lo = mid
        else:
            hi = mid
    return p.with_coupling_strength(np.exp(mid))
