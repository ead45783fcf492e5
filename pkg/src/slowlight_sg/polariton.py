"""Dark-state polariton picture: mixing angle, magnetic moment, Stern-Gerlach deflection."""

from dataclasses import dataclass

import numpy as np

from .constants import C, HBAR, MU_B
from .exceptions import ExtractionError, FullyAtomicLimitError, ParameterError

# the deflection formula is a small-angle result
MAX_SMALL_ANGLE = 1e-2


@dataclass(frozen=True)
class PolaritonState:
    """Derived properties of a dark polariton with mixing angle ``theta``.

    ``v_g = c cos^2(theta)``, ``mu_pol = 2 g_F mu_B sin^2(theta)``,
    ``g_pol = 2 g_F sin^2(theta)`` and ``gyro = -mu_pol / hbar``.
    """

    theta: float
    v_g: float
    mu_pol: float
    g_pol: float
    gyro: float
    g_factor: float = 0.5

    @classmethod
    def from_theta(cls, theta, g_factor=0.5):
        if not 0.0 <= theta < 0.5 * np.pi:
            raise ParameterError(f"mixing angle must lie in [0, pi/2), got {theta}")
        sin2 = np.sin(theta) ** 2
        mu = 2.0 * g_factor * MU_B * sin2
        return cls(
            theta=float(theta),
            v_g=float(C * np.cos(theta) ** 2),
            mu_pol=float(mu),
            g_pol=float(2.0 * g_factor * sin2),
            gyro=float(-mu / HBAR),
            g_factor=g_factor,
        )

    @classmethod
    def from_group_velocity(cls, v_g, g_factor=0.5):
        """Invert ``v_g = c cos^2(theta)``."""
        if not 0 < v_g <= C:
            raise ParameterError(f"group velocity must lie in (0, c], got {v_g}")
        return cls.from_theta(float(np.arccos(np.sqrt(v_g / C))), g_factor)


def from_coupling(omega, gN, g_factor=0.5):
    """Polariton for control Rabi frequency ``omega`` and collective coupling ``gN``.

    The mixing angle follows ``tan(theta) = gN / omega``.
    """
    if omega == 0:
        raise FullyAtomicLimitError("fully atomic limit: omega = 0 gives v_g = 0")
    if omega < 0 or gN < 0:
        raise ParameterError("omega must be positive and gN non-negative")
    return PolaritonState.from_theta(float(np.arctan2(gN, omega)), g_factor)


def sg_deflection(ps, medium_L, grad_x, k):
    """Stern-Gerlach deflection angle ``(L / v_g) (mu_pol / hbar k) dB/dx``, rad.

    This is force times interaction time over the free-space photon momentum.
    """
    if not ps.v_g > 0:
        raise ParameterError("deflection needs a positive group velocity")
    alpha = (medium_L / ps.v_g) * (ps.mu_pol / (HBAR * k)) * grad_x
    if abs(alpha) >= MAX_SMALL_ANGLE:
        raise ParameterError(f"deflection {alpha:g} rad leaves the small-angle regime")
    return alpha


def extract_moment(alpha, v_g, L, grad_x, k):
    """Magnetic moment that reproduces deflection ``alpha`` (inverse of ``sg_deflection``), J/T."""
    if grad_x == 0:
        raise ExtractionError("moment extraction undefined for zero field gradient")
    if not v_g > 0:
        raise ParameterError("moment extraction needs a positive group velocity")
    return alpha * HBAR * k * v_g / (L * grad_x)
