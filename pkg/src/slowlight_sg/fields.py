"""Transverse Stern-Gerlach field map and the Zeeman two-photon detuning it imposes."""

from dataclasses import dataclass

import numpy as np

from .constants import HBAR, MU_B
from .exceptions import ParameterError


@dataclass(frozen=True)
class FieldMap:
    """Linear transverse field profile B_z(x) = b0 + grad_x * x.

    Defaults are a 116 mG bias and a 9.1e-6 T/m gradient. Note that the
    gradient quoted with the experiment, "910 uG/mm", converts to 9.1e-5 T/m;
    the default keeps the value that reproduces the reported ~2e-5 rad
    deflection at a few hundred m/s.
    """

    b0: float = 116e-7
    grad_x: float = 9.1e-6

    def b_z(self, x):
        return self.b0 + self.grad_x * np.asarray(x, dtype=float)

    def check_window(self, half_width):
        """Raise if the field changes sign inside +-half_width."""
        if self.b0 > 0 and abs(self.grad_x) * half_width >= self.b0:
            raise ParameterError(
                f"field changes sign within +-{half_width:g} m (b0={self.b0:g} T, grad={self.grad_x:g} T/m)"
            )


def zeeman_shift(f, g_factor, x):
    """Two-photon detuning shift 2 g_F mu_B B_z(x) / hbar at position ``x``, rad/s."""
    return 2.0 * g_factor * MU_B * f.b_z(x) / HBAR


def detuning_slope(f, g_factor):
    """Transverse gradient of the two-photon detuning, rad/(s m)."""
    return 2.0 * g_factor * MU_B * f.grad_x / HBAR


def detuning_profile(f, g_factor, delta_laser, grid):
    """Two-photon detuning across ``grid``, referenced to the beam axis.

    The on-axis value equals ``delta_laser``, the scanned detuning.
    """
    grid = np.asarray(grid, dtype=float)
    steps = np.diff(grid)
    if steps.size and not (np.all(steps > 0) or np.all(steps < 0)):
        raise ParameterError("grid must be strictly monotone")
    return delta_laser + (zeeman_shift(f, g_factor, grid) - zeeman_shift(f, g_factor, 0.0))
