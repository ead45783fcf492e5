"""Brute-force Fock-space check of the polariton magnetic moment.

Basis states are ``|n photons> (x) |a_1 ... a_N>`` with each atom in g- (bit 0)
or g+ (bit 1). A basis index is ``n * 2**N + mask``. Operators act matrix-free
on dense state vectors, which keeps the construction easy to audit.
"""

from dataclasses import dataclass

import numpy as np

from .constants import MU_B
from .exceptions import ParameterError

MAX_ATOMS = 12
MAX_PHOTONS = 3


@dataclass(frozen=True)
class FockSpace:
    n_atoms: int
    max_photons: int = 1

    def __post_init__(self):
        if not 1 <= self.n_atoms <= MAX_ATOMS:
            raise ParameterError(f"n_atoms must be in [1, {MAX_ATOMS}]")
        if not 1 <= self.max_photons <= MAX_PHOTONS:
            raise ParameterError(f"max_photons must be in [1, {MAX_PHOTONS}]")

    @property
    def n_spin(self):
        return 2**self.n_atoms

    @property
    def dim(self):
        return (self.max_photons + 1) * self.n_spin

    def index(self, photons, mask):
        return photons * self.n_spin + mask

    def vacuum(self):
        """Zero photons, all atoms in g-."""
        state = np.zeros(self.dim, dtype=complex)
        state[self.index(0, 0)] = 1.0
        return state

    def _grid(self, state):
        return state.reshape(self.max_photons + 1, self.n_spin)

    def create_photon(self, state):
        """a^dagger, truncated at ``max_photons``."""
        src = self._grid(state)
        out = np.zeros_like(src)
        n = np.arange(1, self.max_photons + 1)
        out[1:] = np.sqrt(n)[:, None] * src[:-1]
        return out.ravel()

    def flip_up(self, state, j):
        """sigma_{+-}^j: move atom ``j`` from g- to g+ (annihilates if already g+)."""
        src = self._grid(state)
        out = np.zeros_like(src)
        masks = np.arange(self.n_spin)
        down = (masks >> j) & 1 == 0
        out[:, masks[down] | (1 << j)] = src[:, masks[down]]
        return out.ravel()

    def photon_number(self, state):
        weights = np.sum(np.abs(self._grid(state)) ** 2, axis=1)
        return float(np.dot(np.arange(self.max_photons + 1), weights))

    def spin_up_count(self, state):
        """<S_z> with S_z the number of atoms in g+."""
        masks = np.arange(self.n_spin)
        popcount = np.array([bin(m).count("1") for m in masks], dtype=float)
        weights = np.sum(np.abs(self._grid(state)) ** 2, axis=0)
        return float(np.dot(popcount, weights))


def fock_build_polariton(fs, theta):
    """One-polariton state Psi^dagger |0> with
    Psi^dagger = cos(theta) a^dagger - sin(theta) / sqrt(N) sum_j sigma_{+-}^j.
    """
    vac = fs.vacuum()
    spin_wave = sum(fs.flip_up(vac, j) for j in range(fs.n_atoms)) / np.sqrt(fs.n_atoms)
    state = np.cos(theta) * fs.create_photon(vac) - np.sin(theta) * spin_wave
    norm = np.linalg.norm(state)
    if abs(norm - 1.0) > 1e-12:
        raise AssertionError(f"polariton state not normalized: |psi| = {norm!r}")
    return state


def fock_moment(fs, theta, g_factor=0.5):
    """Polariton moment 2 g_F mu_B (<1|S_z|1> - <0|S_z|0>), J/T."""
    one = fock_build_polariton(fs, theta)
    return 2.0 * g_factor * MU_B * (fs.spin_up_count(one) - fs.spin_up_count(fs.vacuum()))
