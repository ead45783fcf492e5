"""
Wave-optics picture of the deflection: paraxial split-step propagation of the
signal beam through a cell whose complex index varies across the beam.

The transverse Zeeman gradient makes the two-photon detuning, and with it the
refractive index, a function of x. The beam acquires a transverse wavevector
k dn/dx per unit length and leaves the cell tilted, like light through a prism.

Only one transverse dimension (x, along the gradient) is modeled.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .exceptions import GridError, NotConvergedError, ParameterError, SimulationError
from .fields import detuning_profile
from .medium import eit_window, refractive_index

DEFAULT_STEPS = 256
MAX_STEPS = 16384
MIN_SAMPLES_PER_WAIST = 32


@dataclass(frozen=True)
class TransverseField:
    """Complex signal amplitude on a uniform, power-of-two x-grid."""

    grid: np.ndarray
    amplitude: np.ndarray
    z: float = 0.0
    wavelength: float = 795e-9
    n_steps: int = 0

    @property
    def dx(self):
        return float(self.grid[1] - self.grid[0])

    @property
    def k(self):
        return 2.0 * np.pi / self.wavelength

    @property
    def intensity(self):
        return np.abs(self.amplitude) ** 2

    @property
    def power(self):
        return float(np.sum(self.intensity) * self.dx)

    @property
    def centroid(self):
        w = self.intensity
        return float(np.sum(self.grid * w) / np.sum(w))

    @property
    def second_moment(self):
        """Intensity-weighted variance about the centroid, m^2."""
        w = self.intensity
        xc = np.sum(self.grid * w) / np.sum(w)
        return float(np.sum((self.grid - xc) ** 2 * w) / np.sum(w))

    def wavenumbers(self):
        return 2.0 * np.pi * np.fft.fftfreq(self.grid.size, self.dx)

    @property
    def mean_kx(self):
        """Power-weighted transverse wavevector, rad/m."""
        spectrum = np.abs(np.fft.fft(self.amplitude)) ** 2
        return float(np.sum(self.wavenumbers() * spectrum) / np.sum(spectrum))


def make_grid(window, n_points):
    """Uniform grid of ``n_points`` (a power of two) samples spanning ``window``."""
    n_points = int(n_points)
    if n_points < 2 or n_points & (n_points - 1):
        raise GridError(f"grid size must be a power of two, got {n_points}")
    dx = window / n_points
    return (np.arange(n_points) - n_points // 2) * dx


def auto_grid(waist, length, wavelength):
    """Pick (window, n_points) that holds the beam after ``length`` and resolves the waist."""
    rayleigh = np.pi * waist**2 / wavelength
    w_exit = waist * np.sqrt(1.0 + (length / rayleigh) ** 2)
    window = 12.0 * max(waist, w_exit)
    n_min = window / (waist / MIN_SAMPLES_PER_WAIST)
    n_points = 1 << int(np.ceil(np.log2(n_min)))
    return window, n_points


def gaussian_input(waist, power=1e-6, window=None, n_points=None, wavelength=795e-9, length=0.05):
    """Gaussian beam E(x) ~ exp(-x^2/w^2) at z = 0 carrying ``power``.

    Without an explicit grid one is chosen to contain the beam after
    propagating ``length``.
    """
    if not waist > 0:
        raise ParameterError(f"waist must be positive, got {waist}")
    if window is None or n_points is None:
        window, n_points = auto_grid(waist, length, wavelength)
    x = make_grid(window, n_points)
    dx = x[1] - x[0]
    if waist / dx < MIN_SAMPLES_PER_WAIST:
        raise GridError(f"grid too coarse: {waist / dx:.1f} samples per waist, need {MIN_SAMPLES_PER_WAIST}")
    if window < 8.0 * waist:
        raise GridError("grid window must be at least 4 beam diameters")
    amp = np.exp(-(x**2) / waist**2).astype(complex)
    amp *= np.sqrt(power / (np.sum(np.abs(amp) ** 2) * dx))
    return TransverseField(grid=x, amplitude=amp, z=0.0, wavelength=wavelength)


def propagate_screen(field, dn, kappa, length, n_steps=DEFAULT_STEPS):
    """Symmetric split-step through a z-invariant medium.

    Parameters
    ----------
    dn : ndarray
        Index excess n(x) - 1 on ``field.grid``.
    kappa : ndarray
        Intensity absorption coefficient on ``field.grid``, 1/m.
    """
    k = field.k
    dz = length / n_steps
    kx = field.wavenumbers()
    half = np.exp(-1j * kx**2 * dz / (4.0 * k))
    full = half * half
    screen = np.exp(1j * k * np.asarray(dn) * dz - 0.5 * np.asarray(kappa) * dz)

    spec = np.fft.fft(field.amplitude) * half
    for _ in range(n_steps - 1):
        spec = np.fft.fft(np.fft.ifft(spec) * screen) * full
    spec = np.fft.fft(np.fft.ifft(spec) * screen) * half
    return replace(field, amplitude=np.fft.ifft(spec), z=field.z + length, n_steps=n_steps)


def medium_screen(field, medium, fmap, delta_laser):
    """Index excess and absorption across the beam for on-axis detuning ``delta_laser``."""
    fmap.check_window(0.5 * abs(field.grid[-1] - field.grid[0]))
    delta = detuning_profile(fmap, medium.g_factor, delta_laser, field.grid)
    n, kappa = refractive_index(medium, delta)
    return n - 1.0, kappa


def propagate_cell(field, medium, fmap, delta_laser, n_steps=DEFAULT_STEPS, max_steps=MAX_STEPS):
    """Propagate ``field`` through the whole cell at laser detuning ``delta_laser``.

    The step count is doubled until the exit centroid moves by less than 1 %
    between successive runs; the finer result is returned.
    """
    if n_steps < 64:
        raise ParameterError("propagate_cell needs at least 64 steps")
    dn, kappa = medium_screen(field, medium, fmap, delta_laser)
    L = medium.cell_length
    coarse = propagate_screen(field, dn, kappa, L, n_steps)
    floor = 1e-6 * field.dx
    while n_steps * 2 <= max_steps:
        n_steps *= 2
        fine = propagate_screen(field, dn, kappa, L, n_steps)
        if fine.power > 0 and coarse.power > 0:
            shift = abs(fine.centroid - coarse.centroid)
            if shift <= 0.01 * abs(fine.centroid) + floor:
                return fine
        coarse = fine
    raise NotConvergedError(f"split-step not converged at {max_steps} steps")


def centroid_and_angle(entry, exit):
    """Exit centroid (m) and deflection angle (rad) relative to the entry beam.

    The angle is ``(<k_x>_exit - <k_x>_entry) / k``; unlike a two-plane centroid
    difference it is unaffected by diffraction spreading.
    """
    if not entry.power > 0 or not exit.power > 0:
        raise SimulationError("zero transmitted power: centroid undefined")
    return exit.centroid, (exit.mean_kx - entry.mean_kx) / exit.k


@dataclass(frozen=True)
class DeflectionRecord:
    delta_laser: float
    transmission: float
    centroid_exit: float
    angle: float
    camera_displacement: float


@dataclass(frozen=True)
class BeamSpec:
    """Input beam: waist radius and power, with an optional explicit grid."""

    waist: float = 1e-3
    power: float = 1e-6
    window: float = None
    n_points: int = None

    def field(self, wavelength, length):
        return gaussian_input(self.waist, self.power, self.window, self.n_points, wavelength, length)


def deflection_at(medium, fmap, beam, delta_laser, camera_distance=2.0, n_steps=DEFAULT_STEPS):
    """Single-detuning deflection record."""
    entry = beam.field(medium.lambda_s, medium.cell_length)
    out = propagate_cell(entry, medium, fmap, delta_laser, n_steps)
    centroid, angle = centroid_and_angle(entry, out)
    return DeflectionRecord(
        delta_laser=float(delta_laser),
        transmission=out.power / entry.power,
        centroid_exit=centroid,
        angle=angle,
        camera_displacement=centroid + angle * camera_distance,
    )


def deflection_spectrum(medium, fmap, beam, deltas, camera_distance=2.0, n_steps=DEFAULT_STEPS, threads=1):
    """Transmission and deflection versus on-axis two-photon detuning.

    ``deltas`` must reach at least three EIT windows on either side of
    resonance. Points are independent; ``threads > 1`` evaluates them
    concurrently without changing the result.
    """
    deltas = np.asarray(deltas, dtype=float)
    reach = 3.0 * eit_window(medium)
    if deltas.min() > -reach or deltas.max() < reach:
        raise ParameterError(f"detuning range must span at least +-{reach:.4g} rad/s")

    def one(d):
        return deflection_at(medium, fmap, beam, d, camera_distance, n_steps)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(one, deltas))
    return [one(d) for d in deltas]
