"""
Deflection versus inverse group velocity, and the magnetic-moment estimate
obtained by solving the Stern-Gerlach deflection formula for the moment.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np
from scipy import stats

from .beamprop import BeamSpec, deflection_at
from .constants import MU_B
from .exceptions import ExtractionError, ParameterError
from .fields import detuning_slope
from .medium import dispersion_slope
from .polariton import extract_moment, from_coupling, sg_deflection
from .pulse import DEFAULT_SIGMA_T, measure_vg


@dataclass(frozen=True)
class SweepRow:
    rabi_control: float
    v_g: float
    v_g_err: float
    angle: float
    angle_err: float
    camera_displacement: float
    # 1 - noiseless angle / (local-gradient prediction); > 0 means sub-linear
    sub_linearity: float = 0.0
    row_index: int = 0


@dataclass(frozen=True)
class SweepResult:
    rows: tuple
    grad_x: float
    cell_length: float
    k: float
    g_factor: float = 0.5
    waist: float = float("nan")
    camera_distance: float = 2.0
    seed: int = 0
    metadata: dict = field(default_factory=dict)

    @property
    def inverse_vg(self):
        return np.array([1.0 / r.v_g for r in self.rows])

    @property
    def angles(self):
        return np.array([r.angle for r in self.rows])

    def scaled(self, factor):
        """Copy with every deflection (angle and camera displacement) multiplied by ``factor``."""
        rows = tuple(
            replace(r, angle=r.angle * factor, angle_err=r.angle_err * factor,
                    camera_displacement=r.camera_displacement * factor)
            for r in self.rows
        )
        return replace(self, rows=rows)


def _sorted(rows):
    return tuple(sorted(rows, key=lambda r: 1.0 / r.v_g))


def run_vg_sweep(medium, fmap, beam=BeamSpec(), omegas=(), repeats=1, noise_sigma=0.0, seed=0,
                 sigma_t=DEFAULT_SIGMA_T, camera_distance=2.0, threads=1):
    """Deflection at two-photon resonance for each control Rabi frequency.

    For every ``omega`` the group velocity is measured by pulse delay and the
    deflection is computed by beam propagation at zero detuning. With
    ``noise_sigma > 0`` each of the ``repeats`` camera readings gets Gaussian
    noise (m) from a generator seeded by ``(seed, row index)``; rows report
    the mean angle and the standard deviation of the mean.
    """
    omegas = list(omegas)
    if not omegas:
        raise ParameterError("omega list must be non-empty")
    if repeats < 1:
        raise ParameterError("repeats must be >= 1")
    g = medium.g_factor
    slope = detuning_slope(fmap, g)

    def one(item):
        i, omega = item
        m = replace(medium, rabi_control=float(omega))
        vg, vg_err = measure_vg(m, sigma_t)
        rec = deflection_at(m, fmap, beam, 0.0, camera_distance)
        rng = np.random.default_rng([seed, i])
        readings = rec.camera_displacement + noise_sigma * rng.standard_normal(repeats)
        angles = (readings - rec.centroid_exit) / camera_distance
        angle = float(np.mean(angles))
        angle_err = float(np.std(angles, ddof=1) / np.sqrt(repeats)) if repeats > 1 else 0.0
        local = m.cell_length * dispersion_slope(m, 0.0) * slope
        return SweepRow(
            rabi_control=float(omega),
            v_g=vg,
            v_g_err=vg_err,
            angle=angle,
            angle_err=angle_err,
            camera_displacement=float(np.mean(readings)),
            sub_linearity=float(1.0 - rec.angle / local) if local != 0 else 0.0,
            row_index=i,
        )

    items = list(enumerate(omegas))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(one, items))
    else:
        rows = [one(it) for it in items]
    return SweepResult(
        rows=_sorted(rows),
        grad_x=fmap.grad_x,
        cell_length=medium.cell_length,
        k=medium.k,
        g_factor=g,
        waist=beam.waist,
        camera_distance=camera_distance,
        seed=seed,
    )


def formula_sweep(omegas, gN, cell_length, grad_x, k, g_factor=0.5, camera_distance=2.0):
    """Sweep built purely from polariton-model forward predictions (no propagation)."""
    rows = []
    for i, omega in enumerate(omegas):
        ps = from_coupling(omega, gN, g_factor)
        alpha = sg_deflection(ps, cell_length, grad_x, k)
        rows.append(SweepRow(float(omega), ps.v_g, 0.0, alpha, 0.0, alpha * camera_distance, 0.0, i))
    return SweepResult(rows=_sorted(rows), grad_x=grad_x, cell_length=cell_length, k=k,
                       g_factor=g_factor, camera_distance=camera_distance)


def extract_moment_from_sweep(sweep):
    """Unweighted mean of the per-row moments, and 2 g_F mu_B over that mean.

    Returns
    -------
    mu : float
        Moment estimate, J/T.
    ratio : float
        Theoretical slow-light moment divided by the estimate.
    """
    if not sweep.rows:
        raise ExtractionError("empty sweep: nothing to extract")
    if sweep.grad_x == 0:
        raise ExtractionError("moment extraction undefined for zero field gradient")
    moments = [extract_moment(r.angle, r.v_g, sweep.cell_length, sweep.grad_x, sweep.k) for r in sweep.rows]
    mu = float(np.mean(moments))
    return mu, 2.0 * sweep.g_factor * MU_B / mu


def linearity(sweep):
    """Straight-line fit of angle against 1/v_g: (slope, intercept, r_squared)."""
    x, y = sweep.inverse_vg, sweep.angles
    if x.size < 3:
        raise ParameterError("linearity needs at least three rows")
    fit = stats.linregress(x, y)
    return float(fit.slope), float(fit.intercept), float(fit.rvalue**2)
