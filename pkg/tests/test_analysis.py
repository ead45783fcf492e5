import numpy as np
import pytest

from slowlight_sg.analysis import SweepResult, formula_sweep, extract_moment_from_sweep, linearity, run_vg_sweep
from slowlight_sg.beamprop import BeamSpec
from slowlight_sg.constants import HBAR, MU_B, TWO_PI
from slowlight_sg.exceptions import ExtractionError, ParameterError
from slowlight_sg.fields import FieldMap
from slowlight_sg.medium import MediumParams
from slowlight_sg.polariton import from_coupling

K = TWO_PI / 795e-9
GN = 3.34e9
OMEGAS = TWO_PI * np.array([340e3, 500e3, 800e3, 1100e3])
NARROW = BeamSpec(waist=5e-5)


def test_formula_sweep_round_trip():
    sweep = formula_sweep(OMEGAS, GN, 0.05, 9.1e-6, K)
    mu, ratio = extract_moment_from_sweep(sweep)
    ref = np.mean([from_coupling(o, GN).mu_pol for o in OMEGAS])
    assert mu == pytest.approx(ref, rel=1e-14)
    assert ratio == pytest.approx(MU_B / ref, rel=1e-14)


def test_rows_sorted_by_inverse_velocity():
    sweep = formula_sweep(OMEGAS[::-1], GN, 0.05, 9.1e-6, K)
    assert np.all(np.diff(sweep.inverse_vg) > 0)


def test_averaging_order_is_irrelevant():
    sweep = formula_sweep(OMEGAS, GN, 0.05, 9.1e-6, K)
    mu, _ = extract_moment_from_sweep(sweep)
    ratio_mean = np.mean(sweep.angles / sweep.inverse_vg)
    assert mu == pytest.approx(ratio_mean * HBAR * K / (0.05 * 9.1e-6), rel=1e-12)


def test_scaled_sweep_reproduces_reported_factor():
    sweep = formula_sweep(TWO_PI * np.array([100e3, 150e3]), GN, 0.05, 9.1e-6, K)
    mu, ratio = extract_moment_from_sweep(sweep.scaled(1 / 1.8))
    assert mu == pytest.approx(MU_B / 1.8, rel=1e-4)
    assert mu == pytest.approx(5.15e-24, rel=2e-3)
    assert ratio == pytest.approx(1.8, rel=1e-4)


def test_empty_and_gradient_free_sweeps_rejected():
    with pytest.raises(ExtractionError):
        extract_moment_from_sweep(SweepResult(rows=(), grad_x=9.1e-6, cell_length=0.05, k=K))
    with pytest.raises(ExtractionError):
        extract_moment_from_sweep(formula_sweep(OMEGAS, GN, 0.05, 0.0, K))


def test_sweep_argument_checks():
    with pytest.raises(ParameterError):
        run_vg_sweep(MediumParams(), FieldMap(), NARROW, [])
    with pytest.raises(ParameterError):
        run_vg_sweep(MediumParams(), FieldMap(), NARROW, OMEGAS, repeats=0)
    with pytest.raises(ParameterError):
        linearity(formula_sweep(OMEGAS[:2], GN, 0.05, 9.1e-6, K))


def test_single_point_sweep():
    sweep = run_vg_sweep(MediumParams(), FieldMap(), NARROW, [TWO_PI * 500e3])
    assert len(sweep.rows) == 1
    assert sweep.rows[0].angle_err == 0.0


@pytest.fixture(scope="module")
def narrow_sweep():
    return run_vg_sweep(MediumParams(gamma_c=0.0), FieldMap(), NARROW, OMEGAS)


def test_narrow_sweep_is_linear(narrow_sweep):
    _, _, r2 = linearity(narrow_sweep)
    assert r2 > 0.999


def test_narrow_sweep_moment(narrow_sweep):
    mu, ratio = extract_moment_from_sweep(narrow_sweep)
    assert mu == pytest.approx(MU_B, rel=0.05)
    assert ratio == pytest.approx(1.0, abs=0.05)


def test_noise_is_seeded():
    kwargs = dict(repeats=5, noise_sigma=2e-6, seed=7)
    a = run_vg_sweep(MediumParams(), FieldMap(), BeamSpec(), OMEGAS[:2], **kwargs)
    b = run_vg_sweep(MediumParams(), FieldMap(), BeamSpec(), OMEGAS[:2], threads=2, **kwargs)
    c = run_vg_sweep(MediumParams(), FieldMap(), BeamSpec(), OMEGAS[:2], repeats=5, noise_sigma=2e-6, seed=8)
    assert a.rows == b.rows
    assert a.rows != c.rows
    assert all(r.angle_err > 0 for r in a.rows)


def test_wide_beam_sub_linearity_grows():
    sweep = run_vg_sweep(MediumParams(), FieldMap(), BeamSpec(), OMEGAS)
    sub = np.array([r.sub_linearity for r in sweep.rows])
    assert np.all(sub >= 0)
    assert np.all(np.diff(sub) > 0)


def test_sub_linearity_ignores_camera_noise():
    clean = run_vg_sweep(MediumParams(), FieldMap(), BeamSpec(), OMEGAS[:2])
    noisy = run_vg_sweep(MediumParams(), FieldMap(), BeamSpec(), OMEGAS[:2], repeats=4, noise_sigma=5e-6, seed=3)
    assert [r.sub_linearity for r in noisy.rows] == [r.sub_linearity for r in clean.rows]
    assert [r.angle for r in noisy.rows] != [r.angle for r in clean.rows]
