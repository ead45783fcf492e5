"""Command-line front end: ``slowlight-sg <verb> [--config FILE] [--out DIR] [--seed N] [--threads N]``.

Exit codes: 0 success, 2 validation failure or bad scenario, 1 any other error.
"""

import argparse
import logging
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from . import output
from .analysis import extract_moment_from_sweep, linearity, run_vg_sweep
from .beamprop import deflection_spectrum
from .exceptions import SimulationError
from .fock import FockSpace, fock_moment
from .medium import group_velocity
from .polariton import PolaritonState
from .pulse import fit_gaussian_peak, propagate_pulse
from .scenario import Scenario, ScenarioError, load, serialize
from .validation import run_checks

log = logging.getLogger("slowlight_sg")


def cmd_spectrum(scenario, threads=1):
    out = Path(scenario.output_dir)
    medium = scenario.medium()
    records = deflection_spectrum(medium, scenario.field_map(), scenario.beam(), scenario.deltas(),
                                  scenario.camera_distance, threads=threads)
    rows = output.spectrum_rows(records)
    d = np.array([r[0] for r in rows])
    files = [
        output.write_csv(out / "spectrum.csv", output.SPECTRUM_HEADER, rows),
        output.write_svg(out / "transmission.svg", d, [("", [r[1] for r in rows])],
                         "two-photon detuning (rad/s)", "transmission", "Signal transmission"),
        output.write_svg(out / "deflection.svg", d, [("", [r[2] for r in rows])],
                         "two-photon detuning (rad/s)", "angle (rad)", "Beam deflection"),
    ]
    return files


def cmd_vg_sweep(scenario, threads=1):
    out = Path(scenario.output_dir)
    medium = scenario.medium()
    sweep = run_vg_sweep(medium, scenario.field_map(), scenario.beam(), scenario.sweep_rabi,
                         repeats=scenario.repeats, noise_sigma=scenario.noise_sigma, seed=scenario.seed,
                         sigma_t=scenario.sigma_t, camera_distance=scenario.camera_distance, threads=threads)
    mu, ratio = extract_moment_from_sweep(sweep)
    summary = [("mu_estimate_J_T", mu), ("ratio_theory_over_estimate", ratio), ("rows", len(sweep.rows)),
               ("gradient_T_m", sweep.grad_x), ("cell_length_m", sweep.cell_length),
               ("beam_waist_m", sweep.waist), ("g_factor", sweep.g_factor), ("seed", sweep.seed)]
    if len(sweep.rows) >= 3:
        slope, intercept, r2 = linearity(sweep)
        summary += [("fit_slope_rad_m_s", slope), ("fit_intercept_rad", intercept), ("fit_r_squared", r2)]
    files = [
        output.write_csv(out / "sweep.csv", output.SWEEP_HEADER, output.sweep_rows(sweep)),
        output.write_keyvalue(out / "sweep_summary.txt", summary),
        output.write_svg(out / "deflection_vs_inv_vg.svg", sweep.inverse_vg, [("", sweep.angles)],
                         "1/v_g (s/m)", "angle (rad)", "Deflection at two-photon resonance"),
    ]
    return files


def cmd_pulse(scenario):
    out = Path(scenario.output_dir)
    medium = scenario.medium()
    entry, exit = propagate_pulse(medium, 0.0, scenario.sigma_t, n_samples=scenario.pulse_samples)
    fin, fout = fit_gaussian_peak(entry), fit_gaussian_peak(exit)
    delay = fout.peak_time - fin.peak_time
    vg = medium.cell_length / delay
    vg_err = medium.cell_length * np.hypot(fin.peak_time_err, fout.peak_time_err) / delay**2
    summary = [
        ("entry_peak_time_s", fin.peak_time), ("entry_sigma_s", fin.sigma),
        ("exit_peak_time_s", fout.peak_time), ("exit_sigma_s", fout.sigma),
        ("exit_fit_residual", fout.residual), ("delay_s", delay),
        ("v_g_pulse_m_s", vg), ("v_g_pulse_err_m_s", vg_err),
        ("v_g_dispersion_m_s", group_velocity(medium)),
        ("transmitted_energy_fraction", exit.energy / entry.energy),
    ]
    return [
        output.write_csv(out / "pulse_entry.csv", output.TRACE_HEADER, zip(entry.t, entry.intensity)),
        output.write_csv(out / "pulse_exit.csv", output.TRACE_HEADER, zip(exit.t, exit.intensity)),
        output.write_keyvalue(out / "pulse_fit.txt", summary),
    ]


def fock_table(n_atoms, thetas, g_factor=0.5):
    rows = []
    for theta in thetas:
        numeric = fock_moment(FockSpace(n_atoms), theta, g_factor)
        analytic = PolaritonState.from_theta(theta, g_factor).mu_pol
        rel = abs(numeric - analytic) / analytic if analytic else abs(numeric)
        rows.append((n_atoms, float(theta), numeric, analytic, rel))
    return rows


def cmd_fock_check(scenario, n_atoms=5, thetas=(0.2, np.pi / 4, 1.2)):
    rows = fock_table(n_atoms, thetas, scenario.g_factor)
    print(f"{'N':>3} {'theta':>10} {'fock_moment J/T':>18} {'2gF muB sin^2':>18} {'rel diff':>10}")
    for n, theta, num, ana, rel in rows:
        print(f"{n:>3d} {theta:>10.6f} {num:>18.10e} {ana:>18.10e} {rel:>10.2e}")
    return [output.write_csv(Path(scenario.output_dir) / "fock_check.csv",
                             ("n_atoms", "theta_rad", "fock_moment_J_T", "analytic_J_T", "rel_diff"), rows)]


def cmd_validate(scenario):
    results = run_checks(scenario.medium(), scenario.field_map())
    for name, passed, value, tol in results:
        print(f"{'PASS' if passed else 'FAIL'}  {name:<36} value={value:.3e} tol={tol:.1e}")
    path = output.write_csv(Path(scenario.output_dir) / "validate.csv", ("check", "passed", "value", "tolerance"),
                            results)
    return [path], all(r[1] for r in results)


def build_parser():
    parser = argparse.ArgumentParser(prog="slowlight-sg", description="Slow-light Stern-Gerlach simulator")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="scenario file (key = value unit)")
    common.add_argument("--out", type=Path, help="output directory (overrides the scenario)")
    common.add_argument("--seed", type=int, help="random seed (overrides the scenario)")
    common.add_argument("--threads", type=int, default=1, help="worker threads for independent points")
    sub = parser.add_subparsers(dest="verb", required=True)
    sub.add_parser("spectrum", parents=[common], help="transmission and deflection vs two-photon detuning")
    sub.add_parser("vg-sweep", parents=[common], help="deflection vs inverse group velocity, moment estimate")
    sub.add_parser("pulse", parents=[common], help="pulse delay traces and Gaussian fit")
    fock = sub.add_parser("fock-check", parents=[common], help="Fock-space moment vs analytic formula")
    fock.add_argument("--atoms", type=int, default=5)
    fock.add_argument("--theta", type=float, nargs="+", default=[0.2, np.pi / 4, 1.2])
    sub.add_parser("validate", parents=[common], help="run the invariant self-checks")
    sub.add_parser("dump-config", parents=[common], help="print the effective scenario")
    return parser


def _scenario(args):
    scenario = load(args.config) if args.config else Scenario()
    if args.out is not None:
        scenario = replace(scenario, output_dir=str(args.out))
    if args.seed is not None:
        if not 0 <= args.seed < 2**64:
            raise ScenarioError("seed must be an unsigned 64-bit integer")
        scenario = replace(scenario, seed=args.seed)
    return scenario


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    try:
        scenario = _scenario(args)
        if args.verb == "spectrum":
            files = cmd_spectrum(scenario, args.threads)
        elif args.verb == "vg-sweep":
            files = cmd_vg_sweep(scenario, args.threads)
        elif args.verb == "pulse":
            files = cmd_pulse(scenario)
        elif args.verb == "fock-check":
            files = cmd_fock_check(scenario, args.atoms, args.theta)
        elif args.verb == "dump-config":
            sys.stdout.write(serialize(scenario))
            return 0
        else:
            files, ok = cmd_validate(scenario)
            if not ok:
                print("validate: one or more checks failed", file=sys.stderr)
                return 2
        for f in files:
            log.info("wrote %s", f)
        return 0
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SimulationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 - one-line diagnostic for anything unexpected
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
