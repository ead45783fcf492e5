import subprocess
import sys
import time

import numpy as np
import pytest

from slowlight_sg.cli import main
from slowlight_sg.scenario import parse

FAST = """
delta_points = 31
sweep_rabi = 400, 700, 1000 kHz
repeats = 3
noise_sigma = 2 um
"""


def run(tmp_path, *argv, config=FAST, name="out"):
    cfg = tmp_path / f"{name}.cfg"
    cfg.write_text(config)
    out = tmp_path / name
    return main([*argv, "--config", str(cfg), "--out", str(out)]), out


def read_csv(path):
    return np.genfromtxt(path, delimiter=",", names=True)


def test_spectrum_outputs(tmp_path):
    code, out = run(tmp_path, "spectrum")
    assert code == 0
    assert {p.name for p in out.iterdir()} == {"spectrum.csv", "transmission.svg", "deflection.svg"}
    header = (out / "spectrum.csv").read_text().splitlines()[0]
    assert header == "delta_rad_s,transmission,angle_rad,camera_displacement_m"


def test_zero_and_reversed_gradient(tmp_path):
    _, base = run(tmp_path, "spectrum", name="base")
    _, flat = run(tmp_path, "spectrum", config=FAST + "gradient = 0 T/m\n", name="flat")
    _, flip = run(tmp_path, "spectrum", config=FAST + "gradient = -9.1e-6 T/m\n", name="flip")
    a = read_csv(base / "spectrum.csv")["angle_rad"]
    assert np.all(np.abs(read_csv(flat / "spectrum.csv")["angle_rad"]) < 1e-9)
    np.testing.assert_allclose(read_csv(flip / "spectrum.csv")["angle_rad"], -a, rtol=1e-9, atol=1e-15)


@pytest.mark.parametrize("verb", ["spectrum", "vg-sweep", "pulse", "fock-check", "validate"])
def test_reruns_are_byte_identical(tmp_path, verb):
    code1, out1 = run(tmp_path, verb, "--seed", "11", name="a")
    code2, out2 = run(tmp_path, verb, "--seed", "11", "--threads", "3", name="b")
    assert code1 == code2 == 0
    files = sorted(p.name for p in out1.iterdir())
    assert files == sorted(p.name for p in out2.iterdir())
    for f in files:
        assert (out1 / f).read_bytes() == (out2 / f).read_bytes(), f


def test_seed_changes_noisy_sweep(tmp_path):
    _, a = run(tmp_path, "vg-sweep", "--seed", "1", name="a")
    _, b = run(tmp_path, "vg-sweep", "--seed", "2", name="b")
    assert (a / "sweep.csv").read_bytes() != (b / "sweep.csv").read_bytes()


def test_sweep_summary(tmp_path):
    code, out = run(tmp_path, "vg-sweep")
    assert code == 0
    text = (out / "sweep_summary.txt").read_text()
    assert "mu_estimate_J_T" in text and "fit_r_squared" in text


def test_pulse_summary(tmp_path):
    code, out = run(tmp_path, "pulse")
    assert code == 0
    summary = dict(line.split(" = ") for line in (out / "pulse_fit.txt").read_text().splitlines())
    assert float(summary["v_g_pulse_m_s"]) == pytest.approx(290.0, rel=0.02)


def test_fock_check_table(tmp_path, capsys):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("")
    assert main(["fock-check", "--config", str(cfg), "--out", str(tmp_path), "--atoms", "4",
                 "--theta", "0.3", "1.0"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 3
    rel = read_csv(tmp_path / "fock_check.csv")["rel_diff"]
    assert np.all(rel < 1e-12)


def test_validate_passes(tmp_path, capsys):
    code, _ = run(tmp_path, "validate")
    assert code == 0
    assert "FAIL" not in capsys.readouterr().out


def test_validate_failure_exit_code(tmp_path, monkeypatch):
    import slowlight_sg.cli as cli

    monkeypatch.setattr(cli, "run_checks", lambda m, f: [("broken", False, 1.0, 0.0)])
    code, _ = run(tmp_path, "validate")
    assert code == 2


def test_bad_config_exit_code(tmp_path, capsys):
    code, _ = run(tmp_path, "spectrum", config="gradient = 9.1e-6\n")
    assert code == 2
    err = capsys.readouterr().err.strip()
    assert err.startswith("error:") and "\n" not in err


def test_simulation_error_exit_code(tmp_path, capsys):
    code, _ = run(tmp_path, "pulse", config="target_vg = 1e-6 m/s\n")
    assert code == 1
    assert capsys.readouterr().err.startswith("error:")


def test_missing_config_exit_code(tmp_path):
    assert main(["spectrum", "--config", str(tmp_path / "nope.cfg")]) == 1


def test_seed_range(tmp_path):
    code, _ = run(tmp_path, "fock-check", "--seed", str(2**64))
    assert code == 2


def test_dump_config_round_trips(tmp_path, capsys):
    code, _ = run(tmp_path, "dump-config", "--seed", "5")
    assert code == 0
    s = parse(capsys.readouterr().out)
    assert s.seed == 5 and s.delta_points == 31


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "slowlight_sg", "fock-check", "--out", str(tmp_path)],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert (tmp_path / "fock_check.csv").exists()


@pytest.mark.slow
def test_default_spectrum_within_budget(tmp_path):
    start = time.perf_counter()
    assert main(["spectrum", "--out", str(tmp_path)]) == 0
    assert time.perf_counter() - start < 60.0
