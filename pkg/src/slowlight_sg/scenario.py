"""
Scenario files: flat ``key = value unit`` text.

Every dimensioned key must carry a unit suffix; values are converted to SI
(angular frequencies to rad/s) on parsing and written back in SI, so
``parse(serialize(s)) == s`` holds exactly. Example::

    wavelength = 795 nm
    gradient   = 91 uG/mm
    bias       = 116 mG
    rabi       = 500 kHz
    sweep_rabi = 354, 500, 1000 kHz
"""

from dataclasses import dataclass, fields, replace
from pathlib import Path

import numpy as np

from .beamprop import BeamSpec
from .constants import GAMMA_RB_D1, TWO_PI
from .exceptions import ParameterError
from .fields import FieldMap
from .medium import MediumParams, calibrate_to_vg


class ScenarioError(ParameterError):
    """Malformed or inconsistent scenario file."""


UNITS = {
    "length": {"m": 1.0, "cm": 1e-2, "mm": 1e-3, "um": 1e-6, "µm": 1e-6, "nm": 1e-9},
    "field": {"T": 1.0, "G": 1e-4, "mG": 1e-7, "uG": 1e-10, "µG": 1e-10},
    "gradient": {"T/m": 1.0, "G/m": 1e-4, "G/cm": 1e-2, "mG/cm": 1e-5, "mG/mm": 1e-4,
                 "uG/mm": 1e-7, "µG/mm": 1e-7},
    "angular": {"rad/s": 1.0, "Hz": TWO_PI, "kHz": TWO_PI * 1e3, "MHz": TWO_PI * 1e6, "GHz": TWO_PI * 1e9},
    "time": {"s": 1.0, "ms": 1e-3, "us": 1e-6, "µs": 1e-6, "ns": 1e-9},
    "velocity": {"m/s": 1.0, "km/s": 1e3},
    "power": {"W": 1.0, "mW": 1e-3, "uW": 1e-6, "µW": 1e-6, "nW": 1e-9},
}
SI_UNIT = {"length": "m", "field": "T", "gradient": "T/m", "angular": "rad/s", "time": "s",
           "velocity": "m/s", "power": "W"}


@dataclass(frozen=True)
class Scenario:
    # medium
    wavelength: float = 795e-9
    cell_length: float = 0.050
    rabi: float = TWO_PI * 500e3
    coupling: float = 3.34e9
    target_vg: float = 290.0
    gamma_e: float = GAMMA_RB_D1
    gamma_c: float = TWO_PI * 1e3
    delta_one_photon: float = 0.0
    g_factor: float = 0.5
    # field map
    bias: float = 116e-7
    gradient: float = 9.1e-6
    # beam and camera
    waist: float = 1e-3
    beam_power: float = 1e-6
    grid_window: float = None
    grid_points: int = None
    camera_distance: float = 2.0
    # spectrum
    delta_span: float = 1.2e6
    delta_points: int = 121
    # pulse
    sigma_t: float = 10e-3
    pulse_samples: int = 2**14
    # sweep
    sweep_rabi: tuple = tuple(TWO_PI * f for f in (340e3, 400e3, 500e3, 600e3, 800e3, 1000e3, 1100e3))
    repeats: int = 1
    noise_sigma: float = 0.0
    # run control
    output_dir: str = "out"
    seed: int = 0

    def medium(self):
        """Medium parameters, calibrated to ``target_vg`` when that is set."""
        p = MediumParams(
            lambda_s=self.wavelength,
            cell_length=self.cell_length,
            rabi_control=self.rabi,
            coupling_collective=self.coupling,
            gamma_e=self.gamma_e,
            gamma_c=self.gamma_c,
            delta_one_photon=self.delta_one_photon,
            g_factor=self.g_factor,
        )
        if self.target_vg is not None:
            p = calibrate_to_vg(p, self.target_vg)
        return p

    def field_map(self):
        return FieldMap(b0=self.bias, grad_x=self.gradient)

    def beam(self):
        return BeamSpec(waist=self.waist, power=self.beam_power, window=self.grid_window,
                        n_points=self.grid_points)

    def deltas(self):
        return np.linspace(-self.delta_span, self.delta_span, self.delta_points)


# key -> dimension (None: dimensionless float, "int", "str", or a UNITS key)
KEYS = {
    "wavelength": "length",
    "cell_length": "length",
    "rabi": "angular",
    "coupling": "angular",
    "target_vg": "velocity",
    "gamma_e": "angular",
    "gamma_c": "angular",
    "delta_one_photon": "angular",
    "g_factor": None,
    "bias": "field",
    "gradient": "gradient",
    "waist": "length",
    "beam_power": "power",
    "grid_window": "length",
    "grid_points": "int",
    "camera_distance": "length",
    "delta_span": "angular",
    "delta_points": "int",
    "sigma_t": "time",
    "pulse_samples": "int",
    "sweep_rabi": "angular",
    "repeats": "int",
    "noise_sigma": "length",
    "output_dir": "str",
    "seed": "int",
}
LIST_KEYS = {"sweep_rabi"}
OPTIONAL_KEYS = {"target_vg", "grid_window", "grid_points"}

assert set(KEYS) == {f.name for f in fields(Scenario)}


def _split_unit(text, dim, key):
    parts = text.rsplit(None, 1)
    if len(parts) != 2 or parts[1] not in UNITS[dim]:
        allowed = ", ".join(UNITS[dim])
        raise ScenarioError(f"{key}: a unit is required ({allowed}), got {text!r}")
    return parts[0], UNITS[dim][parts[1]]


def _number(text, key):
    try:
        return float(text)
    except ValueError:
        raise ScenarioError(f"{key}: cannot parse number {text!r}") from None


def _parse_value(key, raw):
    dim = KEYS[key]
    if raw.lower() == "none" and key in OPTIONAL_KEYS:
        return None
    if dim == "str":
        return raw
    if dim == "int":
        try:
            return int(raw)
        except ValueError:
            raise ScenarioError(f"{key}: expected an integer, got {raw!r}") from None
    if dim is None:
        return _number(raw, key)
    body, scale = _split_unit(raw, dim, key)
    if key in LIST_KEYS:
        return tuple(_number(v.strip(), key) * scale for v in body.split(",") if v.strip())
    return _number(body, key) * scale


def parse(text):
    """Scenario from config text; unspecified keys keep their defaults."""
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ScenarioError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, raw = (s.strip() for s in line.split("=", 1))
        if key not in KEYS:
            raise ScenarioError(f"line {lineno}: unknown key {key!r}")
        values[key] = _parse_value(key, raw)
    return replace(Scenario(), **values)


def _format_value(key, value):
    dim = KEYS[key]
    if value is None:
        return "none"
    if dim in ("str", "int"):
        return str(value)
    if dim is None:
        return repr(float(value))
    unit = SI_UNIT[dim]
    if key in LIST_KEYS:
        return ", ".join(repr(float(v)) for v in value) + " " + unit
    return f"{float(value)!r} {unit}"


def serialize(scenario):
    """Config text that parses back to an identical scenario."""
    return "".join(f"{f.name} = {_format_value(f.name, getattr(scenario, f.name))}\n" for f in fields(scenario))


def load(path):
    return parse(Path(path).read_text(encoding="utf-8"))
