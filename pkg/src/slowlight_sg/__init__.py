"""Slow-light Stern-Gerlach deflection: wave-optics and dark-polariton models.

Modules:

* ``medium``     Lambda-system susceptibility, index, group velocity
* ``fields``     transverse field map and Zeeman detuning
* ``polariton``  mixing angle, polariton moment, Stern-Gerlach deflection
* ``fock``       brute-force Fock-space check of the moment
* ``beamprop``   split-step beam propagation and deflection spectra
* ``pulse``      pulse-delay group-velocity measurement
* ``analysis``   deflection vs 1/v_g sweeps and moment extraction
* ``scenario``   ``key = value unit`` scenario files
* ``cli``        command-line front end (``slowlight-sg``)
"""

from .analysis import SweepResult, extract_moment_from_sweep, linearity, run_vg_sweep
from .beamprop import (
    BeamSpec,
    DeflectionRecord,
    TransverseField,
    deflection_at,
    deflection_spectrum,
    gaussian_input,
    propagate_cell,
)
from .fields import FieldMap, detuning_profile, zeeman_shift
from .fock import FockSpace, fock_build_polariton, fock_moment
from .medium import MediumParams, calibrate_to_vg, eit_window, group_velocity, refractive_index, susceptibility
from .polariton import PolaritonState, extract_moment, from_coupling, sg_deflection
from .pulse import PulseTrace, fit_gaussian_peak, measure_vg, propagate_pulse
from .scenario import Scenario

__version__ = "0.1.0"

__all__ = [
    "BeamSpec",
    "DeflectionRecord",
    "FieldMap",
    "FockSpace",
    "MediumParams",
    "PolaritonState",
    "PulseTrace",
    "Scenario",
    "SweepResult",
    "TransverseField",
    "calibrate_to_vg",
    "deflection_at",
    "deflection_spectrum",
    "detuning_profile",
    "eit_window",
    "extract_moment",
    "extract_moment_from_sweep",
    "fit_gaussian_peak",
    "fock_build_polariton",
    "fock_moment",
    "from_coupling",
    "gaussian_input",
    "group_velocity",
    "linearity",
    "measure_vg",
    "propagate_cell",
    "propagate_pulse",
    "refractive_index",
    "run_vg_sweep",
    "sg_deflection",
    "susceptibility",
    "zeeman_shift",
]
