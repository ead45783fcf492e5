"""Exception hierarchy shared by all modules.

Everything the simulator raises on purpose derives from ``SimulationError`` so
the command-line front end can turn it into a one-line diagnostic.
"""


class SimulationError(Exception):
    """Base class for expected, user-facing failures."""


class ParameterError(SimulationError, ValueError):
    """Inputs violate a documented invariant or precondition."""


class LosslessSingularError(ParameterError):
    """Susceptibility denominator vanishes for a real detuning."""


class WindowTooNarrowError(SimulationError):
    """Finite-difference estimate of dn/domega did not converge."""


class UnreachableVelocityError(SimulationError):
    """Requested group velocity needs a coupling outside the allowed range."""


class FullyAtomicLimitError(ParameterError):
    """Zero control Rabi frequency: the polariton is a pure spin wave."""


class ExtractionError(SimulationError):
    """Magnetic moment cannot be extracted (zero gradient, empty data)."""


class GridError(ParameterError):
    """Transverse or temporal grid does not resolve the field."""


class NotConvergedError(SimulationError):
    """Split-step propagation did not converge under step doubling."""


class PulseWindowError(SimulationError):
    """Pulse bandwidth exceeds the transparency window."""


class FitError(SimulationError):
    """Gaussian peak fit failed."""


class NoPeakError(FitError):
    """Trace has no dominant maximum."""


class PoorFitError(FitError):
    """Fit residual exceeds the acceptance gate."""
