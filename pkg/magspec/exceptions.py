"""
Named errors raised across magspec.

Argument and configuration errors also derive from ValueError, solver
failures from RuntimeError. The CLI maps the first group to exit code 2
and the second to exit code 3.
"""


class MagspecError(Exception):
    """Base class of every error raised by magspec."""


class ConfigError(MagspecError, ValueError):
    """Invalid command-line or JSON configuration."""


class DegenerateChart(MagspecError, ValueError):
    pass


class TooCoarse(MagspecError, ValueError):
    pass


class OddDimensionPairing(MagspecError, ValueError):
    pass


class NotSkew(MagspecError, ValueError):
    pass


class NotTorus(MagspecError, ValueError):
    pass


class ShapeMismatch(MagspecError, ValueError):
    pass


class NonLatticeShift(MagspecError, ValueError):
    pass


class UnknownFamily(MagspecError, ValueError):
    pass


class UnknownGeometry(MagspecError, ValueError):
    pass


class InvalidQuantumNumber(MagspecError, ValueError):
    pass


class TooLarge(MagspecError, ValueError):
    pass


class NonHermitianAssembly(MagspecError, RuntimeError):
    pass


class NotConverged(MagspecError, RuntimeError):
    """
    Raised when an iterative solver stops before reaching its tolerance.

    Args:
        message (str): description of the failure
        result: the best-so-far result of the solver
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class BoundaryAmplitudeTooLarge(MagspecError, RuntimeError):
    """
    The eigenvector of a truncated 1D problem did not decay before the
    truncation point.

    Args:
        amplitude (float): relative amplitude near the decay boundary
        result (SpectrumResult): the uncertified spectrum
    """

    def __init__(self, amplitude, result=None):
        super().__init__(
            "boundary amplitude {:.3e} exceeds the decay tolerance".format(amplitude))
        self.amplitude = amplitude
        self.result = result


class ScanRangeExhausted(MagspecError, RuntimeError):
    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class ViolationFound(MagspecError, RuntimeError):
    def __init__(self, report):
        super().__init__(
            "lambda0 = {:.12g} exceeds the critical value bound {:.12g}".format(
                report.lambda0, report.critical_value))
        self.report = report
