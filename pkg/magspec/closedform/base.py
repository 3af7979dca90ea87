import numpy as np
from magspec.initializer import is_debug_mode

NORMALIZATIONS = ("half", "double")
# arguments negated by ClosedFormSpectrum.flipped
FIELD_KEYS = ("B", "Bx", "By", "lambda_list", "a")
# H_double = 2 H_half
_SCALE = {("double", "half"): 0.5, ("half", "double"): 2.0,
          ("half", "half"): 1.0, ("double", "double"): 1.0}


def convert(value, source, target):
    """Convert an energy between the half and double normalizations."""
    return value * _SCALE[(source, target)]


class ClosedFormSpectrum:
    """
    Analytic spectrum of a model operator in the normalization of its
    source formula.

    Args:
        name (str): oracle name
        point_source (callable): cap -> iterable of (value, quantum numbers)
            with every point of the spectrum <= cap
        continuum_threshold (float or None): bottom of the essential
            spectrum, None for a pure point spectrum
        lambda0 (float): bottom of the spectrum
        normalization (str): "half" or "double"
        arguments (dict): the field strengths the oracle was built from
        builder (callable, optional): rebuilds the oracle from arguments
        validity (dict, optional): constraints on the arguments
    """

    def __init__(self, name, point_source, continuum_threshold, lambda0,
                 normalization, arguments, builder=None, validity=None,
                 scale=1.0):
        self.name = name
        self._point_source = point_source
        self.continuum_threshold = None if continuum_threshold is None \
            else float(continuum_threshold)
        self.lambda0 = float(lambda0)
        self.normalization = normalization
        self.arguments = dict(arguments)
        self._builder = builder
        self.validity = {} if validity is None else dict(validity)
        self._scale = scale
        if is_debug_mode():
            assert normalization in NORMALIZATIONS, \
                "unknown normalization {}".format(normalization)

    def point_spectrum(self, energy_cap=None):
        """Sorted (value, quantum numbers) pairs up to the energy cap."""
        if energy_cap is None:
            energy_cap = self.default_cap()
        cap = energy_cap / self._scale
        points = [(self._scale * value, qn)
                  for value, qn in self._point_source(cap) if value <= cap]
        return sorted(points, key=lambda point: point[0])

    def points(self, energy_cap=None):
        return [value for value, _ in self.point_spectrum(energy_cap)]

    def default_cap(self):
        if self.continuum_threshold is not None:
            return max(self.continuum_threshold, self.lambda0)
        return self.lambda0 + 10 * max(1.0, abs(self.lambda0))

    def consistency_defect(self):
        """|lambda0 - min(threshold, inf points)|."""
        candidates = self.points(self.lambda0 + 1e-9 * max(1.0, abs(self.lambda0)))
        if self.continuum_threshold is not None:
            candidates.append(self.continuum_threshold)
        return abs(self.lambda0 - min(candidates)) if candidates else np.inf

    def converted(self, normalization):
        factor = _SCALE[(self.normalization, normalization)]
        threshold = None if self.continuum_threshold is None \
            else factor * self.continuum_threshold
        return ClosedFormSpectrum(self.name, self._point_source, threshold,
                                  factor * self.lambda0, normalization,
                                  self.arguments, self._builder,
                                  self.validity, self._scale * factor)

    def flipped(self):
        """The oracle at the negated field strengths."""
        if self._builder is None:
            raise ValueError("{} has no field strengths to flip".format(self.name))
        arguments = {}
        for key, value in self.arguments.items():
            if key not in FIELD_KEYS:
                arguments[key] = value
            elif isinstance(value, (tuple, list)):
                arguments[key] = tuple(-v for v in value)
            elif isinstance(value, (int, float)) and not isinstance(value, bool):
                arguments[key] = -value
            else:
                arguments[key] = value
        return self._builder(**arguments).converted(self.normalization)

    def contains(self, value, tol=0.0, energy_cap=None):
        """Spectrum membership of a value within tol."""
        if self.continuum_threshold is not None and value >= self.continuum_threshold - tol:
            return True
        cap = value + tol if energy_cap is None else energy_cap
        return any(abs(point - value) <= tol for point in self.points(cap))

    def to_dict(self, energy_cap=None):
        return {"name": self.name,
                "arguments": self.arguments,
                "points": self.points(energy_cap),
                "threshold": self.continuum_threshold,
                "lambda0": self.lambda0,
                "normalization": self.normalization}

    def __repr__(self):
        return "ClosedFormSpectrum({}, lambda0={:.12g}, threshold={}, {})".format(
            self.name, self.lambda0, self.continuum_threshold, self.normalization)


def no_points(cap):
    return iter(())
