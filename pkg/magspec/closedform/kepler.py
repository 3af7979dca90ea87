import numpy as np
from magspec.exceptions import InvalidQuantumNumber
from magspec.closedform.base import ClosedFormSpectrum

MAX_LEVELS = 200


def _check_level(n):
    if int(n) != n or n < 0:
        raise InvalidQuantumNumber("radial quantum number must be a natural number, got {}".format(n))


def kepler(B, m, n):
    """
    Level n of angular momentum m != 0 for the Kepler problem on the
    punctured plane with constant field B: -1/(2(n + |m| + 1/2)^2) + B m.
    """
    if int(m) != m or m == 0:
        raise InvalidQuantumNumber(
            "angular momentum must be a nonzero integer, got {}".format(m))
    _check_level(n)
    return -1.0 / (2 * (n + abs(m) + 0.5) ** 2) + float(B) * m


def bohr(n):
    """Bohr level -1/(2(n + 1/2)^2) of the Friedrichs extension at m = 0."""
    _check_level(n)
    return -1.0 / (2 * (n + 0.5) ** 2)


def _levels(level):
    def point_source(cap):
        for n in range(MAX_LEVELS):
            value = level(n)
            if value > cap:
                return
            yield value, {"n": n}
    return point_source


def kepler_spectrum(B, m):
    B = float(B)
    return ClosedFormSpectrum(
        "kepler", _levels(lambda n: kepler(B, m, n)), B * m,
        kepler(B, m, 0), "half", {"B": B, "m": m},
        lambda B, m=m: kepler_spectrum(B, -m))


def bohr_spectrum():
    return ClosedFormSpectrum("bohr", _levels(bohr), 0.0, bohr(0), "half", {})


def kepler_total_spectrum_is_real_line(B):
    """
    For B != 0 the thresholds B m run over all of B Z and each carries an
    essential spectrum [B m, inf), so the angular sum covers the real axis.
    """
    return float(B) != 0.0
