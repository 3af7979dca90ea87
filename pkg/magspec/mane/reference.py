import numpy as np
from magspec.exceptions import UnknownGeometry


def _half_square(B):
    return 0.5 * B ** 2


def _torus_monopole(B):
    return 0.0 if B == 0 else np.inf


# analytic critical values of the model geometries, c(B)
CATALOGUE = {
    "hyperbolic": _half_square,
    "sphere_bundle_h": _half_square,
    "sl2_universal": lambda B: 0.25 * B ** 2,
    "nil": _half_square,
    "sol": _half_square,
    "torus_exact": lambda B: 0.0,
    "torus_monopole": _torus_monopole,
}


def mane_reference(kind, B):
    """
    Critical value of a model geometry in the exact (or, for the torus,
    monopole) case. A magnetic field on the torus without a global
    primitive has no finite critical value on the universal cover.

    Raises:
        UnknownGeometry: when kind is not catalogued
    """
    if kind not in CATALOGUE:
        raise UnknownGeometry("no critical value for {!r}, known: {}".format(
            kind, sorted(CATALOGUE)))
    return float(CATALOGUE[kind](float(B)))
