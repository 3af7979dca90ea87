import functools
import numpy as np
from magspec.exceptions import BoundaryAmplitudeTooLarge
from magspec.eigensolve import Effective1D, solve_effective_1d
from magspec.initializer import get_logger

# coarse sampling of the potential used to place the truncation window
COARSE_GRID = np.linspace(-60.0, 60.0, 2401)
INITIAL_PAD = 10.0
MAX_PAD = 400.0
INITIAL_CAP = 40.0
MAX_ATTEMPTS = 10


def _window(potential, cap, pad, left, right):
    with np.errstate(over="ignore"):
        values = np.asarray(potential(COARSE_GRID), dtype=float)
    values = np.where(np.isfinite(values), values, np.inf)
    i_min = int(np.argmin(values))
    v_min = values[i_min]
    below = np.nonzero(values <= v_min + cap)[0]
    bounds = []
    for side, kind in (("left", left), ("right", right)):
        if kind == "saturate":
            edge = COARSE_GRID[i_min] - pad if side == "left" else COARSE_GRID[i_min] + pad
        else:
            edge = COARSE_GRID[below[0]] - 1.0 if side == "left" else COARSE_GRID[below[-1]] + 1.0
        bounds.append(edge)
    return tuple(bounds), v_min


def member_ground_state(potential, mass_prefactor=0.5, threshold=None,
                        left="cap", right="cap", spacing=0.02, richardson=True,
                        name="member"):
    """
    Ground state energy of -mu v'' + V(z) on the real line.

    A side marked "cap" confines (V grows without bound), a side marked
    "saturate" tends to the continuum threshold. The truncation window is
    read off a coarse sampling of V and extended until the ground state
    certifies decay at both ends. A ground state that still does not decay
    at the largest window is at the onset of the continuum, and the
    threshold is reported instead.

    Returns:
        float: min(lambda0, threshold) of the untruncated operator
    """
    pad, cap = INITIAL_PAD, INITIAL_CAP
    _, v_min = _window(potential, cap, pad, left, right)
    if threshold is not None and v_min >= threshold:
        # -mu v'' + V >= threshold, nothing lies below the continuum
        return float(threshold)

    value = None
    for attempt in range(MAX_ATTEMPTS):
        interval, _ = _window(potential, cap, pad, left, right)
        eff = Effective1D(interval, spacing, potential,
                          left_bc="decay", right_bc="decay",
                          mass_prefactor=mass_prefactor,
                          continuum_threshold=threshold,
                          richardson=richardson, name=name)
        try:
            value = solve_effective_1d(eff).lambda0
        except BoundaryAmplitudeTooLarge as err:
            value = err.result.lambda0
            failed = [side for side in ("left", "right")
                      if err.result.info.get(side + "_amplitude", 0.0) > 1e-8]
            get_logger().debug("{}: window {} not certified on {} ({:.2e})".format(
                name, interval, failed, err.amplitude))
            if any(dict(left=left, right=right)[side] == "cap" for side in failed):
                cap *= 2
            if any(dict(left=left, right=right)[side] == "saturate" for side in failed):
                if pad >= MAX_PAD:
                    break
                gap = (threshold - value) if threshold is not None else 0.0
                reach = 20.0 / np.sqrt(gap / mass_prefactor) if gap > 0 else MAX_PAD
                pad = min(MAX_PAD, max(2 * pad, reach))
            continue
        return value if threshold is None else min(value, float(threshold))

    if threshold is None:
        raise BoundaryAmplitudeTooLarge(np.nan, None)
    get_logger().warning(
        "{}: no decay at window {}, reporting the continuum threshold {:.6g}".format(
            name, MAX_PAD, threshold))
    return min(value, float(threshold))


@functools.lru_cache(maxsize=4096)
def maass_member(field, sign, spacing=0.02):
    """
    Fourier mode of sign xi along x of the Maass operator with field B:
    -1/2 v'' + 1/2(xi e^z + B)^2 + 1/8 in z = log y. By dilation the mode
    depends on the sign of xi only; xi = 0 is the continuum threshold
    1/2 B^2 + 1/8.
    """
    threshold = 0.5 * field ** 2 + 0.125
    if sign == 0:
        return threshold

    def potential(z):
        return 0.5 * (sign * np.exp(z) + field) ** 2 + 0.125

    return member_ground_state(potential, 0.5, threshold, left="saturate",
                               right="cap", spacing=spacing,
                               name="maass(B={:.6g}, sign={})".format(field, sign))


def maass_potential(field, sign):
    def potential(z):
        return 0.5 * (sign * np.exp(z) + field) ** 2 + 0.125
    return potential


def sol_potential(Bx, By, xi_x, xi_y):
    """D_z^2 + xi_x^2 e^{2z} + 2 B_x xi_x e^z + xi_y^2 e^{-2z} + 2 B_y xi_y e^{-z}."""
    def potential(z):
        return (xi_x ** 2 * np.exp(2 * z) + 2 * Bx * xi_x * np.exp(z)
                + xi_y ** 2 * np.exp(-2 * z) + 2 * By * xi_y * np.exp(-z))
    return potential


def sol_member(Bx, By, xi_x, xi_y, spacing=0.02):
    """Ground value of the reduced Sol operator (unit mass, 2H - B^2)."""
    if xi_x == 0 and xi_y == 0:
        return 0.0
    threshold = 0.0 if xi_x == 0 or xi_y == 0 else None
    return member_ground_state(
        sol_potential(Bx, By, xi_x, xi_y), 1.0, threshold,
        left="cap" if xi_y != 0 else "saturate",
        right="cap" if xi_x != 0 else "saturate",
        spacing=spacing,
        name="sol(xi=({:.6g}, {:.6g}))".format(xi_x, xi_y))
