import numpy as np
from magspec.closedform.base import ClosedFormSpectrum


def maass_points(B):
    """Discrete Maass levels 1/2((2k+1)|B| - k(k+1)), 0 <= k < |B| - 1/2."""
    b = abs(float(B))
    return [(0.5 * ((2 * k + 1) * b - k * (k + 1)), {"k": k})
            for k in range(int(np.ceil(b)) + 1) if k < b - 0.5]


def maass_threshold(B):
    return 0.5 * (float(B) ** 2 + 0.25)


def maass(B):
    """Magnetic Laplacian of the hyperbolic plane with potential B dx / y."""
    points = maass_points(B)
    threshold = maass_threshold(B)
    lambda0 = min([threshold] + [value for value, _ in points])
    return ClosedFormSpectrum("maass", lambda cap: iter(points), threshold,
                              lambda0, "half", {"B": float(B)}, maass)


def sphere_bundle_h_threshold(B):
    """
    Bottom of the essential spectrum on the sphere bundle of H, the least
    threshold 1/2(m^2 + 1/4) + 1/2(m + B)^2 of the Fourier modes.
    """
    b = abs(float(B))
    j = np.arange(int(np.floor(b)) + 2)
    return 0.5 * (float(np.min(j ** 2 + (b - j) ** 2)) + 0.25)


def sphere_bundle_h_lambda0(B):
    b = abs(float(B))
    if b <= 7 / 8:
        return 0.5 * (b ** 2 + 0.25)
    if b <= 1:
        return 0.5 * (1 + (1 - b) ** 2)
    n = np.floor(b)
    return 0.5 * (n + (b - n) ** 2)


def sphere_bundle_h(B):
    """
    Sphere bundle of H. Fourier mode m along the fibre is a shifted Maass
    operator with field m, giving the points
    1/2((B + m)^2 + (2k+1)|m| - k(k+1)) for m != 0 and 0 <= k < |m|.
    """
    B = float(B)

    def point_source(cap):
        # every level of mode m is at least |m| / 2
        for m in range(-int(2 * cap) - 1, int(2 * cap) + 2):
            if m == 0:
                continue
            for k in range(abs(m)):
                value = 0.5 * ((B + m) ** 2 + (2 * k + 1) * abs(m) - k * (k + 1))
                if value <= cap:
                    yield value, {"m": m, "k": k}

    return ClosedFormSpectrum("sphere_bundle_h", point_source,
                              sphere_bundle_h_threshold(B),
                              sphere_bundle_h_lambda0(B), "half", {"B": B},
                              sphere_bundle_h)


def sl2_universal_lambda0(B):
    """Ground state energy on the universal cover of SL(2, R)."""
    b = abs(float(B))
    if b <= 1:
        return 0.5 * (0.5 * b ** 2 + 0.25)
    return 0.5 * (b - 0.25)


def sl2_universal_argmin(B):
    """Fibre momentum xi_phi attaining the ground state energy."""
    B = float(B)
    if abs(B) <= 1:
        return -0.5 * B
    return np.sign(B) * (0.5 - abs(B))
