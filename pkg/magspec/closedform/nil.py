import numpy as np
from magspec.closedform.base import ClosedFormSpectrum, no_points

WHICH = ("universal", "abelian")


def nil_member(B, xi, k=0):
    """
    Level k of the Fourier mode xi along the centre,
    1/2((B + 2 pi xi)^2 + 2 pi (2k+1)|xi|). At xi = 0 the mode is the free
    plane shifted by 1/2 B^2.
    """
    if xi == 0:
        return 0.5 * B ** 2
    return 0.5 * ((B + 2 * np.pi * xi) ** 2 + 2 * np.pi * (2 * k + 1) * abs(xi))


def nil_universal_lambda0(B):
    b = abs(float(B))
    return 0.5 * b ** 2 if b <= 0.5 else 0.5 * (b - 0.25)


def nil_universal_argmin(B):
    """Centre momentum of the lowest mode; 0 stands for the limit xi -> 0."""
    B = float(B)
    if abs(B) <= 0.5:
        return 0.0
    return -np.sign(B) * (abs(B) - 0.5) / (2 * np.pi)


def nil_abelian_lambda0_branches(B, m_max):
    """Lowest level of every integer mode |m| <= m_max, keyed by m."""
    return {m: nil_member(float(B), m) for m in range(-m_max, m_max + 1)}


def nil_abelian_lambda0(B, m_max=None):
    b = abs(float(B))
    m_max = int(np.ceil(b / (2 * np.pi))) + 2 if m_max is None else m_max
    return min(nil_abelian_lambda0_branches(B, m_max).values())


def nil(B, which="universal"):
    """
    Heisenberg group with left-invariant metric and field B on the
    universal cover or on the quotient by the central lattice.
    """
    if which not in WHICH:
        raise ValueError("which must be one of {}, got {!r}".format(WHICH, which))
    B = float(B)

    def builder(B, which=which):
        return nil(B, which)

    if which == "universal":
        lambda0 = nil_universal_lambda0(B)
        return ClosedFormSpectrum("nil_universal", no_points, lambda0, lambda0,
                                  "half", {"B": B, "which": which}, builder)

    def point_source(cap):
        for m in range(-int(cap / np.pi) - 1, int(cap / np.pi) + 2):
            if m == 0:
                continue
            k = 0
            while 2 * np.pi * (2 * k + 1) * abs(m) <= 2 * cap:
                yield nil_member(B, m, k), {"m": m, "k": k}
                k += 1

    return ClosedFormSpectrum("nil_abelian", point_source, 0.5 * B ** 2,
                              nil_abelian_lambda0(B), "half",
                              {"B": B, "which": which}, builder)
