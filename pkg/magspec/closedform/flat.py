import numpy as np
from magspec.closedform.base import ClosedFormSpectrum, no_points


def landau(lambda_list, rank_deficient=False):
    """
    Constant field on R^n in the unit-coefficient (double) normalization.

    With symplectic field the spectrum is the Landau set
    {sum_j |lambda_j| (2 k_j + 1)}; with a kernel it is [Tr+, inf).
    """
    lambdas = tuple(float(lam) for lam in lambda_list)
    if any(lam == 0.0 for lam in lambdas):
        raise ValueError("field strengths must be nonzero, got {}".format(lambdas))
    trace = float(sum(abs(lam) for lam in lambdas))

    def builder(lambda_list, rank_deficient=rank_deficient):
        return landau(lambda_list, rank_deficient)

    arguments = {"lambda_list": lambdas, "rank_deficient": rank_deficient}
    if not lambdas or rank_deficient:
        return ClosedFormSpectrum("landau", no_points, trace, trace, "double",
                                  arguments, builder)

    def point_source(cap):
        def levels(index, energy, ks):
            if index == len(lambdas):
                yield energy, {"k": ks}
                return
            step = abs(lambdas[index])
            k = 0
            # remaining pairs contribute at least their zero-point energy
            rest = sum(abs(lam) for lam in lambdas[index + 1:])
            while energy + step * (2 * k + 1) + rest <= cap:
                yield from levels(index + 1, energy + step * (2 * k + 1), ks + (k, ))
                k += 1
        yield from levels(0, 0.0, ())

    return ClosedFormSpectrum("landau", point_source, None, trace, "double",
                              arguments, builder)


def circle_flux(a, length=1.0):
    """
    Circle of length L with constant potential 2 pi a dx / L, half
    normalization: eigenvalues 1/2 (2 pi / L)^2 (m + a)^2.
    """
    a = float(a)

    def point_source(cap):
        if cap < 0:
            return
        reach = np.sqrt(2 * cap) * length / (2 * np.pi)
        for m in range(int(np.floor(-a - reach)) - 1, int(np.ceil(-a + reach)) + 2):
            yield 0.5 * (2 * np.pi / length) ** 2 * (m + a) ** 2, {"m": m}

    def builder(a, length=length):
        return circle_flux(a, length)

    distance = abs(a - np.rint(a))
    return ClosedFormSpectrum("circle_flux", point_source, None,
                              2 * np.pi ** 2 * distance ** 2 / length ** 2, "half",
                              {"a": a, "length": length}, builder)
