import numpy as np
from collections import namedtuple
from magspec.exceptions import NotTorus
from magspec.geometry.fields import VectorPotential, GaugeFunction


HodgeSplit = namedtuple("HodgeSplit",
                        ["harmonic_in_cover_kernel",
                         "harmonic_orthogonal",
                         "coexact",
                         "exact",
                         "primitive",
                         "norms"])


def l2_inner(grid, a, b):
    """Discrete L^2 inner product of two 1-forms on a flat grid."""
    return float(np.sum(a.components * b.components) * grid.cell_volume)


def l2_norm(grid, a):
    return np.sqrt(max(l2_inner(grid, a, a), 0.0))


def _centered_symbols(grid):
    symbols = []
    for axis, (n, h) in enumerate(zip(grid.shape, grid.spacings)):
        k = np.fft.fftfreq(n) * n
        shape = [1] * grid.dimension
        shape[axis] = n
        symbols.append((1j * np.sin(2 * np.pi * k / n) / h).reshape(shape))
    return symbols


def hodge_decompose_torus(grid, alpha, cover_directions=()):
    """
    Split a 1-form on a flat torus into harmonic, coexact and exact parts.

    The exact part is the projection onto the range of the centred
    gradient, computed by an FFT Poisson solve for the divergence of
    alpha. The harmonic part is the per-axis mean and is further split
    against the span of cover_directions (constant covectors).

    Args:
        grid (GridDiscretization): grid on a flat torus
        alpha (VectorPotential): the form to decompose
        cover_directions (sequence of array-like): harmonic directions
            spanning the cover kernel

    Returns:
        HodgeSplit
    """
    if grid.geometry.kind != "torus" or len(grid.periodic_axes) != grid.dimension:
        raise NotTorus("Hodge decomposition needs a flat torus, got {}".format(
            grid.geometry.kind))
    alpha.check_grid(grid)
    d = grid.dimension
    components = alpha.components

    mean = components.reshape(d, -1).mean(axis=1)
    harmonic = mean.reshape((d, ) + (1, ) * d) * np.ones((d, ) + grid.shape)

    symbols = _centered_symbols(grid)
    transformed = [np.fft.fftn(components[axis]) for axis in range(d)]
    divergence = sum(np.conj(s) * t for s, t in zip(symbols, transformed))
    laplacian = sum(np.abs(s) ** 2 for s in symbols)
    solvable = laplacian > 1e-14 * laplacian.max() if laplacian.max() > 0 \
        else np.zeros_like(laplacian, dtype=bool)
    f_hat = np.zeros_like(divergence)
    f_hat[solvable] = divergence[solvable] / laplacian[solvable]
    primitive = np.real(np.fft.ifftn(f_hat))
    exact = np.array([np.real(np.fft.ifftn(s * f_hat))
                      for s in symbols])
    coexact = components - harmonic - exact

    directions = np.array(cover_directions, dtype=float).reshape(-1, d)
    if len(directions):
        basis, _ = np.linalg.qr(directions.T)
        in_kernel = basis @ (basis.T @ mean)
    else:
        in_kernel = np.zeros(d)
    harmonic_in = in_kernel.reshape((d, ) + (1, ) * d) * np.ones((d, ) + grid.shape)

    parts = {
        "harmonic_in_cover_kernel": VectorPotential(harmonic_in),
        "harmonic_orthogonal": VectorPotential(harmonic - harmonic_in),
        "coexact": VectorPotential(coexact),
        "exact": VectorPotential(exact),
    }
    norms = {name: l2_norm(grid, part) for name, part in parts.items()}
    norms["total"] = l2_norm(grid, alpha)
    return HodgeSplit(primitive=GaugeFunction(primitive), norms=norms, **parts)


def coclosed_part(split):
    """alpha_cc = alpha - df_alpha, the harmonic plus coexact part."""
    return VectorPotential(split.harmonic_in_cover_kernel.components
                           + split.harmonic_orthogonal.components
                           + split.coexact.components)


def coclosed_energy(grid, alpha):
    """h(L) = ||alpha_cc||^2 / (2 vol) on a flat torus."""
    split = hodge_decompose_torus(grid, alpha)
    volume = grid.cell_volume * grid.size
    return l2_inner(grid, coclosed_part(split), coclosed_part(split)) / (2 * volume)
