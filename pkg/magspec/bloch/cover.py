import numpy as np
import scipy.optimize
from magspec.assembly import assemble, Character
from magspec.eigensolve import dense_spectrum, lowest_eigenvalues, MAX_DENSE_SIZE
from magspec.exceptions import TooLarge
from magspec.initializer import get_logger
from magspec.bloch.bands import band_structure

MAX_FOLD = 4


def _twisted_lambda0(grid, alpha, V, angles, axes, solver):
    op = assemble(grid, alpha, V, Character(angles, axes))
    return float(solver(op, k=1).lambda0)


def cover_groundstate_via_characters(grid, alpha, V, cover_spec, samples_per_axis=64,
                                     tol=1e-10, sampler=None, return_character=False,
                                     solver=lowest_eigenvalues):
    """
    lambda0 of an abelian cover as the minimum of the twisted ground state
    energies over its characters. Continuous axes are refined by
    golden-section search around the sampled minimum, one axis at a time.
    solver is the eigensolver of the twisted operators.
    """
    structure = band_structure(grid, alpha, V, cover_spec, samples_per_axis,
                               k=1, sampler=sampler, solver=solver)
    best = structure.lambda0
    angles = list(structure.argmin_character.angles)
    axes = cover_spec.axes
    step = 2 * np.pi / samples_per_axis

    for axis in cover_spec.continuous_axes:
        i = axes.index(axis)

        def objective(theta, i=i):
            trial = list(angles)
            trial[i] = theta
            return _twisted_lambda0(grid, alpha, V, trial, axes, solver)

        center = angles[i]
        bracket = (center - step, center, center + step)
        try:
            result = scipy.optimize.minimize_scalar(
                objective, bracket=bracket, method="golden", tol=tol)
        except ValueError:
            continue
        if result.fun < best:
            best = float(result.fun)
            angles[i] = float(np.mod(result.x, 2 * np.pi))

    get_logger().debug("cover lambda0 {:.12g} at character {}".format(best, angles))
    if return_character:
        return best, Character(angles, axes)
    return best


def direct_cover_oracle(grid, alpha, V, fold, k=None):
    """
    Spectrum of the n-fold cover grid built by unrolling the periodic axes
    and lifting alpha and V periodically.

    Args:
        fold (sequence of int): fold count per axis, at most 4, 1 on
            Dirichlet axes
        k (int, optional): number of eigenvalues, all by default

    Returns:
        SpectrumResult

    Raises:
        TooLarge: when a fold exceeds 4 or the cover exceeds dense size
    """
    fold = tuple(int(n) for n in np.atleast_1d(fold))
    if len(fold) != grid.dimension:
        raise ValueError("fold needs {} entries, got {}".format(grid.dimension, fold))
    if max(fold) > MAX_FOLD:
        raise TooLarge("folds up to {} per axis, got {}".format(MAX_FOLD, fold))
    for axis, n in enumerate(fold):
        if n > 1 and not grid.is_periodic(axis):
            raise ValueError("axis {} is not periodic and cannot unroll".format(axis))
    cover = grid.unroll(fold)
    if cover.size > MAX_DENSE_SIZE:
        raise TooLarge("cover grid of {} nodes exceeds {}".format(cover.size, MAX_DENSE_SIZE))
    lifted_alpha = None if alpha is None else alpha.tile(grid, fold)
    lifted_V = None if V is None else V.tile(grid, fold)
    return dense_spectrum(assemble(cover, lifted_alpha, lifted_V), k=k)
