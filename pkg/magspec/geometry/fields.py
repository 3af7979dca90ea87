import numpy as np
import scipy.linalg
from magspec.exceptions import OddDimensionPairing, NotSkew, ShapeMismatch
from magspec.initializer import is_debug_mode


class VectorPotential:
    """
    Magnetic potential alpha, stored nodewise by chart component.

    The coupling of a link is its phase, the line integral of alpha along
    the link. Unless exact phases are supplied they come from the
    trapezoid rule on the nodal components.

    Args:
        components (np.ndarray): shape (d, *grid.shape), computational
            chart components
        link_phases (np.ndarray, optional): shape (d, *grid.shape), phase
            of the forward link leaving each node along each axis
    """

    def __init__(self, components, link_phases=None):
        self.components = np.asarray(components, dtype=float)
        self.link_phases = None if link_phases is None \
            else np.asarray(link_phases, dtype=float)
        if is_debug_mode():
            assert np.all(np.isfinite(self.components)), \
                "vector potential must be finite"
            if self.link_phases is not None:
                assert self.link_phases.shape == self.components.shape, \
                    "link phases {} do not match components {}".format(
                        self.link_phases.shape, self.components.shape)

    @property
    def shape(self):
        return self.components.shape[1:]

    @property
    def dimension(self):
        return self.components.shape[0]

    @classmethod
    def zeros(cls, grid):
        return cls(np.zeros((grid.dimension, ) + grid.shape))

    @classmethod
    def from_natural(cls, grid, components):
        """Convert natural chart components (e.g. alpha_y) to the grid's."""
        components = np.array(components, dtype=float, copy=True)
        natural = grid.natural_coordinates()
        for axis in grid.geometry.log_axes:
            # alpha_s = alpha_y dy/ds = y alpha_y
            components[axis] = components[axis] * natural[axis]
        return cls(components)

    @classmethod
    def constant(cls, grid, vector):
        vector = np.asarray(vector, dtype=float)
        components = np.broadcast_to(
            vector.reshape((-1, ) + (1, ) * grid.dimension),
            (grid.dimension, ) + grid.shape).copy()
        return cls(components)

    def check_grid(self, grid):
        if self.components.shape != (grid.dimension, ) + grid.shape:
            raise ShapeMismatch("vector potential of shape {} on grid {}".format(
                self.components.shape, grid.shape))

    def phases(self, grid):
        """Forward-link phases along every axis, shape (d, *grid.shape)."""
        self.check_grid(grid)
        if self.link_phases is not None:
            return self.link_phases
        phases = np.empty_like(self.components)
        for axis in range(grid.dimension):
            a = self.components[axis]
            if grid.is_periodic(axis):
                ahead = np.roll(a, -1, axis=axis)
            else:
                # the last link leads to a ghost node and never couples
                ahead = np.concatenate(
                    [np.take(a, np.arange(1, a.shape[axis]), axis=axis),
                     np.take(a, [-1], axis=axis)], axis=axis)
            phases[axis] = 0.5 * grid.spacings[axis] * (a + ahead)
        return phases

    def __add__(self, other):
        if self.link_phases is None and other.link_phases is None:
            return VectorPotential(self.components + other.components)
        raise TypeError(
            "adding potentials with exact link phases needs the grid, use plus(grid, other)")

    def plus(self, grid, other):
        return VectorPotential(self.components + other.components,
                               self.phases(grid) + other.phases(grid))

    def __mul__(self, scalar):
        link_phases = None if self.link_phases is None \
            else scalar * self.link_phases
        return VectorPotential(scalar * self.components, link_phases)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1.0

    def tile(self, grid, fold):
        link_phases = None if self.link_phases is None \
            else grid.tile(self.link_phases, fold)
        return VectorPotential(grid.tile(self.components, fold), link_phases)


class ScalarPotential:
    """Electric potential V sampled at the nodes."""

    def __init__(self, values):
        self.values = np.asarray(values, dtype=float)
        if is_debug_mode():
            assert np.all(np.isfinite(self.values)), \
                "scalar potential must be finite"
        self.minimum = float(self.values.min())

    @classmethod
    def zeros(cls, grid):
        return cls(np.zeros(grid.shape))

    def check_grid(self, grid):
        if self.values.shape != tuple(grid.shape):
            raise ShapeMismatch("scalar potential of shape {} on grid {}".format(
                self.values.shape, grid.shape))

    def __add__(self, other):
        if isinstance(other, ScalarPotential):
            return ScalarPotential(self.values + other.values)
        return ScalarPotential(self.values + other)

    def tile(self, grid, fold):
        return ScalarPotential(grid.tile(self.values, fold))


class GaugeFunction:
    """Real gauge function f, the phase of the unitary multiplier e^{if}."""

    def __init__(self, values):
        self.values = np.asarray(values, dtype=float)
        if is_debug_mode():
            assert np.all(np.isfinite(self.values)), \
                "gauge function must be finite"

    def check_grid(self, grid):
        if self.values.shape != tuple(grid.shape):
            raise ShapeMismatch("gauge function of shape {} on grid {}".format(
                self.values.shape, grid.shape))

    def centered_gradient(self, grid):
        """df by centred differences, respecting the identifications."""
        return centered_gradient(grid, self.values)

    def link_differences(self, grid):
        """f(x + h e_k) - f(x) on each forward link."""
        differences = np.zeros((grid.dimension, ) + grid.shape)
        for axis in range(grid.dimension):
            f = self.values
            if grid.is_periodic(axis):
                differences[axis] = np.roll(f, -1, axis=axis) - f
            else:
                n = f.shape[axis]
                ahead = np.take(f, np.arange(1, n), axis=axis) \
                    - np.take(f, np.arange(n - 1), axis=axis)
                index = [slice(None)] * grid.dimension
                index[axis] = slice(0, n - 1)
                differences[axis][tuple(index)] = ahead
        return differences


def centered_gradient(grid, values):
    """
    Centred-difference gradient of nodal values, shape (d, *grid.shape).
    Dirichlet axes fall back to one-sided differences at the chart ends.
    """
    values = np.asarray(values, dtype=float)
    gradient = np.zeros((grid.dimension, ) + grid.shape)
    for axis in range(grid.dimension):
        h = grid.spacings[axis]
        if grid.is_periodic(axis):
            gradient[axis] = (np.roll(values, -1, axis=axis)
                              - np.roll(values, 1, axis=axis)) / (2 * h)
        else:
            gradient[axis] = np.gradient(values, h, axis=axis)
    return gradient


def model_potential_torus(lambda_list, grid):
    """
    Sample the model potential sum_j lambda_j x_{2j-1} dx^{2j} on a grid.

    Coordinates are the chart coordinates of the grid, so the potential
    vanishes on the hyperplanes through the chart origin.

    Args:
        lambda_list (sequence of float): field strengths lambda_1..lambda_r
        grid (GridDiscretization): flat grid (torus or plane box)

    Returns:
        VectorPotential
    """
    lambda_list = list(lambda_list)
    d = grid.dimension
    if 2 * len(lambda_list) > d:
        raise OddDimensionPairing(
            "{} field strengths need {} coordinates, the chart has {}".format(
                len(lambda_list), 2 * len(lambda_list), d))
    coordinates = grid.coordinates()
    components = np.zeros((d, ) + grid.shape)
    for j, lam in enumerate(lambda_list):
        components[2 * j + 1] = lam * coordinates[2 * j]
    alpha = VectorPotential(components)
    alpha.field_strengths = tuple(float(lam) for lam in lambda_list)
    return alpha


def skew_normal_form(B_matrix, tol=1e-12):
    """
    Orthogonal normal form of a real skew-symmetric matrix.

    Returns Q and the nonzero lambda_j with Q^T B Q block diagonal, blocks
    [[0, lambda_j], [-lambda_j, 0]] first and the zero block last.
    """
    B = np.atleast_2d(np.asarray(B_matrix, dtype=float))
    if B.shape[0] != B.shape[1]:
        raise NotSkew("matrix of shape {} is not square".format(B.shape))
    if B.size and np.max(np.abs(B + B.T)) > tol:
        raise NotSkew("||B + B^T||_max = {:.3e}".format(np.max(np.abs(B + B.T))))
    d = B.shape[0]
    if d == 0 or np.max(np.abs(B)) == 0.0:
        return np.eye(d), ()

    # real Schur form of a normal matrix is block diagonal
    T, Z = scipy.linalg.schur(B, output="real")
    scale = max(1.0, np.max(np.abs(B)))
    pairs, zeros = [], []
    lambdas = []
    i = 0
    while i < d:
        if i + 1 < d and abs(T[i + 1, i]) > tol * scale:
            lam = T[i, i + 1]
            if abs(lam) > tol * scale:
                pairs += [i, i + 1]
                lambdas.append(lam)
            else:
                zeros += [i, i + 1]
            i += 2
        else:
            zeros.append(i)
            i += 1
    Q = Z[:, pairs + zeros]
    return Q, tuple(float(lam) for lam in lambdas)
