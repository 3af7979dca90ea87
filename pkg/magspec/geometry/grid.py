import numpy as np
from magspec.exceptions import TooCoarse, DegenerateChart
from magspec.geometry.geometry import Geometry

BOUNDARIES = ("periodic", "dirichlet")


class GridDiscretization:
    """
    Structured node grid on the chart of a geometry.

    Periodic axes carry nodes lo + i*h with h = period / n. Dirichlet axes
    are cell centred, lo + (i + 1/2)*h with h = length / n, so that the
    zero ghost nodes sit one link outside the chart. Logarithmic axes are
    sampled uniformly in s = log y and every metric quantity the grid hands
    out is expressed in the sampled (computational) coordinates.

    Args:
        geometry (Geometry): the chart to discretize
        nodes_per_axis (tuple of int): node count per axis, each >= 4
        boundary (tuple of str): "periodic" or "dirichlet" per axis.
            Defaults to periodic exactly on the identified axes.
    """

    def __init__(self, geometry, nodes_per_axis, boundary=None):
        self.geometry = geometry
        nodes_per_axis = tuple(int(n) for n in np.atleast_1d(nodes_per_axis))
        if len(nodes_per_axis) != geometry.dimension:
            raise ValueError("nodes_per_axis needs {} entries, got {}".format(
                geometry.dimension, len(nodes_per_axis)))
        if min(nodes_per_axis) < 4:
            raise TooCoarse(
                "every axis needs at least 4 nodes, got {}".format(nodes_per_axis))
        self.nodes_per_axis = nodes_per_axis
        self.dimension = geometry.dimension

        if boundary is None:
            boundary = tuple("periodic" if geometry.is_periodic(axis) else "dirichlet"
                             for axis in range(self.dimension))
        if isinstance(boundary, str):
            boundary = (boundary, ) * self.dimension
        boundary = tuple(boundary)
        for axis, bc in enumerate(boundary):
            if bc not in BOUNDARIES:
                raise ValueError("unknown boundary {!r}".format(bc))
            if (bc == "periodic") != geometry.is_periodic(axis):
                raise ValueError(
                    "axis {} boundary {!r} disagrees with the identifications of {}".format(
                        axis, bc, geometry.kind))
        self.boundary = boundary

        self.bounds = []
        self.spacings = []
        self.axes = []
        for axis, n in enumerate(self.nodes_per_axis):
            lo, hi = geometry.bounds[axis]
            if axis in geometry.log_axes:
                lo, hi = np.log(lo), np.log(hi)
            h = (hi - lo) / n
            offset = 0.0 if boundary[axis] == "periodic" else 0.5
            self.bounds.append((lo, hi))
            self.spacings.append(h)
            self.axes.append(lo + (np.arange(n) + offset) * h)
        self.spacings = tuple(self.spacings)
        self.shape = self.nodes_per_axis
        self.size = int(np.prod(self.shape))

        geometry.check_positive_definite(self.natural_coordinates())

    @property
    def cell_volume(self):
        return float(np.prod(self.spacings))

    def is_periodic(self, axis):
        return self.boundary[axis] == "periodic"

    @property
    def periodic_axes(self):
        return tuple(axis for axis in range(self.dimension) if self.is_periodic(axis))

    def period(self, axis):
        lo, hi = self.bounds[axis]
        return hi - lo

    def coordinates(self):
        """Computational node coordinates, shape (d, *shape)."""
        return np.array(np.meshgrid(*self.axes, indexing="ij"))

    def natural(self, points):
        points = np.array(points, dtype=float, copy=True)
        for axis in self.geometry.log_axes:
            points[axis] = np.exp(points[axis])
        return points

    def natural_coordinates(self):
        return self.natural(self.coordinates())

    def metric_inverse_at(self, points):
        """g^{jk} in computational coordinates, shape (d, d, ...)."""
        natural = self.natural(points)
        g_inv = self.geometry.metric_inverse(natural)
        for axis in self.geometry.log_axes:
            # ds/dy = 1/y
            g_inv[axis, :] = g_inv[axis, :] / natural[axis]
            g_inv[:, axis] = g_inv[:, axis] / natural[axis]
        return g_inv

    def volume_density_at(self, points):
        natural = self.natural(points)
        density = self.geometry.volume_density(natural)
        for axis in self.geometry.log_axes:
            density = density * natural[axis]
        return density

    def metric_inverse(self):
        return self.metric_inverse_at(self.coordinates())

    def volume_density(self):
        return self.volume_density_at(self.coordinates())

    def weights(self):
        """Node measure sqrt|g| * prod h, flattened."""
        return (self.volume_density() * self.cell_volume).ravel()

    def forward_links(self, axis):
        """
        Flat indices (source, target) of the forward links along an axis.
        A third boolean array marks links that cross the identification.
        """
        index = np.arange(self.size).reshape(self.shape)
        n = self.shape[axis]
        if self.is_periodic(axis):
            source = index
            target = np.roll(index, -1, axis=axis)
            position = np.arange(n).reshape(
                [n if k == axis else 1 for k in range(self.dimension)])
            wraps = np.broadcast_to(position == n - 1, self.shape)
        else:
            source = np.take(index, np.arange(n - 1), axis=axis)
            target = np.take(index, np.arange(1, n), axis=axis)
            wraps = np.zeros(source.shape, dtype=bool)
        return source.ravel(), target.ravel(), wraps.ravel()

    def unroll(self, fold):
        """The n-fold cover grid, unrolled along the periodic axes."""
        fold = tuple(int(n) for n in fold)
        cover = self.geometry.unrolled(fold)
        nodes = tuple(n * k for n, k in zip(self.nodes_per_axis, fold))
        return GridDiscretization(cover, nodes, self.boundary)

    def tile(self, values, fold):
        """Lift nodal values to the unrolled cover grid."""
        values = np.asarray(values)
        lead = values.ndim - self.dimension
        return np.tile(values, (1, ) * lead + tuple(fold))

    def to_dict(self):
        data = self.geometry.to_dict()
        data.update(nodes=list(self.nodes_per_axis),
                    boundary=list(self.boundary))
        return data

    @classmethod
    def from_dict(cls, data):
        geometry = Geometry.from_dict(data)
        return cls(geometry, data["nodes"], data.get("boundary"))

    def __repr__(self):
        return "GridDiscretization({}, nodes={}, boundary={})".format(
            self.geometry.kind, self.nodes_per_axis, self.boundary)


def make_grid(geometry, nodes_per_axis, boundary=None):
    if not isinstance(geometry, Geometry):
        raise DegenerateChart("make_grid expects a Geometry")
    return GridDiscretization(geometry, nodes_per_axis, boundary)
