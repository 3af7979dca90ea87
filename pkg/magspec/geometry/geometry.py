import copy
import numpy as np
from collections import namedtuple
from magspec.exceptions import DegenerateChart, UnknownGeometry
from magspec.initializer import is_debug_mode


Identification = namedtuple("Identification",
                            ["axis", "period", "phase_rule"],
                            defaults=("trivial", ))


class Geometry:
    """
    A model space given as a single coordinate chart.

    Points are passed to the evaluators as an array of shape (d, ...),
    one leading entry per chart coordinate. Metric data refer to the
    natural chart coordinates; the grid converts them when an axis is
    sampled logarithmically.

    Args:
        kind (str): catalogue name, see GEOMETRY_KINDS
        bounds (list of (float, float)): chart interval per axis
        metric_inverse (callable): points -> g^{jk}, shape (d, d, ...)
        volume_density (callable): points -> sqrt|g|, shape (...)
        identifications (list of Identification): periodic axes
        params (dict): JSON-serializable construction parameters
        log_axes (tuple of int): axes discretized uniformly in log
    """

    def __init__(self, kind, bounds, metric_inverse, volume_density,
                 identifications=(), params=None, log_axes=()):
        self.kind = kind
        self.bounds = [tuple(float(b) for b in bound) for bound in bounds]
        self.dimension = len(self.bounds)
        self._metric_inverse = metric_inverse
        self._volume_density = volume_density
        self.identifications = list(identifications)
        self.params = {} if params is None else dict(params)
        self.log_axes = tuple(log_axes)

        for lo, hi in self.bounds:
            if not hi > lo:
                raise DegenerateChart(
                    "empty chart interval [{}, {}] in {}".format(lo, hi, kind))
        for axis in self.log_axes:
            if self.bounds[axis][0] <= 0:
                raise DegenerateChart(
                    "logarithmic axis {} needs a positive lower bound".format(axis))
        if is_debug_mode():
            for ident in self.identifications:
                lo, hi = self.bounds[ident.axis]
                assert abs(ident.period - (hi - lo)) <= 1e-12 * max(1.0, hi - lo), \
                    "period {} does not match chart length {}".format(
                        ident.period, hi - lo)

    def metric_inverse(self, points):
        return self._metric_inverse(np.asarray(points, dtype=float))

    def volume_density(self, points):
        return self._volume_density(np.asarray(points, dtype=float))

    def is_periodic(self, axis):
        return any(ident.axis == axis for ident in self.identifications)

    def period(self, axis):
        for ident in self.identifications:
            if ident.axis == axis:
                return ident.period
        raise ValueError("axis {} is not identified".format(axis))

    def unrolled(self, fold):
        """
        The cover obtained by unrolling fold[k] copies of the chart along
        each periodic axis k.
        """
        fold = tuple(int(n) for n in fold)
        if len(fold) != self.dimension:
            raise ValueError("fold needs one entry per axis")
        cover = copy.copy(self)
        cover.bounds = list(self.bounds)
        cover.identifications = []
        for axis, n in enumerate(fold):
            if n < 1:
                raise ValueError("fold counts must be >= 1")
            if n > 1 and not self.is_periodic(axis):
                raise ValueError(
                    "axis {} is not periodic and cannot be unrolled".format(axis))
            lo, hi = self.bounds[axis]
            cover.bounds[axis] = (lo, lo + n * (hi - lo))
        for ident in self.identifications:
            n = fold[ident.axis]
            cover.identifications.append(
                ident._replace(period=n * ident.period))
        cover.params = dict(self.params, fold=list(fold))
        return cover

    def check_positive_definite(self, points):
        """Cholesky of g^{jk} at every point, and sqrt|g| > 0."""
        points = np.asarray(points, dtype=float)
        g_inv = self.metric_inverse(points)
        d = self.dimension
        stacked = np.moveaxis(g_inv.reshape(d, d, -1), -1, 0)
        try:
            np.linalg.cholesky(stacked)
        except np.linalg.LinAlgError:
            raise DegenerateChart(
                "metric of {} is not positive definite on the chart".format(self.kind))
        if not np.all(self.volume_density(points) > 0):
            raise DegenerateChart(
                "volume density of {} is not positive on the chart".format(self.kind))

    def to_dict(self):
        return {"kind": self.kind, "params": copy.deepcopy(self.params),
                "bounds": [list(bound) for bound in self.bounds]}

    @classmethod
    def from_dict(cls, data):
        geometry = build_geometry(data["kind"], **data.get("params", {}))
        fold = data.get("params", {}).get("fold")
        if fold is not None:
            geometry = geometry.unrolled(fold)
        if "bounds" in data and not np.allclose(data["bounds"], geometry.bounds):
            raise ValueError("bounds {} disagree with the parameters of {}, which give {}".format(
                data["bounds"], geometry.kind, geometry.bounds))
        return geometry

    def __repr__(self):
        return "Geometry({}, bounds={})".format(self.kind, self.bounds)


def _identity_metric(d):
    def metric_inverse(points):
        shape = points.shape[1:]
        eye = np.eye(d).reshape((d, d) + (1, ) * len(shape))
        return np.broadcast_to(eye, (d, d) + shape).copy()
    return metric_inverse


def _unit_density(points):
    return np.ones(points.shape[1:])


def _hyperbolic_metric(points):
    y = points[1]
    g_inv = np.zeros((2, 2) + y.shape)
    g_inv[0, 0] = y ** 2
    g_inv[1, 1] = y ** 2
    return g_inv


def _hyperbolic_density(points):
    return points[1] ** -2


def _sphere_bundle_metric(points):
    # dual metric of the left-invariant metric in (x, y, phi), read off from
    # (y D_x - D_phi)^2 + y^2 D_y^2 + D_phi^2
    y = points[1]
    g_inv = np.zeros((3, 3) + y.shape)
    g_inv[0, 0] = y ** 2
    g_inv[0, 2] = g_inv[2, 0] = -y
    g_inv[1, 1] = y ** 2
    g_inv[2, 2] = 2.0
    return g_inv


def _nil_metric(points):
    # D_x^2 + (D_y + x D_z)^2 + D_z^2
    x = points[0]
    g_inv = np.zeros((3, 3) + x.shape)
    g_inv[0, 0] = 1.0
    g_inv[1, 1] = 1.0
    g_inv[1, 2] = g_inv[2, 1] = x
    g_inv[2, 2] = 1.0 + x ** 2
    return g_inv


def _sol_metric(points):
    z = points[2]
    g_inv = np.zeros((3, 3) + z.shape)
    g_inv[0, 0] = np.exp(2 * z)
    g_inv[1, 1] = np.exp(-2 * z)
    g_inv[2, 2] = 1.0
    return g_inv


def _periodic_identifications(bounds, periodic):
    return [Identification(axis, hi - lo)
            for axis, ((lo, hi), flag) in enumerate(zip(bounds, periodic))
            if flag]


def _as_bounds(bounds, dimension, kind):
    bounds = [tuple(b) for b in bounds]
    if len(bounds) != dimension:
        raise DegenerateChart(
            "{} needs {} chart intervals, got {}".format(kind, dimension, len(bounds)))
    return bounds


def build_geometry(kind, **parameters):
    """
    Build a model geometry from the catalogue.

    Kinds and their parameters:
        torus: lengths (periods L_1..L_d)
        plane: half_widths, periodic (optional flags per axis)
        half_plane: x_bounds, y_bounds, periodic_x
        sphere_bundle_h: x_bounds, y_bounds, periodic_x (phi is 2 pi periodic)
        nil: bounds, which ("universal" | "maximal-abelian"), periodic
        sol: bounds, periodic
        radial: r_bounds
    """
    params = {k: v for k, v in parameters.items() if k != "fold"}

    if kind == "torus":
        lengths = tuple(float(L) for L in parameters.get("lengths", (1.0, )))
        bounds = [(0.0, L) for L in lengths]
        return Geometry(kind, bounds, _identity_metric(len(bounds)),
                        _unit_density,
                        _periodic_identifications(bounds, [True] * len(bounds)),
                        params)

    if kind == "plane":
        widths = tuple(float(w) for w in parameters.get("half_widths", (8.0, 8.0)))
        bounds = [(-w, w) for w in widths]
        periodic = parameters.get("periodic", [False] * len(bounds))
        return Geometry(kind, bounds, _identity_metric(len(bounds)),
                        _unit_density,
                        _periodic_identifications(bounds, periodic), params)

    if kind in ("half_plane", "sphere_bundle_h"):
        x_bounds = tuple(parameters.get("x_bounds", (-1.0, 1.0)))
        y_bounds = tuple(parameters.get("y_bounds", (0.1, 10.0)))
        if y_bounds[0] <= 0:
            raise DegenerateChart(
                "hyperbolic chart needs y_min > 0, got {}".format(y_bounds[0]))
        periodic = [bool(parameters.get("periodic_x", False)), False]
        bounds = [x_bounds, y_bounds]
        if kind == "half_plane":
            return Geometry(kind, bounds, _hyperbolic_metric,
                            _hyperbolic_density,
                            _periodic_identifications(bounds, periodic),
                            params, log_axes=(1, ))
        bounds.append((0.0, 2 * np.pi))
        periodic.append(True)
        return Geometry(kind, bounds, _sphere_bundle_metric,
                        _hyperbolic_density,
                        _periodic_identifications(bounds, periodic),
                        params, log_axes=(1, ))

    if kind == "nil":
        bounds = _as_bounds(parameters.get(
            "bounds", ((-6.0, 6.0), (-6.0, 6.0), (0.0, 1.0))), 3, kind)
        which = parameters.get("which", "universal")
        if which not in ("universal", "maximal-abelian"):
            raise UnknownGeometry("unknown Nil cover {!r}".format(which))
        periodic = list(parameters.get("periodic", (False, False, False)))
        if which == "maximal-abelian":
            # quotient by the central lattice
            periodic[2] = True
        return Geometry(kind, bounds, _nil_metric, _unit_density,
                        _periodic_identifications(bounds, periodic), params)

    if kind == "sol":
        bounds = _as_bounds(parameters.get(
            "bounds", ((0.0, 1.0), (0.0, 1.0), (-6.0, 6.0))), 3, kind)
        periodic = parameters.get("periodic", (False, False, False))
        return Geometry(kind, bounds, _sol_metric, _unit_density,
                        _periodic_identifications(bounds, periodic), params)

    if kind == "radial":
        r_bounds = tuple(parameters.get("r_bounds", (1e-3, 60.0)))
        if r_bounds[0] <= 0:
            raise DegenerateChart(
                "radial chart needs r_min > 0, got {}".format(r_bounds[0]))
        return Geometry(kind, [r_bounds], _identity_metric(1), _unit_density,
                        (), params)

    raise UnknownGeometry("unknown geometry kind {!r}".format(kind))


GEOMETRY_KINDS = ("torus", "plane", "half_plane", "sphere_bundle_h",
                  "nil", "sol", "radial")
