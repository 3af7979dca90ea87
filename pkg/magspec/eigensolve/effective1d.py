import copy
import numpy as np
import scipy.linalg
from magspec.exceptions import BoundaryAmplitudeTooLarge
from magspec.eigensolve.base import SpectrumResult
from magspec.initializer import get_logger, get_writer, is_debug_mode

BOUNDARY_CONDITIONS = ("dirichlet", "friedrichs_kepler", "decay")
DECAY_TOLERANCE = 1e-8
# share of the nodes next to a decay boundary checked for residual amplitude
DECAY_LAYER = 0.02


class Effective1D:
    """
    One-dimensional operator -mu u'' + V(x) u on an interval.

    Dirichlet and decay ends use the vertex grid a + i h with u = 0 at the
    end points; a decay end additionally certifies that the ground state
    has died out before the truncation. The friedrichs_kepler left end
    needs a = 0 and discretizes the radial problem in w = u / sqrt(r) on
    the cell-centred grid (i + 1/2) h, which selects the regular solution
    u ~ sqrt(r) at the origin.

    Args:
        interval (tuple of float): (a, b)
        spacing (float): grid spacing h
        potential (callable): x -> V(x), vectorized over arrays
        left_bc, right_bc (str): "dirichlet", "friedrichs_kepler" (left
            only) or "decay"
        mass_prefactor (float): mu, the coefficient of -d^2/dx^2
        continuum_threshold (float, optional): bottom of the essential
            spectrum of the untruncated operator
        richardson (bool): extrapolate over the grids h and h/2
        name (str): label used in logs
    """

    def __init__(self, interval, spacing, potential, left_bc="dirichlet",
                 right_bc="dirichlet", mass_prefactor=0.5,
                 continuum_threshold=None, richardson=False, name="effective1d"):
        a, b = (float(x) for x in interval)
        if not b > a:
            raise ValueError("empty interval ({}, {})".format(a, b))
        if left_bc not in BOUNDARY_CONDITIONS or right_bc not in BOUNDARY_CONDITIONS:
            raise ValueError("unknown boundary condition {!r} / {!r}".format(
                left_bc, right_bc))
        if right_bc == "friedrichs_kepler":
            raise ValueError("friedrichs_kepler is a left boundary condition")
        if left_bc == "friedrichs_kepler" and a != 0.0:
            raise ValueError("friedrichs_kepler needs the interval to start at r = 0")
        if spacing <= 0 or int(round((b - a) / spacing)) < 4:
            raise ValueError("spacing {} too coarse for ({}, {})".format(spacing, a, b))
        self.interval = (a, b)
        self.spacing = float(spacing)
        self.potential = potential
        self.left_bc = left_bc
        self.right_bc = right_bc
        self.mass_prefactor = float(mass_prefactor)
        self.continuum_threshold = continuum_threshold
        self.richardson = richardson
        self.name = name

    def replace(self, **changes):
        other = copy.copy(self)
        for key, value in changes.items():
            setattr(other, key, value)
        return other

    def nodes(self, spacing=None):
        h = self.spacing if spacing is None else spacing
        a, b = self.interval
        n = int(round((b - a) / h))
        if self.left_bc == "friedrichs_kepler":
            return (np.arange(n) + 0.5) * h
        return a + h * np.arange(1, n)

    def effective_potential(self, spacing=None):
        """The potential sampled on the interior nodes."""
        x = self.nodes(spacing)
        values = np.asarray(self.potential(x), dtype=float) * np.ones_like(x)
        if is_debug_mode():
            assert np.all(np.isfinite(values)), \
                "effective potential of {} must be finite".format(self.name)
        return values

    def tridiagonal(self, spacing=None):
        """Diagonal and off-diagonal of the symmetric FD matrix."""
        h = self.spacing if spacing is None else spacing
        mu = self.mass_prefactor
        x = self.nodes(h)
        V = self.effective_potential(h)
        if self.left_bc == "friedrichs_kepler":
            # flux form of -mu (1/r)(r w')' symmetrized by sqrt(r_i r_j)
            diagonal = np.full(len(x), 2 * mu / h ** 2) + V + mu / (4 * x ** 2)
            faces = x[:-1] + 0.5 * h
            off = -mu * faces / (h ** 2 * np.sqrt(x[:-1] * x[1:]))
        else:
            diagonal = np.full(len(x), 2 * mu / h ** 2) + V
            off = np.full(len(x) - 1, -mu / h ** 2)
        return diagonal, off


def _solve_tridiagonal(eff, spacing, k):
    diagonal, off = eff.tridiagonal(spacing)
    k = min(k, len(diagonal))
    values, vectors = scipy.linalg.eigh_tridiagonal(
        diagonal, off, select="i", select_range=(0, k - 1))
    residual = np.zeros((len(diagonal), k))
    residual += diagonal[:, None] * vectors
    residual[:-1] += off[:, None] * vectors[1:]
    residual[1:] += off[:, None] * vectors[:-1]
    residual -= vectors * values[None, :]
    return values, vectors, np.linalg.norm(residual, axis=0)


def boundary_amplitude(vector, side="right"):
    """Largest |u| in the outer layer of nodes relative to max |u|."""
    vector = np.abs(np.asarray(vector))
    layer = max(2, int(np.ceil(DECAY_LAYER * len(vector))))
    edge = vector[-layer:] if side == "right" else vector[:layer]
    return float(edge.max() / vector.max())


def solve_effective_1d(eff, k=1, return_eigenvectors=False, tol=1e-8):
    """
    Lowest eigenvalues of a 1D effective operator by three-point finite
    differences.

    Args:
        eff (Effective1D): the operator
        k (int): number of eigenvalues
        return_eigenvectors (bool): attach the eigenvectors on eff.nodes()
        tol (float): residual threshold of the converged flags

    Returns:
        SpectrumResult

    Raises:
        BoundaryAmplitudeTooLarge: when a decay end does not certify decay
    """
    get_writer().solves += 1
    h = eff.spacing
    if eff.richardson:
        coarse, _, _ = _solve_tridiagonal(eff, h, k)
        fine, vectors, residuals = _solve_tridiagonal(eff, 0.5 * h, k)
        values = (4 * fine - coarse) / 3
        nodes = eff.nodes(0.5 * h)
    else:
        values, vectors, residuals = _solve_tridiagonal(eff, h, k)
        nodes = eff.nodes(h)

    # eigenvalues of the Richardson combination may interleave
    order = np.argsort(values)
    values, vectors, residuals = values[order], vectors[:, order], residuals[order]
    scale = max(1.0, 4 * eff.mass_prefactor / h ** 2)
    result = SpectrumResult(values, residuals, residuals <= max(tol, 1e-13 * scale),
                            "fd1d", vectors if return_eigenvectors else None,
                            {"nodes": len(nodes), "interval": eff.interval,
                             "spacing": h, "name": eff.name})

    for side, bc in (("left", eff.left_bc), ("right", eff.right_bc)):
        if bc != "decay":
            continue
        amplitude = boundary_amplitude(vectors[:, 0], side)
        result.info[side + "_amplitude"] = amplitude
        if amplitude > DECAY_TOLERANCE:
            raise BoundaryAmplitudeTooLarge(amplitude, result)
    get_logger().debug("fd1d {} on {} h={} lambda0={:.12g}".format(
        eff.name, eff.interval, h, values[0]))
    return result


def left_boundary_sensitivity(eff, spacing):
    """
    Change of the ground eigenvalue when the left Dirichlet point moves
    from a + h/2 to a + h, h = spacing, both on the lattice of step h/2.
    The right end is Dirichlet at b in both problems.

    Insensitivity signals that the operator is essentially self-adjoint at
    the left end; the Friedrichs kepler problem (m = 0) is sensitive.
    """
    a, b = eff.interval
    near = eff.replace(interval=(a + 0.5 * spacing, b), spacing=0.5 * spacing,
                       left_bc="dirichlet", right_bc="dirichlet", richardson=False)
    far = near.replace(interval=(a + spacing, b))
    return abs(solve_effective_1d(near).lambda0 - solve_effective_1d(far).lambda0)
