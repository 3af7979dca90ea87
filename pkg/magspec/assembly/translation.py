import numpy as np
from magspec.exceptions import NonLatticeShift
from magspec.geometry.fields import GaugeFunction


class MagneticTranslation:
    """
    Magnetic translation T u = e^{i f} (u shifted by a whole number of cells)
    of the model potential sum_j lambda_j x_{2j-1} dx^{2j} on a flat torus.

    The phase solves gamma^* alpha - alpha = df and vanishes at the chart
    origin: f(x) = sum_j lambda_j a_{2j-1} x_{2j}.

    Args:
        lattice_shift (tuple of int): shift in grid cells per axis
        phase_function (GaugeFunction): f on the grid
    """

    def __init__(self, lattice_shift, phase_function):
        self.lattice_shift = tuple(int(c) for c in lattice_shift)
        self.phase_function = phase_function
        self.multiplier = np.exp(1j * phase_function.values)

    @classmethod
    def build(cls, grid, alpha_model, shift, tol=1e-9):
        shift = np.asarray(shift, dtype=float)
        if shift.shape != (grid.dimension, ):
            raise NonLatticeShift("shift needs {} entries, got {}".format(
                grid.dimension, shift.shape))
        cells = shift / np.asarray(grid.spacings)
        lattice_shift = np.rint(cells)
        if np.max(np.abs(cells - lattice_shift)) > tol:
            raise NonLatticeShift(
                "shift {} is not an integral number of cells {}".format(
                    tuple(shift), grid.spacings))
        for axis, c in enumerate(lattice_shift):
            if c != 0 and not grid.is_periodic(axis):
                raise NonLatticeShift(
                    "axis {} is not periodic and cannot be translated".format(axis))

        field_strengths = getattr(alpha_model, "field_strengths", None)
        if field_strengths is None:
            raise ValueError(
                "magnetic translations need a potential from model_potential_torus")
        coordinates = grid.coordinates()
        phase = np.zeros(grid.shape)
        for j, lam in enumerate(field_strengths):
            phase += lam * shift[2 * j] * coordinates[2 * j + 1]
        return cls(lattice_shift, GaugeFunction(phase))

    def apply(self, u, grid):
        u = np.asarray(u)
        values = u.reshape(grid.shape)
        # (shifted u)(x) = u(x + a)
        shifted = np.roll(values, [-c for c in self.lattice_shift],
                          axis=tuple(range(grid.dimension)))
        return (self.multiplier * shifted).reshape(u.shape)


def apply_magnetic_translation(u, grid, alpha_model, shift):
    """
    Apply the magnetic translation by a physical shift a to u.

    Args:
        u (np.ndarray): nodal values, flat or shaped like the grid
        grid (GridDiscretization): flat periodic grid
        alpha_model (VectorPotential): output of model_potential_torus
        shift (sequence of float): a, an integral number of cells per axis

    Returns:
        np.ndarray: e^{i f_gamma} u(. + a), shaped like u
    """
    return MagneticTranslation.build(grid, alpha_model, shift).apply(u, grid)
