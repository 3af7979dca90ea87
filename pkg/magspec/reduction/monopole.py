import numpy as np
from magspec.assembly import assemble
from magspec.eigensolve import lowest_eigenvalues
from magspec.geometry import build_geometry, make_grid, ScalarPotential
from magspec.initializer import get_logger


class AssemblySpec:
    """
    A 2D (or higher) operator handed to the assembly module: grid,
    potentials and an additive constant of the reduction ledger.
    """

    def __init__(self, grid, alpha=None, V=None, shift=0.0, info=None):
        self.grid = grid
        self.alpha = alpha
        self.V = V
        self.shift = float(shift)
        self.info = {} if info is None else dict(info)

    def assemble(self, character=None, convention=None):
        return assemble(self.grid, self.alpha, self.V, character, convention)

    def spectrum(self, k=1, **settings):
        """Lowest eigenvalues of the assembled operator, without the shift."""
        return lowest_eigenvalues(self.assemble(), k=k, **settings)

    def lambda0(self, **settings):
        return float(self.spectrum(**settings).lambda0) + self.shift

    def __repr__(self):
        return "AssemblySpec({}, shift={}, {})".format(self.grid, self.shift, self.info)


def sol_monopole_reduction(B, xi_t, x_half_width=4.0, log_y_window=5.0,
                           nodes=(32, 64), fold=True):
    """
    Fibre mode xi_t of the Sol monopole operator as a half-plane problem:
    1/2 Delta_H + V - 1/8 with V = 1/2 (B x + xi_t)^2 / y^2, Dirichlet on
    x in [-w, w] and s = log y in [-S, S].

    For B != 0 the mode is conjugate to xi_t = 0 by the translation
    x -> x + xi_t / B. With fold=True the folded problem is returned; with
    fold=False the chart is translated instead, which keeps the well
    centred and gives the same operator up to relabelling.
    """
    B, xi_t = float(B), float(xi_t)
    offset = 0.0
    if B != 0.0:
        if fold:
            xi_t = 0.0
        else:
            offset = -xi_t / B
    geometry = build_geometry(
        "half_plane",
        x_bounds=(offset - x_half_width, offset + x_half_width),
        y_bounds=(np.exp(-log_y_window), np.exp(log_y_window)),
        periodic_x=False)
    grid = make_grid(geometry, nodes)
    x, y = grid.natural_coordinates()
    V = ScalarPotential(0.5 * (B * x + xi_t) ** 2 / y ** 2)
    get_logger().debug("sol monopole B={} xi_t={} on {}".format(B, xi_t, grid))
    return AssemblySpec(grid, None, V, shift=-0.125,
                        info={"B": B, "xi_t": xi_t, "folded": fold and B != 0.0,
                              "x_offset": offset})
