import numpy as np
from magspec.assembly import assemble
from magspec.bloch import CoverSpec, cover_groundstate_via_characters
from magspec.eigensolve import shift_invert_lowest
from magspec.geometry import build_geometry, make_grid, VectorPotential
from magspec.initializer import get_logger


def maass_strip_oracle(B, period=0.04, nodes_x=4, log_y_window=4.0, spacing=0.025,
                       samples_per_axis=16, sampler=None):
    """
    Ground state energy of the Maass operator from the 2D half-plane.

    The strip [0, period) x [e^-S, e^S] is periodic in x and Dirichlet in
    s = log y. Its twisted ground states over the full x-character circle
    sweep the Fourier modes xi = theta / period of the plane, so their
    minimum is the half-plane lambda0 up to truncation in s. The sampled
    minimum is refined by golden-section search in the angle; every twisted
    operator is solved by sparse shift-invert.
    """
    geometry = build_geometry("half_plane", x_bounds=(0.0, period),
                              y_bounds=(np.exp(-log_y_window), np.exp(log_y_window)),
                              periodic_x=True)
    grid = make_grid(geometry, (nodes_x, int(round(2 * log_y_window / spacing))))
    _, y = grid.natural_coordinates()
    alpha = VectorPotential.from_natural(grid, [B / y, np.zeros_like(y)])
    value = cover_groundstate_via_characters(
        grid, alpha, None, CoverSpec.full(grid), samples_per_axis=samples_per_axis,
        sampler=sampler, solver=shift_invert_lowest)
    get_logger().info("maass strip oracle B={}: {:.10g} on {}".format(B, value, grid))
    return value


def sol_laplacian_oracle(nodes_z=200, z_window=12.0, nodes_xy=4, period=1.0):
    """
    lambda0 of the truncated Sol Laplacian: x and y periodic, z in
    [-z_window, z_window] with Dirichlet ends.
    """
    geometry = build_geometry("sol",
                              bounds=((0.0, period), (0.0, period),
                                      (-z_window, z_window)),
                              periodic=(True, True, False))
    grid = make_grid(geometry, (nodes_xy, nodes_xy, nodes_z))
    value = shift_invert_lowest(assemble(grid), k=1).lambda0
    get_logger().info("sol laplacian oracle: {:.10g} on {}".format(value, grid))
    return float(value)
