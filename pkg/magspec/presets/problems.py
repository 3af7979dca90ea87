import numpy as np
from magspec.geometry import build_geometry, make_grid, VectorPotential, model_potential_torus
from magspec.reduction import build_family
from magspec.presets.fields import parse_alpha, parse_potential


def torus(
        n=64,
        dimension=1,
        length=1.0,
):
    """
    Flat torus preset.

    Args:
        n (int): nodes per axis
        dimension (int): number of axes
        length (float): period of every axis
    """
    def _torus(alpha="zero", V="zero"):
        geometry = build_geometry("torus", lengths=(length, ) * dimension)
        grid = make_grid(geometry, (n, ) * dimension)
        return grid, parse_alpha(grid, alpha), parse_potential(grid, V)
    return _torus


def circle(
        n=256,
        length=1.0,
):
    """
    Circle with the flux potential 2 pi a / L dx.

    Args:
        n (int): nodes
        length (float): circumference
    """
    def _circle(a=0.0, V="zero"):
        grid = make_grid(build_geometry("torus", lengths=(length, )), (n, ))
        alpha = VectorPotential.constant(grid, [2 * np.pi * a / length])
        return grid, alpha, parse_potential(grid, V)
    return _circle


def plane(
        half_width=8.0,
        spacing=1 / 16,
):
    """
    Dirichlet box [-w, w]^2 with the constant field lambda dx_1 ^ dx_2.

    Args:
        half_width (float): w
        spacing (float): grid spacing
    """
    def _plane(B=1.0):
        geometry = build_geometry("plane", half_widths=(half_width, half_width))
        n = int(round(2 * half_width / spacing))
        grid = make_grid(geometry, (n, n))
        return grid, model_potential_torus([B], grid), None
    return _plane


def kepler(
        spacing=0.01,
        r_max=60.0,
):
    """
    Radial Kepler problem with field B.

    Args:
        spacing (float): radial grid spacing
        r_max (float): truncation radius
    """
    def _kepler(B=0.0, m=1):
        return build_family("kepler_radial", B, spacing=spacing, r_max=r_max).build(m=m)
    return _kepler


def family(
        spacing=0.02,
):
    """
    Reduced family preset.

    Args:
        spacing (float): grid spacing of the 1D member solves
    """
    def _family(name, B, **options):
        if name in ("maass", "sphere_bundle_h", "sl2_universal", "sol"):
            options.setdefault("spacing", spacing)
        return build_family(name, B, **options)
    return _family


PROBLEMS = {
    "torus": torus,
    "circle": circle,
    "plane": plane,
    "kepler": kepler,
    "family": family,
}
