import pytest
import numpy as np
from magspec.geometry import build_geometry, make_grid, GEOMETRY_KINDS, Geometry
from magspec.exceptions import DegenerateChart, TooCoarse, UnknownGeometry


def test_torus_grid():
    geometry = build_geometry("torus", lengths=(1.0, 2.0))
    grid = make_grid(geometry, (8, 16))
    assert grid.periodic_axes == (0, 1)
    assert grid.spacings == pytest.approx((1 / 8, 1 / 8))
    assert grid.cell_volume == pytest.approx(1 / 64)
    # periodic nodes start at the chart origin
    np.testing.assert_allclose(grid.axes[0], np.arange(8) / 8)
    np.testing.assert_allclose(grid.weights().sum(), 2.0)


def test_plane_is_dirichlet_with_cell_centred_nodes():
    grid = make_grid(build_geometry("plane", half_widths=(1.0, 1.0)), (4, 4))
    assert grid.periodic_axes == ()
    assert grid.boundary == ("dirichlet", "dirichlet")
    np.testing.assert_allclose(grid.axes[0], [-0.75, -0.25, 0.25, 0.75])


def test_half_plane_log_axis():
    geometry = build_geometry("half_plane", x_bounds=(0.0, 1.0),
                              y_bounds=(np.exp(-1.0), np.exp(1.0)), periodic_x=True)
    grid = make_grid(geometry, (4, 8))
    _, y = grid.natural_coordinates()
    assert y.min() > np.exp(-1.0) and y.max() < np.exp(1.0)

    # GIVEN the hyperbolic metric y^2 (dx^2 + dy^2)^-1 in s = log y
    # WHEN converted to computational coordinates
    # THEN g^{ss} = 1 and sqrt|g| ds = dy / y^2 * y
    g_inv = grid.metric_inverse()
    np.testing.assert_allclose(g_inv[1, 1], 1.0)
    np.testing.assert_allclose(g_inv[0, 0], y ** 2)
    np.testing.assert_allclose(grid.volume_density(), 1 / y)


def test_degenerate_charts():
    with pytest.raises(DegenerateChart):
        build_geometry("half_plane", y_bounds=(0.0, 1.0))
    with pytest.raises(DegenerateChart):
        build_geometry("radial", r_bounds=(0.0, 10.0))
    with pytest.raises(DegenerateChart):
        build_geometry("torus", lengths=(0.0, ))


def test_too_coarse():
    with pytest.raises(TooCoarse):
        make_grid(build_geometry("torus"), (3, ))


def test_unknown_geometry():
    with pytest.raises(UnknownGeometry):
        build_geometry("klein_bottle")
    with pytest.raises(UnknownGeometry):
        build_geometry("nil", which="other")


def test_every_kind_builds_a_grid():
    for kind in GEOMETRY_KINDS:
        geometry = build_geometry(kind)
        grid = make_grid(geometry, (4, ) * geometry.dimension)
        assert np.all(grid.weights() > 0)


def test_maximal_abelian_nil_is_periodic_along_the_centre():
    geometry = build_geometry("nil", which="maximal-abelian")
    assert geometry.is_periodic(2)
    assert not geometry.is_periodic(0)


def test_descriptor_round_trip():
    geometry = build_geometry("sol", bounds=((0, 1), (0, 1), (-3, 3)),
                              periodic=(True, True, False))
    grid = make_grid(geometry, (4, 4, 12))
    data = grid.to_dict()
    assert set(data) == {"kind", "params", "bounds", "nodes", "boundary"}
    assert data["bounds"] == [[0.0, 1.0], [0.0, 1.0], [-3.0, 3.0]]
    rebuilt = make_grid(Geometry.from_dict(data), data["nodes"])
    assert rebuilt.boundary == grid.boundary
    np.testing.assert_allclose(rebuilt.metric_inverse(), grid.metric_inverse())


def test_descriptor_with_inconsistent_bounds():
    data = make_grid(build_geometry("torus", lengths=(1.0, 2.0)), (4, 4)).to_dict()
    data["bounds"] = [[0.0, 1.0], [0.0, 3.0]]
    with pytest.raises(ValueError):
        Geometry.from_dict(data)


def test_unroll():
    grid = make_grid(build_geometry("torus", lengths=(1.0, 1.0)), (4, 6))
    cover = grid.unroll((2, 3))
    assert cover.shape == (8, 18)
    assert cover.period(0) == pytest.approx(2.0)
    assert cover.spacings == pytest.approx(grid.spacings)
    values = np.arange(24.0).reshape(4, 6)
    lifted = grid.tile(values, (2, 3))
    np.testing.assert_array_equal(lifted, np.tile(values, (2, 3)))
    assert lifted.shape == cover.shape


def test_unroll_dirichlet_axis_is_rejected():
    grid = make_grid(build_geometry("plane"), (4, 4))
    with pytest.raises(ValueError):
        grid.unroll((2, 1))
