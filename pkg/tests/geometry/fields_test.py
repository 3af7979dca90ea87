import pytest
import numpy as np
from magspec.geometry import (build_geometry,
                              make_grid,
                              VectorPotential,
                              ScalarPotential,
                              GaugeFunction,
                              centered_gradient,
                              model_potential_torus,
                              skew_normal_form)
from magspec.exceptions import OddDimensionPairing, NotSkew, ShapeMismatch


@pytest.fixture
def setUp():
    grid = make_grid(build_geometry("torus", lengths=(1.0, 1.0)), (16, 16))
    yield {"grid": grid}


def test_constant_potential_phases(setUp):
    grid = setUp["grid"]
    alpha = VectorPotential.constant(grid, [0.7, -0.2])
    phases = alpha.phases(grid)
    np.testing.assert_allclose(phases[0], 0.7 / 16)
    np.testing.assert_allclose(phases[1], -0.2 / 16)


def test_scaling_keeps_exact_phases(setUp):
    grid = setUp["grid"]
    alpha = VectorPotential(np.zeros((2, 16, 16)), np.full((2, 16, 16), 0.1))
    scaled = alpha * 3.0
    np.testing.assert_allclose(scaled.phases(grid), 0.3)
    np.testing.assert_allclose((-alpha).link_phases, -0.1)


def test_shape_mismatch(setUp):
    grid = setUp["grid"]
    with pytest.raises(ShapeMismatch):
        VectorPotential(np.zeros((2, 8, 8))).check_grid(grid)
    with pytest.raises(ShapeMismatch):
        ScalarPotential(np.zeros(5)).check_grid(grid)


def test_centered_gradient(setUp):
    grid = setUp["grid"]
    x, y = grid.coordinates()
    gradient = centered_gradient(grid, np.sin(2 * np.pi * x))
    # centred difference of sin has the symbol sin(2 pi h) / h
    h = 1 / 16
    np.testing.assert_allclose(gradient[0], np.sin(2 * np.pi * h) / h * np.cos(2 * np.pi * x),
                               atol=1e-12)
    np.testing.assert_allclose(gradient[1], 0.0, atol=1e-12)


def test_link_differences_wrap_around(setUp):
    grid = setUp["grid"]
    x, _ = grid.coordinates()
    differences = GaugeFunction(x).link_differences(grid)
    np.testing.assert_allclose(differences[0][:-1], 1 / 16)
    np.testing.assert_allclose(differences[0][-1], -15 / 16)


def test_model_potential(setUp):
    grid = setUp["grid"]
    alpha = model_potential_torus([2.0], grid)
    x, _ = grid.coordinates()
    np.testing.assert_allclose(alpha.components[1], 2.0 * x)
    np.testing.assert_allclose(alpha.components[0], 0.0)
    assert alpha.field_strengths == (2.0, )


def test_model_potential_needs_pairs():
    grid = make_grid(build_geometry("torus"), (8, ))
    with pytest.raises(OddDimensionPairing):
        model_potential_torus([1.0], grid)


def test_natural_components_on_log_axis():
    geometry = build_geometry("half_plane", x_bounds=(0.0, 1.0), y_bounds=(0.5, 2.0),
                              periodic_x=True)
    grid = make_grid(geometry, (4, 8))
    _, y = grid.natural_coordinates()
    alpha = VectorPotential.from_natural(grid, [1 / y, np.ones_like(y)])
    np.testing.assert_allclose(alpha.components[0], 1 / y)
    # alpha_s = y alpha_y
    np.testing.assert_allclose(alpha.components[1], y)


def test_skew_normal_form():
    B = np.array([[0.0, 2.0, 0.0],
                  [-2.0, 0.0, 0.0],
                  [0.0, 0.0, 0.0]])
    rotation = np.linalg.qr(np.random.randn(3, 3))[0]
    Q, lambdas = skew_normal_form(rotation @ B @ rotation.T)
    assert len(lambdas) == 1
    assert abs(lambdas[0]) == pytest.approx(2.0)
    np.testing.assert_allclose(Q.T @ Q, np.eye(3), atol=1e-12)
    block = Q.T @ rotation @ B @ rotation.T @ Q
    np.testing.assert_allclose(block[:2, :2], [[0, lambdas[0]], [-lambdas[0], 0]], atol=1e-10)
    np.testing.assert_allclose(block[2], 0.0, atol=1e-10)


def test_skew_normal_form_rejects_symmetric():
    with pytest.raises(NotSkew):
        skew_normal_form(np.eye(2))
    Q, lambdas = skew_normal_form(np.zeros((2, 2)))
    assert lambdas == ()
