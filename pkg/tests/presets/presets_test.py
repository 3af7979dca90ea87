import pytest
import numpy as np
from magspec import presets
from magspec.presets import get_default_args, parse_alpha, parse_potential
from magspec.exceptions import ConfigError


@pytest.fixture
def setUp():
    grid, _, _ = presets.torus(n=16, dimension=2)()
    yield {"grid": grid}


def test_get_default_args():
    assert get_default_args(presets.torus) == {"n": 64, "dimension": 1, "length": 1.0}
    assert get_default_args(presets.family) == {"spacing": 0.02}
    assert set(presets.PROBLEMS) == {"torus", "circle", "plane", "kepler", "family"}


def test_parse_alpha(setUp):
    grid = setUp["grid"]
    np.testing.assert_allclose(parse_alpha(grid, "zero").components, 0.0)
    constant = parse_alpha(grid, "const:0.7")
    np.testing.assert_allclose(constant.components[0], 0.7)
    np.testing.assert_allclose(constant.components[1], 0.0)
    flux = parse_alpha(grid, "flux:0.25")
    np.testing.assert_allclose(flux.components[0], 0.5 * np.pi)
    oscillating = parse_alpha(grid, "0.7+sin")
    assert oscillating.components[0].mean() == pytest.approx(0.7)
    assert parse_alpha(grid, "landau:2.0").field_strengths == (2.0, )


def test_parse_alpha_errors(setUp):
    grid = setUp["grid"]
    with pytest.raises(ConfigError):
        parse_alpha(grid, "const:1,2,3")
    with pytest.raises(ConfigError):
        parse_alpha(grid, "const:a")
    with pytest.raises(ConfigError):
        parse_alpha(grid, "vortex")
    # configuration errors are value errors
    with pytest.raises(ValueError):
        parse_alpha(grid, "vortex")


def test_parse_potential(setUp):
    grid = setUp["grid"]
    assert parse_potential(grid, "zero") is None
    np.testing.assert_allclose(parse_potential(grid, "const:0.1").values, 0.1)
    assert parse_potential(grid, "cos").values.max() == pytest.approx(1.0)
    assert parse_potential(grid, "0.5*cos").values.max() == pytest.approx(0.5)
    with pytest.raises(ConfigError):
        parse_potential(grid, "sin")


def test_random_smooth_fields(setUp):
    grid = setUp["grid"]
    alpha, V = presets.random_smooth_fields(grid, np.random.default_rng(3))
    again, _ = presets.random_smooth_fields(grid, np.random.default_rng(3))
    assert alpha.components.shape == (2, 16, 16)
    assert V.values.shape == (16, 16)
    np.testing.assert_allclose(alpha.components, again.components)


def test_problems():
    grid, alpha, V = presets.circle(n=32)(a=0.25)
    np.testing.assert_allclose(alpha.components, 0.5 * np.pi)
    assert V is None

    grid, alpha, V = presets.plane(half_width=1.0, spacing=0.25)(B=2.0)
    assert grid.shape == (8, 8)
    assert alpha.field_strengths == (2.0, )

    eff = presets.kepler(spacing=0.05, r_max=20.0)(B=0.0, m=0)
    assert eff.left_bc == "friedrichs_kepler"

    family = presets.family(spacing=0.05)("nil", 1.0, which="abelian")
    assert family.which == "abelian"
