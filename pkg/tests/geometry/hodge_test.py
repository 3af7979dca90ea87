import pytest
import numpy as np
from magspec.geometry import (build_geometry,
                              make_grid,
                              VectorPotential,
                              hodge_decompose_torus,
                              coclosed_part,
                              coclosed_energy,
                              l2_inner,
                              l2_norm)
from magspec.exceptions import NotTorus


@pytest.fixture
def setUp():
    grid = make_grid(build_geometry("torus", lengths=(1.0, 1.0)), (16, 16))
    x, y = grid.coordinates()
    harmonic = np.array([np.full(grid.shape, 0.7), np.full(grid.shape, -0.3)])
    f = np.cos(2 * np.pi * x) * np.sin(2 * np.pi * y)
    exact = np.array([(np.roll(f, -1, axis) - np.roll(f, 1, axis)) / (2 / 16)
                      for axis in range(2)])
    coexact = np.array([np.sin(2 * np.pi * y), np.zeros(grid.shape)])
    yield {"grid": grid, "harmonic": harmonic, "exact": exact, "coexact": coexact}


def test_parts(setUp):
    grid = setUp["grid"]
    alpha = VectorPotential(setUp["harmonic"] + setUp["exact"] + setUp["coexact"])
    split = hodge_decompose_torus(grid, alpha)
    np.testing.assert_allclose(split.harmonic_orthogonal.components, setUp["harmonic"],
                               atol=1e-10)
    np.testing.assert_allclose(split.exact.components, setUp["exact"], atol=1e-10)
    np.testing.assert_allclose(split.coexact.components, setUp["coexact"], atol=1e-10)
    np.testing.assert_allclose(split.harmonic_in_cover_kernel.components, 0.0)


def test_orthogonality_and_norms(setUp):
    grid = setUp["grid"]
    alpha = VectorPotential(setUp["harmonic"] + setUp["exact"] + setUp["coexact"])
    split = hodge_decompose_torus(grid, alpha)
    parts = [split.harmonic_orthogonal, split.coexact, split.exact]
    for i in range(3):
        for j in range(i + 1, 3):
            assert abs(l2_inner(grid, parts[i], parts[j])) < 1e-10
    assert split.norms["total"] ** 2 == pytest.approx(
        sum(l2_norm(grid, part) ** 2 for part in parts))


def test_cover_directions(setUp):
    grid = setUp["grid"]
    alpha = VectorPotential(setUp["harmonic"])
    split = hodge_decompose_torus(grid, alpha, cover_directions=[[1.0, 0.0]])
    np.testing.assert_allclose(split.harmonic_in_cover_kernel.components[0], 0.7)
    np.testing.assert_allclose(split.harmonic_in_cover_kernel.components[1], 0.0, atol=1e-14)
    np.testing.assert_allclose(split.harmonic_orthogonal.components[1], -0.3)


def test_coclosed_energy(setUp):
    grid = setUp["grid"]
    alpha = VectorPotential(setUp["harmonic"] + setUp["exact"])
    # GIVEN a harmonic plus exact form
    # WHEN the exact part is removed
    # THEN h(L) is half the squared harmonic norm over the unit volume
    assert coclosed_energy(grid, alpha) == pytest.approx(0.5 * (0.7 ** 2 + 0.3 ** 2))
    np.testing.assert_allclose(coclosed_part(hodge_decompose_torus(grid, alpha)).components,
                               setUp["harmonic"], atol=1e-10)


def test_not_torus():
    grid = make_grid(build_geometry("plane", half_widths=(1.0, 1.0)), (8, 8))
    with pytest.raises(NotTorus):
        hodge_decompose_torus(grid, VectorPotential.zeros(grid))
