import pytest
import numpy as np
from magspec.geometry import (build_geometry,
                              make_grid,
                              VectorPotential,
                              ScalarPotential,
                              model_potential_torus)
from magspec.assembly import (Character,
                              assemble,
                              gauge_shift,
                              apply_magnetic_translation)
from magspec.eigensolve import dense_spectrum
from magspec.exceptions import NonLatticeShift, ShapeMismatch


@pytest.fixture
def setUp():
    grid = make_grid(build_geometry("torus", lengths=(1.0, 1.0)), (8, 8))
    x, y = grid.coordinates()
    alpha = VectorPotential(np.array([np.sin(2 * np.pi * y), 0.4 + np.cos(2 * np.pi * x)]))
    V = ScalarPotential(np.cos(2 * np.pi * x) * np.cos(2 * np.pi * y))
    yield {"grid": grid, "alpha": alpha, "V": V}


def test_hermitian(setUp):
    op = assemble(setUp["grid"], setUp["alpha"], setUp["V"])
    assert op.size == 64
    assert op.hermitian_defect() == 0.0
    dense = op.to_dense()
    np.testing.assert_allclose(dense, dense.conj().T)


def test_free_circle_eigenvalues():
    n = 32
    grid = make_grid(build_geometry("torus"), (n, ))
    op = assemble(grid)
    h = 1 / n
    expected = np.sort((1 - np.cos(2 * np.pi * np.arange(n) / n)) / h ** 2)
    np.testing.assert_allclose(dense_spectrum(op).eigenvalues, expected, atol=1e-8)


def test_conventions_differ_by_two(setUp):
    half = assemble(setUp["grid"], setUp["alpha"], convention="half")
    double = assemble(setUp["grid"], setUp["alpha"], convention="double")
    np.testing.assert_allclose(double.to_dense(), 2 * half.to_dense(), atol=1e-12)
    with pytest.raises(ValueError):
        assemble(setUp["grid"], convention="quarter")


def test_gauge_invariance(setUp):
    grid = setUp["grid"]
    x, y = grid.coordinates()
    f = np.sin(2 * np.pi * x) + 0.3 * np.cos(4 * np.pi * y)

    # GIVEN H for alpha and H' for alpha + df
    op = assemble(grid, setUp["alpha"], setUp["V"])
    shifted = assemble(grid, gauge_shift(grid, setUp["alpha"], f), setUp["V"])

    # THEN H' is the conjugate of H by multiplication with e^{if}
    U = np.diag(np.exp(1j * f.ravel()))
    np.testing.assert_allclose(shifted.to_dense(), U.conj().T @ op.to_dense() @ U, atol=1e-10)
    np.testing.assert_allclose(dense_spectrum(shifted).eigenvalues,
                               dense_spectrum(op).eigenvalues, atol=1e-9)


def test_diamagnetic(setUp):
    magnetic = dense_spectrum(assemble(setUp["grid"], setUp["alpha"], setUp["V"]), k=1)
    free = dense_spectrum(assemble(setUp["grid"], None, setUp["V"]), k=1)
    assert magnetic.lambda0 >= free.lambda0 - 1e-10


def test_character_twist_is_a_flat_potential():
    n = 16
    grid = make_grid(build_geometry("torus"), (n, ))
    theta = 1.3
    twisted = assemble(grid, character=Character.on_grid(grid, [theta]))
    flat = assemble(grid, Character.on_grid(grid, [theta]).representative_form(grid))

    h = 1 / n
    expected = np.sort((1 - np.cos((2 * np.pi * np.arange(n) + theta) / n)) / h ** 2)
    np.testing.assert_allclose(dense_spectrum(twisted).eigenvalues, expected, atol=1e-8)
    np.testing.assert_allclose(dense_spectrum(flat).eigenvalues, expected, atol=1e-8)


def test_character_on_dirichlet_axis():
    grid = make_grid(build_geometry("plane", half_widths=(1.0, )), (8, ))
    assert Character.trivial(grid).axes == ()
    with pytest.raises(ValueError):
        assemble(grid, character=Character([0.5], [0]))


def test_dirichlet_box_is_positive():
    grid = make_grid(build_geometry("plane", half_widths=(1.0, 1.0)), (10, 10))
    spectrum = dense_spectrum(assemble(grid), k=1)
    # continuum value pi^2 / 4 for the free box
    assert spectrum.lambda0 == pytest.approx(np.pi ** 2 / 4, rel=0.05)


def test_shape_mismatch(setUp):
    with pytest.raises(ShapeMismatch):
        assemble(setUp["grid"], V=ScalarPotential(np.zeros((4, 4))))


def test_rayleigh_quotient(setUp):
    op = assemble(setUp["grid"], setUp["alpha"], setUp["V"])
    spectrum = dense_spectrum(op, k=1, return_eigenvectors=True)
    assert op.rayleigh_quotient(spectrum.eigenvectors[:, 0]) == pytest.approx(
        spectrum.lambda0, abs=1e-9)


def test_magnetic_translation_commutes():
    grid = make_grid(build_geometry("torus", lengths=(1.0, 1.0)), (8, 8))
    # flux 16 pi: one cell translation is a symmetry of the discrete torus
    alpha = model_potential_torus([16 * np.pi], grid)
    H = assemble(grid, alpha).to_dense()
    u = np.random.randn(64) + 1j * np.random.randn(64)

    translated = apply_magnetic_translation(u, grid, alpha, (1 / 8, 0.0))
    np.testing.assert_allclose(
        H @ translated, apply_magnetic_translation(H @ u, grid, alpha, (1 / 8, 0.0)),
        atol=1e-8)
    assert np.linalg.norm(translated) == pytest.approx(np.linalg.norm(u))


def test_non_lattice_shift():
    grid = make_grid(build_geometry("torus", lengths=(1.0, 1.0)), (8, 8))
    alpha = model_potential_torus([16 * np.pi], grid)
    with pytest.raises(NonLatticeShift):
        apply_magnetic_translation(np.zeros(64), grid, alpha, (0.1, 0.0))
