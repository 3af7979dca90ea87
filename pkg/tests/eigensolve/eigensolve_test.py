import pytest
import numpy as np
import torch
import torch_testing as tt
from magspec.geometry import build_geometry, make_grid, VectorPotential, ScalarPotential
from magspec.assembly import assemble
from magspec.eigensolve import (dense_spectrum,
                                lanczos_lowest,
                                lowest_eigenvalues,
                                Effective1D,
                                solve_effective_1d,
                                left_boundary_sensitivity,
                                shift_invert_lowest,
                                gershgorin_lower_bound)
from magspec.eigensolve import lanczos
from magspec.eigensolve.lanczos import _next_block, _orthogonalize
from magspec.exceptions import NotConverged, BoundaryAmplitudeTooLarge
from magspec.initializer import get_writer
from magspec.presets import plane


@pytest.fixture
def setUp():
    grid = make_grid(build_geometry("torus", lengths=(1.0, 1.0)), (16, 16))
    x, y = grid.coordinates()
    alpha = VectorPotential(np.array([np.sin(2 * np.pi * y), 0.4 + np.cos(2 * np.pi * x)]))
    V = ScalarPotential(3 * np.cos(2 * np.pi * x) * np.cos(2 * np.pi * y))
    yield {"op": assemble(grid, alpha, V)}


def test_lanczos_matches_dense(setUp):
    op = setUp["op"]
    dense = dense_spectrum(op, k=4)
    lanczos = lanczos_lowest(op, k=4, tol=1e-9, max_iter=300)
    np.testing.assert_allclose(lanczos.eigenvalues, dense.eigenvalues, atol=1e-7)
    assert all(lanczos.converged)
    assert lanczos.method == "lanczos"
    assert max(dense.residual_norms) < 1e-8


def test_lowest_eigenvalues_routes_to_dense(setUp):
    result = lowest_eigenvalues(setUp["op"], k=2)
    assert result.method == "dense"
    assert len(result) == 2


def test_lanczos_not_converged(setUp):
    with pytest.raises(NotConverged) as info:
        lanczos_lowest(setUp["op"], k=1, tol=1e-12, max_iter=1, check_every=1)
    assert info.value.result is not None


def test_next_block_replaces_lost_columns():
    generator = torch.Generator().manual_seed(0)
    basis, _ = torch.linalg.qr(torch.randn(20, 3, dtype=torch.complex128, generator=generator))
    residual = torch.randn(20, 2, dtype=torch.complex128, generator=generator)
    residual, _ = _orthogonalize(basis, residual)
    # GIVEN a residual block with a column lost to breakdown
    residual[:, 1] = 0.0

    Q, R = _next_block(basis, residual, generator, scale=1.0)

    # THEN Q is orthonormal, orthogonal to the basis and still factors the residual
    gram = Q.conj().T @ Q
    tt.assert_almost_equal(gram.real, torch.eye(2, dtype=torch.float64))
    tt.assert_almost_equal(gram.imag, torch.zeros(2, 2, dtype=torch.float64))
    overlap = basis.conj().T @ Q
    tt.assert_almost_equal(overlap.abs(), torch.zeros(3, 2, dtype=torch.float64))
    product = Q @ R
    tt.assert_almost_equal(product.real, residual.real)
    tt.assert_almost_equal(product.imag, residual.imag)


def test_lanczos_runs_on_configured_device(setUp, monkeypatch):
    requested = []

    def cpu():
        requested.append("cpu")
        return torch.device("cpu")
    monkeypatch.setattr(lanczos, "get_device", cpu)

    result = lanczos_lowest(setUp["op"], k=2, tol=1e-9, max_iter=300)
    assert requested
    np.testing.assert_allclose(result.eigenvalues, dense_spectrum(setUp["op"], k=2).eigenvalues,
                               atol=1e-7)


def test_solves_are_counted(setUp):
    eff = Effective1D((-10.0, 10.0), 0.05, lambda x: 0.5 * x ** 2,
                      left_bc="decay", right_bc="decay")
    lowest_eigenvalues(setUp["op"], k=1)
    solve_effective_1d(eff)
    assert get_writer().solves == 2


def test_lanczos_rejects_large_k(setUp):
    with pytest.raises(ValueError):
        lanczos_lowest(setUp["op"], k=51)


def test_spectrum_to_dict(setUp):
    result = dense_spectrum(setUp["op"], k=3).to_dict()
    assert set(result) >= {"eigenvalues", "residuals", "converged", "method"}
    assert result["eigenvalues"] == sorted(result["eigenvalues"])


def test_harmonic_oscillator():
    eff = Effective1D((-10.0, 10.0), 0.01, lambda x: 0.5 * x ** 2,
                      left_bc="decay", right_bc="decay")
    result = solve_effective_1d(eff, k=3)
    np.testing.assert_allclose(result.eigenvalues, [0.5, 1.5, 2.5], atol=1e-4)
    assert result.info["left_amplitude"] < 1e-8


def test_richardson_is_closer():
    eff = Effective1D((-10.0, 10.0), 0.05, lambda x: 0.5 * x ** 2,
                      left_bc="decay", right_bc="decay")
    plain = abs(solve_effective_1d(eff).lambda0 - 0.5)
    extrapolated = abs(solve_effective_1d(eff.replace(richardson=True)).lambda0 - 0.5)
    assert extrapolated < plain


def test_truncation_too_early():
    # GIVEN an oscillator cut off two units left of its well
    eff = Effective1D((-2.0, 10.0), 0.01, lambda x: 0.5 * x ** 2,
                      left_bc="decay", right_bc="decay")
    # THEN the ground state is not certified
    with pytest.raises(BoundaryAmplitudeTooLarge) as info:
        solve_effective_1d(eff)
    assert info.value.amplitude > 1e-8
    assert info.value.result.lambda0 > 0


def test_invalid_boundary_conditions():
    with pytest.raises(ValueError):
        Effective1D((0.0, 1.0), 0.01, lambda x: x, right_bc="friedrichs_kepler")
    with pytest.raises(ValueError):
        Effective1D((1.0, 2.0), 0.01, lambda x: x, left_bc="friedrichs_kepler")
    with pytest.raises(ValueError):
        Effective1D((0.0, 1.0), 0.5, lambda x: x)


def test_left_boundary_sensitivity():
    eff = Effective1D((0.0, 1.0), 0.01, lambda x: 0.0 * x)
    # free Dirichlet problem: 1/2 pi^2 / L^2 moves by about pi^2 h / 2
    assert left_boundary_sensitivity(eff, 0.01) == pytest.approx(np.pi ** 2 * 0.005, rel=0.05)


def test_shift_invert_matches_dense(setUp):
    op = setUp["op"]
    dense = dense_spectrum(op, k=3)
    result = shift_invert_lowest(op, k=3)
    assert result.method == "shift_invert"
    assert gershgorin_lower_bound(op.matrix) <= dense.lambda0
    np.testing.assert_allclose(result.eigenvalues, dense.eigenvalues, atol=1e-8)
    assert all(result.converged)


def test_lanczos_on_landau_box():
    grid, alpha, V = plane(half_width=3.0, spacing=1 / 8)(B=1.0)
    op = assemble(grid, alpha, V)
    # GIVEN a Dirichlet box a few magnetic lengths wide
    # THEN the bottom is the lowest Landau level B / 2
    result = lanczos_lowest(op, k=1, tol=1e-4, max_iter=800)
    assert result.lambda0 == pytest.approx(0.5, abs=2e-2)
    assert result.lambda0 == pytest.approx(dense_spectrum(op, k=1).lambda0, abs=1e-6)
