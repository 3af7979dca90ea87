from .base import SpectrumResult, as_matrix, residual_norms
from .dense import dense_spectrum, MAX_DENSE_SIZE
from .lanczos import lanczos_lowest
from .shift_invert import shift_invert_lowest, gershgorin_lower_bound
from .effective1d import (Effective1D,
                          solve_effective_1d,
                          left_boundary_sensitivity,
                          boundary_amplitude,
                          BOUNDARY_CONDITIONS)


def lowest_eigenvalues(op, k=1, tol=1e-8, **kwargs):
    """dense_spectrum when the operator fits, lanczos_lowest otherwise."""
    if as_matrix(op).shape[0] <= MAX_DENSE_SIZE:
        return dense_spectrum(op, k=k)
    return lanczos_lowest(op, k=k, tol=tol, **kwargs)


__all__ = [
    "SpectrumResult",
    "as_matrix",
    "residual_norms",
    "dense_spectrum",
    "MAX_DENSE_SIZE",
    "lanczos_lowest",
    "shift_invert_lowest",
    "gershgorin_lower_bound",
    "lowest_eigenvalues",
    "Effective1D",
    "solve_effective_1d",
    "left_boundary_sensitivity",
    "boundary_amplitude",
    "BOUNDARY_CONDITIONS",
]
