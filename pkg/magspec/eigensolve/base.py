import numpy as np
import scipy.sparse as sparse
from magspec.initializer import is_debug_mode

METHODS = ("dense", "lanczos", "shift_invert", "fd1d")


class SpectrumResult:
    """
    Lowest eigenvalues of an operator with their residuals.

    Args:
        eigenvalues (array-like): sorted ascending
        residual_norms (array-like): ||H u - lambda u|| / ||u|| per pair
        converged (array-like of bool): per pair
        method (str): one of METHODS
        eigenvectors (np.ndarray, optional): columns in the order of the
            eigenvalues
        info (dict, optional): solver diagnostics
    """

    def __init__(self, eigenvalues, residual_norms, converged, method,
                 eigenvectors=None, info=None):
        self.eigenvalues = np.asarray(eigenvalues, dtype=float)
        self.residual_norms = np.asarray(residual_norms, dtype=float)
        self.converged = np.asarray(converged, dtype=bool)
        self.method = method
        self.eigenvectors = eigenvectors
        self.info = {} if info is None else dict(info)
        if is_debug_mode():
            assert method in METHODS, "unknown method {}".format(method)
            assert np.all(np.diff(self.eigenvalues) >= -1e-12), \
                "eigenvalues must be sorted"
            assert len(self.residual_norms) == len(self.eigenvalues), \
                "one residual per eigenvalue"

    @property
    def lambda0(self):
        return float(self.eigenvalues[0])

    def __len__(self):
        return len(self.eigenvalues)

    def to_dict(self):
        return {"eigenvalues": self.eigenvalues.tolist(),
                "residuals": self.residual_norms.tolist(),
                "converged": self.converged.tolist(),
                "method": self.method}

    def __repr__(self):
        return "SpectrumResult({}, lambda0={:.10g}, k={})".format(
            self.method, self.eigenvalues[0] if len(self) else np.nan, len(self))


def as_matrix(op):
    """The sparse or dense matrix behind an operator-like object."""
    matrix = getattr(op, "matrix", op)
    if sparse.issparse(matrix):
        return matrix.tocsr()
    return np.asarray(matrix)


def residual_norms(matrix, eigenvalues, eigenvectors):
    vectors = np.asarray(eigenvectors)
    residual = matrix @ vectors - vectors * eigenvalues[None, :]
    return np.linalg.norm(residual, axis=0) / np.linalg.norm(vectors, axis=0)
