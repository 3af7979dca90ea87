import numpy as np
import scipy.linalg
import scipy.sparse as sparse
from magspec.exceptions import TooLarge
from magspec.eigensolve.base import SpectrumResult, as_matrix, residual_norms
from magspec.initializer import get_logger, get_writer

MAX_DENSE_SIZE = 4096


def dense_spectrum(op, k=None, return_eigenvectors=False, tol=1e-10):
    """
    Spectrum of a Hermitian operator by a dense eigensolver.

    Args:
        op (AssembledOperator or matrix): N <= 4096
        k (int, optional): number of lowest eigenvalues, default all
        return_eigenvectors (bool): attach eigenvectors to the result
        tol (float): residual threshold of the converged flags

    Returns:
        SpectrumResult
    """
    matrix = as_matrix(op)
    N = matrix.shape[0]
    if N > MAX_DENSE_SIZE:
        raise TooLarge(
            "dense solve of N={} exceeds the limit {}".format(N, MAX_DENSE_SIZE))
    get_writer().solves += 1
    dense = matrix.toarray() if sparse.issparse(matrix) else np.asarray(matrix)
    k = N if k is None else min(int(k), N)
    eigenvalues, eigenvectors = scipy.linalg.eigh(
        dense, subset_by_index=[0, k - 1])
    residuals = residual_norms(dense, eigenvalues, eigenvectors)
    get_logger().debug("dense solve N={} k={} max residual {:.2e}".format(
        N, k, residuals.max()))
    scale = max(1.0, float(np.max(np.abs(dense)))) if N else 1.0
    return SpectrumResult(eigenvalues, residuals, residuals <= tol * scale, "dense",
                          eigenvectors if return_eigenvectors else None)
