import numpy as np
import scipy.sparse as sparse
import scipy.sparse.linalg
from magspec.eigensolve.base import SpectrumResult, as_matrix, residual_norms
from magspec.initializer import get_logger, get_writer


def gershgorin_lower_bound(matrix):
    """min_i (a_ii - sum_{j != i} |a_ij|), below the spectrum of a Hermitian matrix."""
    matrix = sparse.csr_matrix(matrix)
    diagonal = matrix.diagonal().real
    off = np.asarray(abs(matrix).sum(axis=1)).ravel() - np.abs(diagonal)
    return float(np.min(diagonal - off))


def shift_invert_lowest(op, k=1, sigma=None, tol=1e-10):
    """
    Lowest eigenvalues of a sparse Hermitian operator by ARPACK in
    shift-invert mode. The shift defaults to one unit below the Gershgorin
    bound, so the eigenvalues nearest to it are the lowest ones.

    Args:
        op (AssembledOperator or matrix): Hermitian operator
        k (int): number of eigenvalues, fewer than the dimension
        sigma (float, optional): shift below the spectrum
        tol (float): residual threshold of the converged flags

    Returns:
        SpectrumResult
    """
    matrix = sparse.csc_matrix(as_matrix(op))
    N = matrix.shape[0]
    if not 1 <= k < N:
        raise ValueError("shift_invert_lowest needs 1 <= k < {}, got {}".format(N, k))
    get_writer().solves += 1
    if sigma is None:
        sigma = gershgorin_lower_bound(matrix) - 1.0
    eigenvalues, eigenvectors = scipy.sparse.linalg.eigsh(matrix, k=k, sigma=sigma,
                                                          which="LM")
    order = np.argsort(eigenvalues)
    eigenvalues, eigenvectors = eigenvalues[order], eigenvectors[:, order]
    residuals = residual_norms(matrix, eigenvalues, eigenvectors)
    get_logger().debug("shift-invert solve N={} k={} sigma={:.6g} max residual {:.2e}".format(
        N, k, sigma, residuals.max()))
    scale = max(1.0, float(abs(matrix).max()))
    return SpectrumResult(eigenvalues, residuals, residuals <= tol * scale, "shift_invert")
