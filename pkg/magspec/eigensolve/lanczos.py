import numpy as np
import torch
from magspec.exceptions import NotConverged
from magspec.eigensolve.base import SpectrumResult, as_matrix, residual_norms
from magspec.initializer import get_device, get_logger, get_writer

MAX_EIGENVALUES = 50


def _random_block(N, b, generator, device):
    # start block from the CPU generator
    return torch.randn(N, b, dtype=torch.complex128, generator=generator).to(device)


def _orthogonalize(basis, block):
    """Classical Gram-Schmidt against the basis, applied twice."""
    if basis.shape[1] == 0:
        return block, torch.zeros(0, block.shape[1], dtype=block.dtype, device=block.device)
    first = basis.conj().T @ block
    block = block - basis @ first
    second = basis.conj().T @ block
    block = block - basis @ second
    return block, first + second


def _next_block(basis, residual, generator, scale):
    """
    Orthonormal next block Q and coupling R with residual = Q R.
    Columns lost to breakdown are replaced by fresh random directions
    with zero coupling.
    """
    Q, R = torch.linalg.qr(residual)
    lost = torch.abs(torch.diagonal(R)) <= 1e-12 * scale
    if torch.any(lost):
        R[lost, :] = 0.0
        fresh = _random_block(basis.shape[0], int(lost.sum()), generator, basis.device)
        fresh, _ = _orthogonalize(torch.cat([basis, Q[:, ~lost]], dim=1), fresh)
        fresh, _ = torch.linalg.qr(fresh)
        Q[:, lost] = fresh
    return Q, R


def lanczos_lowest(op, k=1, tol=1e-8, max_iter=200, block_size=None,
                   return_eigenvectors=False, check_every=5, seed=0):
    """
    Lowest eigenvalues of a Hermitian operator by block Lanczos with full
    reorthogonalization, in complex128 torch arithmetic on the configured device.

    Args:
        op (AssembledOperator or matrix): Hermitian operator
        k (int): number of eigenvalues, at most 50
        tol (float): residual tolerance ||H u - lambda u|| for unit u
        max_iter (int): maximal number of block steps
        block_size (int, optional): defaults to k
        return_eigenvectors (bool): attach the Ritz vectors
        check_every (int): block steps between Ritz evaluations
        seed (int): seed of the random start block

    Returns:
        SpectrumResult

    Raises:
        NotConverged: when max_iter steps do not reach tol, with the best
            Ritz approximation attached
    """
    if k > MAX_EIGENVALUES:
        raise ValueError("lanczos_lowest supports k <= {}, got {}".format(
            MAX_EIGENVALUES, k))
    matrix = as_matrix(op)
    N = matrix.shape[0]
    k = min(int(k), N)
    get_writer().solves += 1
    b = min(int(block_size or k), N)
    generator = torch.Generator().manual_seed(seed)
    device = get_device()
    scale = max(1.0, float(abs(matrix).max()))

    def apply(block):
        return torch.from_numpy(
            np.ascontiguousarray(matrix @ block.cpu().numpy()).astype(np.complex128)).to(device)

    max_dim = min(N, b * (max_iter + 1))
    basis = torch.zeros(N, max_dim, dtype=torch.complex128, device=device)
    projected = torch.zeros(max_dim, max_dim, dtype=torch.complex128, device=device)

    Q, _ = torch.linalg.qr(_random_block(N, b, generator, device))
    basis[:, :b] = Q
    m = b
    ritz = None
    for step in range(max_iter):
        W = apply(Q)
        W, C = _orthogonalize(basis[:, :m], W)
        projected[:m, m - b:m] = C
        exhausted = m >= max_dim
        if not exhausted:
            Q, R = _next_block(basis[:, :m], W, generator, scale)
            width = min(b, max_dim - m)
            Q, R = Q[:, :width], R[:width]
        last = step == max_iter - 1 or exhausted
        if last or (m >= k and (step + 1) % check_every == 0):
            ritz = _ritz(projected[:m, :m], k)
            if m >= N:
                estimates = torch.zeros(k, dtype=torch.float64, device=device)
            elif exhausted:
                estimates = torch.full((k, ), np.inf, dtype=torch.float64, device=device)
            else:
                estimates = torch.linalg.norm(R @ ritz[1][m - b:m, :], dim=0)
            if torch.all(estimates <= tol) or last:
                result = _result(matrix, basis[:, :m], ritz, max(tol, 1e-13 * scale),
                                 return_eigenvectors, step + 1)
                if np.all(result.converged):
                    get_logger().debug(
                        "lanczos converged N={} k={} basis={} steps={}".format(
                            N, k, m, step + 1))
                    return result
                if last:
                    get_logger().warning(
                        "lanczos stopped at basis {} with residual {:.2e}".format(
                            m, result.residual_norms.max()))
                    raise NotConverged(
                        "lanczos reached {} steps, max residual {:.3e} > tol {:.1e}".format(
                            step + 1, result.residual_norms.max(), tol), result)
        if exhausted:
            break
        projected[m:m + Q.shape[1], m - b:m] = R
        basis[:, m:m + Q.shape[1]] = Q
        b = Q.shape[1]
        m += b
    raise NotConverged("lanczos stopped without a Ritz evaluation", None)


def _ritz(projected, k):
    T = 0.5 * (projected + projected.conj().T)
    values, vectors = torch.linalg.eigh(T)
    return values[:k], vectors[:, :k]


def _result(matrix, basis, ritz, tol, return_eigenvectors, steps):
    values, Y = ritz
    vectors = (basis @ Y).cpu().numpy()
    eigenvalues = values.cpu().numpy()
    residuals = residual_norms(matrix, eigenvalues, vectors)
    return SpectrumResult(eigenvalues, residuals, residuals <= tol, "lanczos",
                          vectors if return_eigenvectors else None,
                          {"basis": basis.shape[1], "steps": steps})
