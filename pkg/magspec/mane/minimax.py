import json
import numpy as np
import scipy.sparse as sparse
import scipy.sparse.linalg
import torch
from magspec.exceptions import NotConverged
from magspec.geometry import (GaugeFunction,
                              ScalarPotential,
                              centered_gradient,
                              coclosed_energy)
from magspec.initializer import get_device, get_logger, get_writer, is_debug_mode

BETA_START = 10.0
BETA_MAX = 1e8


class MCVResult:
    """
    Discrete Mane critical value with its certificate.

    Args:
        value (float): max_x 1/2|alpha + df|^2 + V at certificate_f
        certificate_f (GaugeFunction): the minimizing gauge function
        lower_bound (float): the best of the valid lower bounds
        iterations (int): optimizer iterations over all stages
        converged (bool): gap <= tol
        bounds (dict): every lower bound by name
        beta (float): final soft-max parameter
    """

    def __init__(self, value, certificate_f, lower_bound, iterations, converged,
                 bounds=None, beta=None):
        self.value = float(value)
        self.certificate_f = certificate_f
        self.lower_bound = float(lower_bound)
        self.iterations = int(iterations)
        self.converged = bool(converged)
        self.bounds = {} if bounds is None else dict(bounds)
        self.beta = beta
        if is_debug_mode():
            assert self.value >= self.lower_bound - 1e-12, \
                "lower bound {} above the value {}".format(self.lower_bound, self.value)

    @property
    def gap(self):
        return self.value - self.lower_bound

    def to_dict(self):
        return {"value": self.value, "lower_bound": self.lower_bound,
                "gap": self.gap, "iterations": self.iterations,
                "converged": self.converged, "bounds": self.bounds,
                "beta": self.beta}

    def __repr__(self):
        return "MCVResult(value={:.10g}, gap={:.3e})".format(self.value, self.gap)


def _check_compact(grid):
    if len(grid.periodic_axes) != grid.dimension:
        raise ValueError("critical values need a compact grid, {} has Dirichlet axes".format(
            grid))


def node_energies(grid, alpha, V, f):
    """1/2 |alpha + df|^2_g + V at every node, df by centred differences."""
    form = alpha.components + centered_gradient(grid, np.asarray(f).reshape(grid.shape))
    g_inv = grid.metric_inverse()
    kinetic = 0.5 * np.einsum("j...,jk...,k...->...", form, g_inv, form)
    return kinetic + (0.0 if V is None else V.values)


def mane_objective(grid, alpha, V, f):
    """F(f) = max over the nodes of 1/2 |alpha + df|^2 + V."""
    return float(node_energies(grid, alpha, V, f).max())


class _SoftMax:
    """Torch soft-max of the node energies as a function of f."""

    def __init__(self, grid, alpha, V):
        self.grid = grid
        device = get_device()
        self.alpha = torch.from_numpy(alpha.components).to(device)
        self.V = torch.zeros(grid.shape, dtype=torch.float64, device=device) if V is None \
            else torch.from_numpy(np.asarray(V.values, dtype=float)).to(device)
        self.g_inv = torch.from_numpy(np.asarray(grid.metric_inverse(), dtype=float)).to(device)

    def energies(self, f):
        f = f.reshape(self.grid.shape)
        df = torch.stack([
            (torch.roll(f, -1, dims=axis) - torch.roll(f, 1, dims=axis))
            / (2 * self.grid.spacings[axis]) for axis in range(self.grid.dimension)])
        form = self.alpha + df
        kinetic = 0.5 * torch.einsum("j...,jk...,k...->...", form, self.g_inv, form)
        return kinetic + self.V

    def __call__(self, f, beta):
        return torch.logsumexp(beta * self.energies(f).reshape(-1), dim=0) / beta

    def weights(self, f, beta):
        with torch.no_grad():
            return torch.softmax(beta * self.energies(f).reshape(-1), dim=0).cpu().numpy()


def _difference_operator(grid, axis):
    """Centred difference on a periodic axis as an N x N sparse matrix."""
    index = np.arange(grid.size).reshape(grid.shape)
    ahead = np.roll(index, -1, axis=axis).ravel()
    behind = np.roll(index, 1, axis=axis).ravel()
    rows = np.arange(grid.size)
    h = grid.spacings[axis]
    return sparse.csr_matrix(
        (np.concatenate([np.full(grid.size, 0.5 / h), np.full(grid.size, -0.5 / h)]),
         (np.concatenate([rows, rows]), np.concatenate([ahead, behind]))),
        shape=(grid.size, grid.size))


def dual_lower_bound(grid, alpha, V, mu, f_final):
    """
    sum mu V + 1/2 min_f sum mu |alpha + df|^2 for soft-max weights mu,
    a lower bound of the minimax for a diagonal metric. The weighted least
    squares problem is solved by LSQR and clipped at the final iterate.
    """
    g_inv = grid.metric_inverse()
    d = grid.dimension
    diagonal = np.array([[g_inv[j, k] for k in range(d)] for j in range(d)])
    if any(np.any(diagonal[j, k]) for j in range(d) for k in range(d) if j != k):
        return -np.inf
    rows, rhs = [], []
    for axis in range(d):
        w = np.sqrt(mu * g_inv[axis, axis].ravel())
        rows.append(sparse.diags(w) @ _difference_operator(grid, axis))
        rhs.append(-w * alpha.components[axis].ravel())
    A = sparse.vstack(rows).tocsr()
    b = np.concatenate(rhs)
    f = scipy.sparse.linalg.lsqr(A, b, atol=1e-14, btol=1e-14, iter_lim=20 * grid.size)[0]
    residual = A @ f - b
    potential = 0.0 if V is None else float(np.dot(mu, V.values.ravel()))
    energies = node_energies(grid, alpha, V, f_final).ravel()
    return min(potential + 0.5 * float(residual @ residual), float(mu @ energies))


def lower_bounds(grid, alpha, V, mu=None, f_final=None):
    """The averaging, max V and dual lower bounds of the critical value."""
    weights = grid.weights()
    mean_V = 0.0 if V is None else float(np.dot(weights, V.values.ravel()) / weights.sum())
    bounds = {"max_V": 0.0 if V is None else float(V.values.max())}
    if grid.geometry.kind == "torus":
        bounds["averaging"] = coclosed_energy(grid, alpha) + mean_V
    if mu is not None:
        bounds["dual"] = dual_lower_bound(grid, alpha, V, mu, f_final)
    return bounds


def critical_value(grid, alpha, V=None, tol=1e-3, max_iter=200, betas=None):
    """
    Discrete Mane critical value inf_f max_x 1/2 |alpha + df|^2 + V.

    The max is smoothed by the soft-max (1/beta) log sum exp(beta E) and
    minimized with L-BFGS for beta = 10, 30, 100, ..., warm-started across
    beta, until the smoothing error log(N)/beta is below tol/2 and the
    unsmoothed value at the iterate is within tol of the lower bound.

    This replaces plain gradient descent on the nonsmooth max with step
    halving. The optimizer path carries no guarantee of its own: the
    returned value is an upper bound certified a posteriori against
    lower_bounds(), and it is accepted only when value - lower_bound <= tol.

    Args:
        grid (GridDiscretization): compact (all axes periodic) grid
        alpha (VectorPotential): magnetic potential
        V (ScalarPotential, optional): electric potential
        tol (float): admissible gap value - lower_bound
        max_iter (int): L-BFGS iterations per stage
        betas (sequence of float, optional): explicit homotopy stages

    Returns:
        MCVResult

    Raises:
        NotConverged: when the gap exceeds tol after the last stage
    """
    if tol <= 0:
        raise ValueError("tol must be positive, got {}".format(tol))
    _check_compact(grid)
    alpha.check_grid(grid)
    if V is not None and not isinstance(V, ScalarPotential):
        V = ScalarPotential(V)
    if V is not None:
        V.check_grid(grid)

    softmax = _SoftMax(grid, alpha, V)
    f = torch.zeros(grid.size, dtype=torch.float64, device=get_device(), requires_grad=True)
    if betas is None:
        betas = []
        beta = BETA_START
        while beta <= BETA_MAX:
            betas.append(beta)
            beta *= np.sqrt(10.0)
    iterations = 0
    bounds = lower_bounds(grid, alpha, V)
    result = None

    for beta in betas:
        optimizer = torch.optim.LBFGS([f], lr=1.0, max_iter=max_iter, history_size=20,
                                      tolerance_grad=1e-12, tolerance_change=1e-16,
                                      line_search_fn="strong_wolfe")

        def closure():
            optimizer.zero_grad()
            loss = softmax(f, beta)
            loss.backward()
            return loss

        optimizer.step(closure)
        stage_iterations = optimizer.state[optimizer.param_groups[0]["params"][0]].get("n_iter", 0)
        iterations += stage_iterations
        writer = get_writer()
        writer.iterations += stage_iterations

        f_final = f.detach().cpu().numpy().copy()
        value = mane_objective(grid, alpha, V, f_final)
        mu = softmax.weights(f.detach(), beta)
        bounds = lower_bounds(grid, alpha, V, mu, f_final)
        lower = max(bounds.values())
        converged = value - lower <= tol
        result = MCVResult(value, GaugeFunction(f_final.reshape(grid.shape)), lower,
                           iterations, converged, bounds, float(beta))
        get_logger().debug("mane beta={:.3g} value={:.10g} lower={:.10g}".format(
            beta, value, lower))
        writer.add_scalar("mane_gap", value - lower, step="iterations")
        if converged and np.log(grid.size) / beta < tol / 2:
            break

    get_logger().info("\nMCVResult:\n" + json.dumps(result.to_dict(), indent=2))
    if not result.converged:
        raise NotConverged("critical value gap {:.3e} > tol {:.1e}".format(
            result.gap, tol), result)
    return result
