import json
import numpy as np
import scipy.optimize
from magspec.exceptions import NotConverged
from magspec.geometry import VectorPotential, l2_inner
from magspec.initializer import get_logger
from magspec.mane.minimax import critical_value
from magspec.samplers import SerialSampler


class StrictMCVResult:
    """
    Strict critical value: the minimum of the critical value over the
    harmonic shifts alpha - sum c_i omega_i.

    Args:
        value (float): c_0
        coefficients (np.ndarray): argmin c
        evaluations (dict): tuple(c) -> MCVResult of every evaluated shift
    """

    def __init__(self, value, coefficients, evaluations):
        self.value = float(value)
        self.coefficients = np.asarray(coefficients, dtype=float)
        self.evaluations = dict(evaluations)

    @property
    def result(self):
        return self.evaluations[tuple(self.coefficients)]

    def to_dict(self):
        return {"value": self.value, "coefficients": self.coefficients.tolist(),
                "evaluations": len(self.evaluations)}

    def __repr__(self):
        return "StrictMCVResult(value={:.10g}, coefficients={})".format(
            self.value, self.coefficients.tolist())


def torus_harmonic_basis(grid):
    """The constant covectors dx_1, ..., dx_d spanning H^1 of a flat torus."""
    return [VectorPotential.constant(grid, np.eye(grid.dimension)[j])
            for j in range(grid.dimension)]


def harmonic_projection(grid, alpha, harmonic_basis):
    """Coefficients of the L^2 projection of alpha onto the basis."""
    gram = np.array([[l2_inner(grid, a, b) for b in harmonic_basis]
                     for a in harmonic_basis])
    moments = np.array([l2_inner(grid, alpha, omega) for omega in harmonic_basis])
    return np.linalg.lstsq(gram, moments, rcond=None)[0]


def _shifted(alpha, harmonic_basis, coefficients):
    components = alpha.components.copy()
    for c, omega in zip(coefficients, harmonic_basis):
        components = components - c * omega.components
    return VectorPotential(components)


def _evaluate(task):
    grid, alpha, V, tol = task
    try:
        return critical_value(grid, alpha, V, tol=tol)
    except NotConverged as err:
        # the value stays a valid upper bound
        get_logger().warning("inner critical value not converged: {}".format(err))
        return err.result


def strict_critical_value(grid, alpha, V=None, harmonic_basis=None, tol=1e-3,
                          initial_step=0.5, sampler=None):
    """
    Strict critical value c_0 = min over harmonic classes of the critical
    value of alpha - sum c_i omega_i.

    The outer search starts at the harmonic projection of alpha, runs a
    coordinate search with step halving (the +- trial points of all coordinates
    are evaluated as one parallel batch) and polishes each coordinate by
    golden-section search.

    Args:
        grid (GridDiscretization): compact grid
        alpha (VectorPotential): magnetic potential
        V (ScalarPotential, optional): electric potential
        harmonic_basis (list of VectorPotential, optional): basis of the
            admissible harmonic subspace, the full H^1 of a torus when None
            and the trivial subspace when empty
        tol (float): inner and outer tolerance
        initial_step (float): first coordinate step
        sampler (Sampler, optional): parallel map over the trial points

    Returns:
        StrictMCVResult
    """
    sampler = SerialSampler() if sampler is None else sampler
    if harmonic_basis is None:
        harmonic_basis = torus_harmonic_basis(grid)
    harmonic_basis = list(harmonic_basis)
    evaluations = {}

    def evaluate_batch(points):
        todo = [tuple(p) for p in points if tuple(p) not in evaluations]
        todo = list(dict.fromkeys(todo))
        results = sampler.map(_evaluate, [
            (grid, _shifted(alpha, harmonic_basis, p), V, tol) for p in todo])
        evaluations.update(zip(todo, results))
        return [evaluations[tuple(p)].value for p in points]

    if not harmonic_basis:
        value = evaluate_batch([()])[0]
        return StrictMCVResult(value, (), evaluations)

    current = tuple(float(c) for c in harmonic_projection(grid, alpha, harmonic_basis))
    best = evaluate_batch([current])[0]
    step = initial_step
    while step > tol:
        trials = []
        for i in range(len(current)):
            for sign in (-1, 1):
                trial = list(current)
                trial[i] += sign * step
                trials.append(tuple(trial))
        values = evaluate_batch(trials)
        i_best = int(np.argmin(values))
        if values[i_best] < best - tol / 10:
            current, best = trials[i_best], values[i_best]
        else:
            step /= 2

    for i in range(len(current)):
        def objective(x, i=i):
            trial = list(current)
            trial[i] = float(x)
            return evaluate_batch([tuple(trial)])[0]

        try:
            found = scipy.optimize.minimize_scalar(
                objective, bracket=(current[i] - 2 * step, current[i], current[i] + 2 * step),
                method="golden", tol=1e-6)
        except ValueError:
            continue
        if found.fun < best:
            trial = list(current)
            trial[i] = float(found.x)
            current, best = tuple(trial), float(found.fun)

    # smallest-norm coefficients among tol-equal minima
    ties = [key for key, res in evaluations.items() if res.value <= best + tol / 10]
    current = min(ties, key=lambda key: (np.linalg.norm(key), evaluations[key].value))
    result = StrictMCVResult(evaluations[current].value, current, evaluations)
    get_logger().info("\nStrictMCVResult:\n" + json.dumps(result.to_dict(), indent=2))
    return result
