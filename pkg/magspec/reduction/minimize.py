import itertools
import json
import numpy as np
import scipy.optimize
from magspec.exceptions import ScanRangeExhausted
from magspec.initializer import get_logger, is_debug_mode
from magspec.reduction.families import SIGNS
from magspec.samplers import SerialSampler


class CoverGroundState:
    """
    Ground state energy of a cover computed as a minimum over a family.

    Args:
        value (float): lambda0
        argmin (dict): minimizing parameters
        family (str): family name
        bracket (tuple): (numeric value, closed-form reference or None)
        certificate (dict): enumerated range and tail bound, if any
        evaluations (int): number of member solves
    """

    def __init__(self, value, argmin, family, bracket, certificate=None,
                 evaluations=0):
        self.value = float(value)
        self.argmin = dict(argmin)
        self.family = family
        self.bracket = bracket
        self.certificate = certificate or {}
        self.evaluations = evaluations

    @property
    def lambda0(self):
        return self.value

    def to_dict(self):
        return {"family": self.family, "lambda0": self.value,
                "argmin": self.argmin, "bracket": list(self.bracket),
                "certificate": self.certificate, "evaluations": self.evaluations}

    def __repr__(self):
        return "CoverGroundState({}, lambda0={:.10g}, argmin={})".format(
            self.family, self.value, self.argmin)


def _evaluate(task):
    family, params = task
    return family.evaluate(**params)


def _norm(params):
    return sum(abs(v) for v in params.values())


def _best(table):
    """min by value, ties to the smaller |parameter|."""
    lowest = min(value for _, value in table)
    slack = 1e-12 * max(1.0, abs(lowest))
    ties = [(params, value) for params, value in table if value <= lowest + slack]
    return min(ties, key=lambda item: (_norm(item[0]), sorted(item[0].items())))


def _discrete_domain(parameter, M):
    if parameter.kind == "integer":
        return list(range(-M, M + 1))
    if parameter.kind == "cyclic":
        return list(range(*parameter.bounds))
    return list(SIGNS)


def _golden(family, params, name, grid, values):
    """Golden-section refinement around the scanned minimum of one real axis."""
    i = int(np.argmin(values))
    if i == 0 or i == len(grid) - 1:
        return params, values[i]
    bracket = (grid[i - 1], grid[i], grid[i + 1])

    def objective(x):
        return family.evaluate(**dict(params, **{name: float(x)}))

    try:
        result = scipy.optimize.minimize_scalar(
            objective, bracket=bracket, method="golden", tol=1e-10)
    except ValueError:
        # flat scan, the bracket is not strict
        return dict(params, **{name: float(grid[i])}), values[i]
    if result.fun < values[i]:
        return dict(params, **{name: float(result.x)}), float(result.fun)
    return dict(params, **{name: float(grid[i])}), values[i]


def minimize_over_momenta(family, scan_points=41, enumerate_range=None,
                          max_range=64, refine_margin=0.05, sampler=None):
    """
    Minimize the member ground energy of a family over its momenta.

    Discrete parameters are enumerated, integer ones on |m| <= M with a
    tail bound certifying the rest; a real parameter is scanned on its
    bounds and refined by golden-section search around the scanned minimum
    of every discrete combination within refine_margin of the best.

    Args:
        family (ReducedFamily): the family
        scan_points (int): samples of the real parameter, made odd so the
            scan contains 0 on symmetric bounds
        enumerate_range (int, optional): initial M, defaults to
            family.enumeration_range()
        max_range (int): largest M tried before giving up
        refine_margin (float): relative margin of the refined combinations
        sampler (Sampler, optional): parallel map for the member solves

    Returns:
        CoverGroundState

    Raises:
        ScanRangeExhausted: when the tail bound cannot certify the range
    """
    sampler = SerialSampler() if sampler is None else sampler
    real = [p for p in family.parameters if p.kind == "real"]
    discrete = [p for p in family.parameters if p.kind != "real"]
    if len(real) > 1:
        raise ValueError("{} has more than one real parameter".format(family.name))
    integer = [p for p in discrete if p.kind == "integer"]
    M = family.enumeration_range() if enumerate_range is None else int(enumerate_range)
    if integer and (family.tail_bound is None or family.tail_bound(M) is None):
        raise ScanRangeExhausted(
            "{} with {} has no tail bound over {}".format(
                family.name, family.fields, [p.name for p in integer]),
            {"range": None, "tail_bound": None})

    grid = None
    if real:
        scan_points = scan_points + 1 - scan_points % 2
        grid = np.linspace(*real[0].bounds, scan_points)

    cache = {}
    while True:
        combos = [dict(zip([p.name for p in discrete], values))
                  for values in itertools.product(
                      *[_discrete_domain(p, M) for p in discrete])]
        tasks = []
        for combo in combos:
            points = [combo] if grid is None else \
                [dict(combo, **{real[0].name: float(x)}) for x in grid]
            tasks.extend(p for p in points
                         if tuple(sorted(p.items())) not in cache)
        for params, value in zip(tasks, sampler.map(_evaluate,
                                                    [(family, p) for p in tasks])):
            cache[tuple(sorted(params.items()))] = value

        table = [(dict(key), value) for key, value in cache.items()
                 if all(abs(dict(key)[p.name]) <= M for p in integer)]
        best_params, best_value = _best(table)

        if grid is not None:
            refined = []
            threshold = best_value + refine_margin * max(1.0, abs(best_value))
            for combo in combos:
                values = [cache[tuple(sorted(dict(combo, **{real[0].name: float(x)}).items()))]
                          for x in grid]
                if min(values) <= threshold:
                    refined.append(_golden(family, combo, real[0].name, grid, values))
            best_params, best_value = _best(refined + [(best_params, best_value)])

        certificate = {}
        if not integer:
            break
        bound = family.tail_bound(M)
        certificate = {"range": M, "tail_bound": float(bound)}
        if bound >= best_value:
            break
        get_logger().warning("{}: tail bound {:.6g} below {:.6g} at M={}, extending".format(
            family.name, bound, best_value, M))
        if 2 * M > max_range:
            raise ScanRangeExhausted(
                "{}: tail bound {:.6g} < lambda0 {:.6g} at M={}".format(
                    family.name, bound, best_value, M), certificate)
        M *= 2

    if is_debug_mode():
        assert best_value >= family.floor - 1e-8, \
            "lambda0 {} below the member floor {}".format(best_value, family.floor)
    state = CoverGroundState(best_value, best_params, family.name,
                             (best_value, family.lambda0_reference()),
                             certificate, len(cache))
    get_logger().info("\nCoverGroundState:\n" + json.dumps(state.to_dict(), indent=2))
    return state


def abelian_cover_groundstate(family, lattice="integers", **settings):
    """
    Ground state energy of an abelian cover as a minimum over a discrete
    family: the integers with a tail certificate (the m = 0 member carries
    the continuum threshold) or the characters of a finite cyclic fold.

    Args:
        family (ReducedFamily): family with a single discrete parameter
        lattice ("integers" or int): Z, or the fold n of Z_n

    Returns:
        CoverGroundState
    """
    if len(family.parameters) != 1 or family.parameters[0].kind not in ("integer", "cyclic"):
        raise ValueError("{} is not a discrete family".format(family.name))
    parameter = family.parameters[0]
    if lattice == "integers":
        if parameter.kind != "integer":
            raise ValueError("{} is indexed by Z_n, not Z".format(family.name))
    elif parameter.kind != "cyclic" or parameter.bounds != (0, int(lattice)):
        raise ValueError("{} is not indexed by Z_{}".format(family.name, lattice))
    return minimize_over_momenta(family, **settings)
