import json
import numpy as np
from dataclasses import dataclass, asdict
from magspec import closedform
from magspec.assembly import assemble, gauge_shift, Character
from magspec.bloch import direct_cover_oracle
from magspec.eigensolve import (dense_spectrum,
                                lanczos_lowest,
                                solve_effective_1d,
                                left_boundary_sensitivity)
from magspec.exceptions import NotConverged, ViolationFound
from magspec.experiments.curve import run_curve
from magspec.geometry import (build_geometry,
                              make_grid,
                              VectorPotential,
                              GaugeFunction,
                              hodge_decompose_torus,
                              coclosed_part,
                              l2_inner)
from magspec.initializer import get_logger
from magspec.mane import (critical_value,
                          strict_critical_value,
                          verify_lambda0_le_c,
                          lambda0_second_derivative)
from magspec import presets
from magspec.reduction import (build_family,
                               minimize_over_momenta,
                               abelian_cover_groundstate,
                               maass_strip_oracle,
                               sol_laplacian_oracle)


@dataclass
class Criterion:
    id: str
    target: float
    measured: float
    tolerance: float
    passed: bool

    def to_dict(self):
        record = asdict(self)
        record["pass"] = bool(record.pop("passed"))
        return record


def _check(id, target, measured, tolerance, relative=False):
    error = abs(measured - target)
    if relative:
        error /= abs(target)
    return Criterion(id, float(target), float(measured), float(tolerance), bool(error <= tolerance))


def _bound(id, bound, measured, tolerance, above=True):
    """measured >= bound - tolerance (or <= bound + tolerance)"""
    passed = measured >= bound - tolerance if above else measured <= bound + tolerance
    return Criterion(id, float(bound), float(measured), float(tolerance), bool(passed))


def landau_level(half_width=8.0, spacing=1 / 16):
    grid, alpha, _ = presets.plane(half_width=half_width, spacing=spacing)(B=1.0)
    spectrum = lanczos_lowest(assemble(grid, alpha), k=3)
    return [_check("1", 0.5, spectrum.lambda0, 0.02, relative=True)]


def circle_flux_law(n=256):
    records = []
    for a in (0.0, 0.2, 0.5, 0.8, 1.3):
        value = dense_spectrum(assemble(*presets.circle(n=n)(a=a)[:2]), k=1).lambda0
        records.append(_check("2.a={}".format(a),
                              closedform.circle_flux(a).lambda0, value, 1e-3))
    low = dense_spectrum(assemble(*presets.circle(n=n)(a=0.2)[:2]), k=4).eigenvalues
    high = dense_spectrum(assemble(*presets.circle(n=n)(a=1.2)[:2]), k=4).eigenvalues
    records.append(Criterion("2.periodicity", 0.0, float(np.max(np.abs(low - high))),
                             1e-9, bool(np.max(np.abs(low - high)) <= 1e-9)))
    return records


def maass_reduction(sampler=None):
    records = []
    for B in (0.3, 1.0, 2.0):
        value = minimize_over_momenta(build_family("maass", B), sampler=sampler).value
        records.append(_check("3.B={}".format(B), closedform.maass(B).lambda0, value, 5e-3))
    records.append(_check("3.strip", closedform.maass(2.0).lambda0,
                          maass_strip_oracle(2.0, sampler=sampler), 5e-3))
    return records


def sphere_bundle_curve(sampler=None, step=1 / 64):
    curve = run_curve("sphere_bundle_h", 0.0, 3.0, step, sampler=sampler)
    records = [Criterion("4.max_error", 0.0, float(curve.abs_error.max()), 5e-3,
                         bool(curve.abs_error.max() <= 5e-3))]
    kinks = curve.kinks()
    nearest = min(kinks, key=lambda kink: abs(kink["B"] - 7 / 8)) if kinks \
        else {"B": np.inf, "lambda0": np.inf}
    records.append(_check("4.kink_B", 7 / 8, nearest["B"], step))
    records.append(_check("4.kink_lambda0", 65 / 128, nearest["lambda0"], 5e-3))
    return records


def nil_curves(abelian_samples=np.linspace(0.0, 25.0, 101)):
    records = []
    for B in (0.2, 0.5, 1.0, 3.0):
        value = minimize_over_momenta(build_family("nil", B)).value
        records.append(_check("5.universal.B={}".format(B),
                              closedform.nil_universal_lambda0(B), value, 1e-6))
    worst = 0.0
    for B in abelian_samples:
        value = abelian_cover_groundstate(build_family("nil", float(B), which="abelian")).value
        exact = min(closedform.nil_abelian_lambda0_branches(float(B), 5).values())
        worst = max(worst, abs(value - exact))
    records.append(Criterion("5.abelian", 0.0, worst, 0.0, worst == 0.0))
    return records


def sol_reduction(sampler=None):
    records = []
    value = minimize_over_momenta(build_family("sol", (1.0, 0.0)), sampler=sampler).value
    records.append(_check("6.B=(1,0)", 0.375, value, 5e-3))

    family = build_family("sol", (0.6, 0.8))
    state = minimize_over_momenta(family, sampler=sampler)
    records.append(_bound("6.B=(0.6,0.8).lower", 0.5 * (1 - 0.25), state.value, 5e-3))
    # member values vary continuously in xi_y, so the samples span an interval
    reach = family.parameter("xi_y").bounds
    samples = [family.evaluate(xi_x=1, xi_y=float(x)) for x in np.linspace(*reach, 41)]
    point = closedform.sol_facts(0.6, 0.8).member_point
    distance = max(0.0, min(samples) - point, point - max(samples))
    records.append(Criterion("6.B=(0.6,0.8).member", point, distance, 5e-3,
                             bool(distance <= 5e-3)))

    value = minimize_over_momenta(build_family("sol", (0.4, 0.3)), sampler=sampler).value
    records.append(_check("6.B=(0.4,0.3)", 0.125, value, 5e-3))
    records.append(_check("6.laplacian", closedform.sol_facts(0.0, 0.0).lambda0,
                          sol_laplacian_oracle(), 1e-2))
    return records


def kepler_levels(r_max=200.0, spacing=0.01, shift_spacing=2.5e-4, sensitivity_r_max=30.0):
    records = []
    for B in (0.0, 0.1):
        family = build_family("kepler_radial", B, spacing=spacing, r_max=r_max)
        for m in (1, 2, 3):
            values = solve_effective_1d(family.build(m=m), k=3).eigenvalues
            for n in range(3):
                records.append(_check("7.B={}.m={}.n={}".format(B, m, n),
                                      closedform.kepler(B, m, n), values[n], 1e-3,
                                      relative=True))
    short = build_family("kepler_radial", 0.0, spacing=spacing, r_max=sensitivity_r_max)
    records.append(_check("7.bohr", closedform.bohr(0),
                          solve_effective_1d(short.build(m=0)).lambda0, 1e-2))
    records.append(_bound("7.sensitivity.m=0", 1e-3,
                          left_boundary_sensitivity(short.build(m=0), shift_spacing), 0.0))
    worst = max(left_boundary_sensitivity(short.build(m=m), shift_spacing) for m in (1, 2, 3))
    records.append(_bound("7.sensitivity.m!=0", 1e-6, worst, 0.0, above=False))
    return records


def mane_circle(n=256):
    records = []
    grid = presets.torus(n=n)()[0]
    alpha = presets.parse_alpha(grid, "0.7+sin")
    try:
        result = critical_value(grid, alpha, tol=1e-3)
    except NotConverged as err:
        result = err.result
    records.append(_check("8.value", 0.245, result.value, 1e-3))
    records.append(_bound("8.gap", 1e-3, result.gap, 0.0, above=False))

    # no convergence rate is claimed, the halved grid only reports a delta
    coarse_grid = presets.torus(n=n // 2)()[0]
    try:
        coarse = critical_value(coarse_grid, presets.parse_alpha(coarse_grid, "0.7+sin"), tol=1e-3)
    except NotConverged as err:
        coarse = err.result
    records.append(_bound("8.refinement", 0.0, abs(result.value - coarse.value), 2e-3,
                          above=False))

    strict = strict_critical_value(grid, alpha, tol=1e-3)
    records.append(_check("8.strict", 0.0, strict.value, 1e-3))

    for fold in (2, 3):
        cover = grid.unroll((fold, ))
        try:
            lifted = critical_value(cover, alpha.tile(grid, (fold, )), tol=1e-3)
        except NotConverged as err:
            lifted = err.result
        records.append(_check("8.cover={}".format(fold), result.value, lifted.value, 2e-3))

    for B in (0.5, 2.0):
        try:
            scaled = critical_value(grid, alpha * B, tol=1e-3)
        except NotConverged as err:
            scaled = err.result
        records.append(_check("8.scaling.B={}".format(B), B ** 2 * result.value,
                              scaled.value, 1e-3 * (1 + B ** 2)))
    return records


def lambda0_below_mane(seed=0, count=10, n=12):
    rng = np.random.default_rng(seed)
    grid = presets.torus(n=n, dimension=2)()[0]
    violations = 0
    for _ in range(count):
        alpha, V = presets.random_smooth_fields(grid, rng)
        try:
            verify_lambda0_le_c(grid, alpha, V, tol=1e-6)
        except ViolationFound:
            violations += 1
    return [Criterion("9.violations", 0.0, float(violations), 0.0, violations == 0)]


def lambda0_curvature(n=128, c=0.7, amplitude=0.5, h_B=0.05):
    grid = presets.torus(n=n)()[0]
    x = grid.coordinates()[0]
    constant = VectorPotential.constant(grid, [c])
    alpha = gauge_shift(grid, constant, amplitude * np.sin(2 * np.pi * x) / (2 * np.pi))
    split = hodge_decompose_torus(grid, alpha)
    cc = coclosed_part(split)
    target = l2_inner(grid, cc, cc) / (grid.cell_volume * grid.size)
    measured = lambda0_second_derivative(grid, alpha, None, h_B=h_B)
    return [_check("10", target, measured, 2e-2, relative=True)]


def property_suite(seeds=(1, 2, 3, 4, 5), n=10):
    """
    Hermiticity, gauge invariance, diamagnetic inequality, midpoint
    concavity, the direct-integral cover oracle and the Hodge identities
    on random smooth fields of the 2-torus, one batch per seed.
    """
    grid = presets.torus(n=n, dimension=2)()[0]
    worst = {"hermitian": 0.0, "gauge": 0.0, "diamagnetic": 0.0,
             "concavity": 0.0, "cover": 0.0, "hodge": 0.0}
    for seed in seeds:
        rng = np.random.default_rng(seed)
        alpha, V = presets.random_smooth_fields(grid, rng)
        op = assemble(grid, alpha, V)
        worst["hermitian"] = max(worst["hermitian"], op.hermitian_defect())

        f = GaugeFunction(rng.uniform(-1.0, 1.0) * np.cos(
            2 * np.pi * (grid.coordinates()[0] + grid.coordinates()[1])))
        base = dense_spectrum(op, k=4).eigenvalues
        shifted = dense_spectrum(assemble(grid, gauge_shift(grid, alpha, f), V), k=4).eigenvalues
        worst["gauge"] = max(worst["gauge"], float(np.max(np.abs(base - shifted))))

        free = dense_spectrum(assemble(grid, None, V), k=1).lambda0
        worst["diamagnetic"] = max(worst["diamagnetic"], free - base[0])

        # mu0(B) = lambda0(B alpha, V) - 1/2 B^2 |alpha|^2 for constant alpha
        vector = rng.uniform(-1.0, 1.0, size=2)
        constant = VectorPotential.constant(grid, vector)

        def mu0(B):
            return dense_spectrum(assemble(grid, constant * B, V), k=1).lambda0 \
                - 0.5 * B ** 2 * float(vector @ vector)
        B1, B2 = rng.uniform(-3.0, 3.0, size=2)
        worst["concavity"] = max(worst["concavity"],
                                 0.5 * (mu0(B1) + mu0(B2)) - mu0(0.5 * (B1 + B2)))

        fold = (2, 2)
        direct = direct_cover_oracle(grid, alpha, V, fold).eigenvalues
        twisted = np.sort(np.concatenate([
            dense_spectrum(assemble(grid, alpha, V, Character(
                (2 * np.pi * i / fold[0], 2 * np.pi * j / fold[1]), (0, 1)))).eigenvalues
            for i in range(fold[0]) for j in range(fold[1])]))
        worst["cover"] = max(worst["cover"], float(np.max(np.abs(np.sort(direct) - twisted))))

        split = hodge_decompose_torus(grid, alpha)
        parts = [split.harmonic_in_cover_kernel, split.harmonic_orthogonal,
                 split.coexact, split.exact]
        total = sum(part.components for part in parts)
        defect = float(np.max(np.abs(total - alpha.components)))
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                defect = max(defect, abs(l2_inner(grid, parts[i], parts[j])))
        worst["hodge"] = max(worst["hodge"], defect)

    tolerances = {"hermitian": 1e-12, "gauge": 1e-8, "diamagnetic": 1e-9,
                  "concavity": 1e-8, "cover": 1e-9, "hodge": 1e-10}
    return [Criterion("11." + name, 0.0, float(worst[name]), tolerances[name],
                      bool(worst[name] <= tolerances[name]))
            for name in sorted(worst)]


SUITES = {
    "closedform": ("1", "2", "3", "4", "5", "6", "7"),
    "mane": ("8", "9", "10"),
    "properties": ("11", ),
}
SUITES["all"] = SUITES["closedform"] + SUITES["mane"] + SUITES["properties"]


def _criteria(seed, sampler):
    return {
        "1": lambda: landau_level(),
        "2": lambda: circle_flux_law(),
        "3": lambda: maass_reduction(sampler),
        "4": lambda: sphere_bundle_curve(sampler),
        "5": lambda: nil_curves(),
        "6": lambda: sol_reduction(sampler),
        "7": lambda: kepler_levels(),
        "8": lambda: mane_circle(),
        "9": lambda: lambda0_below_mane(seed),
        "10": lambda: lambda0_curvature(),
        "11": lambda: property_suite(tuple(seed + i for i in range(1, 6))),
    }


def run_suite(name="all", seed=0, sampler=None):
    """
    Run an acceptance suite.

    Args:
        name (str): closedform, mane, properties or all
        seed (int): seed of the randomized criteria
        sampler (Sampler, optional): parallel map of the heavy sweeps

    Returns:
        list of Criterion
    """
    if name not in SUITES:
        raise ValueError("unknown suite {!r}, expected one of {}".format(
            name, sorted(SUITES)))
    criteria = _criteria(seed, sampler)
    records = []
    for key in SUITES[name]:
        found = criteria[key]()
        get_logger().info("\nCriterion {}:\n".format(key)
                          + json.dumps([r.to_dict() for r in found], indent=2))
        records.extend(found)
    return records
