import json
import numpy as np
import pandas as pd
from magspec import closedform
from magspec.initializer import get_logger, get_writer
from magspec import presets
from magspec.reduction import minimize_over_momenta, abelian_cover_groundstate
from magspec.samplers import SerialSampler

CURVE_FAMILIES = ("maass", "sphere_bundle_h", "sl2_universal", "nil", "nil_abelian")


class CurveData:
    """
    Ground state energy as a function of the field strength.

    Args:
        B (array): strictly increasing field strengths
        numeric (array): lambda0 from the reduced family
        closed_form (array): lambda0 from the closed-form oracle
        branches (dict): name -> array of one point-spectrum branch, nan
            where the branch does not exist
        thresholds (array): bottom of the continuous spectrum per sample
        family (str): curve family
    """

    def __init__(self, B, numeric, closed_form, branches, thresholds, family):
        self.B = np.asarray(B, dtype=float)
        self.numeric = np.asarray(numeric, dtype=float)
        self.closed_form = np.asarray(closed_form, dtype=float)
        self.branches = {k: np.asarray(v, dtype=float) for k, v in branches.items()}
        self.thresholds = np.asarray(thresholds, dtype=float)
        self.family = family
        n = len(self.B)
        if any(len(column) != n for column in
               [self.numeric, self.closed_form, self.thresholds] + list(self.branches.values())):
            raise ValueError("curve columns differ in length")
        if n > 1 and np.any(np.diff(self.B) <= 0):
            raise ValueError("B samples must be strictly increasing")

    @property
    def abs_error(self):
        return np.abs(self.numeric - self.closed_form)

    @property
    def step(self):
        return float(self.B[1] - self.B[0]) if len(self.B) > 1 else 0.0

    def to_frame(self):
        return pd.DataFrame({"B": self.B,
                             "lambda0_numeric": self.numeric,
                             "lambda0_closed_form": self.closed_form,
                             "abs_error": self.abs_error})

    def branches_frame(self):
        frame = pd.DataFrame({"B": self.B, "threshold": self.thresholds})
        for name in sorted(self.branches):
            frame[name] = self.branches[name]
        return frame

    def kinks(self, jump=0.1, values=None):
        """
        Non-differentiable points of the curve: samples where the one-sided
        slopes differ by more than jump and by more than at the neighbours.

        Returns:
            list of dict: {"B", "lambda0", "left_slope", "right_slope"}
        """
        y = self.numeric if values is None else np.asarray(values, dtype=float)
        if len(y) < 3:
            return []
        slopes = np.diff(y) / np.diff(self.B)
        change = np.abs(np.diff(slopes))
        found = []
        for i, c in enumerate(change):
            if c <= jump:
                continue
            if (i > 0 and change[i - 1] > c) or (i + 1 < len(change) and change[i + 1] >= c):
                continue
            found.append({"B": float(self.B[i + 1]), "lambda0": float(y[i + 1]),
                          "left_slope": float(slopes[i]), "right_slope": float(slopes[i + 1])})
        return found

    def local_extrema(self, values=None):
        """Sampled local minima and maxima, tagged by kind."""
        y = self.numeric if values is None else np.asarray(values, dtype=float)
        found = []
        for i in range(1, len(y) - 1):
            if y[i] < y[i - 1] and y[i] <= y[i + 1]:
                kind = "minimum"
            elif y[i] > y[i - 1] and y[i] >= y[i + 1]:
                kind = "maximum"
            else:
                continue
            found.append({"B": float(self.B[i]), "lambda0": float(y[i]), "kind": kind})
        return found

    def to_dict(self):
        return {"family": self.family,
                "samples": len(self.B),
                "max_abs_error": float(np.max(self.abs_error)) if len(self.B) else 0.0,
                "kinks": self.kinks(),
                "local_extrema": self.local_extrema()}


def _reference(family, B):
    """closed-form lambda0, continuum threshold and branch points at B"""
    if family == "maass":
        spectrum = closedform.maass(B)
        branches = {"k={}".format(qn["k"]): value
                    for value, qn in spectrum.point_spectrum()}
        return spectrum.lambda0, spectrum.continuum_threshold, branches
    if family == "sphere_bundle_h":
        threshold = closedform.sphere_bundle_h_threshold(B)
        branches = {}
        for value, qn in closedform.sphere_bundle_h(B).point_spectrum(threshold):
            if qn["k"] == 0:
                branches["m={}".format(qn["m"])] = value
        return closedform.sphere_bundle_h_lambda0(B), threshold, branches
    if family == "sl2_universal":
        value = closedform.sl2_universal_lambda0(B)
        return value, value, {}
    if family == "nil":
        value = closedform.nil_universal_lambda0(B)
        return value, value, {}
    if family == "nil_abelian":
        threshold = 0.5 * B ** 2
        m_max = int(np.ceil(abs(B) / (2 * np.pi))) + 2
        branches = {"m={}".format(m): value
                    for m, value in closedform.nil_abelian_lambda0_branches(B, m_max).items()
                    if m != 0 and value <= threshold}
        return closedform.nil_abelian_lambda0(B), threshold, branches
    raise ValueError("unknown curve family {!r}, expected one of {}".format(
        family, CURVE_FAMILIES))


def curve_point(task):
    """Numeric lambda0 of one curve sample, task = (family, B, preset options)."""
    family, B, options = task
    build = presets.family(**options)
    if family == "nil_abelian":
        return abelian_cover_groundstate(build("nil", B, which="abelian")).value
    return minimize_over_momenta(build(family, B)).value


def run_curve(family, B_min=0.0, B_max=3.0, step=1 / 64, sampler=None, **options):
    """
    Sweep lambda0 over B in [B_min, B_max] and compare with the closed form.

    Samples are evaluated through the sampler in input order, so the curve
    is the same for every worker count.

    Args:
        family (str): one of CURVE_FAMILIES
        B_min, B_max (float): sweep range
        step (float): sample spacing
        sampler (Sampler, optional): parallel map over the samples
        **options: options of the family preset, e.g. spacing

    Returns:
        CurveData
    """
    if family not in CURVE_FAMILIES:
        raise ValueError("unknown curve family {!r}, expected one of {}".format(
            family, CURVE_FAMILIES))
    if step <= 0 or B_max < B_min:
        raise ValueError("need step > 0 and B_max >= B_min, got {}, [{}, {}]".format(
            step, B_min, B_max))
    sampler = SerialSampler() if sampler is None else sampler
    count = int(np.floor((B_max - B_min) / step + 1e-9)) + 1
    B = B_min + step * np.arange(count)

    numeric = sampler.map(curve_point, [(family, float(b), options) for b in B])
    references = [_reference(family, float(b)) for b in B]
    names = sorted({name for _, _, branches in references for name in branches})
    branches = {name: [r[2].get(name, np.nan) for r in references] for name in names}

    writer = get_writer()
    for b, value, (exact, _, _) in zip(B, numeric, references):
        writer.add_scalar("lambda0_numeric", value, step_value=writer.sweep_steps, save_csv=True)
        writer.add_scalar("abs_error", abs(value - exact), step_value=writer.sweep_steps)
        writer.sweep_steps += 1

    curve = CurveData(B, numeric, [r[0] for r in references], branches,
                      [r[1] for r in references], family)
    get_logger().info("\nCurveData:\n" + json.dumps(curve.to_dict(), indent=2))
    return curve
