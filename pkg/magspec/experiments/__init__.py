from .experiment import Experiment
from .curve import CurveData, run_curve, curve_point, CURVE_FAMILIES
from .acceptance import Criterion, run_suite, SUITES


__all__ = [
    "Experiment",
    "CurveData",
    "run_curve",
    "curve_point",
    "CURVE_FAMILIES",
    "Criterion",
    "run_suite",
    "SUITES",
]
