from magspec.presets.problems import torus, circle, plane, kepler, family, PROBLEMS
from magspec.presets.fields import parse_alpha, parse_potential, random_smooth_fields
import inspect

__all__ = ["torus", "circle", "plane", "kepler", "family", "PROBLEMS",
           "parse_alpha", "parse_potential", "random_smooth_fields"]


def get_default_args(func):
    signature = inspect.signature(func)
    return {
        k: v.default
        for k, v in signature.parameters.items()
        if v.default is not inspect.Parameter.empty
    }
