import json
import os
import numpy as np
import pandas as pd
import scipy.io


def _to_builtin(value):
    if isinstance(value, dict):
        return {str(k): _to_builtin(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_to_builtin(v) for v in value]
    if isinstance(value, np.ndarray):
        return _to_builtin(value.tolist())
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, float) and not np.isfinite(value):
        # JSON has no infinity literal
        return "inf" if value > 0 else ("-inf" if value < 0 else "nan")
    return value


def dumps_json(obj):
    return json.dumps(_to_builtin(obj), indent=2)


def write_json(obj, path):
    _make_parent(path)
    with open(path, mode="w") as f:
        f.write(dumps_json(obj) + "\n")


def write_csv(frame, path):
    """Write a DataFrame with 17 significant digits and '.' decimals."""
    _make_parent(path)
    if not isinstance(frame, pd.DataFrame):
        frame = pd.DataFrame(frame)
    frame.to_csv(path, index=False, float_format="%.17g")


def dump_matrix(matrix, path, comment=""):
    """Matrix-market dump of a sparse operator."""
    _make_parent(path)
    scipy.io.mmwrite(path, matrix, comment=comment)


def _make_parent(path):
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)
