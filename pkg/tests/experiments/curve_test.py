import pytest
import numpy as np
from magspec.experiments import CurveData, run_curve, curve_point


def test_nil_abelian_curve():
    curve = run_curve("nil_abelian", 0.0, 8.0, 1 / 16)
    assert len(curve.B) == 129
    np.testing.assert_allclose(curve.abs_error, 0.0)

    # GIVEN the m = -1 branch crossing 1/2 B^2 at B = pi + 1/2
    kinks = curve.kinks()
    # THEN the curve has a corner there
    assert len(kinks) >= 1
    assert abs(kinks[0]["B"] - (np.pi + 0.5)) <= 1 / 16
    assert kinks[0]["left_slope"] > 0 > kinks[0]["right_slope"]
    assert "m=-1" in curve.branches


def test_nil_universal_curve():
    curve = run_curve("nil", 0.0, 2.0, 1 / 32)
    assert curve.abs_error.max() < 1e-8
    # smooth through |B| = 1/2
    assert curve.kinks() == []
    frame = curve.to_frame()
    assert list(frame.columns) == ["B", "lambda0_numeric", "lambda0_closed_form", "abs_error"]
    assert curve.to_dict()["samples"] == 65


def test_curve_point():
    assert curve_point(("nil", 2.0, {})) == pytest.approx(0.875, abs=1e-8)


def test_local_extrema():
    B = np.linspace(0.0, 2.0, 9)
    values = np.abs(B - 1.0)
    curve = CurveData(B, values, values, {}, values, "test")
    assert curve.local_extrema() == [{"B": 1.0, "lambda0": 0.0, "kind": "minimum"}]
    assert [kink["B"] for kink in curve.kinks()] == [1.0]


def test_invalid_curves():
    with pytest.raises(ValueError):
        CurveData([0.0, 0.0], [1.0, 1.0], [1.0, 1.0], {}, [1.0, 1.0], "test")
    with pytest.raises(ValueError):
        CurveData([0.0, 1.0], [1.0], [1.0, 1.0], {}, [1.0, 1.0], "test")
    with pytest.raises(ValueError):
        run_curve("lens_space")
    with pytest.raises(ValueError):
        run_curve("nil", 1.0, 0.0)
