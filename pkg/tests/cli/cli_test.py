import json
import pytest
import numpy as np
import pandas as pd
from magspec import cli
from magspec.experiments import Criterion
from magspec.exceptions import NotConverged, ScanRangeExhausted
from magspec.mane import MCVResult


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_reference(capsys, serial):
    code, payload = run(capsys, ["reference", "--family", "maass", "--B", "2"])
    assert code == 0
    assert payload["points"] == [1.0, 2.0]
    assert payload["threshold"] == 2.125
    assert payload["normalization"] == "half"


def test_reference_double_convention(capsys, serial):
    code, payload = run(capsys, ["reference", "--family", "maass", "--B", "2",
                                 "--convention", "double"])
    assert code == 0
    assert payload["points"] == [2.0, 4.0]
    assert payload["lambda0"] == 2.0


def test_reference_mane(capsys, serial):
    code, payload = run(capsys, ["reference", "--family", "mane", "--kind",
                                 "sl2_universal", "--B", "2"])
    assert code == 0
    assert payload["value"] == 1.0


def test_spectrum_circle(capsys, serial, tmp_path):
    out = tmp_path / "spectrum.csv"
    code, payload = run(capsys, ["spectrum", "--geom", "circle", "--n", "64",
                                 "--a", "0.25", "--k", "2", "--out", str(out)])
    assert code == 0
    assert payload["method"] == "dense"
    assert payload["eigenvalues"][0] == pytest.approx(np.pi ** 2 / 8, rel=1e-3)
    assert out.read_text().startswith("index,eigenvalue")


def test_spectrum_reduced_family(capsys, serial):
    code, payload = run(capsys, ["spectrum", "--geom", "nil", "--B", "2"])
    assert code == 0
    assert payload["method"] == "reduced_family"
    assert payload["eigenvalues"][0] == pytest.approx(0.875, abs=1e-8)


def test_mane(capsys, serial):
    code, payload = run(capsys, ["mane", "--geom", "circle", "--n", "32", "--a", "0.1"])
    assert code == 0
    assert payload["value"] == pytest.approx(0.5 * (0.2 * np.pi) ** 2, abs=1e-3)
    assert payload["gap"] <= 1e-3


def test_mane_certificate_csv(capsys, serial, tmp_path):
    out = tmp_path / "certificate.csv"
    code, payload = run(capsys, ["mane", "--geom", "torus", "--dimension", "2", "--n", "8",
                                 "--alpha", "const:0.3,0.1", "--certificate-out", str(out)])
    assert code == 0

    # GIVEN a certificate path
    # THEN f is written with one row per node and one column per coordinate
    frame = pd.read_csv(out)
    assert list(frame.columns) == ["x0", "x1", "f"]
    assert len(frame) == 64
    assert np.all(np.isfinite(frame["f"]))


def test_bands(capsys, serial):
    code, payload = run(capsys, ["bands", "--geom", "circle", "--n", "8", "--cover", "2",
                                 "--k", "2"])
    assert code == 0
    assert payload["cover"] == {"0": 2}
    assert payload["lambda0"] == pytest.approx(0.0, abs=1e-10)


def test_config_file(capsys, serial, tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"family": "nil", "B": 0.3}))
    code, payload = run(capsys, ["reference", "--config", str(config), "--B", "2"])
    # explicit flags win over the file
    assert code == 0
    assert payload["name"] == "nil_universal"
    assert payload["lambda0"] == pytest.approx(0.875)


def test_config_errors(capsys, serial, tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"bogus": 1}))
    code, payload = run(capsys, ["spectrum", "--config", str(config)])
    assert code == 2
    assert payload is None

    code, _ = run(capsys, ["spectrum", "--config", str(tmp_path / "missing.json")])
    assert code == 2
    code, _ = run(capsys, ["spectrum", "--geom", "torus", "--n", "2"])
    assert code == 2
    code, _ = run(capsys, ["curve", "--family", "nil", "--B-min", "2", "--B-max", "1"])
    assert code == 2


def test_spectrum_kepler(capsys, serial):
    code, payload = run(capsys, ["spectrum", "--geom", "kepler", "--B", "0.5", "--m", "0"])
    assert code == 0
    assert payload["eigenvalues"][0] == pytest.approx(-2.0, rel=1e-2)


def test_mane_not_converged(capsys, serial, monkeypatch):
    def fake_critical_value(grid, alpha, V, tol):
        result = MCVResult(0.3, None, 0.2, 5, False)
        raise NotConverged("critical value gap 1e-1 > tol", result)
    monkeypatch.setattr(cli, "critical_value", fake_critical_value)

    # GIVEN a minimax that stops early
    code, payload = run(capsys, ["mane", "--geom", "circle", "--n", "16"])
    # THEN the best bound is still reported with the solver exit code
    assert code == 3
    assert payload["gap"] == pytest.approx(0.1)


def test_solver_failure(capsys, serial, monkeypatch):
    def failing_suite(name, seed=0, sampler=None):
        raise ScanRangeExhausted("tail bound below lambda0")
    monkeypatch.setattr(cli, "run_suite", failing_suite)

    code = cli.main(["verify", "--suite", "mane"])
    captured = capsys.readouterr()
    assert code == 3
    assert captured.out == ""
    assert "solver failure" in captured.err


def test_verify_failure(capsys, serial, monkeypatch, tmp_path):
    def fake_suite(name, seed=0, sampler=None):
        return [Criterion("1", 0.5, 0.5, 0.02, True),
                Criterion("2.a=0.2", 0.39, 0.5, 1e-3, False)]
    monkeypatch.setattr(cli, "run_suite", fake_suite)

    report = tmp_path / "verify.json"
    code, payload = run(capsys, ["verify", "--suite", "closedform", "--out", str(report)])
    assert code == 1
    assert payload["failed"] == ["2.a=0.2"]
    assert json.loads(report.read_text())["passed"] is False


def test_no_command(capsys):
    assert cli.main([]) == 2
