import json
import os
import pytest
from magspec.experiments import Experiment
from magspec.initializer import get_writer, get_logger


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    yield tmp_path


def test_records_run(workdir):
    def _job():
        writer = get_writer()
        for i in range(3):
            writer.add_scalar("lambda0_numeric", 0.1 * i, save_csv=True)
            writer.sweep_steps += 1
        get_logger().warning("sweep done")
        return "finished"

    experiment = Experiment(_job, family="nil", args_dict={"spacing": 0.02},
                            exp_info="test_exp")

    # GIVEN a job run inside an experiment
    # THEN its result is kept and the run directory has the records
    assert experiment.result == "finished"
    log_dir = experiment.writer.log_dir
    assert log_dir.startswith(os.path.join("runs", "test_exp", "nil", "job"))
    with open(os.path.join(log_dir, "args.json")) as f:
        assert json.load(f) == {"spacing": 0.02}
    with open(os.path.join(log_dir, "logger.log")) as f:
        assert "sweep done" in f.read()
    with open(os.path.join(log_dir, "lambda0_numeric.csv")) as f:
        assert len(f.readlines()) == 3


def test_handler_removed_on_failure(workdir):
    handlers = list(get_logger().handlers)

    def _job():
        raise RuntimeError("solver failed")

    with pytest.raises(RuntimeError):
        Experiment(_job, name="failing", exp_info="test_exp")
    assert get_logger().handlers == handlers
