import csv
import os
import subprocess
import torch
import numpy as np
from abc import ABC, abstractmethod
from datetime import datetime
from torch.utils.tensorboard import SummaryWriter


class Writer(ABC):
    """
    Scalar sink of numeric sweeps.

    Three step counters are tracked: sweep_steps (parameter samples of a
    curve), solves (eigenvalue solves) and iterations (minimax or outer
    search iterations).
    """
    log_dir = "runs"

    @abstractmethod
    def add_scalar(self, name, value, step="sweep_steps",
                   step_value=None, save_csv=False):
        pass

    @abstractmethod
    def add_text(self, name, text, step="sweep_steps"):
        pass

    def _get_step_value(self, _type):
        if type(_type) is not str:
            raise ValueError("step must be str")
        if _type == "sweep_steps":
            return self.sweep_steps
        if _type == "solves":
            return self.solves
        if _type == "iterations":
            return self.iterations
        return _type


class DummyWriter(Writer):
    def __init__(self):
        self.sweep_steps = 0
        self.solves = 0
        self.iterations = 0

    def add_scalar(self, name, value, step="sweep_steps",
                   step_value=None, save_csv=False):
        pass

    def add_text(self, name, text, step="sweep_steps"):
        pass


class ExperimentWriter(SummaryWriter, Writer):
    """
    Tensorboard writer of one experiment run.

    Runs are stored in runs/<exp_info>/<family>/<name>_<commit>_<time>.

    Args:
        name (str): name of the job, e.g. "curve"
        family (str): problem family or geometry of the run
        exp_info (str): top-level grouping directory
    """

    def __init__(self, name, family, exp_info="default_experiments"):
        try:
            os.mkdir("runs")
        except FileExistsError:
            pass
        self.family = family

        current_time = str(datetime.now())
        self.log_dir = os.path.join(
            "runs", exp_info, family,
            ("%s %s %s" % (name, COMMIT_HASH, current_time))
        )
        self.log_dir = self.log_dir.replace(" ", "_").replace(":", "-")
        os.makedirs(self.log_dir)

        self.sweep_steps = 0
        self.solves = 0
        self.iterations = 0
        super().__init__(log_dir=self.log_dir)

    def add_scalar(self, name, value, step="sweep_steps",
                   step_value=None, save_csv=False):
        if isinstance(value, torch.Tensor):
            value = value.cpu().detach().item()
        if isinstance(value, np.ndarray):
            value = value.item()

        step_value = self._get_step_value(
            step) if step_value is None else step_value
        value_name = self.family + "/" + name + "/" + step
        super().add_scalar(value_name, value, step_value)

        if save_csv:
            with open(os.path.join(self.log_dir, name + ".csv"), "a") as csvfile:
                csv.writer(csvfile).writerow(
                    [repr(float(step_value)), repr(float(value))])

    def add_text(self, name, text, step="sweep_steps"):
        name = self.family + "/" + name
        super().add_text(name, text, self._get_step_value(step))


def get_commit_hash():
    try:
        result = subprocess.run(
            ["git", "rev-parse", "--short", "HEAD"],
            stdout=subprocess.PIPE,
            stderr=subprocess.DEVNULL,
            check=False
        )
    except OSError:
        # no git executable
        return ""
    return result.stdout.decode("utf-8").rstrip()


COMMIT_HASH = get_commit_hash()
