from magspec.utils.writer import ExperimentWriter
from magspec.initializer import get_logger, set_writer, set_logger, set_seed
import os
import logging
import json
import git
import warnings


class Experiment:
    """
    Recorded run of a numeric job.

    Seeds the process, opens a tensorboard run directory with the
    parameters and the git diff, mirrors the logger to logger.log and runs
    the job with the writer installed.

    Args:
        job_fn (callable): () -> result, e.g. a curve sweep
        name (str): job name, defaults to job_fn's name
        family (str): problem family, the second level of the run directory
        args_dict (dict): parameters written to args.json
        exp_info (str): top-level grouping directory
        seed (int): seed of numpy and torch
    """

    def __init__(
            self,
            job_fn,
            name=None,
            family="default",
            args_dict={},
            exp_info="default_experiments",
            seed=0,
    ):
        # set_seed
        set_seed(seed)

        # set writer
        if name is None:
            name = job_fn.__name__.lstrip("_").replace("_", "-")
        writer = self._make_writer(name, family, exp_info)
        message = "\n# Experiment: " + exp_info
        message += "  \n# Parameters:  \n"
        message += json.dumps(args_dict, indent=4,
                              sort_keys=True).replace("\n", "  \n")

        # write git diff
        try:
            repo = git.Repo('./')
            t = repo.head.commit.tree
            diff = repo.git.diff(t).replace("\n", "  \n")
            message += "  \n# Git diff:  \n" + diff
        except git.InvalidGitRepositoryError:
            warnings.warn(
                "Current repository doesn't have .git. git diff is not recorded.")

        writer.add_text("exp_summary", message)
        set_writer(writer)
        self.writer = writer

        # set logger
        logger = get_logger()
        handler = logging.FileHandler(
            os.path.join(writer.log_dir, "logger.log"))
        fmt = logging.Formatter('%(levelname)s : %(asctime)s : %(message)s')
        handler.setFormatter(fmt)
        logger.addHandler(handler)
        set_logger(logger)

        # save args
        with open(os.path.join(writer.log_dir, "args.json"), mode="w") as f:
            json.dump(args_dict, f)

        try:
            self.result = job_fn()
        finally:
            logger.removeHandler(handler)
            handler.close()
            writer.flush()

    def _make_writer(self, name, family, exp_info):
        return ExperimentWriter(name=name,
                                family=family,
                                exp_info=exp_info)
