import argparse
from magspec.experiments import Experiment, run_curve, CURVE_FAMILIES
from magspec.presets import get_default_args, family
from magspec.samplers import make_sampler
from magspec.utils.io import write_csv
from magspec.utils.plots import plot_curve
from magspec.initializer import get_logger, set_num_workers
import logging
import os


def main():
    parser = argparse.ArgumentParser(
        description="Record a ground state energy sweep over the field strength.")
    parser.add_argument("family", choices=CURVE_FAMILIES,
                        help="Name of the curve family")
    parser.add_argument("--B_min", type=float, default=0.0)
    parser.add_argument("--B_max", type=float, default=3.0)
    parser.add_argument("--step", type=float, default=1 / 64)
    parser.add_argument("--spacing", type=float, default=0.02,
                        help="Grid spacing of the 1D member solves")
    parser.add_argument("--seed", type=int, default=0,
                        help="Random seed")
    parser.add_argument("--num_workers", type=int, default=1,
                        help="Number of workers of the sweep")
    parser.add_argument("--exp_info", default="default experiment",
                        help="One line descriptions of the experiment. \
                            Experiments' results are saved in 'runs/[exp_info]/[family]/'")

    args = parser.parse_args()

    # initialization
    set_num_workers(args.num_workers)
    logger = get_logger()
    logger.setLevel(logging.DEBUG)
    sampler = make_sampler(args.num_workers)

    # set args_dict
    args_dict = get_default_args(family)
    args_dict.update(vars(args))

    def _curve():
        return run_curve(args.family, args.B_min, args.B_max, args.step,
                         sampler=sampler, spacing=args.spacing)

    experiment = Experiment(
        _curve,
        name="curve",
        family=args.family,
        args_dict=args_dict,
        seed=args.seed,
        exp_info=args.exp_info,
    )
    log_dir = experiment.writer.log_dir
    write_csv(experiment.result.to_frame(), os.path.join(log_dir, "curve.csv"))
    plot_curve(experiment.result, os.path.join(log_dir, "curve.svg"))


if __name__ == "__main__":
    main()
