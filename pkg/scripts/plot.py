import argparse
from magspec.utils.plots import plot


if __name__ == "__main__":
    parser = argparse.ArgumentParser(
        description="Plots the recorded sweeps of experiments.")
    parser.add_argument("dir",
                        help="Experiment directory. This is a directory of exp_info, not runs/")
    parser.add_argument("--tag", type=str, default="lambda0_numeric",
                        help="The recorded scalar, e.g. lambda0_numeric or abs_error")
    parser.add_argument("--step", type=str, default="sweep_steps",
                        help="The unit of x-axis. You can choose it from \
                            [sweep_steps, solves, iterations]")

    args = parser.parse_args()

    plot(args.dir, args.tag, args.step)
