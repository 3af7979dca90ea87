from pathlib import Path
from tensorboard.backend.event_processing import event_accumulator
from collections import defaultdict
import numpy as np
import matplotlib.pyplot as plt
import pandas as pd
import seaborn as sns
import matplotlib
matplotlib.use("Agg")


def plot_curve(curve, path, title=None):
    """
    Render a CurveData to SVG: point-spectrum branches as polylines, the
    continuous spectrum shaded above its threshold and lambda0 on top.
    The curve itself is only read.
    """
    sns.set(style="darkgrid")
    colors = sns.color_palette()
    fig, ax = plt.subplots(figsize=(7, 4.5))

    finite = curve.thresholds[np.isfinite(curve.thresholds)]
    top = max(np.nanmax(curve.numeric), np.nanmax(finite) if len(finite) else 0.0)
    top = top + 0.25 * max(1.0, abs(top))
    ax.fill_between(curve.B, curve.thresholds, top, color=colors[0], alpha=0.25,
                    linewidth=0, label="continuous spectrum")
    for name in sorted(curve.branches):
        ax.plot(curve.B, curve.branches[name], color=colors[1], linewidth=1.0)
    if curve.branches:
        # one legend entry for all branches
        ax.plot([], [], color=colors[1], linewidth=1.0, label="point spectrum")
    ax.plot(curve.B, curve.closed_form, color=colors[2], linewidth=2.0,
            label="lambda0 closed form")
    ax.plot(curve.B, curve.numeric, color=colors[3], linestyle="none", marker=".",
            markersize=3, label="lambda0 numeric")

    ax.set_xlim(curve.B[0], curve.B[-1])
    ax.set_ylim(min(0.0, np.nanmin(curve.numeric)), top)
    ax.set_xlabel("B")
    ax.set_ylabel("energy")
    ax.set_title(curve.family if title is None else title)
    ax.legend(loc="upper left")
    fig.tight_layout()
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(str(path), format="svg")
    plt.close(fig)


def get_results(exp_path, tag="lambda0_numeric"):
    """Scalar sweeps of every run under runs/<exp_info>, keyed by family and run."""

    def read_scalars(resultpath):
        events_files = sorted(resultpath.rglob("events*"))
        if not events_files:
            return {}
        eventspath = events_files[-1]
        event_acc = event_accumulator.EventAccumulator(
            str(eventspath), size_guidance={'scalars': 0})
        event_acc.Reload()
        frames = {}
        for name in event_acc.Tags()['scalars']:
            if name.split("/")[-2] != tag:
                continue
            events = event_acc.Scalars(name)
            frames[name.split("/")[-1]] = pd.DataFrame(
                data={"step": [event.step for event in events],
                      tag: [event.value for event in events]})
        return frames

    results = defaultdict(dict)
    for family in Path(exp_path).glob("[!.]*"):
        if not family.is_dir():
            continue
        for run in family.glob("[!.]*"):
            frames = read_scalars(run)
            if not frames:
                print(str(run) + " doesn't have data.")
                continue
            results[family.name][run.name.split("_")[0]] = frames
    return results


def plot(exp_path, tag="lambda0_numeric", step="sweep_steps"):
    exp_path = Path(exp_path)
    results = get_results(exp_path, tag)
    if not results:
        raise ValueError("no runs with scalar {!r} under {}".format(tag, exp_path))

    num_cols = len(results)
    fig, axes = plt.subplots(1, num_cols, figsize=(num_cols * 6, 4))
    if num_cols == 1:
        axes = [axes]
    sns.set(style="darkgrid")
    colors = sns.color_palette()

    for ax, family in zip(axes, sorted(results)):
        for i, run in enumerate(sorted(results[family])):
            df = results[family][run].get(step)
            if df is None:
                continue
            sns.lineplot(x="step", y=tag, data=df, ax=ax, label=run,
                         color=colors[i % len(colors)])
        ax.set_title(family)

    fig.tight_layout()
    fig.savefig(str(exp_path / "result.svg"), format="svg")
    plt.close(fig)
