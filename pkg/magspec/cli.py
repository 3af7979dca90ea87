"""
Command-line surface of magspec.

    magspec spectrum --geom torus --n 64 --alpha const:0.7 --k 5
    magspec bands --geom circle --a 0.3333 --cover 3
    magspec curve --family sphere_bundle_h --B-max 3 --out curve.csv --svg curve.svg
    magspec mane --geom torus --alpha "0.7+sin" --certificate-out f.csv
    magspec reference --family maass --B 2
    magspec verify --suite closedform

Results go to stdout as JSON, tables to --out. Exit codes: 0 ok, 1 a
verify criterion failed, 2 configuration error, 3 solver failure.
"""
import argparse
import contextlib
import json
import sys
import numpy as np
import pandas as pd
from magspec import closedform
from magspec.assembly import assemble
from magspec.bloch import CoverSpec, band_structure
from magspec.eigensolve import lowest_eigenvalues, solve_effective_1d
from magspec.exceptions import MagspecError, ConfigError, NotConverged
from magspec.experiments import Experiment, run_curve, run_suite, CURVE_FAMILIES, SUITES
from magspec.initializer import (enable_debug_mode,
                                 set_seed,
                                 set_convention,
                                 get_convention,
                                 set_num_workers,
                                 get_num_workers)
from magspec.mane import critical_value, strict_critical_value, mane_reference, CATALOGUE
from magspec.presets import PROBLEMS, get_default_args
from magspec import presets
from magspec.reduction import minimize_over_momenta
from magspec.samplers import make_sampler
from magspec.utils.io import dumps_json, write_csv, write_json

GRID_GEOMETRIES = ("torus", "circle", "plane")
FAMILY_GEOMETRIES = ("maass", "sphere_bundle_h", "sl2_universal", "nil", "sol")
REFERENCE_FAMILIES = ("maass", "sphere_bundle_h", "sl2_universal", "nil", "nil_abelian",
                      "landau", "circle_flux", "kepler", "bohr", "sol", "mane")

# flags shared by every command, never read from --config
_GLOBAL = ("command", "config", "debug", "threads", "handler", "argv", "preset_options")


def _preset_name(args):
    geom = getattr(args, "geom", None)
    if geom in GRID_GEOMETRIES or geom == "kepler":
        return geom
    return "family"


def load_config(sub, args):
    """
    Overlay a JSON config on the parsed flags.

    Keys must be flag names of the command or keyword defaults of the
    preset factory it uses; explicit flags win over the file. Preset keys
    end up in args.preset_options.
    """
    args.preset_options = {}
    if args.config is None:
        return args
    try:
        with open(args.config) as f:
            config = json.load(f)
    except (OSError, json.JSONDecodeError) as err:
        raise ConfigError("cannot read config {}: {}".format(args.config, err))
    if not isinstance(config, dict):
        raise ConfigError("config must be a JSON object, got {}".format(type(config).__name__))

    explicit = set(sys.argv[1:]) if args.argv is None else set(args.argv)
    preset_keys = get_default_args(PROBLEMS[_preset_name(args)])
    for key, value in config.items():
        dest = key.replace("-", "_")
        if dest in _GLOBAL:
            raise ConfigError("{!r} cannot be set from a config file".format(key))
        if hasattr(args, dest):
            flag = "--" + dest.replace("_", "-")
            if flag not in explicit and "--" + dest not in explicit:
                setattr(args, dest, value if sub.get_default(dest) is None
                        else type(sub.get_default(dest))(value))
        elif dest in preset_keys:
            args.preset_options[dest] = value
        else:
            raise ConfigError("unknown config key {!r} for {}".format(key, args.command))
    return args


def validate(args):
    def positive(name, strict=True):
        value = getattr(args, name, None)
        if value is not None and (value <= 0 if strict else value < 0):
            raise ConfigError("--{} must be positive, got {}".format(name.replace("_", "-"), value))

    for name in ("n", "k", "step", "tol", "samples", "dimension"):
        positive(name)
    positive("cover", strict=False)
    if getattr(args, "n", None) is not None and args.n < 4:
        raise ConfigError("--n must be at least 4, got {}".format(args.n))
    if args.command == "curve" and args.B_max < args.B_min:
        raise ConfigError("--B-max {} below --B-min {}".format(args.B_max, args.B_min))
    if args.command == "mane" and args.geom == "plane":
        raise ConfigError("the critical value needs a compact grid")
    for name, value in vars(args).items():
        if isinstance(value, float) and not np.isfinite(value):
            raise ConfigError("--{} must be finite".format(name.replace("_", "-")))
    return args


def _grid_problem(args):
    options = dict(args.preset_options)
    if args.geom == "torus":
        options.setdefault("n", args.n)
        options.setdefault("dimension", args.dimension)
        return presets.torus(**options)(alpha=args.alpha, V=args.V)
    if args.geom == "circle":
        options.setdefault("n", args.n)
        return presets.circle(**options)(a=args.a, V=args.V)
    return presets.plane(**options)(B=args.B)


def _family_state(args, sampler):
    B = (args.Bx, args.By) if args.geom == "sol" else args.B
    family = presets.family(**args.preset_options)(args.geom, B)
    return minimize_over_momenta(family, sampler=sampler)


def cmd_spectrum(args, sampler):
    convention = get_convention()
    payload = {"geom": args.geom, "convention": convention}
    if args.geom in GRID_GEOMETRIES:
        grid, alpha, V = _grid_problem(args)
        op = assemble(grid, alpha, V, convention=convention)
        if args.dump_matrix:
            op.dump(args.dump_matrix)
        result = lowest_eigenvalues(op, k=args.k)
        payload.update(result.to_dict())
    elif args.geom == "kepler":
        eff = presets.kepler(**args.preset_options)(B=args.B, m=args.m)
        result = solve_effective_1d(eff, k=args.k)
        payload.update(result.to_dict())
        payload["eigenvalues"] = [closedform.convert(v, "half", convention)
                                  for v in result.eigenvalues]
    else:
        state = _family_state(args, sampler)
        payload.update({"eigenvalues": [closedform.convert(state.value, "half", convention)],
                        "residuals": [], "method": "reduced_family",
                        "argmin": state.argmin, "certificate": state.certificate})
    if args.out:
        write_csv(pd.DataFrame({"index": np.arange(len(payload["eigenvalues"])),
                                "eigenvalue": payload["eigenvalues"]}), args.out)
    return payload, 0


def cmd_bands(args, sampler):
    if args.geom not in ("torus", "circle"):
        raise ConfigError("bands needs a periodic grid, got {!r}".format(args.geom))
    grid, alpha, V = _grid_problem(args)
    if args.cover == 0:
        spec = CoverSpec.full(grid)
    else:
        spec = CoverSpec.finite(grid, [args.cover] * len(grid.periodic_axes))
    bands = band_structure(grid, alpha, V, spec, samples_per_axis=args.samples,
                           k=args.k, sampler=sampler)
    if args.out:
        write_csv(bands.to_frame(), args.out)
    return dict(bands.to_dict(), cover=spec.to_dict()), 0


def cmd_curve(args, sampler):
    options = dict(args.preset_options)

    def _curve():
        return run_curve(args.family, args.B_min, args.B_max, args.step,
                         sampler=sampler, **options)

    if args.record:
        args_dict = get_default_args(presets.family)
        args_dict.update(options)
        args_dict.update({k: v for k, v in vars(args).items()
                          if k not in ("handler", "argv", "preset_options")})
        curve = Experiment(_curve, name="curve", family=args.family,
                           args_dict=args_dict, exp_info=args.exp_info,
                           seed=args.seed).result
    else:
        curve = _curve()
    if args.out:
        write_csv(curve.to_frame(), args.out)
    if args.branches_out:
        write_csv(curve.branches_frame(), args.branches_out)
    if args.svg:
        from magspec.utils.plots import plot_curve
        plot_curve(curve, args.svg)
    return curve.to_dict(), 0


def cmd_mane(args, sampler):
    if args.geom not in ("torus", "circle"):
        raise ConfigError("mane needs a compact grid, got {!r}".format(args.geom))
    grid, alpha, V = _grid_problem(args)
    code = 0
    try:
        result = critical_value(grid, alpha, V, tol=args.tol)
    except NotConverged as err:
        result, code = err.result, 3
    payload = result.to_dict()
    if args.certificate_out and result.certificate_f is not None:
        coordinates = grid.coordinates().reshape(grid.dimension, -1)
        frame = pd.DataFrame({"x{}".format(axis): coordinates[axis]
                              for axis in range(grid.dimension)})
        frame["f"] = result.certificate_f.values.ravel()
        write_csv(frame, args.certificate_out)
    if args.strict:
        payload["strict"] = strict_critical_value(grid, alpha, V, tol=args.tol,
                                                  sampler=sampler).to_dict()
    return payload, code


def cmd_reference(args, sampler):
    name = args.family
    if name == "mane":
        return {"kind": args.kind, "B": args.B, "value": mane_reference(args.kind, args.B)}, 0
    if name == "sol":
        return closedform.sol_facts(args.Bx, args.By).to_dict(), 0
    if name == "sl2_universal":
        value = closedform.convert(closedform.sl2_universal_lambda0(args.B), "half",
                                   get_convention())
        return {"name": name, "arguments": {"B": args.B}, "points": [], "threshold": value,
                "lambda0": value, "argmin": closedform.sl2_universal_argmin(args.B),
                "normalization": get_convention()}, 0
    if name == "nil_abelian":
        spectrum = closedform.nil(args.B, which="abelian")
    elif name == "nil":
        spectrum = closedform.nil(args.B)
    elif name == "landau":
        spectrum = closedform.landau([args.B])
    elif name == "circle_flux":
        spectrum = closedform.circle_flux(args.a)
    elif name == "kepler":
        spectrum = closedform.kepler_spectrum(args.B, args.m)
    elif name == "bohr":
        spectrum = closedform.bohr_spectrum()
    else:
        spectrum = getattr(closedform, name)(args.B)
    spectrum = spectrum.converted(get_convention())
    return spectrum.to_dict(args.cap), 0


def cmd_verify(args, sampler):
    records = run_suite(args.suite, seed=args.seed, sampler=sampler)
    failed = [r.id for r in records if not r.passed]
    payload = {"suite": args.suite, "seed": args.seed, "passed": not failed,
               "failed": failed, "criteria": [r.to_dict() for r in records]}
    if args.out:
        write_json(payload, args.out)
    return payload, 1 if failed else 0


def _add_grid_flags(parser, geometries, default):
    parser.add_argument("--geom", choices=geometries, default=default)
    parser.add_argument("--n", type=int, default=64, help="nodes per axis")
    parser.add_argument("--dimension", type=int, default=1, help="torus dimension")
    parser.add_argument("--alpha", type=str, default="zero",
                        help="zero | const:c1,.. | flux:a | c+sin | landau:l1,..")
    parser.add_argument("--V", type=str, default="zero", help="zero | const:c | cos | amp*cos")
    parser.add_argument("--a", type=float, default=0.0, help="circle flux")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="magspec",
        description="Spectra of magnetic Schrodinger operators and Mane critical values.")
    parser.add_argument("--debug", action="store_true", help="enable debug checks")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker count, defaults to MAGSPEC_THREADS or the core count")
    subparsers = parser.add_subparsers(dest="command")
    parser.commands = subparsers.choices

    def add(name, handler, help):
        sub = subparsers.add_parser(name, help=help)
        sub.add_argument("--config", type=str, default=None, help="JSON config file")
        sub.add_argument("--seed", type=int, default=0)
        sub.add_argument("--convention", choices=("half", "double"), default="half")
        sub.set_defaults(handler=handler)
        return sub

    sub = add("spectrum", cmd_spectrum, "lowest eigenvalues of one operator")
    _add_grid_flags(sub, GRID_GEOMETRIES + ("kepler", ) + FAMILY_GEOMETRIES, "torus")
    sub.add_argument("--k", type=int, default=1, help="number of eigenvalues")
    sub.add_argument("--B", type=float, default=1.0, help="field strength")
    sub.add_argument("--m", type=int, default=1, help="kepler angular momentum")
    sub.add_argument("--Bx", type=float, default=1.0)
    sub.add_argument("--By", type=float, default=0.0)
    sub.add_argument("--out", type=str, default=None, help="CSV path")
    sub.add_argument("--dump-matrix", type=str, default=None, help="matrix-market path")

    sub = add("bands", cmd_bands, "band structure over a cover")
    _add_grid_flags(sub, ("circle", "torus"), "circle")
    sub.add_argument("--cover", type=int, default=0, help="fold per periodic axis, 0 for Z")
    sub.add_argument("--samples", type=int, default=64, help="characters per continuous axis")
    sub.add_argument("--k", type=int, default=4, help="bands")
    sub.add_argument("--out", type=str, default=None, help="CSV path")

    sub = add("curve", cmd_curve, "lambda0 as a function of B")
    sub.add_argument("--family", choices=CURVE_FAMILIES, default="sphere_bundle_h")
    sub.add_argument("--B-min", type=float, default=0.0)
    sub.add_argument("--B-max", type=float, default=3.0)
    sub.add_argument("--step", type=float, default=1 / 64)
    sub.add_argument("--out", type=str, default=None, help="CSV path")
    sub.add_argument("--branches-out", type=str, default=None, help="branch CSV path")
    sub.add_argument("--svg", type=str, default=None, help="SVG path")
    sub.add_argument("--record", action="store_true", help="record the run under runs/")
    sub.add_argument("--exp-info", type=str, default="default_experiments")

    sub = add("mane", cmd_mane, "Mane critical value on a compact grid")
    _add_grid_flags(sub, ("circle", "torus"), "torus")
    sub.set_defaults(n=256)
    sub.add_argument("--tol", type=float, default=1e-3)
    sub.add_argument("--strict", action="store_true", help="also minimize over cohomology")
    sub.add_argument("--certificate-out", type=str, default=None,
                     help="CSV path of the gauge function f at the nodes")

    sub = add("reference", cmd_reference, "closed-form spectra")
    sub.add_argument("--family", choices=REFERENCE_FAMILIES, default="maass")
    sub.add_argument("--B", type=float, default=1.0)
    sub.add_argument("--Bx", type=float, default=1.0)
    sub.add_argument("--By", type=float, default=0.0)
    sub.add_argument("--a", type=float, default=0.0)
    sub.add_argument("--m", type=int, default=1)
    sub.add_argument("--kind", choices=sorted(CATALOGUE), default="hyperbolic")
    sub.add_argument("--cap", type=float, default=None, help="energy cap of the points")

    sub = add("verify", cmd_verify, "acceptance criteria")
    sub.add_argument("--suite", choices=sorted(SUITES), default="all")
    sub.add_argument("--out", type=str, default=None, help="JSON report path")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    args.argv = argv

    try:
        # stdout carries the JSON result only
        with contextlib.redirect_stdout(sys.stderr):
            load_config(parser.commands[args.command], args)
            validate(args)
            if args.debug:
                enable_debug_mode()
            if args.threads is not None:
                set_num_workers(args.threads)
            set_convention(args.convention)
            set_seed(args.seed)
            sampler = make_sampler(get_num_workers())
            payload, code = args.handler(args, sampler)
    except ValueError as err:
        print("config error: {}".format(err), file=sys.stderr)
        return 2
    except (MagspecError, RuntimeError) as err:
        print("solver failure: {}".format(err), file=sys.stderr)
        return 3

    print(dumps_json(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
