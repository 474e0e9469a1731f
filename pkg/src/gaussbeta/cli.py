"""Command-line interface.

Exit codes: 0 on success, 2 for invalid input (bad flags, infeasible
configurations, out-of-domain values), 1 for runtime failures.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys

import numpy as np

from gaussbeta import constants, geometry, harness
from gaussbeta.errors import DomainError, HypothesisViolationError, InfeasibleConfigurationError
from gaussbeta.interpolation import build, evaluate
from gaussbeta.mn_criteria import ProblemConfig, advise, closed_form_minimizer, mn_curve

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_INVALID = 2

log = logging.getLogger("gaussbeta")

# flag dest -> type, for values coming from a --config document
_KEYS = {
    "n": int,
    "b0": float,
    "delta": float,
    "sigma": float,
    "beta": float,
    "space": str,
    "criterion": str,
    "beta_min": float,
    "beta_max": float,
    "count": int,
    "degree": int,
    "out": str,
    "nodes": str,
    "points": str,
    "vertices": list,
}

_DEFAULTS = {"n": 1, "b0": 1.0, "sigma": 1.0, "space": "B", "criterion": "scattered", "count": 101}


class UsageError(Exception):
    pass


def fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


def _write_document(items, stream):
    for key, value in items:
        stream.write(f"{key} = {fmt(value)}\n")


def _add_common(p, *names):
    flags = {
        "n": dict(type=int, help="dimension"),
        "b0": dict(type=float, help="cube side / simplex scale"),
        "delta": dict(type=float, help="density parameter"),
        "sigma": dict(type=float, help="function-space parameter"),
        "beta": dict(type=float, help="shape parameter"),
        "space": dict(choices=["B", "G"], help="B = band-limited, G = G_sigma"),
        "criterion": dict(choices=["scattered", "evenly-spaced"]),
        "beta-min": dict(type=float),
        "beta-max": dict(type=float),
        "count": dict(type=int, help="number of beta samples"),
        "degree": dict(type=int, help="simplex lattice degree"),
        "out": dict(metavar="PATH", help="output file (default: stdout)"),
        "nodes": dict(metavar="PATH", help="CSV of nodes x1..xn,y"),
        "points": dict(metavar="PATH", help="CSV of evaluation points x1..xn"),
    }
    for name in names:
        p.add_argument(f"--{name}", default=None, **flags[name])
    p.add_argument("--config", metavar="PATH", help="JSON document of option values; flags win")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaussbeta", description="Optimal Gaussian shape parameter from explicit error bounds."
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="print the bound constants for (n, b0, beta)")
    _add_common(p, "n", "b0", "beta")

    problem = ("n", "b0", "delta", "sigma", "space", "criterion")
    p = sub.add_parser("advise", help="optimal beta for a configuration")
    _add_common(p, *problem)

    p = sub.add_parser("curve", help="write the MN curve as CSV")
    _add_common(p, *problem, "beta-min", "beta-max", "count", "out")

    p = sub.add_parser("nodes", help="evenly spaced simplex nodes as CSV")
    _add_common(p, "n", "b0", "degree", "out")

    p = sub.add_parser("interp", help="interpolate node data and evaluate at points")
    _add_common(p, "beta", "nodes", "points", "out")

    p = sub.add_parser("experiment", help="beta sweep on the 1D sinc target")
    _add_common(p, *problem, "beta-min", "beta-max", "count", "out")
    return parser


def _resolve(args) -> dict:
    opts = {}
    if args.config:
        try:
            with open(args.config) as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(doc, dict):
            raise UsageError("config document must be an object")
        for key, value in doc.items():
            key = key.replace("-", "_")
            if key not in _KEYS:
                raise UsageError(f"unknown config key {key!r}")
            try:
                opts[key] = _KEYS[key](value)
            except (TypeError, ValueError) as exc:
                raise UsageError(f"bad value for {key}: {value!r}") from exc
    for key, value in vars(args).items():
        if key in _KEYS and value is not None:
            opts[key] = value
    return opts


def _get(opts, key):
    if key in opts:
        return opts[key]
    if key in _DEFAULTS:
        return _DEFAULTS[key]
    raise UsageError(f"missing required option --{key.replace('_', '-')}")


def _problem(opts) -> ProblemConfig:
    return ProblemConfig(
        n=_get(opts, "n"),
        b0=_get(opts, "b0"),
        delta=_get(opts, "delta"),
        sigma=_get(opts, "sigma"),
        space=_get(opts, "space"),
        criterion=_get(opts, "criterion"),
    )


def _beta_range(opts, config):
    if "beta_min" in opts and "beta_max" in opts:
        return opts["beta_min"], opts["beta_max"]
    star = closed_form_minimizer(config)
    return opts.get("beta_min", star * 1e-4), opts.get("beta_max", star * 1e4)


def _open_out(opts):
    path = opts.get("out")
    if path is None:
        return sys.stdout, False
    try:
        return open(path, "w", newline=""), True
    except OSError as exc:
        raise OSError(f"cannot open {path} for writing: {exc}") from exc


def _read_csv(path):
    try:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise DomainError(f"{path} is empty")
    header, body = rows[0], rows[1:]
    try:
        data = np.array([[float(v) for v in row] for row in body if row], dtype=float)
    except ValueError as exc:
        raise DomainError(f"{path}: non-numeric entry ({exc})") from exc
    return header, data.reshape(-1, len(header))


def cmd_constants(opts, out):
    consts = constants.bound_constants(_get(opts, "n"), _get(opts, "b0"), _get(opts, "beta"))
    _write_document(consts.as_dict().items(), out)


def cmd_advise(opts, out):
    result = advise(_problem(opts))
    _write_document(
        [
            ("beta_star", result.beta_star),
            ("beta_unconstrained", result.beta_unconstrained),
            ("log_beta0", result.log_beta0),
            ("clamped", result.clamped),
            ("log_mn_at_star", result.log_mn_at_star),
            ("log_beta_star", result.log_beta_star),
        ],
        out,
    )


def cmd_curve(opts, out):
    config = _problem(opts)
    config.check_feasible()
    lo, hi = _beta_range(opts, config)
    curve = mn_curve(config, lo, hi, _get(opts, "count"))
    stream, close = _open_out(opts)
    try:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["beta", "log_mn"])
        for b, v in curve.samples:
            writer.writerow([fmt(b), fmt(v)])
    finally:
        if close:
            stream.close()


def cmd_nodes(opts, out):
    if "vertices" in opts:
        simplex = geometry.Simplex(np.asarray(opts["vertices"], dtype=float))
    else:
        simplex = geometry.Simplex.standard(_get(opts, "n"), _get(opts, "b0"))
    nodes = geometry.evenly_spaced_nodes(simplex, _get(opts, "degree"))
    stream, close = _open_out(opts)
    try:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow([f"x{i + 1}" for i in range(simplex.n)])
        for point in nodes.cartesian:
            writer.writerow([fmt(c) for c in point])
    finally:
        if close:
            stream.close()


def cmd_interp(opts, out):
    header, data = _read_csv(_get(opts, "nodes"))
    if len(header) < 2:
        raise DomainError("node CSV needs coordinate columns and a value column")
    interp, report = build(data[:, :-1], data[:, -1], _get(opts, "beta"))
    log.info("condition estimate %.3g, residual %.3g (%s)", report.condition_estimate,
             report.max_node_residual, report.method)
    p_header, points = _read_csv(_get(opts, "points"))
    if points.shape[1] != interp.n:
        raise DomainError(f"points have dimension {points.shape[1]}, nodes have {interp.n}")
    values = evaluate(interp, points)
    stream, close = _open_out(opts)
    try:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(list(p_header) + ["s"])
        for point, value in zip(points, np.atleast_1d(values)):
            writer.writerow([fmt(c) for c in point] + [fmt(value)])
    finally:
        if close:
            stream.close()


def cmd_experiment(opts, out):
    config = _problem(opts)
    config.check_feasible()
    lo, hi = _beta_range(opts, config)
    betas = np.geomspace(lo, hi, _get(opts, "count"))
    layout = (
        harness.NodeLayout.EQUISPACED_GRID
        if config.criterion.value == "scattered"
        else harness.NodeLayout.SIMPLEX_EVEN
    )
    report = harness.beta_sweep(config, harness.sinc_band_limited(config.sigma), layout, betas)
    path = opts.get("out")
    if path is None:
        raise UsageError("experiment needs --out PATH")
    harness.emit_csv(report, path)
    out.write(f"argmin_empirical = {fmt(report.argmin_empirical)}\n")
    out.write(f"argmin_mn = {fmt(report.argmin_mn)}\n")


COMMANDS = {
    "constants": cmd_constants,
    "advise": cmd_advise,
    "curve": cmd_curve,
    "nodes": cmd_nodes,
    "interp": cmd_interp,
    "experiment": cmd_experiment,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        opts = _resolve(args)
        COMMANDS[args.command](opts, sys.stdout)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (InfeasibleConfigurationError, HypothesisViolationError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except Exception as exc:  # noqa: BLE001
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
