"""Command-line front end.

Subcommands: potential (radial curves), energy (closed-form breakdown),
oracle (eigensolver cross-check), sweep (one varying parameter), table1
(reference-energy regeneration with deviations), figure (datasets behind
the named figures).  Output is CSV with a self-describing ``#`` comment
header, or JSON.  Exit codes: 0 success, 2 usage error, 3 numeric
failure, 4 I/O failure.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

import numpy as np

from .oracle import GroundStateError, RadialGrid, default_grid, overlap, solve_ground_state
from .perturbation import total_energy, wavefunction_eval
from .potential import (
    ModelParams,
    PoleProximityError,
    dressed_pair_eval,
    ecsc_eval,
    taylor_coefficients,
    v0_quadrature,
    veff_series_eval,
)
from .sweep import FIGURE_TAGS, SweepSpec, figure_dataset, run_sweep, table1_rows

__all__ = ["RunConfig", "UsageError", "parse_args", "run", "main"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_IO = 4

_SUBCOMMANDS = ("potential", "energy", "oracle", "sweep", "table1", "figure")
_PARAM_KEYS = ("z", "lambda_d", "alpha0", "field", "omega", "e0_amp")
_CONFIG_KEYS = _PARAM_KEYS + (
    "format", "output", "precision", "grid_rmin", "grid_rmax", "grid_points",
)


class UsageError(Exception):
    """Bad command line or config file; maps to exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    params: ModelParams | None
    output_format: str = "csv"
    output_path: str | None = None
    precision: int = 7
    grid: RadialGrid | None = None
    figure_tag: str | None = None
    sweep_vary: str | None = None
    sweep_values: tuple = ()
    sweep_outputs: frozenset = frozenset({"breakdown"})
    r_values: tuple = ()
    with_quadrature: bool = False
    quad_nodes: int = 64

    def __post_init__(self):
        if self.subcommand not in _SUBCOMMANDS:
            raise ValueError(f"unknown subcommand {self.subcommand!r}")
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"output_format must be csv or json, got {self.output_format!r}")
        if not 1 <= self.precision <= 17:
            raise ValueError(f"precision must be in [1, 17], got {self.precision}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_config_file(path):
    """key = value pairs, one per line, # comments; returns a dict."""
    values = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected 'key = value', got {raw.strip()!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown config key {key!r}")
        values[key] = value
    return values


def _build_parser():
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--config", metavar="PATH", help="key=value file seeding defaults")
    output.add_argument("--format", choices=("csv", "json"), default=None, dest="out_format")
    output.add_argument("--output", metavar="PATH", default=None, help="write here instead of stdout")
    output.add_argument("--precision", type=int, default=None, help="printed decimal places (1..17)")

    params = argparse.ArgumentParser(add_help=False)
    params.add_argument("--z", type=float, default=None, help="nuclear charge number")
    params.add_argument("--lambda-d", type=float, default=None, dest="lambda_d",
                        help="Debye screening length (a.u.)")
    params.add_argument("--alpha0", type=float, default=None, help="laser quiver amplitude (a.u.)")
    params.add_argument("--field", type=float, default=None, help="static field strength (a.u.)")
    params.add_argument("--omega", type=float, default=None,
                        help="laser angular frequency; with --e0-amp derives alpha0")
    params.add_argument("--e0-amp", type=float, default=None, dest="e0_amp",
                        help="laser field amplitude; with --omega derives alpha0")

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--grid-rmin", type=float, default=None, help="lower wall of the solver box")
    grid.add_argument("--grid-rmax", type=float, default=None, help="upper wall of the solver box")
    grid.add_argument("--grid-points", type=int, default=None, help="interior grid points")

    parser = _Parser(prog="laserplasma", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_pot = sub.add_parser("potential", parents=[params, output],
                           help="radial potential curves")
    p_pot.add_argument("--r-min", type=float, default=0.05)
    p_pot.add_argument("--r-max", type=float, default=10.0)
    p_pot.add_argument("--points", type=int, default=100)
    p_pot.add_argument("--log", action="store_true", help="log-spaced radii")
    p_pot.add_argument("--with-quadrature", action="store_true",
                       help="add the cycle-average column (needs r > alpha0)")
    p_pot.add_argument("--quad-nodes", type=int, default=64)

    sub.add_parser("energy", parents=[params, output],
                   help="closed-form energy breakdown")

    sub.add_parser("oracle", parents=[params, grid, output],
                   help="eigensolver cross-check of the closed forms")

    p_sweep = sub.add_parser("sweep", parents=[params, grid, output],
                             help="sweep one parameter")
    p_sweep.add_argument("--vary", choices=("field", "lambda-d", "alpha0"), required=True)
    p_sweep.add_argument("--values", default=None,
                         help="comma-separated list of values")
    p_sweep.add_argument("--start", type=float, default=None)
    p_sweep.add_argument("--stop", type=float, default=None)
    p_sweep.add_argument("--count", type=int, default=None)
    p_sweep.add_argument("--geometric", action="store_true", help="log-spaced range")
    p_sweep.add_argument("--with-oracle", action="store_true")
    p_sweep.add_argument("--with-overlap", action="store_true")

    p_table = sub.add_parser("table1", parents=[output],
                             help="regenerate the reference energy table")
    p_table.add_argument("--z", type=float, default=None)
    p_table.add_argument("--alpha0", type=float, default=None)

    p_fig = sub.add_parser("figure", parents=[output], help="figure datasets")
    p_fig.add_argument("--which", choices=FIGURE_TAGS, required=True)

    return parser


def _pick(cli_value, config_values, key, default, convert=float):
    if cli_value is not None:
        return cli_value
    if key in config_values:
        raw = config_values[key]
        try:
            return convert(raw)
        except ValueError as exc:
            raise UsageError(f"config key {key}: cannot parse {raw!r}") from exc
    return default


def _model_params(ns, config_values, require_lambda):
    z = _pick(ns.z, config_values, "z", 1.0)
    lambda_d = _pick(ns.lambda_d, config_values, "lambda_d", None)
    alpha0 = _pick(ns.alpha0, config_values, "alpha0", None)
    field = _pick(ns.field, config_values, "field", 0.0)
    omega = _pick(ns.omega, config_values, "omega", None)
    e0_amp = _pick(ns.e0_amp, config_values, "e0_amp", None)
    if lambda_d is None:
        if not require_lambda:
            return None
        raise UsageError("missing required parameter lambda_d (--lambda-d)")
    if alpha0 is not None and (omega is not None or e0_amp is not None):
        raise UsageError(
            "conflicting laser specification: give either --alpha0 or the "
            "pair --omega/--e0-amp, not both"
        )
    if (omega is None) != (e0_amp is None):
        raise UsageError("--omega and --e0-amp must be given together")
    try:
        if omega is not None:
            return ModelParams.from_laser(omega, e0_amp, lambda_d=lambda_d, field=field, z=z)
        return ModelParams(lambda_d=lambda_d, alpha0=alpha0 or 0.0, field=field, z=z)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _grid_from(ns, config_values):
    rmin = _pick(getattr(ns, "grid_rmin", None), config_values, "grid_rmin", None)
    rmax = _pick(getattr(ns, "grid_rmax", None), config_values, "grid_rmax", None)
    npts = _pick(getattr(ns, "grid_points", None), config_values, "grid_points", None, int)
    if rmin is None and rmax is None and npts is None:
        return None
    try:
        return RadialGrid(
            0.0 if rmin is None else rmin,
            50.0 if rmax is None else rmax,
            8000 if npts is None else int(npts),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def parse_args(argv) -> RunConfig:
    """Parse argv into a validated RunConfig; raises UsageError on bad input."""
    ns = _build_parser().parse_args(argv)
    config_values = _read_config_file(ns.config) if getattr(ns, "config", None) else {}

    out_format = _pick(ns.out_format, config_values, "format", "csv", str)
    output_path = _pick(ns.output, config_values, "output", None, str)
    precision = _pick(ns.precision, config_values, "precision", 7, int)

    common = dict(output_format=out_format, output_path=output_path, precision=precision)
    try:
        if ns.subcommand == "potential":
            params = _model_params(ns, config_values, require_lambda=True)
            if ns.points < 2:
                raise UsageError("--points must be >= 2")
            if not 0 < ns.r_min < ns.r_max:
                raise UsageError("need 0 < --r-min < --r-max")
            space = np.geomspace if ns.log else np.linspace
            radii = tuple(float(r) for r in space(ns.r_min, ns.r_max, ns.points))
            return RunConfig("potential", params, r_values=radii,
                             with_quadrature=ns.with_quadrature,
                             quad_nodes=ns.quad_nodes, **common)
        if ns.subcommand == "energy":
            return RunConfig("energy", _model_params(ns, config_values, True), **common)
        if ns.subcommand == "oracle":
            return RunConfig("oracle", _model_params(ns, config_values, True),
                             grid=_grid_from(ns, config_values), **common)
        if ns.subcommand == "sweep":
            params = _model_params(ns, config_values, require_lambda=True)
            vary = ns.vary.replace("-", "_")
            if ns.values is not None:
                if ns.start is not None or ns.stop is not None or ns.count is not None:
                    raise UsageError("give --values or --start/--stop/--count, not both")
                try:
                    values = tuple(float(v) for v in ns.values.split(","))
                except ValueError as exc:
                    raise UsageError(f"cannot parse --values: {exc}") from exc
            else:
                if None in (ns.start, ns.stop, ns.count):
                    raise UsageError("sweep needs --values or all of --start/--stop/--count")
                space = np.geomspace if ns.geometric else np.linspace
                values = tuple(float(v) for v in space(ns.start, ns.stop, ns.count))
            outputs = {"breakdown"}
            if ns.with_oracle or ns.with_overlap:
                outputs.add("oracle")
            if ns.with_overlap:
                outputs.add("overlap")
            return RunConfig("sweep", params, sweep_vary=vary, sweep_values=values,
                             sweep_outputs=frozenset(outputs),
                             grid=_grid_from(ns, config_values), **common)
        if ns.subcommand == "table1":
            z = _pick(ns.z, config_values, "z", 1.0)
            alpha0 = _pick(ns.alpha0, config_values, "alpha0", 1e-4)
            params = ModelParams(lambda_d=100.0, alpha0=alpha0, z=z)
            return RunConfig("table1", params, **common)
        if ns.subcommand == "figure":
            return RunConfig("figure", None, figure_tag=ns.which, **common)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    raise UsageError(f"unknown subcommand {ns.subcommand!r}")


def _fmt(value, precision):
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, float):
        # below the fixed-point resolution, switch to scientific notation so
        # small deviations stay distinguishable from zero
        if value != 0.0 and abs(value) < 10.0 ** (-precision):
            return f"{value:.{precision}e}"
        return f"{value:.{precision}f}"
    return str(value)


def _params_header(p: ModelParams | None):
    if p is None:
        return {}
    header = {"z": p.z, "lambda_d": p.lambda_d, "alpha0": p.alpha0, "field": p.field,
              "mu": p.mu, "hbar": p.hbar, "e_charge": p.e_charge}
    if p.omega is not None:
        header["omega"] = p.omega
        header["e0_amp"] = p.e0_amp
    return header


def _emit(config: RunConfig, header: dict, columns, rows, json_extra=None):
    """Write CSV (with # comment header) or JSON to the configured sink."""
    if config.output_format == "csv":
        buf = io.StringIO()
        buf.write(f"# laserplasma {config.subcommand}\n")
        for key, value in header.items():
            buf.write(f"# {key} = {value!r}\n" if isinstance(value, str)
                      else f"# {key} = {value:.17g}\n" if isinstance(value, float)
                      else f"# {key} = {value}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_fmt(v, config.precision) for v in row])
        text = buf.getvalue()
    else:
        payload = {"subcommand": config.subcommand, **header,
                   "columns": list(columns),
                   "rows": [list(row) for row in rows]}
        if json_extra:
            payload = {**json_extra, **payload}
        text = json.dumps(payload, indent=2) + "\n"
    if config.output_path is None:
        sys.stdout.write(text)
    else:
        with open(config.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_mapping(config: RunConfig, header: dict, mapping: dict):
    """Single-record output: one CSV row or a flat JSON object."""
    if config.output_format == "json":
        payload = {"subcommand": config.subcommand, "params": header, **mapping}
        text = json.dumps(payload, indent=2) + "\n"
        if config.output_path is None:
            sys.stdout.write(text)
        else:
            with open(config.output_path, "w", encoding="utf-8") as fh:
                fh.write(text)
    else:
        _emit(config, header, list(mapping.keys()), [tuple(mapping.values())])


def _run_potential(config: RunConfig):
    p = config.params
    coeffs = taylor_coefficients(p)
    columns = ["r", "screened", "dressed", "effective", "series"]
    if config.with_quadrature:
        columns.append("cycle_avg")
    rows = []
    for r in config.r_values:
        row = [r, ecsc_eval(r, p), dressed_pair_eval(r, p),
               dressed_pair_eval(r, p) + p.field * r, veff_series_eval(r, coeffs)]
        if config.with_quadrature:
            row.append(v0_quadrature(r, p, config.quad_nodes))
        rows.append(tuple(row))
    _emit(config, _params_header(p), columns, rows)
    return EXIT_OK


def _run_energy(config: RunConfig):
    breakdown = total_energy(config.params)
    _emit_mapping(config, _params_header(config.params), {
        "e0": breakdown.e0, "const_shift": breakdown.const_shift,
        "e1": breakdown.e1, "e2": breakdown.e2, "e3": breakdown.e3,
        "total": breakdown.total,
    })
    return EXIT_OK


def _run_oracle(config: RunConfig):
    p = config.params
    grid = config.grid if config.grid is not None else default_grid(p)
    breakdown = total_energy(p)
    coeffs = taylor_coefficients(p)
    result = solve_ground_state(lambda r: veff_series_eval(r, coeffs), grid, p)
    ov = overlap(result, lambda r: wavefunction_eval(r, p))
    if not result.converged:
        print(f"oracle did not converge: error estimate {result.error_estimate:.3e}",
              file=sys.stderr)
        return EXIT_NUMERIC
    _emit_mapping(config, _params_header(p), {
        "e0": breakdown.e0, "const_shift": breakdown.const_shift,
        "e1": breakdown.e1, "e2": breakdown.e2, "e3": breakdown.e3,
        "total": breakdown.total,
        "oracle_energy": result.energy,
        "deviation": breakdown.total - result.energy,
        "overlap": ov,
        "error_estimate": result.error_estimate,
    })
    return EXIT_OK


def _run_sweep(config: RunConfig):
    spec = SweepSpec(vary=config.sweep_vary, values=config.sweep_values,
                     fixed=config.params, outputs=config.sweep_outputs,
                     oracle_grid=config.grid)
    rows_out = []
    columns = [config.sweep_vary, "e0", "const_shift", "e1", "e2", "e3", "total"]
    with_oracle = "oracle" in spec.outputs
    with_overlap = "overlap" in spec.outputs
    if with_oracle:
        columns += ["oracle_energy", "deviation"]
    if with_overlap:
        columns.append("overlap")
    for row in run_sweep(spec):
        b = row.breakdown
        out = [row.value, b.e0, b.const_shift, b.e1, b.e2, b.e3, b.total]
        if with_oracle:
            out += [row.oracle_energy, row.deviation]
        if with_overlap:
            out.append(row.overlap)
        rows_out.append(tuple(out))
    _emit(config, _params_header(config.params), columns, rows_out)
    return EXIT_OK


def _run_table1(config: RunConfig):
    rows = [(r["vary"], r["value"], r["total"], r["reference"], r["deviation"])
            for r in table1_rows()]
    header = {"z": config.params.z, "alpha0": config.params.alpha0}
    _emit(config, header, ["vary", "value", "total", "reference", "deviation"], rows)
    return EXIT_OK


def _run_figure(config: RunConfig):
    ds = figure_dataset(config.figure_tag)
    header = {"figure": ds.tag, "note": ds.note,
              "x_label": ds.x_label, "y_label": ds.y_label}
    _emit(config, header, ["series", ds.x_label, ds.y_label], ds.rows)
    return EXIT_OK


_RUNNERS = {
    "potential": _run_potential,
    "energy": _run_energy,
    "oracle": _run_oracle,
    "sweep": _run_sweep,
    "table1": _run_table1,
    "figure": _run_figure,
}


def run(config: RunConfig) -> int:
    """Execute a parsed RunConfig; returns the process exit code."""
    try:
        return _RUNNERS[config.subcommand](config)
    except (PoleProximityError, GroundStateError, ValueError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        target = config.output_path or "<stdout>"
        print(f"cannot write output to {target}: {exc}", file=sys.stderr)
        return EXIT_IO


def main(argv=None) -> int:
    try:
        config = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
