"""Command-line front end.

Every subcommand writes one table as CSV or JSON, to ``--output`` or
stdout.  Exit status: 0 success, 2 invalid usage or parameters, 3 numerical
failure.
"""

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import __version__
from .integrate import ConvergenceError
from .moments import GaussianPacket, moment_table
from .quadrature import QuadratureSpec, log_grid, sweep, truncation_study
from .series import DEFAULT_N_MAX, s_series_terms
from .spectra import box_spectrum
from .weaktraj import read_trajectory, step_intervals, step_velocities, superluminal_steps

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

FIGURE1_BETAS = (0.01, 0.1, 0.990, 0.999)
FIGURE2_N_SIGMAS = (1.0, 2.0, 3.0, 4.0)
MIN_SUCCESS_FRACTION = 0.95


class UsageError(ValueError):
    pass


class Table:
    def __init__(self, columns, rows, metadata=None, status=EXIT_OK):
        self.columns = list(columns)
        self.rows = rows
        self.metadata = metadata or {}
        self.status = status


def format_value(value):
    """Deterministic text for one cell: floats get 17 significant digits."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.16e}"
    return str(value)


def _json_value(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def render(table, fmt):
    if fmt == "json":
        doc = {
            "metadata": {k: _json_value(v) for k, v in table.metadata.items()},
            "columns": table.columns,
            "rows": [{c: _json_value(v) for c, v in zip(table.columns, row)} for row in table.rows],
        }
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([format_value(v) for v in row])
    return buf.getvalue()


def _float_list(text):
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _add_output_args(p):
    p.add_argument("--output", "-o", metavar="PATH", help="write here instead of stdout")
    p.add_argument("--format", choices=("csv", "json"), default="csv")


def _add_packet_args(p):
    g = p.add_argument_group("packet", "give either --sigma/--p0/--mass or --x/--beta")
    g.add_argument("--sigma", type=float)
    g.add_argument("--p0", type=float)
    g.add_argument("--mass", type=float)
    g.add_argument("--x", type=float, help="1/(mass*sigma)^2")
    g.add_argument("--beta", type=float, help="p0/mass")


def _add_quadrature_args(p, n_sigma=True):
    g = p.add_argument_group("quadrature")
    g.add_argument("--rel-tol", type=float, default=QuadratureSpec.rel_tol)
    g.add_argument("--abs-tol", type=float, default=QuadratureSpec.abs_tol)
    if n_sigma:
        g.add_argument("--n-sigma", type=float, default=QuadratureSpec.n_sigma)
    g.add_argument("--max-subdivisions", type=int, default=QuadratureSpec.max_subdivisions)


def _add_grid_args(p, required=False):
    g = p.add_argument_group("x grid")
    g.add_argument("--x-min", type=float, required=required, default=None if required else 1e-8)
    g.add_argument("--x-max", type=float, required=required, default=None if required else 1e4)
    g.add_argument("--x-count", type=int, default=61)
    g.add_argument("--grid", choices=("log", "linear"), default="log")


def packet_from_args(args):
    if args.beta is not None and not args.beta < 1:
        raise UsageError("beta must be < 1")
    physical = [args.sigma, args.p0, args.mass]
    dimensionless = [args.x, args.beta]
    if any(v is not None for v in physical):
        if any(v is None for v in physical):
            raise UsageError("--sigma, --p0 and --mass must be given together")
        if any(v is not None for v in dimensionless):
            raise UsageError("give either --sigma/--p0/--mass or --x/--beta, not both")
        if args.mass > 0 and args.p0 / args.mass >= 1:
            raise UsageError("beta must be < 1")
        return GaussianPacket(args.sigma, args.p0, args.mass)
    if any(v is None for v in dimensionless):
        raise UsageError("give either --sigma/--p0/--mass or --x/--beta")
    return GaussianPacket.from_dimensionless(args.x, args.beta)


def _spec_from_args(args, n_sigma=None):
    return QuadratureSpec(
        rel_tol=args.rel_tol,
        abs_tol=args.abs_tol,
        n_sigma=getattr(args, "n_sigma", None) if n_sigma is None else n_sigma,
        max_subdivisions=args.max_subdivisions,
    )


def _grid_from_args(args):
    if args.x_count < 1:
        raise UsageError("--x-count must be >= 1")
    if not 0 < args.x_min <= args.x_max:
        raise UsageError("need 0 < --x-min <= --x-max")
    if args.grid == "log":
        return log_grid(args.x_min, args.x_max, args.x_count)
    return np.linspace(args.x_min, args.x_max, args.x_count)


def _spec_metadata(spec):
    return {
        "rel_tol": spec.rel_tol,
        "abs_tol": spec.abs_tol,
        "n_sigma": spec.n_sigma,
        "max_subdivisions": spec.max_subdivisions,
    }


def _success_status(rows):
    ok = sum(not r.status.startswith("error") for r in rows)
    return EXIT_OK if rows and ok >= MIN_SUCCESS_FRACTION * len(rows) else EXIT_NUMERICAL


def cmd_moments(args):
    packet = packet_from_args(args)
    if args.n_max < 0:
        raise UsageError("--n-max must be >= 0")
    results = moment_table(packet, args.n_max, tol=args.tol * 1e-2)
    rows = [(r.n, r.closed_form, r.oracle, r.rel_discrepancy) for r in results]
    worst = max(r.rel_discrepancy for r in results)
    meta = {"sigma": packet.sigma, "p0": packet.p0, "mass": packet.mass,
            "threshold": args.tol, "max_rel_discrepancy": worst}
    status = EXIT_OK if worst <= args.tol else EXIT_NUMERICAL
    return Table(("n", "closed_form", "oracle", "rel_discrepancy"), rows, meta, status)


def cmd_series(args):
    packet = packet_from_args(args)
    if args.x is not None:
        x, beta = args.x, args.beta
    else:
        x, beta = packet.x, packet.beta
    report = s_series_terms(x, beta, args.t, args.n_max)
    rows = [(n, term, ps) for n, (term, ps) in enumerate(zip(report.terms, report.partial_sums))]
    summary = {
        "x": report.x,
        "beta": report.beta,
        "t": report.t,
        "min_term_index": report.min_term_index,
        "min_term_value": report.min_term_value,
        "truncated_sum": report.truncated_sum,
        "error_estimate": report.error_estimate,
        "classical_ref": report.classical_ref,
        "divergent": report.diverges,
        "divergent_after": report.divergent_after,
        "overflowed": report.overflowed,
    }
    return Table(("n", "term", "partial_sum"), rows, summary)


def cmd_sweep(args):
    spec = _spec_from_args(args)
    grid = _grid_from_args(args)
    rows = sweep(grid, args.beta_list, spec)
    meta = {"t": args.t, **_spec_metadata(spec)}
    return Table(("beta", "x", "ds_dt", "classical_ref", "status"), rows, meta, _success_status(rows))


def cmd_figure2(args):
    grid = _grid_from_args(args)
    spec = _spec_from_args(args, n_sigma=QuadratureSpec.n_sigma)
    rows = truncation_study(grid, args.beta, args.n_sigma_list, spec)
    meta = {"beta": args.beta, "rel_tol": spec.rel_tol, "abs_tol": spec.abs_tol,
            "max_subdivisions": spec.max_subdivisions}
    return Table(("n_sigma", "x", "ds_dt", "status"), rows, meta, _success_status(rows))


def cmd_spectrum(args):
    entries = box_spectrum(args.L, args.mass, args.t, args.n_max)
    rows = [(e.n, e.p_n, e.s_eigenvalue, e.evaluable) for e in entries]
    meta = {"L": args.L, "mass": args.mass, "t": args.t,
            "evaluable_modes": sum(e.evaluable for e in entries)}
    return Table(("n", "p_n", "s_eigenvalue", "evaluable"), rows, meta)


def cmd_weak(args):
    traj = read_trajectory(args.input)
    v = step_velocities(traj)
    ds = step_intervals(traj)
    times = traj.times
    rows = [(k, times[k], *v[k - 1], ds[k - 1]) for k in range(1, len(traj))]
    meta = {
        "t0": traj.t0,
        "dt": traj.dt,
        "samples": len(traj),
        "duration": traj.duration,
        "distance": math.fsum(ds),
        "superluminal_steps": superluminal_steps(traj),
    }
    return Table(("k", "t", "vx", "vy", "vz", "ds"), rows, meta)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qdistance",
        description="Expected worldline interval of a free Gaussian wavepacket.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moments", help="closed-form vs quadrature even moments")
    _add_packet_args(p)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--tol", type=float, default=1e-8,
                   help="largest acceptable relative discrepancy")
    _add_output_args(p)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("series", help="divergent series terms and minimal-term truncation")
    _add_packet_args(p)
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    _add_output_args(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("figure1", help="d<s>/dt against x for several beta")
    p.add_argument("--beta-list", type=_float_list, default=list(FIGURE1_BETAS))
    p.add_argument("--t", type=float, default=1.0,
                   help="accepted for completeness; the output is per unit time")
    _add_grid_args(p)
    _add_quadrature_args(p)
    _add_output_args(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("figure2", help="d<s>/dt against x for several window widths")
    p.add_argument("--beta", type=float, default=0.1)
    p.add_argument("--n-sigma-list", type=_float_list, default=list(FIGURE2_N_SIGMAS))
    _add_grid_args(p)
    _add_quadrature_args(p, n_sigma=False)
    _add_output_args(p)
    p.set_defaults(func=cmd_figure2)

    p = sub.add_parser("sweep", help="d<s>/dt on a user-specified grid")
    p.add_argument("--beta-list", type=_float_list, required=True)
    p.add_argument("--t", type=float, default=1.0,
                   help="accepted for completeness; the output is per unit time")
    _add_grid_args(p, required=True)
    _add_quadrature_args(p)
    _add_output_args(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("spectrum", help="particle-in-a-box interval eigenvalues")
    p.add_argument("--L", type=float, required=True)
    p.add_argument("--mass", type=float, required=True)
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--n-max", type=int, required=True)
    _add_output_args(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("weak", help="interval estimate from a weak trajectory file")
    p.add_argument("--input", "-i", required=True, metavar="PATH")
    _add_output_args(p)
    p.set_defaults(func=cmd_weak)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        table = args.func(args)
    except ConvergenceError as exc:
        print(f"qdistance {args.command}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ValueError, OSError) as exc:
        print(f"qdistance {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.format == "csv" and table.metadata and args.command in ("series", "weak"):
        for key, value in table.metadata.items():
            print(f"{key} = {format_value(value)}", file=sys.stderr)
    if args.format == "json":
        table.metadata = {"command": args.command, "version": __version__, **table.metadata}
    text = render(table, args.format)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return table.status


if __name__ == "__main__":
    sys.exit(main())
