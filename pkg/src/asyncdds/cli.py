"""Command-line entry point: ``asyncdds <command> ...``.

Exit codes: 0 success, 2 config error, 3 precondition violation, 4 I/O error.
Errors are reported on stderr as one line ``error[<kind>]: <message>``.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import serialize as ser
from .equivalence import backsolve_mu1, check_equivalence
from .evolution import evolution, extract_psi
from .interp import build_interp
from .numeric import as_rat, max_denominator_digits, rat_from_string
from .plots import heatmap_svg, trajectory_svg
from .scan import run_scan, scan_config_from_json, scan_to_csv
from .simulate import simulate
from .spectral import classify_stability

log = logging.getLogger("asyncdds")

EXIT_CONFIG, EXIT_PRECONDITION, EXIT_IO = 2, 3, 4
DENOMINATOR_WARN_DIGITS = 10_000


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _load_run_config(path: str) -> ser.RunConfig:
    return ser.run_config_from_json(ser.load_json(path))


def _warn_denominators(m) -> None:
    digits = max_denominator_digits(m)
    if digits > DENOMINATOR_WARN_DIGITS:
        log.warning("exact entries have denominators with %d digits", digits)


def cmd_simulate(args) -> None:
    cfg = _load_run_config(args.config)
    traj = simulate(cfg.spec, cfg.x0, cfg.y0, cfg.horizon)
    last = traj.samples[-1]
    _warn_denominators(((v,) for v in (last.x, last.y) if v is not None))
    fmt = args.format or cfg.output_format
    text = ser.trajectory_to_csv(traj) if fmt == "csv" else ser.dumps(ser.trajectory_to_json(traj))
    _write(args.output, text)
    plot = args.plot or cfg.plot_path
    if plot:
        _write(plot, trajectory_svg(traj, title=f"({cfg.spec.mu}, {cfg.spec.nu})-asynchronous trajectory"))


def cmd_operator(args) -> None:
    spec = ser.spec_from_json(ser.load_json(args.config))
    try:
        start, end = as_rat(args.start), as_rat(args.end)
    except (ValueError, ZeroDivisionError) as exc:
        raise ser.ConfigError(f"bad --from/--to: {exc}") from None
    op = evolution(spec, start, end)
    _warn_denominators(op.phi)
    _write(args.output, ser.dumps(ser.operator_to_json(op, extract_psi(op.phi))))


def cmd_stability(args) -> None:
    data = ser.load_json(args.config)
    spec = ser.spec_from_json(data)
    margin = args.margin if args.margin is not None else data.get("margin", 1e-9)
    report = classify_stability(spec, float(margin))
    _write(args.output, ser.dumps(ser.stability_to_json(report)))


def cmd_scan(args) -> None:
    cfg = scan_config_from_json(ser.load_json(args.config))
    rows = run_scan(cfg, jobs=args.jobs)
    _write(args.output, scan_to_csv(cfg, rows))
    if args.svg:
        _write(args.svg, heatmap_svg(rows, cfg.x.param, cfg.y.param, list(cfg.x.values), list(cfg.y.values)))


def cmd_equivalence(args) -> None:
    a = ser.spec_from_json(ser.load_json(args.config_a))
    b = ser.spec_from_json(ser.load_json(args.config_b))
    _write(args.output, ser.dumps(ser.equivalence_to_json(check_equivalence(a, b))))


def parse_matrix(text: str):
    """'a,b;c,d' -> 2x2 rational matrix."""
    rows = [r.split(",") for r in text.split(";")]
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise ser.ConfigError("matrix must look like 'a,b;c,d'")
    try:
        return tuple(tuple(rat_from_string(x) for x in r) for r in rows)
    except (ValueError, ZeroDivisionError) as exc:
        raise ser.ConfigError(str(exc)) from None


def cmd_backsolve(args) -> None:
    target = parse_matrix(args.psi)
    spec = backsolve_mu1(target, args.mu_hat)
    _write(args.output, ser.dumps({"target": ser.matrix_to_json(target), "spec": ser.spec_to_json(spec)}))


def cmd_interp(args) -> None:
    spec = ser.spec_from_json(ser.load_json(args.config))
    _write(args.output, ser.dumps(ser.interp_to_json(build_interp(spec))))


class _Parser(argparse.ArgumentParser):
    # keep usage errors on the same one-line channel as everything else
    def error(self, message):
        print(f"error[config]: {message}", file=sys.stderr)
        sys.exit(EXIT_CONFIG)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="asyncdds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=fn)
        p.add_argument("-o", "--output", help="output file (default: stdout)")
        return p

    p = add("simulate", cmd_simulate, "direct sample-and-hold simulation")
    p.add_argument("config")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--plot", help="write an SVG step plot here")

    p = add("operator", cmd_operator, "exact evolution and solution operators")
    p.add_argument("config")
    p.add_argument("--from", dest="start", default="0")
    p.add_argument("--to", dest="end", required=True)

    p = add("stability", cmd_stability, "classify stability over one common period")
    p.add_argument("config")
    p.add_argument("--margin", type=float)

    p = add("scan", cmd_scan, "two-parameter stability sweep")
    p.add_argument("config")
    p.add_argument("--svg", help="write an SVG heatmap here")
    p.add_argument("--jobs", type=int, default=1)

    p = add("equivalence", cmd_equivalence, "compare solution operators of two systems")
    p.add_argument("config_a")
    p.add_argument("config_b")

    p = add("backsolve", cmd_backsolve, "parameters of a (mu_hat, 1) system for a target operator")
    p.add_argument("--psi", required=True, help="target operator as 'a,b;c,d'")
    p.add_argument("--mu-hat", type=int, required=True)

    p = add("interp", cmd_interp, "complex root B of the one-period operator")
    p.add_argument("config")
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="warning: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except ser.ConfigError as exc:
        print(f"error[config]: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error[io]: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
        print(f"error[precondition]: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    return 0


if __name__ == "__main__":
    sys.exit(main())
