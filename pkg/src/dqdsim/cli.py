"""Command-line front end.

Four commands, all emitting CSV or JSON on stdout (or a file via --output):

    point      evaluate one parameter point
    sweep      evaluate a uniform 1-D parameter sweep
    tc         locate the entanglement sudden-death temperature (bisection)
    crossing   locate the level-crossing Coulomb value (golden-section)

Flags may also come from a config file of plain ``key = value`` lines
(``#`` starts a comment) passed with --config; explicit flags always win.
The environment variable DQD_THREADS (a positive integer) caps sweep
parallelism; by default sweeps run serially.

Exit status: 0 success, 1 I/O failure, 2 usage or validation error,
3 numerical failure (e.g. no sudden death inside the bracket).
Diagnostics go to stderr; only data goes to the chosen sink.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .model import ModelParams
from .quantifiers import QuantifierRecord, evaluate_point
from .sweep import SweepResult, SweepSpec, find_level_crossing, find_sudden_death, run_sweep

__all__ = [
    "CSV_HEADER",
    "EXIT_IO",
    "EXIT_NUMERIC",
    "EXIT_OK",
    "EXIT_USAGE",
    "RunConfig",
    "emit_records",
    "emit_scalar",
    "main",
    "parse_args",
    "run",
]

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3

CSV_HEADER = (
    "variable,omega,delta_a,delta_b,coulomb,temperature,"
    "p1,p2,p3,p4,c_total,c_local,c_correlated,concurrence"
)

# Config-file keys: normalized key -> (namespace dest, converter).
_CONFIG_KEYS = {
    "omega": ("omega", float),
    "delta_a": ("delta_a", float),
    "delta_b": ("delta_b", float),
    "coulomb": ("coulomb", float),
    "temp": ("temp", float),
    "var": ("var", str),
    "from": ("start", float),
    "to": ("stop", float),
    "steps": ("steps", int),
    "tie_deltas": ("tie_deltas", None),  # bool, parsed specially
    "t_lo": ("t_lo", float),
    "t_hi": ("t_hi", float),
    "v_lo": ("v_lo", float),
    "v_hi": ("v_hi", float),
    "tol": ("tol", float),
    "format": ("format", str),
    "output": ("output", str),
}

_PARAM_FLAGS = {
    "omega": "--omega",
    "delta_a": "--delta-a",
    "delta_b": "--delta-b",
    "coulomb": "--coulomb",
    "temp": "--temp",
}


@dataclass(frozen=True)
class RunConfig:
    """A fully validated invocation: what to compute and where to put it."""

    command: str
    fmt: str
    output: str | None
    threads: int | None
    params: ModelParams | None = None  # point
    sweep: SweepSpec | None = None  # sweep
    base: ModelParams | None = None  # tc / crossing
    lo: float | None = None
    hi: float | None = None
    tol: float | None = None


def _fmt17(x: float) -> str:
    """17 significant digits: round-trips IEEE doubles exactly."""
    return format(float(x), ".17g")


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _load_config(path: str):
    """Read ``key = value`` lines; returns a dict of argparse defaults."""
    defaults = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
            key, _, value = line.partition("=")
            key = key.strip().lower().replace("-", "_")
            value = value.strip()
            if key not in _CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
            dest, conv = _CONFIG_KEYS[key]
            try:
                defaults[dest] = _parse_bool(value) if conv is None else conv(value)
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: bad value for {key!r}: {exc}") from exc
    return defaults


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="dqdsim",
        description="Thermal coherence and entanglement of two coupled double quantum dots.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add_common(p, with_temp=True):
        p.add_argument("--omega", type=float, help="drive transition frequency")
        p.add_argument("--delta-a", dest="delta_a", type=float, help="tunneling strength, pair A")
        p.add_argument("--delta-b", dest="delta_b", type=float, help="tunneling strength, pair B")
        p.add_argument("--coulomb", type=float, help="Coulomb coupling between the pairs")
        if with_temp:
            p.add_argument("--temp", type=float, help="temperature")
        p.add_argument("--config", help="config file of key = value lines (flags win)")
        p.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")
        p.add_argument("--output", help="output path (default: stdout)")

    p_point = sub.add_parser("point", help="evaluate a single parameter point")
    add_common(p_point)

    p_sweep = sub.add_parser("sweep", help="evaluate a uniform 1-D parameter sweep")
    add_common(p_sweep)
    p_sweep.add_argument(
        "--var",
        choices=("temp", "temperature", "coulomb", "tunneling", "omega"),
        help="which parameter to sweep",
    )
    p_sweep.add_argument("--from", dest="start", type=float, help="sweep start")
    p_sweep.add_argument("--to", dest="stop", type=float, help="sweep stop")
    p_sweep.add_argument("--steps", type=int, default=201, help="grid points (default 201)")
    p_sweep.add_argument(
        "--tie-deltas",
        dest="tie_deltas",
        action="store_true",
        help="sweep delta_a and delta_b together (tunneling sweeps only)",
    )

    p_tc = sub.add_parser("tc", help="locate the entanglement sudden-death temperature")
    add_common(p_tc, with_temp=False)
    p_tc.add_argument("--t-lo", dest="t_lo", type=float, help="bracket low end")
    p_tc.add_argument("--t-hi", dest="t_hi", type=float, help="bracket high end")
    p_tc.add_argument("--tol", type=float, default=1e-4, help="bracket tolerance (default 1e-4)")

    p_cross = sub.add_parser("crossing", help="locate the level-crossing Coulomb value")
    add_common(p_cross, with_temp=False)
    p_cross.add_argument("--v-lo", dest="v_lo", type=float, help="bracket low end")
    p_cross.add_argument("--v-hi", dest="v_hi", type=float, help="bracket high end")
    p_cross.add_argument("--tol", type=float, default=1e-6, help="bracket tolerance (default 1e-6)")

    return parser, (p_point, p_sweep, p_tc, p_cross)


def _require(parser, ns, *dests):
    for dest in dests:
        if getattr(ns, dest, None) is None:
            flag = _PARAM_FLAGS.get(dest, "--" + dest.replace("_", "-"))
            parser.error(f"missing required flag {flag} for command {ns.command!r}")


def _threads_from_env(parser) -> int | None:
    raw = os.environ.get("DQD_THREADS")
    if raw is None:
        return None
    try:
        threads = int(raw)
        if threads <= 0:
            raise ValueError
    except ValueError:
        parser.error(f"DQD_THREADS must be a positive integer, got {raw!r}")
    return threads


def parse_args(argv) -> RunConfig:
    """Parse argv into a validated RunConfig.

    Usage and validation problems print a message to stderr and exit with
    status 2 (SystemExit), matching argparse's own behavior.
    """
    argv = list(argv)
    parser, subparsers = _build_parser()

    # Config file values act as defaults, so explicit flags override them.
    # They must be installed on the subparsers: each subcommand parses into a
    # fresh namespace whose values are copied over the top-level one.
    config_path = None
    for i, arg in enumerate(argv):
        if arg == "--config":
            if i + 1 >= len(argv):
                parser.error("--config needs a path")
            config_path = argv[i + 1]
        elif arg.startswith("--config="):
            config_path = arg.split("=", 1)[1]
    if config_path is not None:
        try:
            defaults = _load_config(config_path)
        except OSError as exc:
            parser.error(f"cannot read config file: {exc}")
        except ValueError as exc:
            parser.error(str(exc))
        for sub in subparsers:
            sub.set_defaults(**defaults)

    ns = parser.parse_args(argv)
    threads = _threads_from_env(parser)

    try:
        if ns.command == "point":
            _require(parser, ns, "omega", "delta_a", "delta_b", "coulomb", "temp")
            params = ModelParams(ns.omega, ns.delta_a, ns.delta_b, ns.coulomb, ns.temp)
            return RunConfig("point", ns.format, ns.output, threads, params=params)

        if ns.command == "sweep":
            _require(parser, ns, "var", "start", "stop")
            variable = "temperature" if ns.var == "temp" else ns.var
            needed = {
                "temperature": ("omega", "delta_a", "delta_b", "coulomb"),
                "coulomb": ("omega", "delta_a", "delta_b", "temp"),
                "omega": ("delta_a", "delta_b", "coulomb", "temp"),
                "tunneling": ("omega", "coulomb", "temp")
                + (() if ns.tie_deltas else ("delta_b",)),
            }[variable]
            _require(parser, ns, *needed)
            base = ModelParams(
                omega=ns.omega if ns.omega is not None else 0.0,
                delta_a=ns.delta_a if ns.delta_a is not None else 0.0,
                delta_b=ns.delta_b if ns.delta_b is not None else 0.0,
                coulomb=ns.coulomb if ns.coulomb is not None else 0.0,
                temperature=ns.temp if ns.temp is not None else 1.0,
            )
            swept = SweepSpec(variable, ns.start, ns.stop, ns.steps, base, ns.tie_deltas)
            return RunConfig("sweep", ns.format, ns.output, threads, sweep=swept)

        if ns.command == "tc":
            _require(parser, ns, "omega", "delta_a", "delta_b", "coulomb", "t_lo", "t_hi")
            if ns.tol <= 0:
                parser.error(f"--tol must be positive, got {ns.tol}")
            base = ModelParams(ns.omega, ns.delta_a, ns.delta_b, ns.coulomb, ns.t_lo)
            return RunConfig(
                "tc", ns.format, ns.output, threads,
                base=base, lo=ns.t_lo, hi=ns.t_hi, tol=ns.tol,
            )

        # crossing
        _require(parser, ns, "omega", "delta_a", "delta_b", "v_lo", "v_hi")
        if ns.tol <= 0:
            parser.error(f"--tol must be positive, got {ns.tol}")
        base = ModelParams(
            omega=ns.omega,
            delta_a=ns.delta_a,
            delta_b=ns.delta_b,
            coulomb=ns.v_lo,
            temperature=1.0,  # irrelevant: only the spectrum enters
        )
        return RunConfig(
            "crossing", ns.format, ns.output, threads,
            base=base, lo=ns.v_lo, hi=ns.v_hi, tol=ns.tol,
        )
    except ValueError as exc:
        parser.error(str(exc))


def _record_fields(record: QuantifierRecord, variable):
    p = record.params
    return {
        "variable": None if variable is None else float(variable),
        "omega": p.omega,
        "delta_a": p.delta_a,
        "delta_b": p.delta_b,
        "coulomb": p.coulomb,
        "temperature": p.temperature,
        "p1": record.populations[0],
        "p2": record.populations[1],
        "p3": record.populations[2],
        "p4": record.populations[3],
        "c_total": record.c_total,
        "c_local": record.c_local,
        "c_correlated": record.c_correlated,
        "concurrence": record.concurrence,
    }


def _csv_row(fields) -> str:
    cells = ["" if fields["variable"] is None else _fmt17(fields["variable"])]
    cells += [_fmt17(fields[k]) for k in CSV_HEADER.split(",")[1:]]
    return ",".join(cells)


def render_records(result, fmt: str) -> str:
    """Render a point record or a sweep result to CSV or JSON text."""
    if isinstance(result, SweepResult):
        grid = result.spec.grid()
        rows = [_record_fields(r, x) for x, r in zip(grid, result.records)]
        if fmt == "json":
            return json.dumps(rows, indent=2) + "\n"
        return "\n".join([CSV_HEADER] + [_csv_row(f) for f in rows]) + "\n"
    fields = _record_fields(result, None)
    if fmt == "json":
        return json.dumps(fields, indent=2) + "\n"
    return "\n".join([CSV_HEADER, _csv_row(fields)]) + "\n"


def render_scalar(name: str, value: float, fmt: str) -> str:
    """Render a search result (t_c or v_c) to CSV or JSON text."""
    if fmt == "json":
        return json.dumps({"quantity": name, "value": value}, indent=2) + "\n"
    return f"quantity,value\n{name},{_fmt17(value)}\n"


def emit_records(result, fmt: str, sink) -> None:
    """Write a point record or sweep result to an open text sink."""
    sink.write(render_records(result, fmt))


def emit_scalar(name: str, value: float, fmt: str, sink) -> None:
    """Write a named scalar result to an open text sink."""
    sink.write(render_scalar(name, value, fmt))


def run(config: RunConfig) -> int:
    """Execute a validated RunConfig; returns the process exit status."""
    try:
        if config.command == "point":
            text = render_records(evaluate_point(config.params), config.fmt)
        elif config.command == "sweep":
            text = render_records(run_sweep(config.sweep, threads=config.threads), config.fmt)
        elif config.command == "tc":
            t_c = find_sudden_death(config.base, config.lo, config.hi, config.tol)
            text = render_scalar("t_c", t_c, config.fmt)
        else:
            v_c = find_level_crossing(config.base, config.lo, config.hi, config.tol)
            text = render_scalar("v_c", v_c, config.fmt)
    except Exception as exc:
        print(f"dqdsim: numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC

    try:
        if config.output is None:
            sys.stdout.write(text)
        else:
            with open(config.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
    except OSError as exc:
        print(f"dqdsim: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def main(argv=None) -> int:
    """Console entry point."""
    try:
        config = parse_args(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:  # argparse already reported to stderr
        return int(exc.code) if exc.code is not None else 0
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
