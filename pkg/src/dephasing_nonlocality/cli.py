"""Command-line front end: every computation as a reproducible CSV/JSON run.

Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from importlib.metadata import PackageNotFoundError, version

import numpy as np

from . import dynamics, ohmic, oracle
from .dynamics import DephasingPair
from .errors import DomainError, NumericalError
from .ohmic import OhmicEnv
from .states import EWLParams, Flavor

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2
EXIT_VERIFY = 3

SIG_DIGITS = 9


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _artifact_version() -> str:
    try:
        return version("artifact")
    except PackageNotFoundError:
        return "unknown"


def format_number(x: float) -> str:
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        return "nan"
    return format(x, f".{SIG_DIGITS}g")


def _csv_field(v) -> str:
    if v is None:
        return ""
    if isinstance(v, str):
        return v
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return format_number(float(v))


def _json_value(v):
    if v is None or isinstance(v, (bool, str)):
        return v
    if isinstance(v, (int, np.integer)):
        return int(v)
    v = float(v)
    if math.isinf(v) or math.isnan(v):
        return format_number(v)
    return float(format_number(v))


def to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(rows[0]))
    for row in rows:
        writer.writerow([_csv_field(v) for v in row.values()])
    return buf.getvalue()


def to_json(rows: list[dict], meta: dict) -> str:
    data = [{k: _json_value(v) for k, v in row.items()} for row in rows]
    return json.dumps({"meta": meta, "data": data}, indent=2, allow_nan=False) + "\n"


# ---------------------------------------------------------------------------
# flag helpers
# ---------------------------------------------------------------------------

def _require(args, *names):
    for name in names:
        if getattr(args, name.replace("-", "_")) is None:
            raise UsageError(f"--{name} is required for {args.command}")


def _params(args) -> EWLParams:
    _require(args, "r", "a2")
    if not 0.0 <= args.r <= 1.0:
        raise UsageError(f"--r must lie in [0, 1], got {args.r}")
    if not 0.0 <= args.a2 <= 1.0:
        raise UsageError(f"--a2 must lie in [0, 1], got {args.a2}")
    return EWLParams.from_weight(args.r, args.a2, Flavor(args.flavor))


def _s_grid(args) -> np.ndarray:
    _require(args, "s-min", "s-max", "s-steps")
    if args.s_min < 0.0:
        raise UsageError(f"--s-min must be >= 0, got {args.s_min}")
    if args.s_max < args.s_min:
        raise UsageError("--s-max must be >= --s-min")
    if args.s_steps < 1:
        raise UsageError(f"--s-steps must be >= 1, got {args.s_steps}")
    return np.linspace(args.s_min, args.s_max, args.s_steps)


def _interior_a(args) -> float:
    a = math.sqrt(args.a2)
    if not 0.0 < a < 1.0:
        raise UsageError(f"--a2 must lie strictly inside (0, 1), got {args.a2}")
    return a


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_evolve(args):
    params = _params(args)
    _require(args, "s-a", "tau-max", "steps")
    if args.isolated_b and args.s_b is not None:
        raise UsageError("--s-b cannot be combined with --isolated-b")
    if not args.isolated_b and args.s_b is None:
        raise UsageError("--s-b is required unless --isolated-b is given")
    for flag, value in (("s-a", args.s_a), ("s-b", args.s_b)):
        if value is not None and value < 0.0:
            raise UsageError(f"--{flag} must be >= 0, got {value}")
    if args.tau_max <= 0.0:
        raise UsageError(f"--tau-max must be > 0, got {args.tau_max}")
    if args.steps < 2:
        raise UsageError(f"--steps must be >= 2, got {args.steps}")
    env_b = None if args.isolated_b else OhmicEnv(args.s_b)
    pair = DephasingPair(OhmicEnv(args.s_a), env_b)
    return [row.as_dict() for row in dynamics.trace_dynamics(params, pair, args.tau_max, args.steps)]


def cmd_asymptotic_sweep(args):
    params = _params(args)
    c_th = dynamics.nonlocality_threshold(params.r)
    interior = 0.0 < params.a < 1.0
    rows = []
    for s in _s_grid(args):
        s = float(s)
        rows.append({
            "s": s,
            "lambda_inf": ohmic.dephasing_factor_asymptotic(s),
            "c_inf_n1": dynamics.asymptotic_concurrence(params, s, 1),
            "c_inf_n2": dynamics.asymptotic_concurrence(params, s, 2),
            "c_th": c_th,
            "r_star_n1": dynamics.purity_lower_bound(params.a, s, 1) if interior else None,
            "r_star_n2": dynamics.purity_lower_bound(params.a, s, 2) if interior else None,
        })
    return rows


def cmd_threshold(args):
    _require(args, "r")
    if not 0.0 <= args.r <= 1.0:
        raise UsageError(f"--r must lie in [0, 1], got {args.r}")
    return [{"r": args.r, "c_th": dynamics.nonlocality_threshold(args.r)}]


def cmd_purity_bound(args):
    sweep = (args.a2_min, args.a2_max, args.a2_steps)
    if any(v is not None for v in sweep):
        if args.a2 is not None:
            raise UsageError("--a2 cannot be combined with --a2-min/--a2-max/--a2-steps")
        _require(args, "a2-min", "a2-max", "a2-steps")
        if not 0.0 < args.a2_min <= args.a2_max < 1.0:
            raise UsageError("--a2-min and --a2-max must satisfy 0 < a2-min <= a2-max < 1")
        if args.a2_steps < 1:
            raise UsageError(f"--a2-steps must be >= 1, got {args.a2_steps}")
        weights = np.linspace(args.a2_min, args.a2_max, args.a2_steps)
    else:
        _require(args, "a2")
        _interior_a(args)
        weights = [args.a2]
    if args.s is not None and args.s < 0.0:
        raise UsageError(f"--s must be >= 0, got {args.s}")
    s = ohmic.find_sbar()[0] if args.s is None else args.s
    rows = []
    for a2 in weights:
        a = math.sqrt(float(a2))
        rows.append({
            "a2": float(a2),
            "s": s,
            "r_star_n1": dynamics.purity_lower_bound(a, s, 1),
            "r_star_n2": dynamics.purity_lower_bound(a, s, 2),
        })
    return rows


def cmd_find_sbar(args):
    sbar, lam = ohmic.find_sbar()
    return [{"sbar": sbar, "lambda_inf": lam}]


def cmd_nonlocal_range(args):
    params = _params(args)
    n = 1 if args.isolated_b else 2
    nl = dynamics.nonlocal_s_range(params, n)
    ent = dynamics.stationary_entanglement_condition(params, n)
    return [{
        "r": params.r,
        "a2": args.a2,
        "n": n,
        "c_th": dynamics.nonlocality_threshold(params.r),
        "s_lower": nl.lower,
        "s_upper": nl.upper,
        "empty": nl.is_empty,
        "entangled_s_lower": ent.lower,
        "entangled_s_upper": ent.upper,
    }]


def cmd_verify(args):
    if args.samples < 1:
        raise UsageError(f"--samples must be >= 1, got {args.samples}")
    report = oracle.verify_suite(args.samples, args.seed)
    print(report.summary(), file=sys.stderr)
    rows = [c.as_dict() for c in report.checks]
    for row in rows:
        row["seed"] = args.seed
    return rows, report.all_passed


COMMANDS = {
    "evolve": cmd_evolve,
    "asymptotic-sweep": cmd_asymptotic_sweep,
    "threshold": cmd_threshold,
    "purity-bound": cmd_purity_bound,
    "find-sbar": cmd_find_sbar,
    "nonlocal-range": cmd_nonlocal_range,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dephasing-nonlocality", description=__doc__.splitlines()[0])

    def common(p):
        p.add_argument("--output", default="-", help="output file, '-' for stdout (default)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    def state_flags(p):
        p.add_argument("--r", type=float, help="purity parameter r in [0, 1]")
        p.add_argument("--a2", type=float, help="weight a^2 of the pure part")
        p.add_argument("--flavor", choices=[f.value for f in Flavor], default=Flavor.ONE_EXCITATION.value)

    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    p = sub.add_parser("evolve", help="concurrence and Bell value along the dephasing trajectory")
    state_flags(p)
    p.add_argument("--s-a", type=float, help="ohmicity of qubit A's bath")
    p.add_argument("--s-b", type=float, help="ohmicity of qubit B's bath")
    p.add_argument("--isolated-b", action="store_true", help="qubit B sees no bath")
    p.add_argument("--tau-max", type=float)
    p.add_argument("--steps", type=int)
    common(p)

    p = sub.add_parser("asymptotic-sweep", help="stationary quantities on a grid of ohmicities")
    state_flags(p)
    p.add_argument("--s-min", type=float)
    p.add_argument("--s-max", type=float)
    p.add_argument("--s-steps", type=int)
    common(p)

    p = sub.add_parser("threshold", help="nonlocality threshold of the concurrence")
    p.add_argument("--r", type=float)
    common(p)

    p = sub.add_parser("purity-bound", help="purity lower bound r* for both noise configurations")
    p.add_argument("--a2", type=float)
    p.add_argument("--a2-min", type=float)
    p.add_argument("--a2-max", type=float)
    p.add_argument("--a2-steps", type=int)
    p.add_argument("--s", type=float, help="ohmicity (default: the optimal ohmicity sbar)")
    common(p)

    p = sub.add_parser("find-sbar", help="ohmicity minimizing the asymptotic dephasing factor")
    common(p)

    p = sub.add_parser("nonlocal-range", help="ohmicities whose stationary state stays nonlocal")
    state_flags(p)
    p.add_argument("--isolated-b", action="store_true", help="qubit B sees no bath (n = 1)")
    common(p)

    p = sub.add_parser("verify", help="run the oracle cross-check suite")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    return parser


def _emit(text: str, output: str) -> None:
    if output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", newline="\n", encoding="utf-8") as fh:
            fh.write(text)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
        result = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL

    passed = True
    if args.command == "verify":
        rows, passed = result
    else:
        rows = result

    if args.format == "csv":
        text = to_csv(rows)
    else:
        flags = {k: v for k, v in vars(args).items() if k not in ("command", "output", "format")}
        meta = {
            "command": args.command,
            "flags": flags,
            "version": _artifact_version(),
            "seed": getattr(args, "seed", None),
        }
        text = to_json(rows, meta)
    _emit(text, args.output)
    return EXIT_OK if passed else EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
