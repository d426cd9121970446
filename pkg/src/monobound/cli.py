"""Command-line front end.

Grammar:

    monobound <command> [--weights FILE | --uniform N] [--fn SPEC]
                        [--density SPEC] [--x FILE] [--y FILE]
                        [--tol X] [--depth D] [--json] [--seed S]

Commands: bound, enclose, abel, transform-check, majorize, karamata,
refine, catalog.  Weight and vector files are CSV (one value per line or
comma-separated) or a JSON array.  Function specs: ``power:k=2``,
``exp:lambda=1.5``, ``log``, ``recip``, ``trig``, ``const:c=1``,
``linear:m=-1,b=1``, ``table:@file.csv``.  Density specs: ``uniform``,
``poly:c0,c1,...``, ``tri:peak=0.5``, ``table:@file.csv``.  Convex specs
for karamata: ``square``, ``expt``, ``abs:c=0.5``, or any function spec.

Exit codes: 0 success, 1 parse error, 2 domain error (bad weights,
non-monotone function, failed precondition), 3 mathematical-invariant
violation.  Code 3 signals a bug in the math, never bad input, so CI can
tell the two apart.  Results go to standard output, diagnostics to
standard error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from . import functions, transform
from .bounds import (
    IDENTITY_TOL,
    abel_sum,
    abel_terms,
    bound_report,
    refinement_chain,
    riemann_sum_left,
    riemann_sum_right,
)
from .errors import MonoboundError, NonMonotoneFunction
from .functions import (
    CONSTANT,
    DECREASING,
    INCREASING,
    MonotoneFunction,
    probe_monotonicity,
    quadrature_integral,
)
from .jsonio import format_float, render_json
from .majorization import is_majorized, karamata_check
from .partitions import WeightVector, cumulative, from_weights, uniform_weights

DEFAULT_QUAD_TOL = 1e-10
DEFAULT_RESIDUAL_TOL = 1e-8
DEFAULT_DEPTH = 3

_FN_USAGE = (
    "power:k=K | exp:lambda=L | log | recip | trig | const:c=C | "
    "linear:m=M,b=B | table:@file.csv"
)
_DENSITY_USAGE = "uniform | poly:c0,c1,... | tri:peak=P | table:@file.csv"
_CONVEX_USAGE = "square | expt | abs:c=C | any function spec"

#: Rows shown by the catalog command.
CATALOG_SPECS = (
    "power:k=1",
    "power:k=2",
    "power:k=3",
    "exp:lambda=0.5",
    "exp:lambda=1",
    "exp:lambda=2",
    "log",
    "recip",
    "trig",
    "const:c=1",
    "linear:m=-1,b=1",
)


class CliParseError(Exception):
    """Unusable command line, spec string, or input file (exit code 1)."""


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation; exactly one command with its inputs and options."""

    command: str
    weights_path: str | None = None
    uniform_n: int | None = None
    x_path: str | None = None
    y_path: str | None = None
    fn_spec: str | None = None
    density_spec: str | None = None
    tol: float | None = None
    depth: int = DEFAULT_DEPTH
    output_format: str = "text"
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.tol is not None and not self.tol > 0.0:
            raise CliParseError(f"--tol must be positive, got {self.tol!r}")


# ---------------------------------------------------------------------------
# input files and spec strings


def parse_vector_text(text: str, origin: str) -> list[float]:
    """Numbers from CSV/plain text (any mix of commas, spaces, newlines) or a JSON array."""
    stripped = text.strip()
    if not stripped:
        raise CliParseError(f"{origin}: no numbers found")
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise CliParseError(f"{origin}: invalid JSON: {exc}") from exc
        if not isinstance(data, list) or not data:
            raise CliParseError(f"{origin}: expected a non-empty JSON array of numbers")
        out = []
        for v in data:
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise CliParseError(f"{origin}: expected a JSON array of numbers")
            out.append(float(v))
        return out
    tokens = [t for chunk in stripped.split() for t in chunk.split(",") if t]
    try:
        return [float(t) for t in tokens]
    except ValueError as exc:
        raise CliParseError(f"{origin}: {exc}") from exc


def read_vector_file(path: str) -> list[float]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliParseError(f"cannot read {path}: {exc}") from exc
    return parse_vector_text(text, path)


def read_table_file(path: str) -> list[tuple[float, float]]:
    """Two-column (x, y) knots from CSV rows or a JSON array of pairs."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliParseError(f"cannot read {path}: {exc}") from exc
    stripped = text.strip()
    if not stripped:
        raise CliParseError(f"{path}: no knots found")
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise CliParseError(f"{path}: invalid JSON: {exc}") from exc
        try:
            return [(float(x), float(y)) for x, y in data]
        except (TypeError, ValueError) as exc:
            raise CliParseError(f"{path}: expected a JSON array of [x, y] pairs") from exc
    rows = []
    for lineno, line in enumerate(stripped.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        parts = [p for p in line.replace(",", " ").split() if p]
        if len(parts) != 2:
            raise CliParseError(f"{path}:{lineno}: expected two columns, got {len(parts)}")
        try:
            rows.append((float(parts[0]), float(parts[1])))
        except ValueError as exc:
            raise CliParseError(f"{path}:{lineno}: {exc}") from exc
    return rows


def _kv_args(args: str, spec_name: str, keys: tuple[str, ...]) -> dict[str, float]:
    if not args:
        raise CliParseError(
            f"{spec_name!r} spec needs parameters: {', '.join(keys)} (e.g. {spec_name}:{keys[0]}=...)"
        )
    out: dict[str, float] = {}
    for part in args.split(","):
        key, eq, raw = part.partition("=")
        key = key.strip()
        if not eq or key not in keys:
            raise CliParseError(f"bad parameter {part!r} in {spec_name!r} spec")
        if key in out:
            raise CliParseError(f"duplicate parameter {key!r} in {spec_name!r} spec")
        try:
            out[key] = float(raw)
        except ValueError as exc:
            raise CliParseError(f"parameter {key!r} in {spec_name!r} spec: {exc}") from exc
    missing = [k for k in keys if k not in out]
    if missing:
        raise CliParseError(f"{spec_name!r} spec is missing: {', '.join(missing)}")
    return out


def _no_args(args: str, spec_name: str) -> None:
    if args:
        raise CliParseError(f"{spec_name!r} spec takes no parameters, got {args!r}")


def _at_path(args: str, spec_name: str) -> str:
    if not args.startswith("@") or len(args) == 1:
        raise CliParseError(f"{spec_name!r} spec needs a file, e.g. {spec_name}:@knots.csv")
    return args[1:]


def parse_fn_spec(spec: str) -> MonotoneFunction:
    """Catalog function from a spec string; see module docstring for the grammar."""
    name, _, args = spec.strip().partition(":")
    if name == "power":
        return functions.power_complement(_kv_args(args, "power", ("k",))["k"])
    if name == "exp":
        return functions.exponential(_kv_args(args, "exp", ("lambda",))["lambda"])
    if name == "log":
        _no_args(args, "log")
        return functions.logarithmic()
    if name == "recip":
        _no_args(args, "recip")
        return functions.reciprocal()
    if name == "trig":
        _no_args(args, "trig")
        return functions.trigonometric()
    if name == "const":
        return functions.constant(_kv_args(args, "const", ("c",))["c"])
    if name == "linear":
        kv = _kv_args(args, "linear", ("m", "b"))
        return functions.linear(kv["m"], kv["b"])
    if name == "table":
        return functions.tabulated(read_table_file(_at_path(args, "table")))
    raise CliParseError(f"unknown function spec {spec!r}; expected {_FN_USAGE}")


def parse_density_spec(spec: str) -> transform.Density:
    """Density from a spec string; see module docstring for the grammar."""
    name, _, args = spec.strip().partition(":")
    if name == "uniform":
        _no_args(args, "uniform")
        return transform.uniform_density()
    if name == "poly":
        if not args:
            raise CliParseError("'poly' spec needs coefficients, e.g. poly:0,2")
        try:
            coeffs = [float(t) for t in args.split(",")]
        except ValueError as exc:
            raise CliParseError(f"'poly' spec coefficients: {exc}") from exc
        return transform.polynomial_density(coeffs)
    if name == "tri":
        return transform.triangular_density(_kv_args(args, "tri", ("peak",))["peak"])
    if name == "table":
        return transform.tabulated_density(read_table_file(_at_path(args, "table")))
    raise CliParseError(f"unknown density spec {spec!r}; expected {_DENSITY_USAGE}")


def parse_convex_spec(spec: str) -> tuple[Callable[[float], float], str]:
    """Convex test function (callable, label) for the karamata command."""
    name, _, args = spec.strip().partition(":")
    if name == "square":
        _no_args(args, "square")
        return (lambda t: t * t), "t^2"
    if name == "expt":
        _no_args(args, "expt")
        return math.exp, "exp(t)"
    if name == "abs":
        c = _kv_args(args, "abs", ("c",))["c"]
        return (lambda t: abs(t - c)), f"|t - {c:g}|"
    try:
        g = parse_fn_spec(spec)
    except CliParseError:
        raise CliParseError(
            f"unknown convex spec {spec!r}; expected {_CONVEX_USAGE}"
        ) from None
    return g, g.formula


# ---------------------------------------------------------------------------
# commands; each returns (exit code, payload, problems, text summary)

_CmdResult = tuple[int, object, list[str], str | None]


def _require(value: str | None, flag: str) -> str:
    if value is None:
        raise CliParseError(f"this command requires {flag}")
    return value


def _weights_from(config: RunConfig) -> WeightVector:
    if (config.weights_path is None) == (config.uniform_n is None):
        raise CliParseError("exactly one of --weights FILE and --uniform N is required")
    if config.uniform_n is not None:
        return uniform_weights(config.uniform_n)
    return from_weights(read_vector_file(config.weights_path))


def _integral_of(g: MonotoneFunction, tol: float) -> tuple[float, str]:
    if g.closed_form_integral is not None:
        return g.closed_form_integral, "closed_form"
    return quadrature_integral(g, tol), "quadrature"


def cmd_bound(config: RunConfig) -> _CmdResult:
    g = parse_fn_spec(_require(config.fn_spec, "--fn"))
    p = cumulative(_weights_from(config))
    report = bound_report(g, p, tol=config.tol or DEFAULT_QUAD_TOL)
    problems = report.invariant_violations()
    return (3 if problems else 0), report.to_dict(), problems, None


def cmd_enclose(config: RunConfig) -> _CmdResult:
    g = parse_fn_spec(_require(config.fn_spec, "--fn"))
    p = cumulative(_weights_from(config))
    if g.direction not in (DECREASING, CONSTANT, INCREASING):
        verdict = probe_monotonicity(g)
        raise NonMonotoneFunction(
            "enclose requires a monotone function", witness=verdict.witness
        )
    tol = config.tol or DEFAULT_QUAD_TOL
    right = riemann_sum_right(g, p)
    left = riemann_sum_left(g, p)
    integral, source = _integral_of(g, tol)
    lower, upper = (left, right) if g.direction == INCREASING else (right, left)
    slack = IDENTITY_TOL * max(1.0, abs(integral)) + tol
    contains = lower - slack <= integral <= upper + slack
    payload = {
        "lower": lower,
        "upper": upper,
        "integral": integral,
        "integral_source": source,
        "width": upper - lower,
        "contains_integral": contains,
    }
    problems = [] if contains else [
        f"integral {integral!r} escapes the enclosure [{lower!r}, {upper!r}]"
    ]
    return (3 if problems else 0), payload, problems, None


def cmd_abel(config: RunConfig) -> _CmdResult:
    g = parse_fn_spec(_require(config.fn_spec, "--fn"))
    p = cumulative(_weights_from(config))
    t_n = riemann_sum_right(g, p)
    value = abel_sum(g, p)
    terms = abel_terms(g, p)
    difference = value - t_n
    problems = []
    if abs(difference) > IDENTITY_TOL * max(1.0, abs(t_n)):
        problems.append(f"Abel route {value!r} disagrees with direct sum {t_n!r}")
    if g.direction in (DECREASING, CONSTANT) and terms and min(terms) < -IDENTITY_TOL:
        problems.append(f"negative Abel term {min(terms)!r} for a decreasing function")
    payload = {
        "abel_value": value,
        "t_n": t_n,
        "difference": difference,
        "n": p.n,
        "terms": terms,
    }
    return (3 if problems else 0), payload, problems, None


def cmd_transform_check(config: RunConfig) -> _CmdResult:
    f = parse_density_spec(_require(config.density_spec, "--density"))
    g = parse_fn_spec(_require(config.fn_spec, "--fn"))
    report = transform.pit_identity_check(f, g, tol=config.tol or DEFAULT_RESIDUAL_TOL)
    problems = [] if report.passed else [
        f"residual {report.residual!r} exceeds tolerance {report.tol!r}"
    ]
    return (3 if problems else 0), report.to_dict(), problems, None


_RELATION_SUMMARY = {
    "x_majorized_by_y": "x ≺ y (x is majorized by y)",
    "y_majorized_by_x": "y ≺ x (y is majorized by x)",
    "both": "x ≺ y and y ≺ x (permutations of each other)",
    "incomparable": "x and y are incomparable",
    "total_mismatch": "totals differ; majorization does not apply",
}


def cmd_majorize(config: RunConfig) -> _CmdResult:
    x = read_vector_file(_require(config.x_path, "--x"))
    y = read_vector_file(_require(config.y_path, "--y"))
    verdict = is_majorized(x, y)
    return 0, verdict.to_dict(), [], _RELATION_SUMMARY[verdict.relation]


def cmd_karamata(config: RunConfig) -> _CmdResult:
    x = read_vector_file(_require(config.x_path, "--x"))
    y = read_vector_file(_require(config.y_path, "--y"))
    g, label = parse_convex_spec(_require(config.fn_spec, "--fn"))
    report = karamata_check(g, x, y)
    payload = {
        "g": label,
        "sum_x": report.sum_x,
        "sum_y": report.sum_y,
        "margin": report.margin,
        "pass": report.holds,
    }
    problems = [] if report.holds else [
        f"margin {report.margin!r} is negative for majorized inputs"
    ]
    return (3 if problems else 0), payload, problems, None


def cmd_refine(config: RunConfig) -> _CmdResult:
    g = parse_fn_spec(_require(config.fn_spec, "--fn"))
    p = cumulative(_weights_from(config))
    if config.depth < 1:
        raise CliParseError(f"--depth must be >= 1, got {config.depth}")
    tol = config.tol or DEFAULT_QUAD_TOL
    values = refinement_chain(g, p, config.depth)
    integral, source = _integral_of(g, tol)
    rows = [
        {"n": p.n * 2**k, "t_n": v, "gap": integral - v}
        for k, v in enumerate(values)
    ]
    problems = []
    for prev, nxt in zip(values, values[1:]):
        if nxt < prev - IDENTITY_TOL:
            problems.append(f"refinement decreased the sum: {prev!r} -> {nxt!r}")
    payload = {"integral": integral, "integral_source": source, "rows": rows}
    return (3 if problems else 0), payload, problems, None


def cmd_catalog(config: RunConfig) -> _CmdResult:
    rows = []
    for spec in CATALOG_SPECS:
        g = parse_fn_spec(spec)
        rows.append(
            {
                "spec": spec,
                "formula": g.formula,
                "direction": g.direction,
                "integral": g.closed_form_integral,
            }
        )
    return 0, {"rows": rows}, [], None


_COMMANDS = {
    "bound": cmd_bound,
    "enclose": cmd_enclose,
    "abel": cmd_abel,
    "transform-check": cmd_transform_check,
    "majorize": cmd_majorize,
    "karamata": cmd_karamata,
    "refine": cmd_refine,
    "catalog": cmd_catalog,
}


# ---------------------------------------------------------------------------
# argument parsing and rendering


class _Parser(argparse.ArgumentParser):
    # raise instead of exiting so main() owns the exit-code contract
    def error(self, message: str) -> None:
        raise CliParseError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="monobound", description="Riemann-sum bounds for monotone functions on [0, 1]")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True
    for name, help_text in (
        ("bound", "full bound report for weights and a function"),
        ("enclose", "two-sided enclosure of the integral"),
        ("abel", "discrete integration-by-parts cross-check"),
        ("transform-check", "substitution identity residual for a density"),
        ("majorize", "majorization relation between two vectors"),
        ("karamata", "convex-sum inequality on a majorized pair"),
        ("refine", "bound sequence under repeated bisection"),
        ("catalog", "list catalog functions and their integrals"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--weights", metavar="FILE", help="weight file: CSV or JSON array")
        p.add_argument("--uniform", type=int, metavar="N", help="use N equal weights 1/N")
        p.add_argument("--fn", metavar="SPEC", help=f"function spec: {_FN_USAGE}")
        p.add_argument("--density", metavar="SPEC", help=f"density spec: {_DENSITY_USAGE}")
        p.add_argument("--x", metavar="FILE", help="left vector for majorize/karamata")
        p.add_argument("--y", metavar="FILE", help="right vector for majorize/karamata")
        p.add_argument("--tol", type=float, metavar="X", help="tolerance (default 1e-10; 1e-8 for transform-check)")
        p.add_argument("--depth", type=int, default=DEFAULT_DEPTH, metavar="D", help="bisection depth for refine")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument("--seed", type=int, metavar="S", help="seed for randomized helpers")
    return parser


def parse_args(argv: Sequence[str] | None = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(
        command=ns.command,
        weights_path=ns.weights,
        uniform_n=ns.uniform,
        x_path=ns.x,
        y_path=ns.y,
        fn_spec=ns.fn,
        density_spec=ns.density,
        tol=ns.tol,
        depth=ns.depth,
        output_format="json" if ns.json else "text",
        seed=ns.seed,
    )


def _fmt_scalar(value) -> str:
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def _table_lines(rows: list[dict]) -> list[str]:
    headers = list(rows[0].keys())
    cells = [[_fmt_scalar(row[h]) for h in headers] for row in rows]
    widths = [
        max(len(h), max(len(r[i]) for r in cells)) for i, h in enumerate(headers)
    ]
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip()]
    for r in cells:
        lines.append("  ".join(r[i].ljust(widths[i]) for i in range(len(headers))).rstrip())
    return lines


def render_text(payload) -> str:
    """Human-readable rendering with the same numeric formatting as JSON."""
    lines: list[str] = []
    for key, value in payload.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.extend(_table_lines(value))
        elif isinstance(value, (list, tuple)):
            lines.append(f"{key} = [{', '.join(_fmt_scalar(v) for v in value)}]")
        else:
            lines.append(f"{key} = {_fmt_scalar(value)}")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        config = parse_args(argv)
        code, payload, problems, summary = _COMMANDS[config.command](config)
    except CliParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (MonoboundError, ValueError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    for problem in problems:
        print(f"invariant violation: {problem}", file=sys.stderr)
    if config.output_format == "json":
        print(render_json(payload))
    else:
        if summary is not None:
            print(summary)
        print(render_text(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
