"""
Command line front end.

    tribquat gen QT 0 2 --at 1
    tribquat verify --identity all --n-max 20 --x-grid 0.5,1,2
    tribquat series --gf QT --order 4
    tribquat binet --x 1 --n 10
    tribquat matrix --n 5

Exit codes: 0 success, 1 identity failure, 2 usage error.
"""
import argparse
import dataclasses
import json
import sys
from fractions import Fraction
from typing import Any

from loguru import logger

from .binet import binet_value
from .binet import root_residuals
from .binet import solve_cubic
from .identities import DEFAULT_X_GRID
from .identities import Identity
from .identities import Plan
from .identities import verify_all
from .identities import verify_identity
from .matrixrep import mat_pow
from .matrixrep import qs_product_theorem
from .matrixrep import s_matrix
from .matrixrep import s_power_closed
from .problem import IndexOutOfDomain
from .problem import Problem
from .problem import UncaughtException
from .quaternion import Quaternion
from .quaternion import quat_eval_exact
from .ring import Poly
from .ring import poly_eval_exact
from .sequences import Kind
from .sequences import seq_range
from .sequences import sequence_term
from .series import generating_function
from .settings import Settings
from .settings import get_settings


SCHEMA_VERSION = "1"


@dataclasses.dataclass(frozen=True)
class OutputDoc:
    schema_version: str
    command: str
    payload: Any
    exit_code: int = dataclasses.field(default=0, compare=False)
    text: str = dataclasses.field(default="", compare=False, repr=False)  # the --format text rendering

    def to_json(self) -> dict:
        return {"schema_version": self.schema_version, "command": self.command, "payload": self.payload}


def parse_rational(text: str) -> Fraction:
    """'p/q' or a decimal string, converted exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as ex:
        raise argparse.ArgumentTypeError("not a rational number: {!r}".format(text)) from ex


def parse_positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError as ex:
        raise argparse.ArgumentTypeError("not a number: {!r}".format(text)) from ex
    if not value > 0:
        raise argparse.ArgumentTypeError("must be a positive real number, got {}".format(text))
    return value


def parse_positive_rational(text: str) -> Fraction:
    value = parse_rational(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be a positive real number, got {}".format(text))
    return value


def parse_grid(text: str) -> tuple[float, ...]:
    """A comma separated list of positive x values, empty for symbolic checks only."""
    return tuple(parse_positive_float(part) for part in text.split(",") if part.strip())


def _evaluate(value: Poly | Quaternion, at: Fraction):
    if isinstance(value, Poly):
        return poly_eval_exact(value, at)
    return quat_eval_exact(value, at)


def _label(kind: Kind, n: int) -> str:
    if kind.is_quaternion:
        return "Q_{},{}(x)".format(kind.scalar, n)
    return "{}_{}(x)".format(kind, n)


def cmd_gen(args: argparse.Namespace, settings: Settings) -> OutputDoc:
    kind = Kind(args.kind)
    values = seq_range(kind, args.lo, args.hi)
    if args.at is not None:
        values = [_evaluate(value, args.at) for value in values]

    payload = {
        "kind": kind.value,
        "range": [args.lo, args.hi],
        "at": None if args.at is None else str(args.at),
        "values": [value.to_json() if hasattr(value, "to_json") else str(value) for value in values],
    }
    lines = ["{} = {}".format(_label(kind, n), value) for n, value in enumerate(values, start=args.lo)]
    return OutputDoc(SCHEMA_VERSION, "gen", payload, text="\n".join(lines))


def cmd_verify(args: argparse.Namespace, settings: Settings) -> OutputDoc:
    if args.identity == "all":
        reports = verify_all(args.n_max, args.x_grid, settings=settings)
    else:
        plan = Plan(n_max=args.n_max, x_grid=args.x_grid, settings=settings)
        reports = [verify_identity(Identity(args.identity), plan)]

    passed = all(report.passed for report in reports)
    payload = {
        "n_max": args.n_max,
        "x_grid": list(args.x_grid),
        "passed": passed,
        "reports": [report.to_json() for report in reports],
    }

    lines = []
    for report in reports:
        lo, hi = report.range_checked
        status = "PASS" if report.passed else "FAIL at n={}".format(report.first_failure.index)
        lines.append("{:<18} [{}..{}] {}".format(report.identity_id, lo, hi, status))
    return OutputDoc(SCHEMA_VERSION, "verify", payload, exit_code=0 if passed else 1, text="\n".join(lines))


def cmd_series(args: argparse.Namespace, settings: Settings) -> OutputDoc:
    kind = Kind(args.gf)
    series = generating_function(kind, args.order, args.shift)

    payload = {"gf": kind.value, "order": args.order, "shift": args.shift, "coefficients": series.to_json()}
    lines = ["y^{}: {}".format(m, coefficient) for m, coefficient in enumerate(series.coeffs)]
    return OutputDoc(SCHEMA_VERSION, "series", payload, text="\n".join(lines))


def cmd_binet(args: argparse.Namespace, settings: Settings) -> OutputDoc:
    if args.n < 0:
        raise IndexOutOfDomain("Binet forms are stated for n >= 0, got n={}".format(args.n))
    roots = solve_cubic(float(args.x), settings=settings)

    rows = []
    for n in range(args.n + 1):
        row = {"n": n}
        for kind in Kind:
            exact = _evaluate(sequence_term(kind, n), args.x)
            binet = binet_value(kind, n, roots)
            row[kind.value] = {
                "exact": exact.to_json() if kind.is_quaternion else str(exact),
                "binet": binet.to_json() if kind.is_quaternion else [binet.real, binet.imag],
            }
        rows.append(row)

    payload = {"roots": roots.to_json(), "residuals": root_residuals(roots), "rows": rows}

    # exact columns are rendered as decimals in text, the JSON payload keeps them exact
    lines = ["alpha={} omega1={} omega2={}".format(*roots.as_tuple())]
    lines.append("{:>4} {:>24} {:>24} {:>24} {:>24}".format("n", "T exact", "T binet", "t exact", "t binet"))
    for row in rows:
        trib, lucas = row[Kind.TRIB.value], row[Kind.TRIB_LUCAS.value]
        lines.append(
            "{:>4} {:>24.12g} {:>24.12g} {:>24.12g} {:>24.12g}".format(
                row["n"],
                float(Fraction(trib["exact"])),
                trib["binet"][0],
                float(Fraction(lucas["exact"])),
                lucas["binet"][0],
            ),
        )
    return OutputDoc(SCHEMA_VERSION, "binet", payload, text="\n".join(lines))


def cmd_matrix(args: argparse.Namespace, settings: Settings) -> OutputDoc:
    power = mat_pow(s_matrix(), args.n)
    left, right = qs_product_theorem(args.n)

    payload = {"n": args.n, "s_power": power.to_json(), "closed_form": None, "closed_form_equal": None}
    consistent = left == right
    if args.n >= 1:
        closed = s_power_closed(args.n)
        payload["closed_form"] = closed.to_json()
        payload["closed_form_equal"] = closed == power
        consistent = consistent and closed == power
    payload["product_theorem"] = {"left": left.to_json(), "right": right.to_json(), "equal": left == right}

    lines = ["S^{}(x) =".format(args.n)]
    lines += ["  [{}]".format(", ".join(str(entry) for entry in row)) for row in power.rows]
    lines.append("closed form equal: {}".format(payload["closed_form_equal"]))
    lines.append("Q_S(x) S^{}(x) equal: {}".format(args.n, left == right))
    return OutputDoc(SCHEMA_VERSION, "matrix", payload, exit_code=0 if consistent else 1, text="\n".join(lines))


COMMANDS = {
    "gen": cmd_gen,
    "verify": cmd_verify,
    "series": cmd_series,
    "binet": cmd_binet,
    "matrix": cmd_matrix,
}


def add_common_flags(parser: argparse.ArgumentParser, fmt: Any, tol: Any):
    parser.add_argument("--format", choices=["json", "text"], default=fmt, help="Output format (default: json).")
    parser.add_argument("--tol", type=float, default=tol, help="Relative tolerance for numeric comparisons.")


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tribquat", description="Tribonacci quaternion polynomials.")
    add_common_flags(parser, fmt="json", tol=None)

    # accepted after the subcommand too, where they only override when given
    common = argparse.ArgumentParser(add_help=False)
    add_common_flags(common, fmt=argparse.SUPPRESS, tol=argparse.SUPPRESS)

    subparsers = parser.add_subparsers(dest="command", required=True)
    kinds = [kind.value for kind in Kind]

    gen = subparsers.add_parser("gen", parents=[common], help="Generate a range of sequence terms.")
    gen.add_argument("kind", choices=kinds)
    gen.add_argument("lo", type=int)
    gen.add_argument("hi", type=int)
    gen.add_argument("--at", type=parse_rational, default=None, help="Evaluate exactly at a rational x ('p/q').")

    verify = subparsers.add_parser("verify", parents=[common], help="Verify identities.")
    verify.add_argument("--identity", choices=["all"] + [identity.value for identity in Identity], default="all")
    verify.add_argument("--n-max", type=int, default=settings.n_max)
    verify.add_argument(
        "--x-grid",
        type=parse_grid,
        default=DEFAULT_X_GRID,
        help="Comma separated positive x values for numeric checks, empty for symbolic only.",
    )

    series = subparsers.add_parser("series", parents=[common], help="Expand a generating function.")
    series.add_argument("--gf", choices=kinds, default=Kind.TRIB_QUAT.value)
    series.add_argument("--order", type=int, default=settings.order)
    series.add_argument("--shift", type=int, default=None, help="Expand the generating function of terms n+m.")

    binet = subparsers.add_parser("binet", parents=[common], help="Compare Binet values with exact terms.")
    binet.add_argument(
        "--x",
        type=parse_positive_rational,
        required=True,
        help="Positive x, read exactly (0.1 is 1/10); the roots are found at its float value.",
    )
    binet.add_argument("--n", type=int, default=settings.n_max)

    matrix = subparsers.add_parser("matrix", parents=[common], help="Print S^n(x) and the Q_S(x) product.")
    matrix.add_argument("--n", type=int, default=1)

    return parser


def configure_logging(level: str):
    logger.remove()
    logger.add(sys.stderr, level=level)


def emit(doc: OutputDoc, fmt: str):
    if fmt == "text":
        sys.stdout.write(doc.text + "\n")
    else:
        sys.stdout.write(json.dumps(doc.to_json(), indent=2) + "\n")


def main(argv: list[str] | None = None) -> int:
    settings = get_settings()
    configure_logging(settings.log_level)

    args = build_parser(settings).parse_args(argv)
    if args.tol is not None:
        settings = dataclasses.replace(settings, tol_rel=args.tol)

    try:
        doc = COMMANDS[args.command](args, settings)

    except Problem as ex:
        logger.error(ex)
        problem = ex

    except Exception as ex:
        logger.exception(ex)
        # convert uncaught errors into Problems, referencing the Error type in the detail
        problem = UncaughtException(ex.__class__.__name__)

    else:
        emit(doc, args.format)
        return doc.exit_code

    if args.format == "text":
        sys.stderr.write("error: {}: {}\n".format(problem.title, problem.detail))
    else:
        error = {"schema_version": SCHEMA_VERSION, "command": args.command, "error": problem.to_dict()}
        sys.stdout.write(json.dumps(error, indent=2) + "\n")
    return problem.status
