# -*- coding: UTF-8 -*-
"""
Command line interface: ``laplace-coeffs``

Subcommands:

* ``coeffs``: scaled coefficients of a problem file by one or all
  routes, or, without ``--input``, a seeded sweep checking that all
  routes agree on random problems
* ``gamma``: Stirling coefficients by the pipeline and the closed forms
* ``igamma``: the polynomials Q_n(mu) and the coefficients C_n(0)
* ``tables``: Stirling, Bell and potential triangles
* ``verify``: the floating-point sweeps, as CSV

Exit codes are 0 on success, 1 for invalid input, 2 when exact routes
disagree and 3 when a numeric check fails.
"""

import argparse
import csv
import io
import json
import os
import random
import sys
from dataclasses import dataclass
from logging import Formatter, StreamHandler, getLogger
from typing import Optional

from ._version import __version__
from .bell import dump_tables
from .coefficients import (
    G1Route,
    LaplaceProblem,
    coeffs_g1,
    compute_all,
    compute_route,
    ensure_agreement,
    random_problem,
    reversion_oracle,
)
from .constants import (
    DEFAULT_IGAMMA_GRID,
    DEFAULT_LAMBDA_MAX,
    DEFAULT_LAMBDA_MIN,
    DEFAULT_LOG_LEVEL,
    DEFAULT_POINTS,
    DEFAULT_VERIFY_TERMS,
    LOG_LEVEL_ENV,
    MIN_FIT_POINTS,
    ROUTE_SWEEP_PROBLEMS,
)
from .decorators import intercept
from .exceptions import (
    InvalidProblemError,
    NumericDomainError,
    QuadratureError,
    RouteDisagreementError,
    VerificationError,
)
from .numeric import (
    BuiltinIntegral,
    GAMMA_MAX_ARG,
    StirlingForm,
    log_grid,
    verify_igamma_diagonal,
    verify_laplace_order,
    verify_stirling_series,
    write_csv,
)
from .rational import format_rational, stirling_first, stirling_second
from .special import (
    DiagonalForm,
    StirlingVariant,
    diagonal_coefficients,
    gamma_problem,
    q_polynomial,
    stirling_closed_form,
    stirling_via_pipeline,
)


log = getLogger(__name__)


COMMANDS = ("coeffs", "gamma", "igamma", "tables", "verify")
ROUTE_CHOICES = ("direct", "wojdylo", "comtet", "all")
FORMAT_CHOICES = ("table", "json", "csv")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_DISAGREE = 2
EXIT_VERIFY = 3

# n_max when the command line does not give one
DEFAULT_N_MAX = {
    "gamma": 4,
    "igamma": 4,
    "tables": 6,
    "verify": DEFAULT_VERIFY_TERMS,
}


@dataclass(frozen=True)
class CliConfig(object):
    """Validated command line settings

    ``n_max`` of None means the command's default, or for ``coeffs``
    the value in the problem file. ``format`` of None means ``csv`` for
    ``verify`` and ``table`` otherwise. ``route`` applies to ``coeffs``
    with a problem file and ``seed`` to ``coeffs`` without one; other
    commands reject them rather than ignore them.
    """

    command: str
    input_path: Optional[str] = None
    route: Optional[str] = None
    n_max: Optional[int] = None
    format: Optional[str] = None
    pad: bool = False
    lambda_min: float = DEFAULT_LAMBDA_MIN
    lambda_max: float = DEFAULT_LAMBDA_MAX
    points: int = DEFAULT_POINTS
    seed: Optional[int] = None
    out: Optional[str] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InvalidProblemError(
                "unknown command {!r}".format(self.command)
            )
        if self.route is not None and self.route not in ROUTE_CHOICES:
            raise InvalidProblemError("unknown route {!r}".format(self.route))
        sweep = self.command == "coeffs" and self.input_path is None
        if self.route is not None and (self.command != "coeffs" or sweep):
            raise InvalidProblemError(
                "--route only applies to coeffs with --input"
            )
        if self.seed is not None and not sweep:
            raise InvalidProblemError(
                "--seed only applies to coeffs without --input"
            )
        if self.format is not None and self.format not in FORMAT_CHOICES:
            raise InvalidProblemError("unknown format {!r}".format(self.format))
        if self.n_max is not None and self.n_max < 0:
            raise InvalidProblemError(
                "--n-max must be nonnegative, got {}".format(self.n_max)
            )
        if self.command == "verify" and self.n_max == 0:
            raise InvalidProblemError("verify needs --n-max of at least 1")
        if not 0 < self.lambda_min < self.lambda_max:
            raise InvalidProblemError(
                "need 0 < --lambda-min < --lambda-max, got {} and {}".format(
                    self.lambda_min, self.lambda_max
                )
            )
        if self.points < MIN_FIT_POINTS:
            raise InvalidProblemError(
                "--points must be at least {} to fit an order".format(
                    MIN_FIT_POINTS
                )
            )

    @property
    def output_format(self):
        if self.format is not None:
            return self.format
        return "csv" if self.command == "verify" else "table"

    @property
    def sweep_seed(self):
        return 0 if self.seed is None else self.seed

    def n_max_or_default(self):
        if self.n_max is not None:
            return self.n_max
        return DEFAULT_N_MAX[self.command]

    @classmethod
    def from_namespace(cls, namespace):
        return cls(
            command=namespace.command,
            input_path=namespace.input,
            route=namespace.route,
            n_max=namespace.n_max,
            format=namespace.format,
            pad=namespace.pad,
            lambda_min=namespace.lambda_min,
            lambda_max=namespace.lambda_max,
            points=namespace.points,
            seed=namespace.seed,
            out=namespace.out,
        )


class _ArgumentParser(argparse.ArgumentParser):
    """Report usage errors as invalid input rather than exiting with 2"""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise InvalidProblemError(message)


def build_parser():
    parser = _ArgumentParser(
        prog="laplace-coeffs",
        description="Exact coefficients of Laplace-type asymptotic expansions",
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + __version__
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    helps = {
        "coeffs": "scaled coefficients of a problem file, or a route sweep",
        "gamma": "Stirling coefficients by every route",
        "igamma": "Q_n(mu) and C_n(0) of the incomplete gamma function",
        "tables": "Stirling, Bell and potential triangles",
        "verify": (
            "floating-point checks of the expansions; the double-precision "
            "gamma function stops at {:g}".format(GAMMA_MAX_ARG)
        ),
    }
    for command in COMMANDS:
        sub = subparsers.add_parser(command, help=helps[command])
        sub.add_argument("--input", metavar="PATH", help="problem JSON file")
        sub.add_argument("--route", choices=ROUTE_CHOICES)
        sub.add_argument("--n-max", dest="n_max", type=int, metavar="N")
        sub.add_argument("--format", choices=FORMAT_CHOICES)
        sub.add_argument(
            "--pad",
            action="store_true",
            help="fill short coefficient lists with zeros",
        )
        sub.add_argument(
            "--lambda-min",
            dest="lambda_min",
            type=float,
            default=DEFAULT_LAMBDA_MIN,
            metavar="F",
        )
        sub.add_argument(
            "--lambda-max",
            dest="lambda_max",
            type=float,
            default=DEFAULT_LAMBDA_MAX,
            metavar="F",
        )
        sub.add_argument(
            "--points", type=int, default=DEFAULT_POINTS, metavar="N"
        )
        sub.add_argument(
            "--seed",
            type=int,
            metavar="N",
            help="seed of the random route sweep",
        )
        sub.add_argument("--out", metavar="PATH", help="write output here")
    return parser


def configure_logging():
    """Send package logs to stderr at $LAPLACE_LOG_LEVEL"""
    package_log = getLogger(__name__.rpartition(".")[0])
    level = os.environ.get(LOG_LEVEL_ENV, DEFAULT_LOG_LEVEL).upper()
    if not any(getattr(h, "_laplace_cli", False) for h in package_log.handlers):
        handler = StreamHandler(sys.stderr)
        handler.setFormatter(Formatter("%(levelname)s %(name)s: %(message)s"))
        handler._laplace_cli = True
        package_log.addHandler(handler)
    try:
        package_log.setLevel(level)
    except ValueError:
        package_log.setLevel(DEFAULT_LOG_LEVEL)
        log.warning("ignoring unknown log level %r", level)


def render_json(document):
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def render_table(header, rows):
    """Left-aligned columns separated by two spaces"""
    cells = [list(header)] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    return "".join(
        "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
        + "\n"
        for row in cells
    )


def render_csv(header, rows):
    stream = io.StringIO()
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return stream.getvalue()


class _Output(object):
    """What a command produced, renderable in every format"""

    def __init__(self, document, header, rows, footer=""):
        self.document = document
        self.header = header
        self.rows = rows
        self.footer = footer

    def render(self, fmt):
        if fmt == "json":
            return render_json(self.document)
        if fmt == "csv":
            return render_csv(self.header, self.rows)
        return render_table(self.header, self.rows) + self.footer


def _verdict(what, results):
    """Return AGREE, or re-raise the disagreement after logging it"""
    try:
        ensure_agreement(what, results)
    except RouteDisagreementError:
        log.error("%s: DISAGREE", what)
        raise
    return "AGREE"


@intercept(
    catch=(OSError, ValueError),
    reraise=InvalidProblemError,
    err_msg="cannot read problem file: {exc}",
)
def _read_document(path):
    with open(path) as stream:
        return json.load(stream)


def load_problem(config):
    """Read the problem file, applying --pad and --n-max overrides"""
    doc = _read_document(config.input_path)
    if isinstance(doc, dict):
        doc = dict(doc)
        if config.pad:
            doc["pad"] = True
        if config.n_max is not None:
            doc["n_max"] = config.n_max
    return LaplaceProblem.from_dict(doc)


def _selected_routes(config):
    if config.route in (None, "all"):
        return ("direct", "wojdylo", "comtet")
    return (config.route,)


def _g1_results(problem):
    return {
        "g1_comtet": coeffs_g1(problem, G1Route.COMTET).c_sc,
        "g1_wojdylo": coeffs_g1(problem, G1Route.WOJDYLO).c_sc,
        "reversion": reversion_oracle(problem).c_sc,
    }


def run_coeffs(config):
    if config.input_path is None:
        return run_route_sweep(config)
    problem = load_problem(config)
    routes = _selected_routes(config)
    results = {route: compute_route(problem, route) for route in routes}
    columns = {route: result.c_sc for route, result in results.items()}
    document = {
        "problem": problem.to_dict(),
        "routes": {name: result.to_dict() for name, result in results.items()},
        "warnings": list(problem.warnings),
    }
    footer = ""
    if len(routes) > 1:
        document["verdict"] = _verdict("scaled coefficients", columns)
        footer = "verdict: {}\n".format(document["verdict"])
    header = ["n", "exponent"] + list(routes)
    rows = [
        [n, format_rational(problem.exponent(n))]
        + [format_rational(columns[route][n]) for route in routes]
        for n in range(problem.n_max + 1)
    ]
    return _Output(document, header, rows, footer)


def run_route_sweep(config):
    """Check route agreement on seeded random problems

    Every fourth problem has g = 1 and also runs the single-sum routes
    and the reversion oracle.
    """
    rng = random.Random(config.sweep_seed)
    counts = {"general": 0, "g1": 0}
    for i in range(ROUTE_SWEEP_PROBLEMS):
        g1 = i % 4 == 0
        problem = random_problem(rng, n_max=config.n_max, g1=g1)
        results = compute_all(problem)
        if g1:
            columns = {"direct": results["direct"].c_sc}
            columns.update(_g1_results(problem))
            _verdict("g = 1 routes", columns)
            counts["g1"] += 1
        else:
            counts["general"] += 1
    document = {
        "seed": config.sweep_seed,
        "problems": ROUTE_SWEEP_PROBLEMS,
        "g1_problems": counts["g1"],
        "verdict": "AGREE",
    }
    rows = [[config.sweep_seed, ROUTE_SWEEP_PROBLEMS, counts["g1"], "AGREE"]]
    header = ["seed", "problems", "g1_problems", "verdict"]
    return _Output(document, header, rows)


def run_gamma(config):
    n_max = config.n_max_or_default()
    columns = {
        "pipeline": stirling_via_pipeline(n_max).gamma,
        "pipeline_exp": stirling_via_pipeline(n_max, problem="exp").gamma,
    }
    for variant in StirlingVariant:
        columns[variant.value] = tuple(
            stirling_closed_form(n, variant) for n in range(n_max + 1)
        )
    verdict = _verdict("Stirling coefficients", columns)
    names = list(columns)
    document = {
        "gamma": {
            name: [format_rational(v) for v in values]
            for name, values in columns.items()
        },
        "verdict": verdict,
    }
    rows = [
        [n] + [format_rational(columns[name][n]) for name in names]
        for n in range(n_max + 1)
    ]
    return _Output(
        document, ["n"] + names, rows, "verdict: {}\n".format(verdict)
    )


def run_igamma(config):
    n_max = config.n_max_or_default()
    polynomials = [q_polynomial(n) for n in range(n_max + 1)]
    reduced = diagonal_coefficients(n_max, DiagonalForm.REDUCED).c0
    full = diagonal_coefficients(n_max, DiagonalForm.FULL).c0
    verdict = _verdict("C_n(0)", {"reduced": reduced, "full": full})
    document = {
        "q_polynomials": [
            [format_rational(c) for c in poly.q] for poly in polynomials
        ],
        "diagonal": [format_rational(c) for c in reduced],
        "verdict": verdict,
    }
    rows = [
        [n, str(polynomials[n]), format_rational(reduced[n])]
        for n in range(n_max + 1)
    ]
    return _Output(
        document,
        ["n", "Q_n(mu)", "C_n(0)"],
        rows,
        "verdict: {}\n".format(verdict),
    )


def run_tables(config):
    n_max = config.n_max_or_default()
    if config.input_path is not None:
        problem = load_problem(config)
        n_max = problem.n_max
    else:
        problem = gamma_problem(n_max)
    rho = -problem.exponent(n_max)
    document = dump_tables(problem.normalized(), n_max, rho)
    document["stirling_first"] = [
        [str(stirling_first(n, k)) for k in range(n + 1)]
        for n in range(n_max + 1)
    ]
    document["stirling_second"] = [
        [str(stirling_second(n, k)) for k in range(n + 1)]
        for n in range(n_max + 1)
    ]
    rows = []
    for name in (
        "stirling_first",
        "stirling_second",
        "bell",
        "potential_integer",
    ):
        for n, row in enumerate(document[name]):
            rows.extend([name, n, k, value] for k, value in enumerate(row))
    for k, value in enumerate(document["potential"]["row"]):
        rows.append(["potential", document["potential"]["rho"], k, value])
    return _Output(document, ["table", "n", "k", "value"], rows)


def run_verify(config):
    """Run the numeric sweeps; failures are raised after output is written"""
    n_max = config.n_max_or_default()
    grid = log_grid(config.lambda_min, config.lambda_max, config.points)
    reports = [
        verify_stirling_series(grid, n_max, StirlingForm.GAMMA),
        verify_stirling_series(grid, n_max, StirlingForm.FACTORIAL),
        verify_igamma_diagonal(DEFAULT_IGAMMA_GRID, n_max),
    ]
    reports.extend(
        verify_laplace_order(integral, grid, n_max)
        for integral in BuiltinIntegral
    )
    stream = io.StringIO()
    write_csv(reports, stream)
    output = _Output(
        {"reports": [report.summary() for report in reports]},
        ["sweep", "N", "fitted_order", "expected_order", "passed"],
        [
            [
                report.name,
                n,
                "{:.4f}".format(report.fitted_order[n]),
                "{:.4f}".format(report.expected_order[n]),
                report.passed,
            ]
            for report in reports
            for n in report.terms
        ],
    )
    output.csv_text = stream.getvalue()
    output.reports = reports
    return output


RUNNERS = {
    "coeffs": run_coeffs,
    "gamma": run_gamma,
    "igamma": run_igamma,
    "tables": run_tables,
    "verify": run_verify,
}


def _emit(config, text):
    if config.out is None:
        sys.stdout.write(text)
        return
    with open(config.out, "w") as stream:
        stream.write(text)


def run(config):
    """Execute a command and return its exit status"""
    try:
        output = RUNNERS[config.command](config)
        fmt = config.output_format
        if config.command == "verify" and fmt == "csv":
            text = output.csv_text
        else:
            text = output.render(fmt)
        _emit(config, text)
        if config.command == "verify":
            failures = [
                message
                for report in output.reports
                for message in report.failures()
            ]
            if failures:
                raise VerificationError("; ".join(failures))
    except (InvalidProblemError, NumericDomainError) as exc:
        sys.stderr.write("error: {}\n".format(exc))
        return EXIT_INVALID
    except RouteDisagreementError as exc:
        sys.stderr.write("DISAGREE: {}\n".format(exc))
        return EXIT_DISAGREE
    except (VerificationError, QuadratureError) as exc:
        sys.stderr.write("verification failed: {}\n".format(exc))
        return EXIT_VERIFY
    except OSError as exc:
        sys.stderr.write("error: {}\n".format(exc))
        return EXIT_INVALID
    return EXIT_OK


def main(argv=None):
    configure_logging()
    try:
        namespace = build_parser().parse_args(argv)
        config = CliConfig.from_namespace(namespace)
    except InvalidProblemError as exc:
        sys.stderr.write("error: {}\n".format(exc))
        return EXIT_INVALID
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
