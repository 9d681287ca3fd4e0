# -*- coding: UTF-8 -*-
"""
Floating-point checks of the exact expansions

The exact layer never touches floats. This module converts its
rationals at the last moment and compares the resulting partial sums
with independent references: adaptive Gauss-Kronrod quadrature of the
integrals themselves, and high-precision ``mpmath`` values of the
gamma function and of Gamma(m, m)/Gamma(m).

Each sweep produces a :any:`VerificationReport` holding the error of
every partial sum on a grid of large parameters, the bound it must
respect (twice the first omitted term) and the fitted decay order.
"""

import csv
import enum
import heapq
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from logging import getLogger
from typing import NamedTuple

import mpmath
import numpy as np

from .coefficients import coeffs_direct
from .constants import (
    CHECKED_IGAMMA_TERMS,
    CHECKED_LAPLACE_TERMS,
    CHECKED_STIRLING_TERMS,
    DEFAULT_MP_DPS,
    IGAMMA_FIT_SPAN,
    MIN_FIT_POINTS,
    MIN_FIT_SPAN,
    MP_DPS_ENV,
    OMITTED_TERM_FACTOR,
    ORDER_TOLERANCE,
    QUAD_MAX_INTERVALS,
    QUAD_REL_TOL,
    TAIL_CUT_RATIO,
)
from .decorators import export
from .exceptions import NumericDomainError, QuadratureError, VerificationError
from .special import diagonal_coefficients, gamma_problem, stirling_via_pipeline


log = getLogger(__name__)


# Lanczos approximation with g = 6.02468..., N = 13, as used by Boost
# and scipy; the sum is pre-scaled by exp(-g).
LANCZOS_G = 6.024680040776729583740234375
LANCZOS_NUM = np.array(
    [
        0.006061842346248906525783753964555936883222,
        0.5098416655656676188125178644804694509993,
        19.51992788247617482847860966235652136208,
        449.9445569063168119446858607650988409623,
        6955.999602515376140356310115515198987526,
        75999.29304014542649875303443598909137092,
        601859.6171681098786670226533699352302507,
        3481712.15498064590882071018964774556468,
        14605578.08768506808414169982791359218571,
        43338889.32467613834773723740590533316085,
        86363131.28813859145546927288977868422342,
        103794043.1163445451906271053616070238554,
        56906521.91347156388090791033559122686859,
    ]
)
LANCZOS_DENOM = np.array(
    [
        1.0,
        66.0,
        1925.0,
        32670.0,
        357423.0,
        2637558.0,
        13339535.0,
        45995730.0,
        105258076.0,
        150917976.0,
        120543840.0,
        39916800.0,
        0.0,
    ]
)
# Gamma(x) overflows a double just above this
GAMMA_MAX_ARG = 171.6


@export
def gamma_numeric(x):
    """Gamma(x) for real x > 0 in double precision

    The Lanczos sum is accurate to about 1e-13 relative. The domain
    ends at GAMMA_MAX_ARG = 171.6, where Gamma(x) passes the largest
    double (about 1.8e308); larger arguments, up to 200 and beyond,
    need ``mpmath.loggamma``, which the Stirling references use.

    :raises NumericDomainError: for x <= 0
    :raises OverflowError: when Gamma(x) exceeds the double range
    """
    x = float(x)
    if not x > 0:
        raise NumericDomainError("gamma_numeric needs x > 0, got {}".format(x))
    if x > GAMMA_MAX_ARG:
        raise OverflowError("Gamma({}) is not representable".format(x))
    lanczos_sum = np.polyval(LANCZOS_NUM, x) / np.polyval(LANCZOS_DENOM, x)
    zgh = x + LANCZOS_G - 0.5
    # split the power so large x does not overflow halfway
    half_power = (zgh / math.e) ** ((x - 0.5) / 2)
    return float(lanczos_sum * half_power * half_power)


# Gauss-Kronrod 7/15 nodes on [-1, 1]; the Gauss nodes are xgk[1::2]
_XGK = np.array(
    [
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144845693013,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.0,
    ]
)
_WGK = np.array(
    [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
    ]
)
_WG = np.array(
    [
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327,
    ]
)
# Weights of the symmetric pairs, then the center
_KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[:-1], _WGK[-1:]])
_GAUSS_WEIGHTS = np.zeros(15)
_GAUSS_WEIGHTS[[1, 3, 5]] = _WG[:3]
_GAUSS_WEIGHTS[[8, 10, 12]] = _WG[:3]
_GAUSS_WEIGHTS[14] = _WG[3]
_UNIT_NODES = np.concatenate([-_XGK[:-1], _XGK[:-1], [0.0]])


@export
class Domain(enum.Enum):
    HALF_LINE = "half_line"
    UNIT_INTERVAL = "unit_interval"


@export
class QuadratureResult(NamedTuple):
    """Outcome of :any:`quadrature`

    ``err_bound`` includes the analytic tail bound for half-line
    integrals. ``converged`` is false when the subdivision budget ran
    out; ``value`` is then the best estimate.
    """

    value: float
    err_bound: float
    converged: bool
    intervals: int
    tail_bound: float = 0.0


def _evaluate(integrand, x):
    try:
        values = np.asarray(integrand(x), dtype=float)
        if values.shape == x.shape:
            return values
    except (TypeError, ValueError):
        pass
    return np.array([integrand(float(point)) for point in x], dtype=float)


def _kronrod_panel(integrand, a, b):
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    values = _evaluate(integrand, center + half * _UNIT_NODES)
    kronrod = half * float(np.dot(_KRONROD_WEIGHTS, values))
    gauss = half * float(np.dot(_GAUSS_WEIGHTS, values))
    return kronrod, abs(kronrod - gauss)


def _adaptive(integrand, a, b, tol, abs_tol, max_intervals):
    value, err = _kronrod_panel(integrand, a, b)
    heap = [(-err, a, b, value, err)]
    total, total_err = value, err
    while total_err > max(abs_tol, tol * abs(total)):
        if len(heap) >= max_intervals:
            log.warning(
                "quadrature on [%g, %g] stopped after %d intervals "
                "(error %.3g)",
                a,
                b,
                len(heap),
                total_err,
            )
            return total, total_err, False, len(heap)
        _, left, right, value, err = heapq.heappop(heap)
        middle = 0.5 * (left + right)
        if not left < middle < right:
            return total, total_err, False, len(heap) + 1
        total -= value
        total_err -= err
        for lo, hi in ((left, middle), (middle, right)):
            sub_value, sub_err = _kronrod_panel(integrand, lo, hi)
            heapq.heappush(heap, (-sub_err, lo, hi, sub_value, sub_err))
            total += sub_value
            total_err += sub_err
    values = [entry[3] for entry in heap]
    errors = [entry[4] for entry in heap]
    return math.fsum(values), math.fsum(errors), True, len(heap)


def _tail_cut(integrand, ratio):
    """Return x* where the integrand has fallen below ratio * peak"""
    cut = 1.0
    peak = 0.0
    for _ in range(64):
        samples = _evaluate(integrand, np.linspace(0.0, cut, 257)[1:])
        peak = max(peak, float(np.max(samples)))
        if peak > 0 and samples[-1] <= ratio * peak:
            return cut, peak
        cut *= 2.0
    raise QuadratureError(
        "integrand does not decay on the half line (checked up to {:g})".format(
            cut
        )
    )


def _tail_bound(integrand, cut):
    """Bound the integral beyond the cut by an exponential envelope

    The decay rate is the backward secant slope of log F over
    [cut/2, cut]; for log-concave integrands the tail lies below
    F(cut) exp(-rate (x - cut)).
    """
    inner, outer = _evaluate(integrand, np.array([0.5 * cut, cut]))
    if outer <= 0.0:
        return 0.0
    rate = (math.log(inner) - math.log(outer)) / (0.5 * cut)
    if rate <= 0.0:
        raise QuadratureError("integrand is not decaying at the tail cut")
    return float(outer / rate)


@export
def quadrature(
    integrand,
    domain=Domain.HALF_LINE,
    tol=QUAD_REL_TOL,
    abs_tol=0.0,
    max_intervals=QUAD_MAX_INTERVALS,
):
    """Integrate over (0, inf) or (0, 1) by adaptive Gauss-Kronrod 7/15

    The panel with the largest error estimate |K15 - G7| is bisected
    until the summed estimate is below ``max(abs_tol, tol * |value|)``.
    On the half line the integral is cut where the integrand drops
    below 1e-18 of its peak, and the remainder is bounded analytically
    and added to ``err_bound``.

    The integrand should accept a numpy array; scalar-only callables
    are evaluated point by point.

    :rtype: QuadratureResult
    """
    domain = Domain(domain)
    if domain is Domain.UNIT_INTERVAL:
        value, err, converged, intervals = _adaptive(
            integrand, 0.0, 1.0, tol, abs_tol, max_intervals
        )
        return QuadratureResult(value, err, converged, intervals)
    cut, _ = _tail_cut(integrand, TAIL_CUT_RATIO)
    tail = _tail_bound(integrand, cut)
    value, err, converged, intervals = _adaptive(
        integrand, 0.0, cut, tol, abs_tol, max_intervals
    )
    return QuadratureResult(value, err + tail, converged, intervals, tail)


@export
def partial_sum(problem, coefficients, lam, n_terms):
    """sum_{n<N} Gamma((n+beta)/alpha) c_n lambda^(-(n+beta)/alpha)

    with c_n = c_sc[n] / (alpha a_0^((n+beta)/alpha)).

    :raises NumericDomainError: if a_0 <= 0 or lambda <= 0
    """
    if problem.a[0] <= 0:
        raise NumericDomainError("numeric evaluation needs a_0 > 0")
    if not lam > 0:
        raise NumericDomainError("lambda must be positive, got {}".format(lam))
    if n_terms > len(coefficients):
        raise NumericDomainError(
            "{} terms requested but only {} coefficients known".format(
                n_terms, len(coefficients)
            )
        )
    alpha = float(problem.alpha)
    a_0 = float(problem.a[0])
    terms = []
    for n in range(n_terms):
        exponent = float(problem.exponent(n))
        c_n = float(coefficients[n]) / (alpha * a_0 ** exponent)
        terms.append(gamma_numeric(exponent) * c_n * lam ** -exponent)
    return math.fsum(terms)


@export
def fit_order(xs, errors, min_points=MIN_FIT_POINTS, min_span=MIN_FIT_SPAN):
    """Least-squares slope of log|error| against log x

    Zero errors (exact agreement) are dropped before fitting.

    :raises NumericDomainError: with fewer than ``min_points`` usable
        points or a grid spanning less than a factor ``min_span``
    """
    xs = np.asarray(xs, dtype=float)
    errors = np.abs(np.asarray(errors, dtype=float))
    usable = np.isfinite(errors) & (errors > 0) & (xs > 0)
    xs, errors = xs[usable], errors[usable]
    if len(xs) < min_points:
        raise NumericDomainError(
            "need at least {} nonzero errors to fit an order, got {}".format(
                min_points, len(xs)
            )
        )
    if xs.max() / xs.min() < min_span:
        raise NumericDomainError(
            "grid spans a factor {:.3g}, need {:g}".format(
                xs.max() / xs.min(), min_span
            )
        )
    slope, _ = np.polyfit(np.log(xs), np.log(errors), 1)
    return float(slope)


@export
@dataclass
class VerificationReport(object):
    """Errors of partial sums on a grid of large parameters

    Matrices are indexed ``[grid point][term count]`` with term counts
    ``terms``. ``bounds`` is the allowed error: the factor times the
    first omitted term, plus the reference's own error estimate.
    Orders are fitted on ``abs_errors`` multiplied by ``order_scale``.
    """

    name: str
    grid: list
    terms: list
    reference: list
    reference_error: list
    partial_sums: list
    abs_errors: list
    rel_errors: list
    bounds: list
    expected_order: dict
    checked_terms: tuple
    order_scale: list = None
    min_span: float = MIN_FIT_SPAN
    fitted_order: dict = field(default_factory=dict)

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.grid, self.grid[1:])):
            raise NumericDomainError("grid must be strictly increasing")
        if self.order_scale is None:
            self.order_scale = [1.0] * len(self.grid)
        for j, n_terms in enumerate(self.terms):
            errors = [
                row[j] * scale
                for row, scale in zip(self.abs_errors, self.order_scale)
            ]
            try:
                self.fitted_order[n_terms] = fit_order(
                    self.grid, errors, min_span=self.min_span
                )
            except NumericDomainError as exc:
                log.info("%s: no order for N=%d: %s", self.name, n_terms, exc)
                self.fitted_order[n_terms] = float("nan")

    def failures(self, tolerance=ORDER_TOLERANCE):
        """Return a list of human-readable acceptance failures"""
        messages = []
        for i, point in enumerate(self.grid):
            for j, n_terms in enumerate(self.terms):
                if self.abs_errors[i][j] > self.bounds[i][j]:
                    messages.append(
                        "{}: error {:.3e} at x={:g}, N={} "
                        "exceeds {:.3e}".format(
                            self.name,
                            self.abs_errors[i][j],
                            point,
                            n_terms,
                            self.bounds[i][j],
                        )
                    )
        for n_terms in self.checked_terms:
            if n_terms not in self.fitted_order:
                continue
            fitted = self.fitted_order[n_terms]
            expected = self.expected_order[n_terms]
            if not abs(fitted - expected) <= tolerance:
                messages.append(
                    "{}: fitted order {:.3f} for N={} is not within {} "
                    "of {:.3f}".format(
                        self.name, fitted, n_terms, tolerance, expected
                    )
                )
        return messages

    @property
    def passed(self):
        return not self.failures()

    def check(self, tolerance=ORDER_TOLERANCE):
        """Raise VerificationError if any acceptance bound is violated"""
        messages = self.failures(tolerance)
        if messages:
            raise VerificationError("; ".join(messages), report=self)
        return self

    def rows(self):
        """Yield one dict per (grid point, N) for CSV output"""
        for i, point in enumerate(self.grid):
            for j, n_terms in enumerate(self.terms):
                yield {
                    "sweep": self.name,
                    "lambda": point,
                    "N": n_terms,
                    "reference": self.reference[i],
                    "partial_sum": self.partial_sums[i][j],
                    "abs_err": self.abs_errors[i][j],
                    "rel_err": self.rel_errors[i][j],
                    "bound": self.bounds[i][j],
                }

    def summary(self):
        return {
            "name": self.name,
            "grid": list(self.grid),
            "fitted_order": {
                str(n): _json_float(v) for n, v in self.fitted_order.items()
            },
            "expected_order": {
                str(n): _json_float(v) for n, v in self.expected_order.items()
            },
            "checked_terms": list(self.checked_terms),
            "failures": self.failures(),
            "passed": self.passed,
        }


def _json_float(value):
    return None if math.isnan(value) else value


CSV_COLUMNS = (
    "sweep",
    "lambda",
    "N",
    "reference",
    "partial_sum",
    "abs_err",
    "rel_err",
    "bound",
)


@export
def write_csv(reports, stream):
    """Write the rows of several reports as one CSV table"""
    writer = csv.DictWriter(stream, fieldnames=CSV_COLUMNS)
    writer.writeheader()
    for report in reports:
        for row in report.rows():
            writer.writerow(
                {
                    key: (repr(value) if isinstance(value, float) else value)
                    for key, value in row.items()
                }
            )


@export
def log_grid(lambda_min, lambda_max, points):
    """Log-spaced grid from lambda_min to lambda_max inclusive"""
    if not 0 < lambda_min < lambda_max:
        raise NumericDomainError(
            "need 0 < lambda_min < lambda_max, got {} and {}".format(
                lambda_min, lambda_max
            )
        )
    if points < 2:
        raise NumericDomainError("need at least 2 grid points")
    return [float(x) for x in np.geomspace(lambda_min, lambda_max, points)]


def mp_dps():
    """Working precision of the mpmath references"""
    try:
        return int(os.environ.get(MP_DPS_ENV, DEFAULT_MP_DPS))
    except ValueError:
        log.warning("ignoring malformed %s", MP_DPS_ENV)
        return DEFAULT_MP_DPS


def _context():
    ctx = mpmath.MPContext()
    ctx.dps = mp_dps()
    return ctx


def _mpf(ctx, value):
    value = Fraction(value)
    return ctx.mpf(value.numerator) / value.denominator


def _sweep(function, grid, workers):
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(function, grid))
    return [function(point) for point in grid]


def _term_counts(n_max):
    if n_max < 1:
        raise NumericDomainError(
            "need at least one term to check, got n_max = {}".format(n_max)
        )
    return list(range(1, n_max + 1))


def _partial_sums(ctx, coefficients, x, terms, signed):
    """Partial sums of sum_n (+-1)^n coef_n x^-n and the omitted terms"""
    values = []
    for n in range(max(terms) + 1):
        term = _mpf(ctx, coefficients[n]) / ctx.mpf(x) ** n
        if signed and n % 2:
            term = -term
        values.append(term)
    partial = [ctx.fsum(values[:n_terms]) for n_terms in terms]
    omitted = [abs(values[n_terms]) for n_terms in terms]
    return partial, omitted


class StirlingForm(enum.Enum):
    GAMMA = "gamma"
    FACTORIAL = "factorial"


@export
def verify_stirling_series(
    lambda_grid, n_max, form=StirlingForm.GAMMA, workers=1
):
    """Check the Stirling series against mpmath

    ``gamma`` form: Gamma(lambda) / (sqrt(2 pi) lambda^(lambda-1/2)
    e^(-lambda)) against sum_n (-1)^n gamma_n lambda^(-n).
    ``factorial`` form: sqrt(2 pi m) m^m e^(-m) / m! against
    sum_n gamma_n m^(-n).

    Errors are relative to Gamma(lambda) (respectively the leading
    factor) and must stay within twice the first omitted term.

    :param lambda_grid: strictly increasing values >= 5
    :param int n_max: partial sums with N = 1..n_max terms are checked
    """
    form = StirlingForm(form)
    grid = [float(x) for x in lambda_grid]
    if min(grid) < 5:
        raise NumericDomainError("Stirling checks need lambda >= 5")
    terms = _term_counts(n_max)
    gamma = stirling_via_pipeline(n_max).gamma
    signed = form is StirlingForm.GAMMA

    def evaluate(lam):
        ctx = _context()
        x = ctx.mpf(lam)
        if signed:
            log_ratio = (
                ctx.loggamma(x) - (x - 0.5) * ctx.log(x) + x
                - 0.5 * ctx.log(2 * ctx.pi)
            )
        else:
            log_ratio = (
                0.5 * ctx.log(2 * ctx.pi * x) + x * ctx.log(x) - x
                - ctx.loggamma(x + 1)
            )
        reference = ctx.exp(log_ratio)
        partial, omitted = _partial_sums(ctx, gamma, lam, terms, signed)
        errors = [abs(reference - value) / reference for value in partial]
        floor = ctx.mpf(10) ** (10 - ctx.dps)
        return reference, partial, errors, omitted, floor

    results = _sweep(evaluate, grid, workers)
    return VerificationReport(
        name="stirling_{}".format(form.value),
        grid=grid,
        terms=terms,
        reference=[float(r[0]) for r in results],
        reference_error=[float(r[4]) for r in results],
        partial_sums=[[float(v) for v in r[1]] for r in results],
        abs_errors=[[float(v) for v in r[2]] for r in results],
        rel_errors=[[float(v) for v in r[2]] for r in results],
        bounds=[
            [float(OMITTED_TERM_FACTOR * v + r[4]) for v in r[3]]
            for r in results
        ],
        expected_order={n: -float(n) for n in terms},
        checked_terms=tuple(n for n in CHECKED_STIRLING_TERMS if n in terms),
    )


@export
def verify_igamma_diagonal(m_grid, n_max, workers=1):
    """Check Gamma(m, m)/Gamma(m) ~ 1/2 + (2 pi m)^(-1/2) sum C_n(0) m^(-n)

    The reference is the exact finite sum e^(-m) sum_{k<m} m^k/k!,
    evaluated in mpmath. Errors are reported unscaled; orders are
    fitted on the errors times sqrt(2 pi m), which decay like m^(-N).

    :param m_grid: strictly increasing integers >= 5
    :param int n_max: partial sums with N = 1..n_max terms are checked
    """
    grid = [int(m) for m in m_grid]
    if any(m != float(x) for m, x in zip(grid, m_grid)) or min(grid) < 5:
        raise NumericDomainError("the diagonal check needs integers m >= 5")
    terms = _term_counts(n_max)
    c0 = diagonal_coefficients(n_max).c0

    def evaluate(m):
        ctx = _context()
        finite_sum = sum(
            (Fraction(m ** k, math.factorial(k)) for k in range(m)), Fraction(0)
        )
        reference = ctx.exp(-m) * _mpf(ctx, finite_sum)
        scale = ctx.sqrt(2 * ctx.pi * m)
        partial, omitted = _partial_sums(ctx, c0, m, terms, False)
        sums = [ctx.mpf(0.5) + value / scale for value in partial]
        errors = [abs(reference - value) for value in sums]
        bounds = [value / scale for value in omitted]
        floor = ctx.mpf(10) ** (10 - ctx.dps)
        return reference, sums, errors, bounds, scale, floor

    results = _sweep(evaluate, grid, workers)
    return VerificationReport(
        name="igamma_diagonal",
        grid=[float(m) for m in grid],
        terms=terms,
        reference=[float(r[0]) for r in results],
        reference_error=[float(r[5]) for r in results],
        partial_sums=[[float(v) for v in r[1]] for r in results],
        abs_errors=[[float(v) for v in r[2]] for r in results],
        rel_errors=[[float(v / r[0]) for v in r[2]] for r in results],
        bounds=[
            [float(OMITTED_TERM_FACTOR * v + r[5]) for v in r[3]]
            for r in results
        ],
        expected_order={n: -float(n) for n in terms},
        checked_terms=tuple(n for n in CHECKED_IGAMMA_TERMS if n in terms),
        order_scale=[float(r[4]) for r in results],
        min_span=IGAMMA_FIT_SPAN,
    )


@export
class BuiltinIntegral(enum.Enum):
    """Integrals with a known local expansion

    ``gamma_first`` is the integral of exp(-lambda (x - log(1 + x))) over
    (0, inf); ``gamma_second`` that of exp(-lambda (-x - log(1 - x)))
    over (0, 1).
    """

    GAMMA_FIRST = "gamma_first"
    GAMMA_SECOND = "gamma_second"

    def problem(self, n_max):
        return gamma_problem(n_max, mirror=self is BuiltinIntegral.GAMMA_SECOND)

    @property
    def domain(self):
        if self is BuiltinIntegral.GAMMA_FIRST:
            return Domain.HALF_LINE
        return Domain.UNIT_INTERVAL

    def integrand(self, lam):
        if self is BuiltinIntegral.GAMMA_FIRST:
            return lambda x: np.exp(-lam * (x - np.log1p(x)))
        return lambda x: np.exp(-lam * (-x - np.log1p(-x)))


@export
def verify_laplace_order(integral, lambda_grid, n_max, workers=1):
    """Compare partial sums of a built-in integral with quadrature

    The error after N terms must stay within twice the N-th term plus
    the quadrature bound, and decay like lambda^(-(N+beta)/alpha).

    :param integral: a :any:`BuiltinIntegral` or its name
    :raises QuadratureError: if a reference integral does not converge
    """
    integral = BuiltinIntegral(integral)
    grid = [float(x) for x in lambda_grid]
    problem = integral.problem(n_max)
    c_sc = coeffs_direct(problem)
    terms = _term_counts(n_max)

    def evaluate(lam):
        result = quadrature(integral.integrand(lam), integral.domain)
        if not result.converged:
            raise QuadratureError(
                "{} did not converge at lambda={:g}".format(
                    integral.value, lam
                ),
                result,
            )
        partial = [partial_sum(problem, c_sc, lam, n) for n in terms]
        omitted = [
            abs(
                partial_sum(problem, c_sc, lam, n + 1)
                - partial_sum(problem, c_sc, lam, n)
            )
            for n in terms
        ]
        return result, partial, omitted

    results = _sweep(evaluate, grid, workers)
    return VerificationReport(
        name=integral.value,
        grid=grid,
        terms=terms,
        reference=[r[0].value for r in results],
        reference_error=[r[0].err_bound for r in results],
        partial_sums=[r[1] for r in results],
        abs_errors=[[abs(r[0].value - v) for v in r[1]] for r in results],
        rel_errors=[
            [abs(r[0].value - v) / abs(r[0].value) for v in r[1]]
            for r in results
        ],
        bounds=[
            [OMITTED_TERM_FACTOR * v + r[0].err_bound for v in r[2]]
            for r in results
        ],
        expected_order={
            n: -float(problem.exponent(n)) for n in terms
        },
        checked_terms=tuple(n for n in CHECKED_LAPLACE_TERMS if n in terms),
    )
