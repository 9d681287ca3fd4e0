# -*- coding: UTF-8 -*-
"""
Stirling coefficients and the incomplete gamma function

The Stirling coefficients gamma_n of

    Gamma(lambda) ~ sqrt(2 pi) lambda^(lambda - 1/2) e^(-lambda)
                    sum_n (-1)^n gamma_n lambda^(-n)

come out of the coefficient routes applied to f(x) = x - log(1 + x)
(or f(x) = e^x - x - 1) with g = 1, and out of four closed forms in
Stirling numbers. The same problem with g(x) = 1/(mu - x) gives the
polynomials Q_n(mu) of the uniform expansion of Gamma(a, x)/Gamma(a),
and its odd coefficients give the diagonal coefficients C_n(0) of

    Gamma(m, m)/Gamma(m) ~ 1/2 + (2 pi m)^(-1/2) sum_n C_n(0) m^(-n).
"""

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from logging import getLogger

from .coefficients import (
    G1Route,
    LaplaceProblem,
    coeffs_comtet,
    coeffs_direct,
    coeffs_g1,
    coeffs_wojdylo,
    ensure_agreement,
    reversion_oracle,
)
from .decorators import export, log_call, memoize
from .exceptions import InvalidProblemError
from .rational import (
    factorial,
    format_rational,
    gamma_half_ratio,
    parse_rational,
    stirling_first,
    stirling_second,
)


log = getLogger(__name__)


GAMMA_ALPHA = Fraction(2)
GAMMA_BETA = Fraction(1)


@export
def gamma_problem(n_max, mirror=False):
    """The problem f(x) = x - log(1 + x), g = 1 on (0, inf)

    a_k = (-1)^k/(k + 2), alpha = 2, beta = 1. With ``mirror`` set,
    the companion f(x) = -x - log(1 - x) on (0, 1), a_k = 1/(k + 2),
    whose coefficients are (-1)^n times the original ones.
    """
    sign = 1 if mirror else -1
    a = tuple(Fraction(sign ** k, k + 2) for k in range(n_max + 1))
    b = (Fraction(1),) + (Fraction(0),) * n_max
    return LaplaceProblem(GAMMA_ALPHA, GAMMA_BETA, a, b, n_max)


@export
def gamma_problem_exp(n_max, mirror=False):
    """The problem f(x) = e^x - x - 1, g = 1 on (0, inf)

    a_k = 1/(k + 2)!; with ``mirror`` set, f(x) = e^(-x) + x - 1 and
    a_k = (-1)^k/(k + 2)!.
    """
    sign = -1 if mirror else 1
    a = tuple(Fraction(sign ** k, factorial(k + 2)) for k in range(n_max + 1))
    b = (Fraction(1),) + (Fraction(0),) * n_max
    return LaplaceProblem(GAMMA_ALPHA, GAMMA_BETA, a, b, n_max)


def _gamma_problem_by_name(name, n_max):
    if name == "log":
        return gamma_problem(n_max)
    if name == "exp":
        return gamma_problem_exp(n_max)
    raise InvalidProblemError("unknown gamma problem {!r}".format(name))


PIPELINE_ROUTES = {
    "direct": coeffs_direct,
    "wojdylo": coeffs_wojdylo,
    "comtet": coeffs_comtet,
    "g1_comtet": lambda p: coeffs_g1(p, G1Route.COMTET),
    "g1_wojdylo": lambda p: coeffs_g1(p, G1Route.WOJDYLO),
    "reversion": reversion_oracle,
}


@export
@dataclass(frozen=True)
class StirlingCoefficients(object):
    """gamma_0, ..., gamma_n_max"""

    gamma: tuple

    def __getitem__(self, n):
        return self.gamma[n]

    def __len__(self):
        return len(self.gamma)

    def convolution_residuals(self):
        """sum_k (-1)^(n-k) gamma_k gamma_(n-k) for n = 1..n_max; all 0"""
        g = self.gamma
        return tuple(
            sum(
                ((-1) ** (n - k) * g[k] * g[n - k] for k in range(n + 1)),
                Fraction(0),
            )
            for n in range(1, len(g))
        )


@export
@log_call()
def stirling_via_pipeline(n_max, route="direct", problem="log"):
    """Stirling coefficients from a coefficient route

    gamma_n = (-1)^n 2^n Gamma(n + 1/2)/sqrt(pi) c_sc[2n] on the gamma
    problem.

    :param int n_max: the largest n
    :param str route: one of ``PIPELINE_ROUTES``
    :param str problem: ``"log"`` for x - log(1 + x), ``"exp"`` for
        e^x - x - 1
    """
    try:
        compute = PIPELINE_ROUTES[route]
    except KeyError:
        raise InvalidProblemError("unknown route {!r}".format(route))
    c_sc = compute(_gamma_problem_by_name(problem, 2 * n_max))
    return StirlingCoefficients(
        tuple(
            (-1) ** n * 2 ** n * gamma_half_ratio(n) * c_sc[2 * n]
            for n in range(n_max + 1)
        )
    )


@export
class StirlingVariant(enum.Enum):
    """Closed forms for gamma_n

    The ``s`` forms use Stirling numbers of the first kind, the ``S``
    forms numbers of the second kind; ``new`` forms are single sums
    over potential polynomials, ``wojdylo`` forms triple sums over
    Bell polynomials.
    """

    S_NEW = "s_new"
    S_WOJDYLO = "s_wojdylo"
    S2_NEW = "S_new"
    S2_WOJDYLO = "S_wojdylo"


def _stirling_numbers(variant):
    if variant in (StirlingVariant.S_NEW, StirlingVariant.S_WOJDYLO):
        return stirling_first
    return stirling_second


@memoize()
def _inner_stirling_sum(variant, m, j):
    """sum_{i=0}^{j} (-1)^i s(m + j + i, i) / ((j - i)! (m + j + i)!)"""
    numbers = _stirling_numbers(variant)
    return sum(
        (
            Fraction(
                (-1) ** i * numbers(m + j + i, i),
                factorial(j - i) * factorial(m + j + i),
            )
            for i in range(j + 1)
        ),
        Fraction(0),
    )


def _closed_form_new(variant, n):
    sign = (-1) ** n
    prefactor = gamma_half_ratio(3 * n + 1)
    total = Fraction(0)
    for k in range(2 * n + 1):
        total += (
            Fraction(
                sign * 2 ** (n + k + 1),
                (2 * n + 2 * k + 1) * factorial(2 * n - k),
            )
            * _inner_stirling_sum(variant, 2 * n, k)
        )
    return prefactor * total


def _closed_form_wojdylo(variant, n):
    sign = (-1) ** n
    total = Fraction(0)
    for k in range(2 * n + 1):
        middle = sum(
            (
                Fraction(2 ** j, factorial(k - j))
                * _inner_stirling_sum(variant, 2 * n, j)
                for j in range(k + 1)
            ),
            Fraction(0),
        )
        total += sign * 2 ** n * gamma_half_ratio(n + k) * middle
    return total


@export
@memoize()
def stirling_closed_form(n, variant=StirlingVariant.S_NEW):
    """gamma_n from one of the four closed forms

    ``s_new`` / ``S_new``:

        gamma_n = sum_{k=0}^{2n} (-1)^n 2^(n+k+1) Gamma(3n + 3/2)
                  / (sqrt(pi) (2n + 2k + 1) (2n - k)!)
                  sum_{j=0}^{k} (-1)^j s(2n+k+j, j) / ((k-j)! (2n+k+j)!)

    ``s_wojdylo`` / ``S_wojdylo``:

        gamma_n = sum_{k=0}^{2n} (-1)^n 2^n Gamma(n + k + 1/2)/sqrt(pi)
                  sum_{j=0}^{k} 2^j/(k-j)!
                  sum_{i=0}^{j} (-1)^i s(2n+j+i, i) / ((j-i)! (2n+j+i)!)

    with S in place of s for the second-kind variants.
    """
    if n < 0:
        raise ValueError("n must be nonnegative, got {}".format(n))
    variant = StirlingVariant(variant)
    if variant in (StirlingVariant.S_NEW, StirlingVariant.S2_NEW):
        return _closed_form_new(variant, n)
    return _closed_form_wojdylo(variant, n)


@export
def stirling_table(n_max):
    """gamma_0..gamma_n_max by the pipeline and all four closed forms

    :return: dict of route name to tuple of values
    :raises RouteDisagreementError: if any two differ
    """
    table = {"pipeline": stirling_via_pipeline(n_max).gamma}
    for variant in StirlingVariant:
        table[variant.value] = tuple(
            stirling_closed_form(n, variant) for n in range(n_max + 1)
        )
    ensure_agreement("Stirling coefficients", table)
    return table


@export
@memoize()
def potential_closed_form_log(k, n):
    """A_{k,n} for the normalized series of x - log(1 + x)

    A_{k,n} = 2^k sum_j (-1)^(n+k+j) binom(k, j) j! s(n+k+j, j)/(n+k+j)!
    """
    return 2 ** k * sum(
        (
            Fraction(
                (-1) ** (n + k + j)
                * math.comb(k, j)
                * factorial(j)
                * stirling_first(n + k + j, j),
                factorial(n + k + j),
            )
            for j in range(k + 1)
        ),
        Fraction(0),
    )


@export
@dataclass(frozen=True)
class QPolynomial(object):
    """Q_n(mu) = sum_k q[k] mu^k, of degree 2n"""

    n: int
    q: tuple

    @property
    def degree(self):
        return len(self.q) - 1

    def __call__(self, mu):
        mu = parse_rational(mu)
        value = Fraction(0)
        for coefficient in reversed(self.q):
            value = value * mu + coefficient
        return value

    def __str__(self):
        terms = []
        for k, coefficient in enumerate(self.q):
            if not coefficient:
                continue
            power = "" if k == 0 else ("mu" if k == 1 else "mu^{}".format(k))
            if not power:
                terms.append(format_rational(coefficient))
            elif coefficient == 1:
                terms.append(power)
            else:
                terms.append(
                    "{}*{}".format(format_rational(coefficient), power)
                )
        return " + ".join(terms).replace("+ -", "- ") or "0"


def _q_coefficients_printed(n):
    """q_k^(n) as a double sum in Stirling numbers"""
    q = []
    for k in range(2 * n + 1):
        total = Fraction(0)
        for j in range(k + 1):
            inner = sum(
                (
                    Fraction(
                        (-1) ** i * stirling_first(k + j + i, i),
                        factorial(j - i) * factorial(k + j + i),
                    )
                    for i in range(j + 1)
                ),
                Fraction(0),
            )
            total += (
                Fraction(
                    (-1) ** k * 2 ** (n + j + 1),
                    (2 * n + 2 * j + 1) * factorial(k - j),
                )
                * inner
            )
        q.append(gamma_half_ratio(n + k + 1) * total)
    return tuple(q)


def _q_coefficients_potential(n):
    """q_k^(n) through the potential polynomials A_{j,k}"""
    q = []
    for k in range(2 * n + 1):
        inner = sum(
            (
                Fraction((-1) ** j * math.comb(k, j), 2 * n + 2 * j + 1)
                * potential_closed_form_log(j, k)
                for j in range(k + 1)
            ),
            Fraction(0),
        )
        q.append(
            2 ** (n + 1) * gamma_half_ratio(n + k + 1) / factorial(k) * inner
        )
    return tuple(q)


@export
@log_call()
def q_polynomial(n):
    """Q_n(mu), computed two ways that must agree exactly

    :raises RouteDisagreementError: if the two evaluations differ
    """
    if n < 0:
        raise ValueError("n must be nonnegative, got {}".format(n))
    printed = _q_coefficients_printed(n)
    ensure_agreement(
        "Q_{} coefficients".format(n),
        {
            "stirling_sum": printed,
            "potential_sum": _q_coefficients_potential(n),
        },
    )
    return QPolynomial(n, printed)


@export
def q_polynomial_value(n, mu, route="direct"):
    """Q_n(mu) at a rational mu != 0 through a coefficient route

    Runs the route on f(x) = x - log(1 + x), g(x) = 1/(mu - x), whose
    b_k = mu^(-k-1), and returns 2^n Gamma(n + 1/2)/sqrt(pi)
    mu^(2n+1) c_sc[2n].
    """
    mu = parse_rational(mu)
    if mu == 0:
        raise InvalidProblemError("mu must be nonzero")
    base = gamma_problem(2 * n)
    problem = LaplaceProblem(
        base.alpha,
        base.beta,
        base.a,
        tuple(mu ** (-k - 1) for k in range(2 * n + 1)),
        2 * n,
    )
    c_sc = PIPELINE_ROUTES[route](problem)
    return 2 ** n * gamma_half_ratio(n) * mu ** (2 * n + 1) * c_sc[2 * n]


@export
@dataclass(frozen=True)
class DiagonalCoefficients(object):
    """C_0(0), ..., C_n_max(0)"""

    c0: tuple

    def __getitem__(self, n):
        return self.c0[n]

    def __len__(self):
        return len(self.c0)


@export
class DiagonalForm(enum.Enum):
    REDUCED = "reduced"
    FULL = "full"


@export
@log_call()
def diagonal_coefficients(n_max, form=DiagonalForm.REDUCED):
    """C_n(0) from gamma_n and the odd c_m of the gamma problem

    reduced: C_n(0) = -gamma_n/3 + sum_{k<n} (n-k)! gamma_k c_{2n-2k+1}
    full:    C_n(0) = -gamma_n + sum_{k<=n} (n-k)! gamma_k c_{2n-2k+1}

    with c_m = c_sc[m] 2^((m-1)/2) for odd m.
    """
    form = DiagonalForm(form)
    c_sc = coeffs_direct(gamma_problem(2 * n_max + 1))
    gamma = stirling_via_pipeline(n_max).gamma

    def odd_c(m):
        return c_sc[m] * 2 ** ((m - 1) // 2)

    values = []
    for n in range(n_max + 1):
        if form is DiagonalForm.REDUCED:
            value = -gamma[n] / 3
            upper = n
        else:
            value = -gamma[n]
            upper = n + 1
        value += sum(
            (
                factorial(n - k) * gamma[k] * odd_c(2 * n - 2 * k + 1)
                for k in range(upper)
            ),
            Fraction(0),
        )
        values.append(value)
    return DiagonalCoefficients(tuple(values))

