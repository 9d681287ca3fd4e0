# -*- coding: UTF-8 -*-
"""
Coefficients of Laplace-type asymptotic expansions

A problem is given by the local behaviour at the minimum of f,

    f(x) - f(0) ~ sum_k a_k x^(k + alpha),   g(x) ~ sum_k b_k x^(k + beta - 1),

and the integral of exp(-lambda f) g then expands as

    sum_n Gamma((n + beta)/alpha) c_n lambda^(-(n + beta)/alpha).

The c_n themselves involve a_0^(-(n + beta)/alpha), which is irrational
in general, so every route here returns the scaled coefficients

    c_sc[n] = alpha a_0^((n + beta)/alpha) c_n,

which are rational functions of the a_k, b_k, alpha and beta. Three
independent routes are provided (a direct potential-polynomial sum, a
Bell-polynomial double sum and a sum over integer-indexed potential
polynomials), plus two single-sum variants and a series-reversion
oracle for the case g = 1.
"""

import enum
import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from logging import getLogger

from six import raise_from

from .bell import (
    NormalizedSeries,
    bell_table,
    potential_integer_table,
    potential_row,
)
from .constants import (
    RANDOM_COEFFICIENT_BOUND,
    RANDOM_PARAMETER_CHOICES,
)
from .decorators import export, intercept, log_call
from .exceptions import (
    InvalidProblemError,
    RouteDisagreementError,
    TruncationError,
)
from .rational import (
    binomial_rational,
    factorial,
    format_rational,
    parse_rational,
    rising_factorial,
)
from .series import TruncatedSeries


log = getLogger(__name__)


@export
@dataclass(frozen=True)
class LaplaceProblem(object):
    """The local data of a Laplace-type integral

    Inputs are converted to exact rationals and validated on
    construction. With ``pad`` set, coefficient lists shorter than
    ``n_max + 1`` are completed with zeros and a warning is logged and
    kept in ``warnings``; without it they raise
    :any:`TruncationError`.

    ``a_0`` may be negative: the exact layer is formal. Numeric
    evaluation separately requires ``a_0 > 0``.
    """

    alpha: Fraction
    beta: Fraction
    a: tuple
    b: tuple
    n_max: int
    pad: bool = False
    warnings: tuple = field(default=(), compare=False)

    def __post_init__(self):
        set_ = object.__setattr__
        for name in ("alpha", "beta"):
            value = _parse_field(name, getattr(self, name))
            if value <= 0:
                raise InvalidProblemError(
                    "{} must be positive, got {}".format(
                        name, format_rational(value)
                    )
                )
            set_(self, name, value)
        if isinstance(self.n_max, bool) or not isinstance(self.n_max, int):
            raise InvalidProblemError(
                "n_max must be an integer, got {!r}".format(self.n_max)
            )
        if self.n_max < 0:
            raise InvalidProblemError(
                "n_max must be nonnegative, got {}".format(self.n_max)
            )
        warnings = list(self.warnings)
        for name in ("a", "b"):
            values = [
                _parse_field("{}[{}]".format(name, i), value)
                for i, value in enumerate(getattr(self, name))
            ]
            if not values or values[0] == 0:
                raise InvalidProblemError(
                    "{}_0 must be nonzero".format(name)
                )
            needed = self.n_max + 1
            if len(values) < needed:
                if not self.pad:
                    raise TruncationError(
                        "{} has {} coefficients but n_max = {} needs {}; "
                        "set pad to fill with zeros".format(
                            name, len(values), self.n_max, needed
                        )
                    )
                msg = "{} padded with {} zeros to reach n_max = {}".format(
                    name, needed - len(values), self.n_max
                )
                log.warning(msg)
                warnings.append(msg)
                values.extend([Fraction(0)] * (needed - len(values)))
            set_(self, name, tuple(values))
        set_(self, "warnings", tuple(warnings))

    @property
    def is_g1(self):
        """Whether g = 1, i.e. beta = 1 and b = (1, 0, 0, ...)"""
        return (
            self.beta == 1
            and self.b[0] == 1
            and not any(self.b[1 : self.n_max + 1])
        )

    def exponent(self, n):
        """Return (n + beta)/alpha"""
        return (n + self.beta) / self.alpha

    def normalized(self):
        """Return f_k = a_k / a_0 for k = 1..n_max"""
        a_0 = self.a[0]
        return NormalizedSeries(
            value / a_0 for value in self.a[1 : self.n_max + 1]
        )

    def with_n_max(self, n_max):
        return LaplaceProblem(
            self.alpha, self.beta, self.a, self.b, n_max, pad=self.pad
        )

    def to_dict(self):
        return {
            "alpha": format_rational(self.alpha),
            "beta": format_rational(self.beta),
            "a": [format_rational(value) for value in self.a],
            "b": [format_rational(value) for value in self.b],
            "n_max": self.n_max,
            "pad": self.pad,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    @intercept(
        catch=(KeyError, TypeError, ValueError, ZeroDivisionError),
        reraise=InvalidProblemError,
        err_msg="invalid problem document: {exc}",
    )
    def from_dict(cls, doc):
        """Build a problem from a parsed JSON document

        Required keys are ``alpha``, ``beta``, ``a``, ``b`` and
        ``n_max``; ``pad`` defaults to false.
        """
        if not isinstance(doc, dict):
            raise TypeError("expected an object, got {}".format(type(doc)))
        unknown = set(doc) - {"alpha", "beta", "a", "b", "n_max", "pad"}
        if unknown:
            raise KeyError(
                "unknown keys: {}".format(", ".join(sorted(unknown)))
            )
        for name in ("a", "b"):
            if not isinstance(doc[name], list):
                raise TypeError("{} must be a list".format(name))
        pad = doc.get("pad", False)
        if not isinstance(pad, bool):
            raise TypeError("pad must be a boolean")
        return cls(
            alpha=doc["alpha"],
            beta=doc["beta"],
            a=tuple(doc["a"]),
            b=tuple(doc["b"]),
            n_max=doc["n_max"],
            pad=pad,
        )

    @classmethod
    @intercept(
        catch=ValueError,
        reraise=InvalidProblemError,
        err_msg="problem file is not valid JSON: {exc}",
    )
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def _parse_field(name, value):
    try:
        return parse_rational(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise_from(InvalidProblemError("{}: {}".format(name, exc)), exc)


@export
@dataclass(frozen=True)
class ExpansionTerm(object):
    """One term Gamma(exponent) c_n lambda^(-exponent), in scaled form"""

    n: int
    exponent: Fraction
    scaled: Fraction


@export
@dataclass(frozen=True)
class ScaledCoefficients(object):
    """c_sc[0..n_max] of a problem together with the route that made them"""

    c_sc: tuple
    problem: LaplaceProblem
    route: str

    def __getitem__(self, n):
        return self.c_sc[n]

    def __len__(self):
        return len(self.c_sc)

    def __iter__(self):
        return iter(self.c_sc)

    @property
    def exponents(self):
        return tuple(self.problem.exponent(n) for n in range(len(self.c_sc)))

    def to_dict(self):
        return {
            "scaled_coefficients": [format_rational(c) for c in self.c_sc],
            "exponents": [format_rational(e) for e in self.exponents],
            "route": self.route,
        }


@export
def expansion_terms(coefficients):
    """Return the terms of the expansion, in increasing exponent"""
    return [
        ExpansionTerm(n, exponent, scaled)
        for n, (exponent, scaled) in enumerate(
            zip(coefficients.exponents, coefficients.c_sc)
        )
    ]


@export
@log_call()
def coeffs_direct(problem):
    """c_sc[n] = sum_k b_{n-k} A_{-(n+beta)/alpha, k}(a_1/a_0, ...)"""
    f = problem.normalized()
    bell = bell_table(f, problem.n_max)
    b = problem.b
    c_sc = []
    for n in range(problem.n_max + 1):
        row = potential_row(-problem.exponent(n), f, n, bell=bell)
        c_sc.append(sum((b[n - k] * row[k] for k in range(n + 1)), Fraction(0)))
    return ScaledCoefficients(tuple(c_sc), problem, "direct")


@export
@log_call()
def coeffs_wojdylo(problem):
    """Double sum over Bell polynomials of the raw a_1, a_2, ...

    c_sc[n] = sum_k b_{n-k} sum_j (-1)^j a_0^(-j)/j! B_{k,j}(a_1, ...)
    (rho)_j with rho = (n + beta)/alpha.
    """
    n_max = problem.n_max
    raw = NormalizedSeries(problem.a[1 : n_max + 1])
    bell = bell_table(raw, n_max)
    inverse_a0 = 1 / problem.a[0]
    b = problem.b
    c_sc = []
    for n in range(n_max + 1):
        rho = problem.exponent(n)
        weights = [
            (-inverse_a0) ** j * rising_factorial(rho, j) / factorial(j)
            for j in range(n + 1)
        ]
        inner = [
            sum((weights[j] * bell(k, j) for j in range(k + 1)), Fraction(0))
            for k in range(n + 1)
        ]
        c_sc.append(
            sum((b[n - k] * inner[k] for k in range(n + 1)), Fraction(0))
        )
    return ScaledCoefficients(tuple(c_sc), problem, "wojdylo")


@export
class ComtetForm(enum.Enum):
    BINOMIAL = "binomial"
    GAMMA_RATIO = "gamma_ratio"


def _alternating_potential_sum(table, k, weight):
    return sum(
        (
            (-1) ** j * math.comb(k, j) * weight(j) * table(j, k)
            for j in range(k + 1)
        ),
        Fraction(0),
    )


@export
@log_call()
def coeffs_comtet(problem, form=ComtetForm.BINOMIAL):
    """Sums over the integer-indexed potential polynomials A_{j,k}

    With rho = (n + beta)/alpha, the binomial form is

        c_sc[n] = sum_k binom(-rho, k) b_{n-k}
                  sum_j (-1)^(k+j) (n+beta+alpha k)/(n+beta+alpha j)
                  binom(k, j) A_{j,k}

    and the gamma-ratio form replaces binom(-rho, k) (rho+k) by
    (rho)_{k+1}/k! and the ratio by 1/(rho+j). Both are exact.
    """
    form = ComtetForm(form)
    n_max = problem.n_max
    table = potential_integer_table(problem.normalized(), n_max)
    alpha, beta, b = problem.alpha, problem.beta, problem.b
    c_sc = []
    for n in range(n_max + 1):
        rho = problem.exponent(n)
        total = Fraction(0)
        for k in range(n + 1):
            if not b[n - k]:
                continue
            if form is ComtetForm.BINOMIAL:
                outer = binomial_rational(-rho, k) * (-1) ** k
                inner = _alternating_potential_sum(
                    table,
                    k,
                    lambda j: (n + beta + alpha * k) / (n + beta + alpha * j),
                )
            else:
                outer = rising_factorial(rho, k + 1) / factorial(k)
                inner = _alternating_potential_sum(
                    table, k, lambda j: 1 / (rho + j)
                )
            total += outer * b[n - k] * inner
        c_sc.append(total)
    return ScaledCoefficients(tuple(c_sc), problem, "comtet")


@export
class G1Route(enum.Enum):
    COMTET = "comtet"
    WOJDYLO = "wojdylo"


def _require_g1(problem):
    if not problem.is_g1:
        raise InvalidProblemError(
            "this route needs g = 1: beta = 1 and b = (1, 0, 0, ...)"
        )


@export
@log_call()
def coeffs_g1(problem, route=G1Route.COMTET):
    """Single-sum formulas for g = 1 (beta = 1, b = (1, 0, ...))

    * comtet: c_sc[n] = (rho)_{n+1}/n! sum_k (-1)^k/(rho+k) binom(n,k) A_{k,n}
    * wojdylo: c_sc[n] = sum_k (-1)^k a_0^(-k)/k! B_{n,k}(a_1, ...) (rho)_k

    with rho = (n + 1)/alpha.
    """
    _require_g1(problem)
    route = G1Route(route)
    n_max = problem.n_max
    c_sc = []
    if route is G1Route.COMTET:
        table = potential_integer_table(problem.normalized(), n_max)
        for n in range(n_max + 1):
            rho = problem.exponent(n)
            c_sc.append(
                rising_factorial(rho, n + 1)
                / factorial(n)
                * _alternating_potential_sum(table, n, lambda k: 1 / (rho + k))
            )
    else:
        bell = bell_table(NormalizedSeries(problem.a[1 : n_max + 1]), n_max)
        inverse_a0 = 1 / problem.a[0]
        for n in range(n_max + 1):
            rho = problem.exponent(n)
            c_sc.append(
                sum(
                    (
                        (-inverse_a0) ** k
                        * bell(n, k)
                        * rising_factorial(rho, k)
                        / factorial(k)
                        for k in range(n + 1)
                    ),
                    Fraction(0),
                )
            )
    return ScaledCoefficients(tuple(c_sc), problem, "g1_" + route.value)


@export
@log_call()
def reversion_oracle(problem):
    """Scaled coefficients for g = 1 by reverting w = x F(x)^(1/alpha)

    If x = sum_k delta_k w^k then c_sc[k] = (k + 1) delta_{k+1}.
    """
    _require_g1(problem)
    n_max = problem.n_max
    power = potential_row(1 / problem.alpha, problem.normalized(), n_max)
    w = TruncatedSeries([0] + list(power.values), n_max + 1)
    inverse = w.reversion()
    c_sc = tuple((k + 1) * inverse[k + 1] for k in range(n_max + 1))
    return ScaledCoefficients(c_sc, problem, "reversion")


@export
def explicit_leading(problem):
    """Closed forms of c_sc[0], c_sc[1] and c_sc[2]

    Only the entries up to n_max are returned.
    """
    alpha, beta = problem.alpha, problem.beta
    a, b = problem.a, problem.b
    leading = [b[0]]
    if problem.n_max >= 1:
        leading.append(b[1] - (beta + 1) * a[1] * b[0] / (alpha * a[0]))
    if problem.n_max >= 2:
        leading.append(
            b[2]
            - (beta + 2) * a[1] * b[1] / (alpha * a[0])
            + ((beta + alpha + 2) * a[1] ** 2 - 2 * alpha * a[0] * a[2])
            * (beta + 2)
            * b[0]
            / (2 * alpha ** 2 * a[0] ** 2)
        )
    return leading


ROUTES = {
    "direct": coeffs_direct,
    "wojdylo": coeffs_wojdylo,
    "comtet": coeffs_comtet,
}


@export
def compute_route(problem, route):
    """Run one of ``direct``, ``wojdylo`` or ``comtet``"""
    try:
        return ROUTES[route](problem)
    except KeyError:
        raise InvalidProblemError("unknown route {!r}".format(route))


@export
def ensure_agreement(what, results):
    """Raise RouteDisagreementError unless all results are equal

    :param str what: description used in the error
    :param dict results: route name to a sequence of rationals
    """
    names = list(results)
    reference = tuple(results[names[0]])
    for name in names[1:]:
        values = tuple(results[name])
        if values != reference:
            index = next(
                (
                    n
                    for n, (left, right) in enumerate(zip(reference, values))
                    if left != right
                ),
                min(len(reference), len(values)),
            )
            raise RouteDisagreementError(
                "{} at index {}".format(what, index),
                {
                    key: (
                        format_rational(tuple(results[key])[index])
                        if index < len(results[key])
                        else "<missing>"
                    )
                    for key in names
                },
            )


@export
def compute_all(problem, routes=("direct", "wojdylo", "comtet")):
    """Run several routes and check that they agree exactly

    :return: dict of route name to ScaledCoefficients
    :raises RouteDisagreementError: if any two routes differ
    """
    results = {route: compute_route(problem, route) for route in routes}
    ensure_agreement(
        "scaled coefficients", {k: v.c_sc for k, v in results.items()}
    )
    return results


def _random_rational(rng, nonzero=False):
    bound = RANDOM_COEFFICIENT_BOUND
    while True:
        numerator = rng.randint(-bound, bound)
        if numerator or not nonzero:
            return Fraction(numerator, rng.randint(1, bound))


@export
def random_problem(rng=None, n_max=None, g1=False):
    """Draw a problem with small random rational data

    alpha and beta come from 1/2, 1, 3/2, 2, 3; the a_k and b_k have
    numerators and denominators bounded by 9.

    :param random.Random rng: source of randomness
    :param Optional[int] n_max: order; random in 0..8 when not given
    :param bool g1: force beta = 1 and b = (1, 0, ...)
    """
    rng = rng if rng is not None else random.Random()
    if n_max is None:
        n_max = rng.randint(0, 8)
    choices = [Fraction(value) for value in RANDOM_PARAMETER_CHOICES]
    alpha = rng.choice(choices)
    a = [_random_rational(rng, nonzero=True)]
    a.extend(_random_rational(rng) for _ in range(n_max))
    if g1:
        beta = Fraction(1)
        b = [Fraction(1)] + [Fraction(0)] * n_max
    else:
        beta = rng.choice(choices)
        b = [_random_rational(rng, nonzero=True)]
        b.extend(_random_rational(rng) for _ in range(n_max))
    return LaplaceProblem(alpha, beta, tuple(a), tuple(b), n_max)
