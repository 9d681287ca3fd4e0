# -*- coding: UTF-8 -*-
"""
Exact rational scalars and the combinatorial kernels built on them

Every scalar of the exact layer is a :class:`fractions.Fraction`, which
is always kept in lowest terms with a positive denominator. This module
adds the canonical ``"p/q"`` text form and the number kernels that the
coefficient formulas are assembled from: binomials with a rational
upper argument, rising factorials, the half-integer gamma ratio and
Stirling numbers of both kinds.
"""

import enum
import math
import numbers
from fractions import Fraction
from logging import getLogger
from threading import Lock

from .caches import TriangleStore
from .decorators import export, memoize


log = getLogger(__name__)


Rational = Fraction


@export
def parse_rational(value):
    """Return ``value`` as an exact Rational

    Accepts integers, Fractions and strings in the forms ``"p/q"``,
    ``"p"`` or a finite decimal such as ``"0.25"``. Floats are refused
    since they are rarely the number the caller meant.

    :raises TypeError: for floats, booleans and other types
    :raises ValueError: for malformed strings
    :raises ZeroDivisionError: for a zero denominator
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals: {!r}".format(value))
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(
        "expected an integer, Fraction or 'p/q' string, got {!r}".format(value)
    )


@export
def format_rational(value):
    """Return the canonical string of a rational: ``"p/q"`` or ``"p"``"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)


@export
def binomial_rational(rho, k):
    """Return rho (rho-1) ... (rho-k+1) / k! exactly

    :param Rational rho: the upper argument, any rational
    :param int k: the lower argument, k >= 0
    """
    if k < 0:
        raise ValueError("k must be nonnegative, got {}".format(k))
    rho = Fraction(rho)
    result = Fraction(1)
    for i in range(k):
        result *= (rho - i) / (i + 1)
    return result


@export
def rising_factorial(z, j):
    """Return z (z+1) ... (z+j-1), the ratio Gamma(z+j)/Gamma(z)"""
    if j < 0:
        raise ValueError("j must be nonnegative, got {}".format(j))
    z = Fraction(z)
    result = Fraction(1)
    for i in range(j):
        result *= z + i
    return result


@export
@memoize()
def factorial(n):
    return math.factorial(n)


@export
@memoize()
def gamma_half_ratio(m):
    """Return Gamma(m + 1/2) / sqrt(pi) = (2m)! / (4^m m!) exactly"""
    if m < 0:
        raise ValueError("m must be nonnegative, got {}".format(m))
    return Fraction(factorial(2 * m), 4 ** m * factorial(m))


@export
class StirlingKind(enum.Enum):
    FIRST_UNSIGNED = "first_unsigned"
    SECOND = "second"


@export
class StirlingTriangle(object):
    """A growing triangle of Stirling numbers

    Rows are added on demand with the recurrences

    * unsigned first kind: s(n+1, k) = s(n, k-1) + n s(n, k)
    * second kind: S(n+1, k) = S(n, k-1) + k S(n, k)

    and are never removed. Growth holds a lock, so one triangle can be
    shared between threads. When ``$LAPLACE_CACHE_DIR`` is set, rows
    are loaded from there on first use and written back after growth.

    Indices outside the triangle (k < 0, k > n, n < 0) give 0.

    :param StirlingKind kind: which numbers to tabulate
    :param Optional[TriangleStore] store: persistence; looked up from
        the environment on first growth when not given
    """

    def __init__(self, kind, store=None):
        self.kind = StirlingKind(kind)
        self._rows = [(1,)]
        self._lock = Lock()
        self._store = store
        self._loaded = False

    def __repr__(self):
        return "StirlingTriangle({}, n_max={})".format(
            self.kind.value, self.n_max
        )

    @property
    def n_max(self):
        return len(self._rows) - 1

    @property
    def name(self):
        return "stirling_{}".format(self.kind.value)

    def _next_row(self, row):
        n = len(row) - 1
        new = [0] * (n + 2)
        for k in range(1, n + 2):
            upper = row[k] if k <= n else 0
            weight = n if self.kind is StirlingKind.FIRST_UNSIGNED else k
            new[k] = row[k - 1] + weight * upper
        return tuple(new)

    def _load(self):
        self._loaded = True
        if self._store is None:
            self._store = TriangleStore.from_env()
        if self._store is None:
            return
        rows = self._store.load(self.name)
        if rows and len(rows) > len(self._rows) and self._valid(rows):
            log.debug("Loaded %s rows of %s", len(rows), self.name)
            self._rows = list(rows)

    def _valid(self, rows):
        """Check stored rows against the recurrence"""
        if rows[0] != (1,):
            return False
        for previous, row in zip(rows, rows[1:]):
            if row != self._next_row(previous):
                log.warning("Discarding inconsistent cached %s", self.name)
                return False
        return True

    def extend_to(self, n_max):
        """Make sure rows 0..n_max exist"""
        if n_max <= self.n_max:
            return
        with self._lock:
            if not self._loaded:
                self._load()
            if n_max <= self.n_max:
                return
            rows = self._rows
            while len(rows) <= n_max:
                rows.append(self._next_row(rows[-1]))
            if self._store is not None:
                self._store.save(self.name, rows)

    def row(self, n):
        """Return row n as a tuple (entries k = 0..n)"""
        self.extend_to(n)
        return self._rows[n]

    def __call__(self, n, k):
        if n < 0 or k < 0 or k > n:
            return 0
        return self.row(n)[k]


_FIRST = StirlingTriangle(StirlingKind.FIRST_UNSIGNED)
_SECOND = StirlingTriangle(StirlingKind.SECOND)


@export
def stirling_first(n, k):
    """Unsigned Stirling number of the first kind s(n, k)"""
    return _FIRST(n, k)


@export
def stirling_second(n, k):
    """Stirling number of the second kind S(n, k)"""
    return _SECOND(n, k)


@export
def stirling_triangle(kind):
    """Return the process-wide triangle of the given kind"""
    if StirlingKind(kind) is StirlingKind.FIRST_UNSIGNED:
        return _FIRST
    return _SECOND
