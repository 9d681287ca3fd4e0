# -*- coding: UTF-8 -*-
"""
Partial ordinary Bell polynomials and ordinary potential polynomials

For F(x) = 1 + f_1 x + f_2 x^2 + ..., the partial ordinary Bell
polynomial B_{n,k} is the coefficient of x^n in (F(x) - 1)^k and the
potential polynomial A_{rho,n} is the coefficient of x^n in F(x)^rho.
Everything here is evaluated at concrete rational f_n, never
symbolically, and works in normalized form: callers holding a series
a_0 + a_1 x + ... pass f_n = a_n / a_0.
"""

import math
from fractions import Fraction
from logging import getLogger

from .caches import TriangleStore
from .decorators import export
from .rational import (
    binomial_rational,
    factorial,
    format_rational,
    parse_rational,
    rising_factorial,
)


log = getLogger(__name__)


@export
class NormalizedSeries(object):
    """The coefficients f_1, f_2, ... of F(x) = 1 + sum f_n x^n

    Indexing is 1-based; ``series[n]`` is 0 past the supplied list and
    ``series[0]`` is the implied leading 1.

    :param f: iterable of rationals f_1, f_2, ...
    """

    __slots__ = ("_f",)

    def __init__(self, f=()):
        self._f = tuple(parse_rational(value) for value in f)

    @classmethod
    def from_coefficients(cls, a):
        """Normalize a_0 + a_1 x + ... to f_n = a_n / a_0"""
        a = [parse_rational(value) for value in a]
        if not a or a[0] == 0:
            raise ValueError("the leading coefficient must be nonzero")
        return cls(value / a[0] for value in a[1:])

    @property
    def f(self):
        return self._f

    def __len__(self):
        return len(self._f)

    def __getitem__(self, n):
        if n == 0:
            return Fraction(1)
        if 1 <= n <= len(self._f):
            return self._f[n - 1]
        return Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, NormalizedSeries):
            return NotImplemented
        return self.padded(max(len(self), len(other))) == other.padded(
            max(len(self), len(other))
        )

    def __hash__(self):
        f = list(self._f)
        while f and f[-1] == 0:
            f.pop()
        return hash(tuple(f))

    def __repr__(self):
        return "NormalizedSeries([{}])".format(
            ", ".join(format_rational(value) for value in self._f)
        )

    def padded(self, n_max):
        """Return (1, f_1, ..., f_{n_max})"""
        return tuple(self[n] for n in range(n_max + 1))

    def scaled(self, t):
        """Return the series with f_n replaced by t^n f_n"""
        t = parse_rational(t)
        return NormalizedSeries(
            t ** n * value for n, value in enumerate(self._f, start=1)
        )

    def to_json(self):
        return [format_rational(value) for value in self._f]


def _triangle_get(rows, n, k):
    if n < 0 or k < 0 or n >= len(rows) or k >= len(rows[n]):
        return Fraction(0)
    return rows[n][k]


@export
class BellTable(object):
    """The triangle B_{n,k}, 0 <= k <= n <= n_max

    ``table(n, k)`` is 0 outside the triangle.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(row) for row in rows)

    @property
    def n_max(self):
        return len(self.rows) - 1

    def __call__(self, n, k):
        return _triangle_get(self.rows, n, k)

    def __eq__(self, other):
        if not isinstance(other, BellTable):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "BellTable(n_max={})".format(self.n_max)

    def to_json(self):
        return [[format_rational(value) for value in row] for row in self.rows]


@export
class PotentialRow(object):
    """A_{rho,0}, ..., A_{rho,n_max} for one exponent rho"""

    __slots__ = ("rho", "values")

    def __init__(self, rho, values):
        self.rho = parse_rational(rho)
        self.values = tuple(values)

    @property
    def n_max(self):
        return len(self.values) - 1

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        if not isinstance(other, PotentialRow):
            return NotImplemented
        return (self.rho, self.values) == (other.rho, other.values)

    def __hash__(self):
        return hash((self.rho, self.values))

    def __repr__(self):
        return "PotentialRow(rho={}, n_max={})".format(
            format_rational(self.rho), self.n_max
        )

    def to_json(self):
        return {
            "rho": format_rational(self.rho),
            "row": [format_rational(value) for value in self.values],
        }


@export
class PotentialTable(object):
    """Integer-indexed potential polynomials A_{j,k}, 0 <= j, k <= n_max

    ``table(j, k)`` is the coefficient of x^k in F(x)^j.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(row) for row in rows)

    @property
    def n_max(self):
        return len(self.rows) - 1

    def __call__(self, j, k):
        return _triangle_get(self.rows, j, k)

    def row(self, j):
        return PotentialRow(j, self.rows[j])

    def __eq__(self, other):
        if not isinstance(other, PotentialTable):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "PotentialTable(n_max={})".format(self.n_max)

    def to_json(self):
        return [[format_rational(value) for value in row] for row in self.rows]


def _bell_entry(rows, f, n, k):
    """B_{n,k+1} = sum_{j=1}^{n-k} f_j B_{n-j,k}"""
    total = Fraction(0)
    for j in range(1, n - k + 1):
        f_j = f[j]
        if f_j:
            total += f_j * _triangle_get(rows, n - j, k)
    return total


def _build_bell_rows(f, n_max):
    rows = [[Fraction(0)] * (n + 1) for n in range(n_max + 1)]
    rows[0][0] = Fraction(1)
    for k in range(n_max):
        for n in range(k + 1, n_max + 1):
            rows[n][k + 1] = _bell_entry(rows, f, n, k)
    return rows


def _bell_rows_valid(rows, f, n_max):
    """Check stored rows 0..n_max against the column recurrence"""
    if len(rows) <= n_max:
        return False
    if any(len(rows[n]) != n + 1 for n in range(n_max + 1)):
        return False
    if any(rows[n][0] != (1 if n == 0 else 0) for n in range(n_max + 1)):
        return False
    for k in range(n_max):
        for n in range(k + 1, n_max + 1):
            if rows[n][k + 1] != _bell_entry(rows, f, n, k):
                return False
    return True


@export
def bell_table(f, n_max, store=None):
    """Return the triangle of partial ordinary Bell polynomials

    Columns are filled left to right with
    B_{n,k+1} = sum_{j=1}^{n-k} f_j B_{n-j,k}, starting from the
    column B_{n,0} = [n = 0].

    When a cache directory is configured, tables are persisted under a
    digest of f_1, ..., f_{n_max} and reused by later calls on the same
    truncated series. Stored rows are checked against the recurrence;
    an inconsistent file is logged, rebuilt and overwritten.

    :param NormalizedSeries f: the series; f_n beyond its end are 0
    :param int n_max: the largest n
    :param Optional[TriangleStore] store: persistence override
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative, got {}".format(n_max))
    if not isinstance(f, NormalizedSeries):
        f = NormalizedSeries(f)
    store = store if store is not None else TriangleStore.from_env()
    name = None
    if store is not None:
        name = "bell_" + TriangleStore.key_for(*f.padded(n_max)[1:])
        stored = store.load(name, exact=True)
        if stored is not None:
            if _bell_rows_valid(stored, f, n_max):
                return BellTable(stored[: n_max + 1])
            log.warning("Discarding inconsistent cached %s", name)
    table = BellTable(_build_bell_rows(f, n_max))
    if store is not None:
        store.save(name, table.rows)
    return table


def _is_nonnegative_integer(value):
    return value.denominator == 1 and value >= 0


def _convolve_with(row, f, n_max):
    """Return the coefficients of (row as a series) * F(x) up to n_max"""
    padded = f.padded(n_max)
    return [
        sum(
            (padded[i] * row[n - i] for i in range(n + 1) if padded[i]),
            Fraction(0),
        )
        for n in range(n_max + 1)
    ]


@export
def potential_row(rho, f, n_max, method="auto", bell=None):
    """Return A_{rho,0}, ..., A_{rho,n_max}

    For a nonnegative integer rho the row is built by repeated
    convolution, A_{rho,n} = A_{rho-1,n} + sum_k f_k A_{rho-1,n-k};
    for any other rational it is the binomial sum
    A_{rho,n} = sum_k binom(rho, k) B_{n,k}.

    :param Rational rho: the exponent
    :param NormalizedSeries f: the series
    :param int n_max: the largest n
    :param str method: ``"auto"``, ``"recurrence"`` (integer rho only)
        or ``"binomial"``
    :param Optional[BellTable] bell: a Bell table for f covering n_max,
        to avoid rebuilding it
    """
    rho = parse_rational(rho)
    if not isinstance(f, NormalizedSeries):
        f = NormalizedSeries(f)
    if method == "auto":
        method = "recurrence" if _is_nonnegative_integer(rho) else "binomial"

    if method == "recurrence":
        if not _is_nonnegative_integer(rho):
            raise ValueError(
                "the recurrence needs a nonnegative integer rho, got {}".format(
                    format_rational(rho)
                )
            )
        row = [Fraction(1)] + [Fraction(0)] * n_max
        for _ in range(int(rho)):
            row = _convolve_with(row, f, n_max)
        return PotentialRow(rho, row)

    if method != "binomial":
        raise ValueError("unknown method {!r}".format(method))
    if bell is None or bell.n_max < n_max:
        bell = bell_table(f, n_max)
    binomials = [binomial_rational(rho, k) for k in range(n_max + 1)]
    return PotentialRow(
        rho,
        [
            sum(
                (binomials[k] * bell(n, k) for k in range(n + 1)),
                Fraction(0),
            )
            for n in range(n_max + 1)
        ],
    )


@export
def potential_integer_table(f, n_max):
    """Return A_{j,k} for 0 <= j, k <= n_max

    Row 0 is (1, 0, 0, ...); row j is row j-1 convolved with
    (1, f_1, f_2, ...).
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative, got {}".format(n_max))
    if not isinstance(f, NormalizedSeries):
        f = NormalizedSeries(f)
    row = [Fraction(1)] + [Fraction(0)] * n_max
    rows = [row]
    for _ in range(n_max):
        row = _convolve_with(row, f, n_max)
        rows.append(row)
    return PotentialTable(rows)


@export
def bell_from_potential(f, n_max, table=None):
    """Return the Bell triangle through integer potential polynomials

    Uses B_{k,j} = (-1)^j sum_{i=0}^{j} (-1)^i binom(j, i) A_{i,k}.
    """
    if table is None or table.n_max < n_max:
        table = potential_integer_table(f, n_max)
    rows = []
    for k in range(n_max + 1):
        row = []
        for j in range(k + 1):
            total = sum(
                (
                    (-1) ** i * math.comb(j, i) * table(i, k)
                    for i in range(j + 1)
                ),
                Fraction(0),
            )
            row.append((-1) ** j * total)
        rows.append(row)
    return BellTable(rows)


@export
def potential_from_integer_values(z, f, k, table=None):
    """Return A_{-z,k} from the integer-indexed A_{j,k}, j <= k

    A_{-z,k} = (z)_{k+1} / k! * sum_j (-1)^j / (z+j) binom(k, j) A_{j,k}

    :raises ValueError: when z is one of 0, -1, ..., -k
    """
    z = parse_rational(z)
    if _is_nonnegative_integer(-z) and -z <= k:
        raise ValueError(
            "z = {} makes a denominator vanish".format(format_rational(z))
        )
    if table is None or table.n_max < k:
        table = potential_integer_table(f, k)
    total = sum(
        (
            Fraction((-1) ** j * math.comb(k, j)) / (z + j) * table(j, k)
            for j in range(k + 1)
        ),
        Fraction(0),
    )
    return rising_factorial(z, k + 1) / factorial(k) * total


def _partitions(n, k, largest):
    """Yield multiplicity maps of partitions of n into k parts <= largest"""
    if n == 0 and k == 0:
        yield {}
        return
    if n <= 0 or k <= 0 or largest <= 0:
        return
    for part in range(min(largest, n - k + 1), 0, -1):
        for count in range(1, k + 1):
            if part * count > n:
                break
            for rest in _partitions(n - part * count, k - count, part - 1):
                multiplicities = dict(rest)
                multiplicities[part] = count
                yield multiplicities


@export
def bell_multinomial(n, k, f):
    """Return B_{n,k} as a sum over partitions of n into k parts

    Each partition with k_i parts equal to i contributes
    k! / (k_1! k_2! ...) * prod f_i^{k_i}.
    """
    if not isinstance(f, NormalizedSeries):
        f = NormalizedSeries(f)
    total = Fraction(0)
    for multiplicities in _partitions(n, k, n):
        weight = factorial(k)
        term = Fraction(1)
        for part, count in multiplicities.items():
            weight //= factorial(count)
            term *= f[part] ** count
        total += weight * term
    return total


@export
def potential_multinomial(rho, n, f):
    """Return A_{rho,n} = sum_k binom(rho, k) B_{n,k} from partitions"""
    return sum(
        (
            binomial_rational(rho, k) * bell_multinomial(n, k, f)
            for k in range(n + 1)
        ),
        Fraction(0),
    )


@export
def dump_tables(f, n_max, rho):
    """Return the JSON document of a series' Bell and potential tables"""
    if not isinstance(f, NormalizedSeries):
        f = NormalizedSeries(f)
    bell = bell_table(f, n_max)
    return {
        "f": f.to_json(),
        "bell": bell.to_json(),
        "potential": potential_row(rho, f, n_max, bell=bell).to_json(),
        "potential_integer": potential_integer_table(f, n_max).to_json(),
    }

