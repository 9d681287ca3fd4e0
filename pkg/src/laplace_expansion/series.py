# -*- coding: UTF-8 -*-
"""
Truncated formal power series with exact rational coefficients
"""

from fractions import Fraction
from logging import getLogger

from .decorators import export
from .rational import factorial


log = getLogger(__name__)


@export
class TruncatedSeries(object):
    """A power series c_0 + c_1 x + ... + c_order x^order

    Terms beyond ``order`` are unknown and discarded by every
    operation; the order of a result is the smaller of its operands'.
    Instances are immutable.

    :param coefficients: iterable of rationals, lowest degree first.
        Missing coefficients up to ``order`` are zero.
    :param int order: the highest degree kept; defaults to the last
        supplied coefficient
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients, order=None):
        coefficients = [Fraction(c) for c in coefficients]
        if order is None:
            order = max(len(coefficients) - 1, 0)
        if order < 0:
            raise ValueError("order must be nonnegative, got {}".format(order))
        coefficients = coefficients[: order + 1]
        coefficients.extend([Fraction(0)] * (order + 1 - len(coefficients)))
        self._coefficients = tuple(coefficients)

    @classmethod
    def monomial(cls, degree, order, coefficient=1):
        coefficients = [0] * (order + 1)
        if degree <= order:
            coefficients[degree] = coefficient
        return cls(coefficients, order)

    @classmethod
    def log1p(cls, order):
        """log(1 + x)"""
        return cls(
            [0] + [Fraction((-1) ** (n + 1), n) for n in range(1, order + 1)],
            order,
        )

    @classmethod
    def expm1(cls, order):
        """exp(x) - 1"""
        return cls(
            [0] + [Fraction(1, factorial(n)) for n in range(1, order + 1)],
            order,
        )

    @property
    def order(self):
        return len(self._coefficients) - 1

    @property
    def coefficients(self):
        return self._coefficients

    def __getitem__(self, n):
        if 0 <= n <= self.order:
            return self._coefficients[n]
        if n < 0:
            return Fraction(0)
        raise IndexError("x^{} is beyond order {}".format(n, self.order))

    def __len__(self):
        return len(self._coefficients)

    def __iter__(self):
        return iter(self._coefficients)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self):
        return hash(self._coefficients)

    def __repr__(self):
        return "TruncatedSeries([{}], order={})".format(
            ", ".join(str(c) for c in self._coefficients), self.order
        )

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries([other], self.order)

    def __add__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        return TruncatedSeries(
            [self[n] + other[n] for n in range(order + 1)], order
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self._coefficients], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = Fraction(other)
            return TruncatedSeries(
                [c * other for c in self._coefficients], self.order
            )
        order = min(self.order, other.order)
        product = [Fraction(0)] * (order + 1)
        for i, left in enumerate(self._coefficients[: order + 1]):
            if not left:
                continue
            for j in range(order + 1 - i):
                product[i + j] += left * other[j]
        return TruncatedSeries(product, order)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = TruncatedSeries.monomial(0, self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def compose(self, inner):
        """Return self(inner(x)); inner must have no constant term"""
        if inner[0] != 0:
            raise ValueError("the inner series must vanish at 0")
        order = min(self.order, inner.order)
        result = TruncatedSeries([self[order]], order)
        # Horner from the top coefficient down
        for n in range(order - 1, -1, -1):
            result = result * inner + self[n]
        return result

    def reversion(self):
        """Return the compositional inverse of x + c_2 x^2 + ...

        The coefficients are found one degree at a time: with the
        first m-1 known, composing with the candidate leaves exactly
        the negated m-th coefficient at x^m.
        """
        if self[0] != 0 or self.order < 1 or self[1] != 1:
            raise ValueError(
                "reversion needs the form x + O(x^2), got {!r}".format(self)
            )
        order = self.order
        inverse = [Fraction(0), Fraction(1)] + [Fraction(0)] * (order - 1)
        for m in range(2, order + 1):
            candidate = TruncatedSeries(inverse, order)
            inverse[m] = -self.compose(candidate)[m]
        return TruncatedSeries(inverse, order)
