# -*- coding: UTF-8 -*-
"""
Tests for truncated power series
"""

from fractions import Fraction

import pytest

from laplace_expansion.series import TruncatedSeries


class TestConstruction:
    """Building and indexing series"""

    def test_padding_and_truncation(self):
        series = TruncatedSeries([1, "1/2"], order=3)
        assert series.coefficients == (1, Fraction(1, 2), 0, 0)
        assert TruncatedSeries([1, 2, 3], order=1).coefficients == (1, 2)

    def test_indexing(self):
        series = TruncatedSeries([1, 2])
        assert series[-1] == 0
        assert series[1] == 2
        with pytest.raises(IndexError):
            series[2]

    def test_negative_order(self):
        with pytest.raises(ValueError):
            TruncatedSeries([1], order=-1)

    def test_known_series(self):
        assert TruncatedSeries.log1p(3).coefficients == (
            0,
            1,
            Fraction(-1, 2),
            Fraction(1, 3),
        )
        assert TruncatedSeries.expm1(3).coefficients == (
            0,
            1,
            Fraction(1, 2),
            Fraction(1, 6),
        )
        assert TruncatedSeries.monomial(2, 3, 5).coefficients == (0, 0, 5, 0)
        assert TruncatedSeries.monomial(4, 3).coefficients == (0, 0, 0, 0)

    def test_equality_and_hash(self):
        left = TruncatedSeries([1, "2/4"])
        right = TruncatedSeries([Fraction(1), Fraction(1, 2)])
        assert left == right
        assert hash(left) == hash(right)
        assert left != TruncatedSeries([1, "1/2"], order=2)


class TestArithmetic:
    """Ring operations keep the smaller order"""

    def test_add_sub(self):
        left = TruncatedSeries([1, 2, 3])
        right = TruncatedSeries([1, 1])
        assert (left + right).coefficients == (2, 3)
        assert (left - 1).coefficients == (0, 2, 3)
        assert (1 - left).coefficients == (0, -2, -3)

    def test_mul(self):
        one_plus_x = TruncatedSeries([1, 1], order=3)
        assert (one_plus_x * one_plus_x).coefficients == (1, 2, 1, 0)
        assert (one_plus_x * Fraction(1, 2)).coefficients == (
            Fraction(1, 2),
            Fraction(1, 2),
            0,
            0,
        )

    def test_pow(self):
        one_plus_x = TruncatedSeries([1, 1], order=4)
        assert (one_plus_x ** 4).coefficients == (1, 4, 6, 4, 1)
        assert (one_plus_x ** 0).coefficients == (1, 0, 0, 0, 0)
        with pytest.raises(ValueError):
            one_plus_x ** -1

    def test_compose_exp_log(self):
        """exp(log(1 + x)) - 1 = x"""
        order = 8
        composed = TruncatedSeries.expm1(order).compose(
            TruncatedSeries.log1p(order)
        )
        assert composed == TruncatedSeries.monomial(1, order)

    def test_compose_needs_zero_constant(self):
        with pytest.raises(ValueError):
            TruncatedSeries([1, 1]).compose(TruncatedSeries([1, 1]))


class TestReversion:
    """Compositional inverses"""

    def test_log_exp(self):
        """The inverse of log(1 + x) is e^x - 1"""
        order = 10
        assert TruncatedSeries.log1p(order).reversion() == (
            TruncatedSeries.expm1(order)
        )

    def test_round_trip(self, rng):
        """series(inverse(x)) = x for random series"""
        order = 7
        coefficients = [0, 1] + [
            Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            for _ in range(order - 1)
        ]
        series = TruncatedSeries(coefficients)
        inverse = series.reversion()
        assert series.compose(inverse) == TruncatedSeries.monomial(1, order)
        assert inverse.compose(series) == TruncatedSeries.monomial(1, order)

    @pytest.mark.parametrize(
        "coefficients", [[1, 1], [0, 2, 1], [0], [0, 0, 1]]
    )
    def test_rejects_non_unit_linear_term(self, coefficients):
        with pytest.raises(ValueError):
            TruncatedSeries(coefficients).reversion()
