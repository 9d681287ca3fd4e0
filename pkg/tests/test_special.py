# -*- coding: UTF-8 -*-
"""
Tests for the Stirling, Q_n and C_n(0) examples
"""

import time
from fractions import Fraction

import pytest

from laplace_expansion.bell import potential_integer_table
from laplace_expansion.coefficients import coeffs_direct
from laplace_expansion.exceptions import InvalidProblemError
from laplace_expansion.special import (
    PIPELINE_ROUTES,
    DiagonalForm,
    StirlingVariant,
    diagonal_coefficients,
    gamma_problem,
    gamma_problem_exp,
    potential_closed_form_log,
    q_polynomial,
    q_polynomial_value,
    stirling_closed_form,
    stirling_table,
    stirling_via_pipeline,
)


GAMMA_PRINTED = (
    Fraction(1),
    Fraction(-1, 12),
    Fraction(1, 288),
    Fraction(139, 51840),
    Fraction(-571, 2488320),
)


class TestGammaProblems:
    """The problems behind the Stirling series"""

    def test_gamma_problem_data(self):
        problem = gamma_problem(3)
        assert problem.a == (
            Fraction(1, 2),
            Fraction(-1, 3),
            Fraction(1, 4),
            Fraction(-1, 5),
        )
        assert problem.is_g1

    def test_exp_problem_data(self):
        problem = gamma_problem_exp(2, mirror=True)
        assert problem.a == (Fraction(1, 2), Fraction(-1, 6), Fraction(1, 24))

    @pytest.mark.parametrize("factory", [gamma_problem, gamma_problem_exp])
    def test_mirror_flips_signs(self, factory):
        c_sc = coeffs_direct(factory(10)).c_sc
        mirrored = coeffs_direct(factory(10, mirror=True)).c_sc
        for n in range(11):
            assert mirrored[n] == (-1) ** n * c_sc[n]


class TestStirlingCoefficients:
    """gamma_n through every route and closed form"""

    @pytest.mark.parametrize("route", sorted(PIPELINE_ROUTES))
    def test_pipeline_routes(self, route):
        assert stirling_via_pipeline(4, route).gamma == GAMMA_PRINTED

    def test_exp_pipeline(self):
        assert stirling_via_pipeline(4, problem="exp").gamma == GAMMA_PRINTED

    @pytest.mark.parametrize("variant", list(StirlingVariant))
    def test_closed_forms(self, variant):
        values = tuple(stirling_closed_form(n, variant) for n in range(5))
        assert values == GAMMA_PRINTED

    def test_table_agrees_to_twelve(self):
        table = stirling_table(12)
        assert set(table) == {
            "pipeline",
            "s_new",
            "s_wojdylo",
            "S_new",
            "S_wojdylo",
        }
        assert table["pipeline"][:5] == GAMMA_PRINTED
        exp = stirling_via_pipeline(12, problem="exp").gamma
        assert exp == table["pipeline"]

    def test_convolution_identity(self):
        coefficients = stirling_via_pipeline(12)
        assert len(coefficients) == 13
        assert coefficients.convolution_residuals() == (0,) * 12

    def test_unknown_names(self):
        with pytest.raises(InvalidProblemError):
            stirling_via_pipeline(2, route="magic")
        with pytest.raises(InvalidProblemError):
            stirling_via_pipeline(2, problem="cosh")

    def test_negative_index(self):
        with pytest.raises(ValueError):
            stirling_closed_form(-1)

    def test_gamma_50_is_fast(self):
        start = time.perf_counter()
        for n in range(51):
            value = stirling_closed_form(n, StirlingVariant.S_NEW)
        assert time.perf_counter() - start < 60
        assert value.denominator > 1


class TestPotentialClosedForm:
    """A_{k,n} for x - log(1 + x) in Stirling numbers"""

    def test_against_table(self):
        table = potential_integer_table(gamma_problem(10).normalized(), 10)
        for k in range(11):
            for n in range(11):
                assert potential_closed_form_log(k, n) == table(k, n)


class TestQPolynomials:
    """The incomplete gamma polynomials Q_n(mu)"""

    def test_low_orders(self):
        assert q_polynomial(0).q == (1,)
        assert q_polynomial(1).q == (1, 1, Fraction(1, 12))
        assert q_polynomial(2).q == (
            3,
            5,
            Fraction(25, 12),
            Fraction(1, 12),
            Fraction(1, 288),
        )

    def test_degree_and_leading(self):
        for n in range(9):
            polynomial = q_polynomial(n)
            assert polynomial.degree == 2 * n
            assert polynomial.q[2 * n] == (-1) ** n * stirling_via_pipeline(
                n
            )[n]

    def test_str(self):
        assert str(q_polynomial(1)) == "1 + mu + 1/12*mu^2"

    @pytest.mark.parametrize("mu", ["1", "-2/3", "5"])
    @pytest.mark.parametrize("route", ["direct", "wojdylo", "comtet"])
    def test_value_through_route(self, mu, route):
        for n in range(4):
            assert q_polynomial_value(n, mu, route) == q_polynomial(n)(mu)

    def test_mu_zero(self):
        with pytest.raises(InvalidProblemError):
            q_polynomial_value(1, 0)


class TestDiagonalCoefficients:
    """C_n(0)"""

    expected = (
        Fraction(-1, 3),
        Fraction(-1, 540),
        Fraction(25, 6048),
        Fraction(101, 155520),
    )

    @pytest.mark.parametrize("form", list(DiagonalForm))
    def test_values(self, form):
        assert diagonal_coefficients(3, form).c0 == self.expected

    def test_forms_agree(self):
        reduced = diagonal_coefficients(8, DiagonalForm.REDUCED)
        full = diagonal_coefficients(8, "full")
        assert reduced.c0 == full.c0
        assert len(full) == 9
