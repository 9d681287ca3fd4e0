# -*- coding: UTF-8 -*-
"""
Tests for the floating-point checks
"""

import io
import math

import mpmath
import numpy as np
import pytest

from laplace_expansion.coefficients import LaplaceProblem, coeffs_direct
from laplace_expansion.exceptions import (
    NumericDomainError,
    QuadratureError,
    VerificationError,
)
from laplace_expansion.numeric import (
    CSV_COLUMNS,
    BuiltinIntegral,
    Domain,
    VerificationReport,
    fit_order,
    gamma_numeric,
    log_grid,
    mp_dps,
    partial_sum,
    quadrature,
    verify_igamma_diagonal,
    verify_laplace_order,
    verify_stirling_series,
    write_csv,
)
from laplace_expansion.special import gamma_problem


class TestGammaNumeric:
    """The Lanczos gamma function"""

    @pytest.mark.parametrize(
        "x, expected", [(1, 1.0), (2, 1.0), (10, 362880.0)]
    )
    def test_integers(self, x, expected):
        assert gamma_numeric(x) == pytest.approx(expected, rel=1e-13)

    def test_half(self):
        assert gamma_numeric(0.5) ** 2 == pytest.approx(math.pi, rel=1e-13)

    @pytest.mark.parametrize("x", [0.1, 0.75, 3.3, 17.5, 99.9, 170.5])
    def test_against_mpmath(self, x):
        assert gamma_numeric(x) == pytest.approx(
            float(mpmath.gamma(x)), rel=1e-13
        )

    @pytest.mark.parametrize("x", [0, -1, -0.5])
    def test_domain(self, x):
        with pytest.raises(NumericDomainError):
            gamma_numeric(x)

    def test_overflow(self):
        with pytest.raises(OverflowError):
            gamma_numeric(172)


class TestQuadrature:
    """Adaptive Gauss-Kronrod integration"""

    def test_exponential(self):
        result = quadrature(lambda x: np.exp(-x))
        assert result.converged
        assert abs(result.value - 1.0) < 1e-10
        assert result.err_bound >= result.tail_bound > 0

    def test_unit_interval_constant(self):
        result = quadrature(np.ones_like, Domain.UNIT_INTERVAL)
        assert result.value == pytest.approx(1.0, abs=1e-14)
        assert result.tail_bound == 0.0

    def test_scalar_integrand(self):
        result = quadrature(lambda x: math.sqrt(x), "unit_interval")
        assert result.value == pytest.approx(2.0 / 3.0, rel=1e-10)

    def test_gamma_integrand(self):
        """The integral of exp(-lambda (x - log(1 + x)))"""
        lam = 10.0
        result = quadrature(BuiltinIntegral.GAMMA_FIRST.integrand(lam))
        expected = float(
            mpmath.gammainc(lam + 1, lam) * mpmath.exp(lam) / lam ** (lam + 1)
        )
        assert result.value == pytest.approx(expected, rel=1e-11)

    def test_no_decay(self):
        with pytest.raises(QuadratureError):
            quadrature(lambda x: np.ones_like(x))

    def test_budget(self, caplog):
        result = quadrature(
            lambda x: np.abs(np.sin(1e4 * x)),
            Domain.UNIT_INTERVAL,
            max_intervals=4,
        )
        assert not result.converged
        assert "stopped after" in caplog.text


class TestPartialSum:
    """Evaluation of truncated expansions"""

    def test_no_terms(self):
        problem = gamma_problem(2)
        assert partial_sum(problem, coeffs_direct(problem), 10.0, 0) == 0.0

    def test_one_term(self):
        """Gamma(1/2) / (2 sqrt(1/2)) lambda^(-1/2)"""
        problem = gamma_problem(2)
        value = partial_sum(problem, coeffs_direct(problem), 4.0, 1)
        assert value == pytest.approx(
            math.sqrt(math.pi) / (2 * math.sqrt(0.5)) / 2.0, rel=1e-14
        )

    def test_laplace_remainder(self):
        """At lambda = 10 six terms are within twice the seventh"""
        lam = 10.0
        problem = gamma_problem(6)
        c_sc = coeffs_direct(problem)
        exact = quadrature(BuiltinIntegral.GAMMA_FIRST.integrand(lam)).value
        six = partial_sum(problem, c_sc, lam, 6)
        seventh = partial_sum(problem, c_sc, lam, 7) - six
        assert abs(exact - six) <= 2 * abs(seventh)

    @pytest.mark.parametrize(
        "a, lam, n_terms",
        [(("-1", "1"), 10.0, 1), (("1", "1"), 0.0, 1), (("1", "1"), 1.0, 3)],
    )
    def test_domain(self, a, lam, n_terms):
        problem = LaplaceProblem(2, 1, a, (1, 0), 1)
        coefficients = coeffs_direct(problem)
        with pytest.raises(NumericDomainError):
            partial_sum(problem, coefficients, lam, n_terms)


class TestFitOrder:
    """Least-squares decay orders"""

    def test_exact_power(self):
        xs = [10.0, 30.0, 100.0, 300.0]
        errors = [x ** -2.5 for x in xs]
        assert fit_order(xs, errors) == pytest.approx(-2.5)

    def test_zero_errors_dropped(self):
        xs = [10.0, 30.0, 100.0, 300.0, 1000.0]
        errors = [0.0] + [x ** -1 for x in xs[1:]]
        assert fit_order(xs, errors) == pytest.approx(-1.0)

    def test_too_few_points(self):
        with pytest.raises(NumericDomainError, match="at least"):
            fit_order([10.0, 100.0, 1000.0], [1.0, 0.1, 0.01])

    def test_narrow_grid(self):
        with pytest.raises(NumericDomainError, match="spans"):
            fit_order([10.0, 11.0, 12.0, 13.0], [1.0, 0.9, 0.8, 0.7])


class TestGrid:
    """log_grid and precision settings"""

    def test_log_grid(self):
        grid = log_grid(10.0, 1000.0, 3)
        assert grid == pytest.approx([10.0, 100.0, 1000.0])

    @pytest.mark.parametrize(
        "args", [(0.0, 10.0, 3), (10.0, 1.0, 3), (1, 2, 1)]
    )
    def test_bad_grid(self, args):
        with pytest.raises(NumericDomainError):
            log_grid(*args)

    def test_mp_dps(self, monkeypatch):
        monkeypatch.setenv("LAPLACE_MP_DPS", "30")
        assert mp_dps() == 30
        monkeypatch.setenv("LAPLACE_MP_DPS", "lots")
        assert mp_dps() == 50


class TestStirlingVerification:
    """The Stirling series against mpmath"""

    def test_single_point(self):
        report = verify_stirling_series([10.0], 5)
        assert report.name == "stirling_gamma"
        assert report.rel_errors[0][4] <= 1e-6
        assert report.abs_errors[0][4] <= report.bounds[0][4]

    @pytest.mark.parametrize("form", ["gamma", "factorial"])
    def test_orders(self, form):
        report = verify_stirling_series(
            log_grid(10.0, 1000.0, 9), 6, form=form, workers=3
        )
        assert report.check() is report
        for n in report.checked_terms:
            assert report.fitted_order[n] == pytest.approx(-n, abs=0.15)

    def test_small_lambda(self):
        with pytest.raises(NumericDomainError):
            verify_stirling_series([2.0, 10.0], 3)

    def test_no_terms(self):
        with pytest.raises(NumericDomainError, match="at least one term"):
            verify_stirling_series([10.0, 20.0], 0)


class TestIgammaVerification:
    """Gamma(m, m)/Gamma(m) against its expansion"""

    def test_diagonal(self):
        report = verify_igamma_diagonal([10, 20, 40, 80], 4)
        assert report.name == "igamma_diagonal"
        assert report.reference[0] == pytest.approx(
            float(mpmath.gammainc(10, 10, regularized=True)), rel=1e-12
        )
        report.check()

    @pytest.mark.parametrize("grid", [[4, 10], [10.5, 20]])
    def test_bad_grid(self, grid):
        with pytest.raises(NumericDomainError):
            verify_igamma_diagonal(grid, 2)

    def test_no_terms(self):
        with pytest.raises(NumericDomainError):
            verify_igamma_diagonal([10, 20], 0)


class TestLaplaceVerification:
    """Built-in integrals against quadrature"""

    @pytest.mark.parametrize("integral", list(BuiltinIntegral))
    def test_orders(self, integral):
        report = verify_laplace_order(
            integral, log_grid(10.0, 1000.0, 9), 6, workers=2
        )
        report.check()
        assert report.expected_order[1] == -1.0
        assert report.expected_order[2] == -1.5

    @pytest.mark.parametrize("integral", list(BuiltinIntegral))
    def test_no_terms(self, integral):
        with pytest.raises(NumericDomainError):
            verify_laplace_order(integral, [10.0], 0)

    def test_large_lambda(self):
        report = verify_laplace_order("gamma_first", [1000.0], 8)
        assert report.rel_errors[0][7] <= 1e-8


class TestReport:
    """Acceptance and output of reports"""

    def make_report(self, error=1e-4):
        grid = [10.0, 100.0, 1000.0, 10000.0]
        return VerificationReport(
            name="toy",
            grid=grid,
            terms=[1],
            reference=[1.0] * 4,
            reference_error=[0.0] * 4,
            partial_sums=[[1.0 - error / x] for x in grid],
            abs_errors=[[error / x] for x in grid],
            rel_errors=[[error / x] for x in grid],
            bounds=[[1e-3] for _ in grid],
            expected_order={1: -1.0},
            checked_terms=(1,),
        )

    def test_passes(self):
        report = self.make_report()
        assert report.passed
        assert report.fitted_order[1] == pytest.approx(-1.0)

    def test_bound_failure(self):
        report = self.make_report(error=1.0)
        with pytest.raises(VerificationError) as info:
            report.check()
        assert info.value.report is report
        assert "exceeds" in str(info.value)

    def test_unsorted_grid(self):
        with pytest.raises(NumericDomainError):
            VerificationReport(
                "toy", [2.0, 1.0], [], [], [], [], [], [], [], {}, ()
            )

    def test_csv(self):
        stream = io.StringIO()
        write_csv([self.make_report()], stream)
        lines = stream.getvalue().splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert len(lines) == 5
        assert lines[1].startswith("toy,10.0,1,1.0,")

    def test_summary(self):
        summary = self.make_report().summary()
        assert summary["passed"] is True
        assert summary["failures"] == []
        assert summary["checked_terms"] == [1]
