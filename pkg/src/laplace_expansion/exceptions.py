# -*- coding: UTF-8 -*-
"""
Exceptions raised by laplace_expansion
"""

__all__ = (
    "LaplaceError",
    "InvalidProblemError",
    "TruncationError",
    "RouteDisagreementError",
    "NumericDomainError",
    "QuadratureError",
    "VerificationError",
)


class LaplaceError(Exception):
    """Base class for all errors raised by this package"""


class InvalidProblemError(LaplaceError, ValueError):
    """The input datum violates a precondition (a_0 = 0, bad schema, ...)"""


class TruncationError(InvalidProblemError):
    """Coefficient lists are too short for the requested order

    Raised only when zero padding was not requested.
    """


class RouteDisagreementError(LaplaceError):
    """Two formulas that must agree exactly produced different values

    This signals an implementation bug, never bad input.

    :param str what: short description of the compared quantity
    :param dict values: mapping of route name to the value it produced
    """

    def __init__(self, what, values):
        self.what = what
        self.values = dict(values)
        rendered = ", ".join(
            "{}={}".format(name, value) for name, value in self.values.items()
        )
        super(RouteDisagreementError, self).__init__(
            "routes disagree on {}: {}".format(what, rendered)
        )


class NumericDomainError(LaplaceError, ValueError):
    """A numeric evaluation was requested outside its domain"""


class QuadratureError(LaplaceError):
    """Adaptive quadrature did not reach its tolerance

    :param str msg: description of the failure
    :param QuadratureResult result: the best estimate obtained
    """

    def __init__(self, msg, result=None):
        super(QuadratureError, self).__init__(msg)
        self.result = result


class VerificationError(LaplaceError):
    """A numeric verification sweep violated its acceptance bounds

    :param str msg: description of the failure
    :param VerificationReport report: the offending report
    """

    def __init__(self, msg, report=None):
        super(VerificationError, self).__init__(msg)
        self.report = report
