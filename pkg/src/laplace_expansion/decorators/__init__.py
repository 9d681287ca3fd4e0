# -*- coding: UTF-8 -*-
"""
Decorators used across laplace_expansion.

Generic decorators (``after``, ``instead``) run a hook around a call
with a :any:`Decorated` record of it; the ready-to-wear decorators
(``intercept``, ``log_call``, ``memoize``, ``export``) are built on
top of them.
"""

__all__ = (
    "Decorated",
    "after",
    "instead",
    "export",
    "intercept",
    "log_call",
    "memoize",
)


from .generic import Decorated, after, instead
from .ready_to_wear import export, intercept, log_call, memoize
