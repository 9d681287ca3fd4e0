# -*- coding: UTF-8 -*-
"""The exact coefficient routes and the special examples are exposed here.

The floating-point checks live in `laplace_expansion.numeric` and the
command line in `laplace_expansion.cli`; the Bell and potential tables
and the rational kernels have their own modules.
"""

from ._version import __version__, __version_info__  # noqa
from . import coefficients, exceptions, special
from .coefficients import *  # noqa
from .exceptions import *  # noqa
from .special import *  # noqa

__all__ = coefficients.__all__ + exceptions.__all__ + special.__all__
