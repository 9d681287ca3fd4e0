# -*- coding: UTF-8 -*-
"""
Ready-to-wear decorators used throughout the exact and numeric layers.
"""

__all__ = ("export", "intercept", "log_call", "memoize")


from logging import getLogger

from laplace_expansion import functions
from laplace_expansion.constants import LOG_CALL_FMT_STR
from laplace_expansion.caches import LRUCache

from .generic import instead, after
from ._visibility import export


log = getLogger(__name__)


def intercept(
    catch=Exception,
    reraise=None,
    handler=None,
    err_msg=None,
    include_context=True,
):
    """Intercept an exception and either re-raise, handle, or both.

    Used to turn the low-level failures of document parsing into the
    package's own errors:

    .. code:: python

        from fractions import Fraction

        from laplace_expansion.decorators import intercept
        from laplace_expansion.exceptions import InvalidProblemError

        @intercept(catch=(KeyError, ValueError), reraise=InvalidProblemError,
                   err_msg="bad problem document: {exc}")
        def read_alpha(doc):
            return Fraction(doc["alpha"])

    Exceptions derived from ``LaplaceError`` always propagate unchanged.

    :param Type[Exception] catch: the exception (or tuple) to catch
    :param Union[bool, Type[Exception]] reraise: the exception to
        raise instead, or ``True`` to re-raise the original. If
        ``False`` or ``None``, the exception is swallowed. A
        ``handler`` is always called before re-raising.
    :param Callable[[Exception],Any] handler: called with the caught
        exception
    :param str err_msg: message for the re-raised exception; ``{exc}``
        is replaced by the caught exception
    :param include_context: if True, the caught exception is chained
        as the cause of the re-raised one
    """
    return instead(
        functions.intercept,
        catch=catch,
        reraise=reraise,
        handler=handler,
        err_msg=err_msg,
        include_context=include_context,
    )


def log_call(logger=None, level="debug", format_str=LOG_CALL_FMT_STR):
    """Log the name, parameters, result & duration of a function call

    If not provided, the logger of the decorated function's module is
    used. Rationals are rendered in their canonical ``p/q`` form. The
    message is only built when the logger is enabled for ``level``.

    :param Optional[logging.Logger] logger: an optional Logger instance
    :param str level: the level with which to log the message
    :param str format_str: the format string, with the keys ``name``,
        ``args``, ``result`` and ``elapsed``

    :rtype: Callable
    """
    return after(
        functions.log_call, logger=logger, level=level, format_str=format_str,
    )


def memoize(keep=0, cache_class=LRUCache):
    """Memoize the decorated function

    The default cache is an unbounded, thread-safe LRU cache. To keep
    at most ``keep`` results, pass a size.

    :param int keep: the maximum size of the cache, 0 for unbounded
    :param cache_class: the cache type, instantiated with ``keep``.
        Anything supporting ``__getitem__``, ``__setitem__`` and
        ``__contains__`` works.

    :rtype: Callable
    """
    return instead(functions.memoize, memo=cache_class(keep))
