# -*- coding: UTF-8 -*-
"""
Functions to use for decorator construction
"""

__all__ = ("format_value", "intercept", "log_call", "memoize")


from fractions import Fraction
from inspect import getmodule
from logging import getLevelName, getLogger

from six import raise_from

from .constants import LOG_CALL_FMT_STR
from .exceptions import LaplaceError
from ._memoization import convert_to_hashable


def intercept(
    decorated,
    catch=Exception,
    reraise=None,
    handler=None,
    err_msg=None,
    include_context=True,
):
    """Intercept an error and either re-raise, handle, or both

    Designed to be called via the ``instead`` decorator. Errors that
    already belong to this package's hierarchy are never intercepted,
    so a precise ``InvalidProblemError`` raised deep inside a parser is
    not replaced by a vaguer one.

    :param Decorated decorated: decorated function information
    :param Type[Exception] catch: an exception to intercept
    :param Union[bool, Type[Exception]] reraise: if provided, will re-raise
        the provided exception, after running any provided
        handler callable. If ``False`` or ``None``, no exception
        will be re-raised.
    :param Callable[[Type[Exception]],Any] handler: a function
        to call with the caught exception as its only argument.
    :param str err_msg: if included will be used to instantiate
        the exception, formatted with the caught exception as ``exc``.
        If not included, the caught exception is cast to a string.
    :param include_context: if True, the caught exception becomes the
        ``__cause__`` of the re-raised one.
    """
    try:
        return decorated(*decorated.args, **decorated.kwargs)

    except LaplaceError:
        raise

    except catch as exc:
        if handler is not None:
            handler(exc)

        if isinstance(reraise, bool):
            if reraise:
                raise

        elif reraise is not None:

            if err_msg is not None:
                new_exc = reraise(err_msg.format(exc=exc))
            else:
                new_exc = reraise(str(exc))

            context = exc if include_context else None
            raise_from(new_exc, context)


def format_value(value):
    """Render a value for log output, with rationals as ``p/q``"""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return "{}/{}".format(value.numerator, value.denominator)
    if isinstance(value, (list, tuple)):
        return "[{}]".format(", ".join(format_value(elem) for elem in value))
    return repr(value) if isinstance(value, str) else str(value)


def log_call(
    decorated, logger=None, level="debug", format_str=LOG_CALL_FMT_STR
):
    """Log the parameters, result and duration of a function call

    Designed to be called via the ``after`` decorator. Use
    :any:`decorators.log_call` for easiest invocation.

    :param Decorated decorated: decorated function information
    :param Optional[logging.Logger] logger: optional logger instance
    :param Optional[str] level: log level - must be an acceptable Python
        log level, case-insensitive
    :param format_str: the string to use when formatting the results
    """
    module = getmodule(decorated.wrapped)
    if logger is None:
        name = module.__name__ if module is not None else "__main__"
        logger = getLogger(name)
    if not logger.isEnabledFor(_level_number(level)):
        return
    args = [format_value(arg) for arg in decorated.args]
    args.extend(
        "{}={}".format(key, format_value(value))
        for key, value in sorted(decorated.kwargs.items())
    )
    msg = format_str.format(
        name=decorated.wrapped.__name__,
        args=", ".join(args),
        result=format_value(decorated.result),
        elapsed=decorated.elapsed,
    )
    getattr(logger, level.lower())(msg)


def _level_number(level):
    number = getLevelName(level.upper())
    return number if isinstance(number, int) else 0


def memoize(decorated, memo):
    """Return a memoized result if possible; store if not present

    :param Decorated decorated: decorated function information
    :param memo: the memoization cache. Must support standard
        __getitem__, __setitem__ and __contains__ calls
    """
    key = convert_to_hashable(decorated.args, decorated.kwargs)
    if key in memo:
        return memo[key]
    res = decorated(*decorated.args, **decorated.kwargs)
    memo[key] = res
    return res
