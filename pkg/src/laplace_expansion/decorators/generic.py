# -*- coding: UTF-8 -*-
"""
Generic decorators for building the package's own decorators

``@after`` calls a hook once the decorated function has returned and
``@instead`` hands the whole call over to a hook. Both give the hook a
:any:`Decorated` record of the call.
"""

__all__ = ("after", "instead", "Decorated")


import typing as t
from functools import wraps
from logging import getLogger
from time import perf_counter


log = getLogger(__name__)


class Decorated(object):
    """A record of one call to a decorated function.

    This user-immutable object carries the wrapped callable, the
    arguments it was called with and, once it has been called through
    the record, its result and wall-clock duration.

    .. code:: python

        from laplace_expansion.decorators import Decorated

        def double(x):
            return 2 * x

        decorated = Decorated(double, (3,), {})

        assert decorated.result is None  # has not yet been called

        assert decorated(*decorated.args) == 6 == decorated.result
        assert decorated.elapsed >= 0.0

    :param wrapped: the callable. Calling it via this reference sets
        the ``result`` and ``elapsed`` attributes.
    :param args: positional arguments of the call
    :param kwargs: keyword arguments of the call
    :param result: ``None`` until the callable has been called
    """

    __slots__ = ("args", "kwargs", "wrapped", "result", "elapsed")

    args: tuple
    kwargs: dict
    wrapped: t.Callable
    result: t.Optional[t.Any]
    elapsed: float

    def __init__(self, wrapped, args, kwargs, result=None):
        sup = super(Decorated, self)
        sup.__setattr__("args", tuple(args))
        sup.__setattr__("kwargs", kwargs)
        sup.__setattr__("wrapped", self._sets_results(wrapped))
        sup.__setattr__("result", result)
        sup.__setattr__("elapsed", 0.0)

    def __str__(self):
        name = getattr(self.wrapped, "__name__", str(self.wrapped))
        return "<Decorated {}({}, {})>".format(name, self.args, self.kwargs)

    def __call__(self, *args, **kwargs):
        return self.wrapped(*args, **kwargs)

    def __setattr__(self, key, value):
        raise AttributeError(
            'Cannot set "{}" because {} is immutable'.format(key, self)
        )

    def _sets_results(self, wrapped):
        """Ensure that calling ``wrapped()`` sets ``result`` and ``elapsed``"""

        @wraps(wrapped)
        def wrapped_wrapped(*args, **kwargs):
            start = perf_counter()
            res = wrapped(*args, **kwargs)
            sup = super(Decorated, self)
            sup.__setattr__("elapsed", perf_counter() - start)
            sup.__setattr__("result", res)
            return res

        return wrapped_wrapped


def after(func, **extras):
    """Specify a callable to be run after the decorated function.

    The callable receives a :any:`Decorated` instance, whose ``result``
    is already set, followed by any ``extras``. If it returns a value
    other than ``None``, that value replaces the decorated function's
    return value.

    :param Callable func: the callable to run after the decorated one
    :param **dict extras: keyword arguments passed through to ``func``
    """

    def decorator(decorated):
        @wraps(decorated)
        def wrapper(*args, **kwargs):
            decor = Decorated(decorated, args, kwargs)
            orig_ret = decor(*args, **kwargs)
            fret = func(decor, **extras)
            if fret is not None:
                return fret
            return orig_ret

        return wrapper

    return decorator


def instead(func, **extras):
    """Specify a callable to be run in the place of the decorated function.

    The decorated function **will not** be called unless the callable
    calls it through the :any:`Decorated` instance it receives.
    Whatever the callable returns is the return value of the call.

    :param Callable func: the callable to run instead
    :param **dict extras: keyword arguments passed through to ``func``
    """

    def decorator(decorated):
        @wraps(decorated)
        def wrapper(*args, **kwargs):
            decor = Decorated(decorated, args, kwargs)
            return func(decor, **extras)

        return wrapper

    return decorator
