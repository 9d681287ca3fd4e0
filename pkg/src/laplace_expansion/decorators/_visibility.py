# -*- coding: UTF-8 -*-
"""
Decorator controlling which names a module makes public.
"""

__all__ = ("export",)

import sys
import typing as t


T = t.TypeVar("T", bound=t.Callable)


def export(entity: T) -> T:
    """Add a top-level function or class to its module's ``__all__``

    Every public operation of the exact layer is declared this way, so
    ``from laplace_expansion.bell import *`` yields exactly the
    documented surface.

    .. code:: python

        from laplace_expansion.decorators import export

        @export
        def bell_table(f, n_max):
            ...

    :param Union[Type, types.FunctionType] entity: the function or class
        to include in ``__all__``
    :raises TypeError: for lambdas, nested or unnamed entities
    :raises ValueError: if the defining module is not imported
    """
    qualname = getattr(entity, "__qualname__", "")
    name = getattr(entity, "__name__", None)
    if (
        not hasattr(entity, "__module__")
        or name is None
        or any(marker in qualname for marker in (".", "<locals>", "<lambda>"))
        or name == "<lambda>"
    ):
        raise TypeError(
            "Only named top-level functions and classes may be exported, "
            "not {!r}".format(entity)
        )

    try:
        module = sys.modules[entity.__module__]
    except KeyError:
        raise ValueError(
            "Module {} must be imported before export() is applied".format(
                entity.__module__
            )
        )

    current = tuple(getattr(module, "__all__", ()))
    if name not in current:
        module.__all__ = current + (name,)  # type: ignore

    return entity
