# -*- coding: UTF-8 -*-
"""
Key construction for the memoization decorator

Arguments to the memoized exact kernels are mostly integers and
Fractions, which hash natively. Coefficient lists arrive as lists,
which are frozen to tuples; anything else unhashable is dumped with
dill so that structurally equal arguments share a cache slot.
"""

__all__ = ("convert_to_hashable", "hashable")

import dill as pickle


def convert_to_hashable(args, kwargs):
    """Return args and kwargs as a hashable tuple"""
    return hashable(args), hashable(tuple(sorted(kwargs.items())))


def hashable(item):
    """Return a hashable version of an item

    Lists and tuples are converted element-wise so that a list of
    Fractions keys the same way as the equivalent tuple. Items that
    still cannot be hashed are replaced by their dill pickle.
    """
    if isinstance(item, (list, tuple)):
        item = tuple(hashable(elem) for elem in item)
    try:
        hash(item)
    except TypeError:
        item = pickle.dumps(item)
    return item
