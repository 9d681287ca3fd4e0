# -*- coding: UTF-8 -*-
"""
Caches for memoization and on-disk persistence of triangles
"""

__all__ = ("LRUCache", "TriangleStore")


import json
import os
from collections import OrderedDict
from fractions import Fraction
from hashlib import sha1
from logging import getLogger
from threading import RLock

from .constants import CACHE_DIR_ENV


log = getLogger(__name__)


class LRUCache(OrderedDict):
    """Self-pruning, thread-safe cache using an LRU strategy.

    If instantiated with a ``max_size`` other than ``0``, will
    automatically prune the least-recently-used (LRU) key/value
    pair when inserting an item after reaching the specified size.

    An item is considered to be "used" when it is inserted or
    accessed, at which point its position in recently used
    queue is updated to the most recent.

    Reads and writes hold an internal lock, so a single cache can be
    shared by the worker threads of a verification sweep.

    :param int max_size: maximum number of entries to save
        before pruning
    """

    def __init__(self, max_size=0, *args, **kwargs):
        self._lock = RLock()
        super(LRUCache, self).__init__(*args, **kwargs)
        self._max_size = max_size

    def __getitem__(self, key):
        with self._lock:
            value = OrderedDict.__getitem__(self, key)
            self.move_to_end(key)
            return value

    def __setitem__(self, key, value):
        with self._lock:
            OrderedDict.__setitem__(self, key, value)
            self.move_to_end(key)
            if self._max_size and len(self) > self._max_size:
                self.popitem(last=False)

    def __contains__(self, key):
        with self._lock:
            return OrderedDict.__contains__(self, key)


def _encode(value):
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return "{}/{}".format(value.numerator, value.denominator)
    return value


def _decode(value, exact):
    if exact:
        return Fraction(value)
    return int(value)


class TriangleStore(object):
    """JSON persistence for triangular tables

    Each table is stored as ``<directory>/<name>.json`` holding a list
    of rows. Integer tables are written as JSON integers; rational
    tables as canonical ``"p/q"`` strings.

    Corrupt or unreadable files are logged and treated as absent.

    :param str directory: the directory to store tables in. It is
        created on first save.
    """

    def __init__(self, directory):
        self.directory = directory

    @classmethod
    def from_env(cls):
        """Return a store for ``$LAPLACE_CACHE_DIR`` or None if unset"""
        directory = os.environ.get(CACHE_DIR_ENV)
        if not directory:
            return None
        return cls(directory)

    @staticmethod
    def key_for(*parts):
        """Return a stable file-name key for the given parts"""
        digest = sha1()
        for part in parts:
            digest.update(str(_encode(part)).encode("utf-8"))
            digest.update(b"\x00")
        return digest.hexdigest()

    def path(self, name):
        return os.path.join(self.directory, "{}.json".format(name))

    def load(self, name, exact=False):
        """Load a stored table

        :param str name: table name
        :param bool exact: whether entries are rationals
        :return: a tuple of row tuples, or None if nothing usable is stored
        """
        path = self.path(name)
        if not os.path.isfile(path):
            return None
        try:
            with open(path) as stream:
                rows = json.load(stream)
            return tuple(
                tuple(_decode(value, exact) for value in row) for row in rows
            )
        except (OSError, ValueError, TypeError, ZeroDivisionError) as exc:
            log.warning("Ignoring unreadable cached table %s: %s", path, exc)
            return None

    def save(self, name, rows):
        """Write a table, replacing any previous version atomically"""
        try:
            os.makedirs(self.directory, exist_ok=True)
            path = self.path(name)
            tmp_path = "{}.tmp.{}".format(path, os.getpid())
            with open(tmp_path, "w") as stream:
                json.dump(
                    [[_encode(value) for value in row] for row in rows], stream
                )
            os.replace(tmp_path, path)
            log.debug("Stored table %s with %d rows", path, len(rows))
        except OSError as exc:
            log.warning("Could not persist table %s: %s", name, exc)
