# -*- coding: UTF-8 -*-
"""
Tests for caches
"""

import json
import os
from fractions import Fraction
from threading import Thread

import pytest

from laplace_expansion.caches import LRUCache, TriangleStore
from laplace_expansion.constants import CACHE_DIR_ENV


class TestLRU:
    """Test the LRU cache"""

    def test_unsized(self):
        """Test that not specifying a size lets the cache grow"""
        cache = LRUCache()
        for i in range(500):
            cache[i] = i
        for i in range(500):
            assert i in cache
            assert cache[i] == i

    def test_sized_no_reuse(self):
        """Test basic pruning with all new values"""
        cache = LRUCache(max_size=5)
        for i in range(5):
            cache[i] = i
        for i in range(5, 10):
            cache[i] = i
            assert i in cache
            assert i - 5 not in cache
            with pytest.raises(KeyError):
                assert cache[i - 5]

    def test_sized_with_reuse(self):
        """Test LRU functionality"""
        cache = LRUCache(max_size=3)
        for i in range(3):
            cache[i] = i
        # LRU: 0 1 2

        cache[3] = 3
        # LRU: 1 2 3
        assert 0 not in cache

        # Test re-ordering with getitem
        assert cache[1]
        # LRU: 2 3 1

        cache[0] = 0
        # LRU: 3 1 0
        assert 2 not in cache

        # Test re-ordering with setitem
        cache[3] = 3
        # LRU: 1 0 3
        cache[4] = 4
        # LRU: 0 3 4
        assert 1 not in cache
        for i in 0, 3, 4:
            assert cache[i] == i

    def test_threads(self):
        """Concurrent writers leave a consistent, bounded cache"""
        cache = LRUCache(max_size=50)

        def fill(offset):
            for i in range(200):
                cache[offset + i] = i

        threads = [Thread(target=fill, args=(1000 * n,)) for n in range(4)]
        for thread in threads:
            thread.start()
        for thread in threads:
            thread.join()
        assert len(cache) == 50


class TestTriangleStore:
    """Tests for JSON persistence of triangles"""

    def test_from_env_unset(self, monkeypatch):
        """No directory configured means no store"""
        monkeypatch.delenv(CACHE_DIR_ENV, raising=False)
        assert TriangleStore.from_env() is None

    def test_from_env(self, monkeypatch, tmp_path):
        """The store uses $LAPLACE_CACHE_DIR"""
        monkeypatch.setenv(CACHE_DIR_ENV, str(tmp_path))
        store = TriangleStore.from_env()
        assert store.directory == str(tmp_path)

    def test_integer_round_trip(self, tmp_path):
        """Integer rows come back as tuples of ints"""
        store = TriangleStore(str(tmp_path / "nested"))
        rows = [(1,), (0, 1), (0, 1, 1)]
        store.save("stirling_second", rows)
        assert store.load("stirling_second") == tuple(rows)

    def test_rational_round_trip(self, tmp_path):
        """Rationals are written as p/q strings"""
        store = TriangleStore(str(tmp_path))
        rows = [(Fraction(1),), (Fraction(0), Fraction(-1, 3))]
        store.save("bell", rows)
        with open(store.path("bell")) as stream:
            assert json.load(stream) == [["1"], ["0", "-1/3"]]
        assert store.load("bell", exact=True) == tuple(rows)

    def test_missing(self, tmp_path):
        """Absent tables load as None"""
        assert TriangleStore(str(tmp_path)).load("nothing") is None

    def test_corrupt(self, tmp_path, caplog):
        """Corrupt files are ignored with a warning"""
        store = TriangleStore(str(tmp_path))
        with open(store.path("bad"), "w") as stream:
            stream.write("[[1], [")
        assert store.load("bad") is None
        assert "Ignoring unreadable" in caplog.text

    def test_no_temporary_files_left(self, tmp_path):
        """Saving replaces the table atomically"""
        store = TriangleStore(str(tmp_path))
        store.save("t", [(1,)])
        store.save("t", [(1,), (0, 1)])
        assert os.listdir(str(tmp_path)) == ["t.json"]

    def test_key_for(self):
        """Keys are stable and depend on every part"""
        key = TriangleStore.key_for(Fraction(1, 2), 3)
        assert key == TriangleStore.key_for(Fraction(1, 2), 3)
        assert key != TriangleStore.key_for(Fraction(1, 3), 3)
        assert len(key) == 40
