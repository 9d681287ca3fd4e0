# -*- coding: UTF-8 -*-
"""
Shared fixtures
"""

import random
from fractions import Fraction

import pytest

from laplace_expansion.constants import CACHE_DIR_ENV


@pytest.fixture(autouse=True)
def no_cache_dir(monkeypatch):
    """Tests never touch a user's persisted tables"""
    monkeypatch.delenv(CACHE_DIR_ENV, raising=False)


@pytest.fixture()
def rng():
    return random.Random(20240611)


def random_rationals(rng, count, bound=9):
    """Small random rationals with numerator and denominator <= bound"""
    return [
        Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        for _ in range(count)
    ]


def naive_power(coefficients, k, n_max):
    """Coefficients of (sum c_i x^i)^k up to x^n_max by repeated products"""
    result = [Fraction(1)] + [Fraction(0)] * n_max
    for _ in range(k):
        product = [Fraction(0)] * (n_max + 1)
        for i, left in enumerate(result):
            for j, right in enumerate(coefficients[: n_max + 1 - i]):
                product[i + j] += left * right
        result = product
    return result
