from __future__ import annotations

import pytest

from ucyclic.cyclotomic import factor_xn_minus_1

_CACHE: dict = {}


@pytest.fixture
def fdata():
    """Memoized factor_xn_minus_1: the factorizations are pure data."""
    def get(n: int, m: int, modulus: int | None = None):
        key = (n, m, modulus)
        if key not in _CACHE:
            _CACHE[key] = factor_xn_minus_1(n, m, modulus)
        return _CACHE[key]
    return get
