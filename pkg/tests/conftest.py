"""Shared fixtures: a session-wide Betti cache and memoized ideal builders."""

from __future__ import annotations

import pytest

from pathideal.cache import BettiCache, cached_betti_table
from pathideal.monomials import MonomialIdeal, ideal_power
from pathideal.oracle import FieldSpec
from pathideal.path_ideals import PathIdealSpec, path_ideal


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    return tmp_path_factory.mktemp("betti-cache")


@pytest.fixture(scope="session")
def betti(cache_dir):
    """Memoized Betti-table getter shared by the whole run."""
    cache = BettiCache(cache_dir)
    memo: dict = {}

    def get(ideal: MonomialIdeal, char: int = 2):
        key = (ideal.ambient, tuple(g.exponents for g in ideal.generators), char)
        if key not in memo:
            memo[key] = cached_betti_table(ideal, FieldSpec(char), cache)
        return memo[key]

    return get


@pytest.fixture(scope="session")
def power_ideal():
    """Memoized I_t(L_n)^s builder."""
    memo: dict = {}

    def get(n: int, t: int, s: int) -> MonomialIdeal:
        if (n, t, s) not in memo:
            memo[(n, t, s)] = ideal_power(path_ideal(PathIdealSpec(n, t)), s)
        return memo[(n, t, s)]

    return get
