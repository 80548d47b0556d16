from __future__ import annotations

from itertools import product

import pytest

from borelorbits.errors import DomainError
from borelorbits.fforacle import census, decode, encode, invariance_check, orbits, square_zero_codes


def naive_square_zero(n, q):
    count = 0
    for e in product(range(q), repeat=n * n):
        if all(sum(e[i * n + k] * e[k * n + j] for k in range(n)) % q == 0 for i in range(n) for j in range(n)):
            count += 1
    return count


def test_codec_round_trip():
    for code in range(81):
        assert encode(decode(code, 2, 3), 3) == code
    assert decode(1, 2, 2) == (1, 0, 0, 0)


@pytest.mark.parametrize("n,q", [(1, 2), (2, 2), (2, 3), (3, 2)])
def test_square_zero_screen(n, q):
    assert len(square_zero_codes(n, q)) == naive_square_zero(n, q)


@pytest.mark.parametrize("n,q,count", [(1, 2, 1), (2, 2, 3), (3, 2, 7), (2, 3, 3)])
def test_census_counts(n, q, count):
    c = census(n, q)
    assert c.orbit_count == count
    assert sum(o.size for o in c.orbits) == c.total
    assert c.to_json()["orbit_count"] == count


def test_orbits_partition():
    orbs = orbits(3, 2)
    allcodes = set(square_zero_codes(3, 2))
    assert set().union(*orbs) == allcodes
    assert sum(len(o) for o in orbs) == len(allcodes)


@pytest.mark.parametrize("n,q", [(2, 2), (3, 2), (3, 3)])
def test_invariance(n, q):
    r = invariance_check(n, q)
    assert r.ok
    assert r.orbit_count == 7 if n == 3 else 3


def test_guards():
    with pytest.raises(DomainError):
        census(5, 2)
    with pytest.raises(DomainError):
        census(2, 5)
