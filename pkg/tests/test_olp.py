from __future__ import annotations

from itertools import product
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from borelorbits.errors import DomainError
from borelorbits.exactlinalg import Mat
from borelorbits.olp import (
    EnhancedOLP, OrientedLinkPattern, count_patterns, enumerate_patterns, from_involution,
    from_multiplicity_matrix, involution_from_cycles, involutions, to_multiplicity_matrix, validate,
    validate_enhanced,
)


def brute_force_patterns(n):
    """Every arrow set over ordered pairs, filtered by the incidence rule."""
    pairs = [(s, t) for s in range(1, n + 1) for t in range(1, n + 1) if s != t]
    out = set()
    for mask in product((0, 1), repeat=len(pairs)):
        arrows = [a for a, on in zip(pairs, mask) if on]
        ends = [v for a in arrows for v in a]
        if len(ends) == len(set(ends)):
            out.add(OrientedLinkPattern(n, tuple(arrows)))
    return out


def test_validate_examples():
    assert validate(OrientedLinkPattern(2)) == []
    assert validate(OrientedLinkPattern(5, ((1, 3), (5, 2)))) == []
    bad = validate(OrientedLinkPattern(2, ((1, 2), (2, 1))))
    assert bad and bad[0].vertex == 1


def test_validate_loops_and_range():
    assert any("loop" in v.reason for v in validate(OrientedLinkPattern(3, ((2, 2),))))
    assert validate(OrientedLinkPattern(2, ((1, 3),)))


def test_multiplicity_matrix_examples():
    assert to_multiplicity_matrix(OrientedLinkPattern(2, ((1, 2),))).tolist() == [[0, 0], [1, 0]]
    M = to_multiplicity_matrix(OrientedLinkPattern(5, ((2, 1), (5, 3))))
    ones = {(i + 1, j + 1) for i in range(5) for j in range(5) if M[i, j]}
    assert ones == {(1, 2), (3, 5)}
    assert to_multiplicity_matrix(OrientedLinkPattern(3)).is_zero()


def test_from_multiplicity_matrix_examples():
    assert from_multiplicity_matrix(Mat.unit(2, 2, 1)).arrows == ((1, 2),)
    M = Mat.unit(5, 1, 2) + Mat.unit(5, 3, 5)
    assert from_multiplicity_matrix(M) == OrientedLinkPattern(5, ((2, 1), (5, 3)))
    with pytest.raises(DomainError):
        from_multiplicity_matrix(Mat.from_rows([[0, 1], [1, 0]]))
    with pytest.raises(DomainError):
        from_multiplicity_matrix(Mat.from_rows([[0, 2], [0, 0]]))


@pytest.mark.parametrize("n", range(0, 5))
def test_enumeration_matches_brute_force(n):
    pats = enumerate_patterns(n)
    assert len(pats) == len(set(pats))
    assert set(pats) == brute_force_patterns(n)


def test_enumeration_small_cases():
    assert enumerate_patterns(1) == [OrientedLinkPattern(1)]
    assert enumerate_patterns(2) == [OrientedLinkPattern(2), OrientedLinkPattern(2, ((1, 2),)),
                                     OrientedLinkPattern(2, ((2, 1),))]


def test_count_values():
    # sum over k arrows: choose 2k vertices, pair them ((2k-1)!!), orient (2^k)
    def independent(n):
        total = 0
        for k in range(n // 2 + 1):
            dfact = 1
            for x in range(1, 2 * k, 2):
                dfact *= x
            total += comb(n, 2 * k) * dfact * 2 ** k
        return total

    assert [count_patterns(n) for n in range(1, 9)] == [1, 3, 7, 25, 81, 331, 1303, 5937]
    assert all(count_patterns(n) == independent(n) for n in range(12))
    assert all(count_patterns(n) == len(enumerate_patterns(n)) for n in range(7))


def test_enumeration_guard():
    with pytest.raises(DomainError):
        enumerate_patterns(9)


def test_from_involution_examples():
    assert from_involution((1, 2, 3, 4)) == OrientedLinkPattern(4)
    assert from_involution(involution_from_cycles(5, [(1, 2), (3, 5)])).arrows == ((2, 1), (5, 3))
    assert from_involution((3, 2, 1)).arrows == ((3, 1),)
    with pytest.raises(DomainError):
        from_involution((2, 3, 1))


def test_involution_counts():
    # telephone numbers
    assert [len(involutions(n)) for n in range(1, 7)] == [1, 2, 4, 10, 26, 76]


@given(st.integers(0, 6).flatmap(lambda n: st.sampled_from(enumerate_patterns(n))))
def test_multiplicity_round_trip(p):
    M = to_multiplicity_matrix(p)
    assert (M @ M).is_zero()
    assert from_multiplicity_matrix(M) == p
    assert OrientedLinkPattern.from_json(p.to_json()) == p


def test_label_and_json():
    p = OrientedLinkPattern(5, ((5, 3), (1, 2)))
    assert p.label() == "1>2,5>3"
    assert OrientedLinkPattern(3).label() == "empty"
    assert p.to_json() == {"n": 5, "arrows": [{"source": 1, "target": 2}, {"source": 5, "target": 3}]}
    with pytest.raises(DomainError):
        OrientedLinkPattern.from_json({"arrows": []})


def test_enhanced_incidence():
    e = EnhancedOLP.from_arrows((2, 1), [(1, 1)])
    assert e.incidence(1) == 2 and e.incidence(2) == 0
    assert validate_enhanced(e) == []
    assert validate_enhanced(EnhancedOLP.from_arrows((1, 1), [(1, 1)]))
    assert EnhancedOLP.from_json(e.to_json()) == e
