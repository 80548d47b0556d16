from __future__ import annotations

import random
from itertools import product

import pytest

from borelorbits.classify import classify, classify_parabolic, profile_of
from borelorbits.errors import DomainError
from borelorbits.exactlinalg import Mat, rank
from borelorbits.olp import OrientedLinkPattern, enumerate_patterns, to_multiplicity_matrix
from borelorbits.sampling import conjugate, random_borel


def compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def test_profile_examples():
    assert all(x == 0 for r in profile_of(Mat.zeros(3, 3)).d for x in r)
    d = profile_of(Mat.unit(2, 2, 1)).d
    assert [list(r[1:]) for r in d[1:]] == [[0, 0], [1, 1]]


def test_profile_counts_arrows_in_corner():
    p = OrientedLinkPattern(5, ((2, 1), (5, 3)))
    d = profile_of(to_multiplicity_matrix(p)).d
    for i, j in product(range(1, 6), repeat=2):
        assert d[i][j] == sum(t <= i and s <= j for s, t in p.arrows)


def test_classify_examples():
    assert classify(Mat.unit(2, 2, 1)).arrows == ((1, 2),)
    assert classify(Mat.unit(2, 1, 2)).arrows == ((2, 1),)
    with pytest.raises(DomainError) as exc:
        classify(Mat.from_rows([[1, 0], [0, 0]]))
    assert exc.value.code == "not_2_nilpotent"


@pytest.mark.parametrize("n", range(1, 6))
def test_classify_inverts_multiplicity_matrix_under_conjugation(n):
    rng = random.Random(n)
    for p in enumerate_patterns(n):
        A = to_multiplicity_matrix(p)
        assert classify(A) == p
        assert classify(conjugate(random_borel(rng, n, rational=True), A)) == p


def test_classify_over_prime_field():
    A = Mat.from_rows([[0, 0, 0], [1, 0, 0], [1, 0, 0]], p=2)
    # A e1 = e2 + e3 first meets the flag at U_3
    assert classify(A).arrows == ((1, 3),)


def test_parabolic_fine_blocks_agree_with_classify():
    for n in range(1, 5):
        for p in enumerate_patterns(n):
            e = classify_parabolic(to_multiplicity_matrix(p), (1,) * n)
            assert sorted((s, t) for s, t, _ in e.arrows()) == list(p.arrows)


def test_parabolic_single_block_counts_rank():
    rng = random.Random(7)
    for n in range(1, 5):
        for p in enumerate_patterns(n):
            A = conjugate(random_borel(rng, n), to_multiplicity_matrix(p))
            assert classify_parabolic(A, (n,)).m == ((rank(A),),)


def test_parabolic_loop_inside_block():
    e = classify_parabolic(Mat.unit(3, 2, 1), (2, 1))
    assert e.m == ((1, 0), (0, 0))


def test_parabolic_bad_blocks():
    with pytest.raises(DomainError):
        classify_parabolic(Mat.zeros(3, 3), (1, 1))
