from __future__ import annotations

import pytest

from borelorbits.errors import DomainError
from borelorbits.exactlinalg import Mat
from borelorbits.melnikov import edge_count_matrix, melnikov_leq, n_sigma, rank_matrix
from borelorbits.olp import involution_from_cycles, involutions

S = involution_from_cycles(5, [(1, 2), (3, 5)])


def at(R, i, j):
    return R[i - 1][j - 1]


def test_rank_matrix_examples():
    assert all(x == 0 for r in rank_matrix(Mat.zeros(4, 4)) for x in r)
    R = rank_matrix(n_sigma(S))
    assert (at(R, 1, 5), at(R, 1, 2), at(R, 3, 5), at(R, 2, 4)) == (2, 1, 1, 0)
    assert at(rank_matrix(Mat.unit(2, 1, 2)), 1, 2) == 1


def test_rank_matrix_rejects_lower():
    with pytest.raises(DomainError):
        rank_matrix(Mat.unit(2, 2, 1))


def test_edge_count_examples():
    assert at(edge_count_matrix(S), 1, 5) == 2
    assert all(x == 0 for r in edge_count_matrix((1, 2, 3)) for x in r)
    T = involution_from_cycles(5, [(2, 4)])
    assert at(edge_count_matrix(T), 1, 3) == 0
    assert at(edge_count_matrix(T), 2, 4) == 1


def test_melnikov_leq_examples():
    a, b = involution_from_cycles(3, [(1, 3)]), involution_from_cycles(3, [(1, 2)])
    assert melnikov_leq(a, b)
    assert not melnikov_leq(b, a)
    for s in involutions(4):
        assert melnikov_leq(s, s)
        assert melnikov_leq((1, 2, 3, 4), s)


def test_size_mismatch():
    with pytest.raises(DomainError):
        melnikov_leq((1, 2), (1, 2, 3))
