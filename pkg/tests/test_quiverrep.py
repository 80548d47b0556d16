from __future__ import annotations

import pytest

from borelorbits.errors import DomainError
from borelorbits.exactlinalg import Mat
from borelorbits.olp import OrientedLinkPattern, enumerate_patterns
from borelorbits.quiverrep import (
    BoundQuiverRep, IndecomposableId, U, V, W, all_indecomposables, direct_sum, endo_dim, hom_dim,
    hom_dim_closed_form, hom_matrix, indecomposable, krull_schmidt, orbit_dimension, rep_of_matrix,
    rep_of_pattern, zwara_leq,
)


def test_rep_of_matrix_examples():
    R = rep_of_matrix(Mat.zeros(3, 3), (1, 2, 3))
    assert R.dims == (1, 2, 3)
    assert R.chain[0].tolist() == [[1], [0]]
    assert R.loop.is_zero()
    assert rep_of_matrix(Mat.unit(2, 2, 1), (1, 2)).loop == Mat.unit(2, 2, 1)
    assert R.is_injective_chain()
    with pytest.raises(DomainError):
        rep_of_matrix(Mat.zeros(3, 3), (2, 1, 3))


def test_rep_rejects_bad_loop():
    with pytest.raises(DomainError):
        BoundQuiverRep((2,), (), Mat.from_rows([[1, 0], [0, 0]]))


def test_indecomposable_shapes():
    v = indecomposable(V(3), 3)
    assert v.dims == (0, 0, 1) and v.loop.is_zero()
    u = indecomposable(U(2, 1), 2)
    assert u.dims == (1, 2)
    assert u.chain[0].tolist() == [[1], [0]]
    assert u.loop.tolist() == [[0, 0], [1, 0]]
    w = indecomposable(W(1, 1), 2)
    assert w.dims == (1, 0)
    assert not w.is_injective_chain()
    with pytest.raises(DomainError):
        indecomposable(W(1, 2), 2)


def test_indecomposable_parse():
    assert IndecomposableId.parse("U2,1") == U(2, 1)
    assert IndecomposableId.parse("V3") == V(3)
    assert IndecomposableId.parse("W1,2") == W(1, 2)
    with pytest.raises(DomainError):
        IndecomposableId.parse("X1")


def test_closed_form_examples():
    assert hom_dim_closed_form(V(3), V(1)) == 1
    assert hom_dim_closed_form(V(1), V(3)) == 0
    assert hom_dim_closed_form(U(2, 2), V(1)) == 1
    assert hom_dim_closed_form(U(1, 2), U(1, 2)) == 2
    with pytest.raises(DomainError):
        hom_dim_closed_form(W(1, 1), V(1))


@pytest.mark.parametrize("n", [2, 3])
def test_hom_dim_matches_closed_form(n):
    ids = all_indecomposables(n, "UV")
    for a in ids:
        for b in ids:
            assert hom_dim(indecomposable(a, n), indecomposable(b, n)) == hom_dim_closed_form(a, b), (a, b)


def test_endo_examples():
    assert endo_dim(indecomposable(U(2, 1), 2)) == 1
    assert endo_dim(indecomposable(U(1, 2), 2)) == 2
    assert all(endo_dim(indecomposable(V(i), 4)) == 1 for i in range(1, 5))


def test_hom_additive():
    n = 3
    X = direct_sum(indecomposable(U(1, 2), n), indecomposable(V(2), n))
    Y = indecomposable(U(3, 1), n)
    assert hom_dim(X, Y) == hom_dim(indecomposable(U(1, 2), n), Y) + hom_dim(indecomposable(V(2), n), Y)


def test_orbit_dimension_examples():
    assert orbit_dimension(OrientedLinkPattern(2, ((1, 2),))) == 2
    assert orbit_dimension(OrientedLinkPattern(2, ((2, 1),))) == 1
    assert orbit_dimension(OrientedLinkPattern(2)) == 0


def test_hom_matrix_invertible():
    for n in range(1, 5):
        ids, H = hom_matrix(n)
        assert H.rows == len(ids) == n * n + n + n * (n - 1) // 2


def test_krull_schmidt_examples():
    d = krull_schmidt(rep_of_matrix(Mat.zeros(3, 3), (1, 2, 3)))
    assert sorted(d.summands()) == [(V(1), 1), (V(2), 1), (V(3), 1)]
    d = krull_schmidt(rep_of_matrix(Mat.unit(2, 2, 1), (1, 2)))
    assert d.summands() == [(U(2, 1), 1)]
    d = krull_schmidt(indecomposable(U(1, 2), 3))
    assert d.summands() == [(U(1, 2), 1)]


def test_krull_schmidt_of_sum_with_w():
    n = 3
    M = direct_sum(direct_sum(indecomposable(W(1, 2), n), indecomposable(U(3, 1), n)), indecomposable(W(2, 2), n))
    d = krull_schmidt(M)
    assert sorted(d.summands()) == sorted([(W(1, 2), 1), (W(2, 2), 1), (U(3, 1), 1)])
    assert d.dimension_vector() == M.dims


@pytest.mark.parametrize("n", range(1, 5))
def test_krull_schmidt_recovers_patterns(n):
    for p in enumerate_patterns(n):
        d = krull_schmidt(rep_of_pattern(p))
        assert {(s, t) for s in range(1, n + 1) for t in range(1, n + 1) if d.mU[t - 1][s - 1]} == set(p.arrows)
        assert [v for v in range(1, n + 1) if d.nV[v - 1]] == p.free_vertices()


def test_zwara_n2_chain():
    top, mid, bot = (OrientedLinkPattern(2, ((1, 2),)), OrientedLinkPattern(2, ((2, 1),)), OrientedLinkPattern(2))
    assert zwara_leq(top, mid) and zwara_leq(mid, bot) and zwara_leq(top, bot)
    assert not zwara_leq(mid, top) and not zwara_leq(bot, mid) and not zwara_leq(bot, top)
