"""Rank matrices of strictly upper-triangular 2-nilpotent matrices and the induced order on involutions."""

from __future__ import annotations

from typing import Sequence

from .classify import require_2_nilpotent
from .errors import DomainError
from .exactlinalg import Mat, rank
from .olp import check_involution, two_cycles

RankMatrix = tuple[tuple[int, ...], ...]


def rank_matrix(u: Mat) -> RankMatrix:
    """``R[i][j]`` (0-based storage of 1-based i<j) is the rank of the middle block rows/cols i..j."""
    require_2_nilpotent(u)
    if not u.is_upper_triangular(strict=True):
        raise DomainError("not_strictly_upper", "matrix is not strictly upper triangular")
    n = u.rows
    return tuple(tuple(rank(u.submatrix(range(i, j + 1), range(i, j + 1))) if i < j else 0
                       for j in range(n)) for i in range(n))


def n_sigma(sigma: Sequence[int]) -> Mat:
    """The matrix with ones at (i, σ(i)) for i < σ(i)."""
    n = len(sigma)
    grid = [[0] * n for _ in range(n)]
    for i, j in two_cycles(sigma):
        grid[i - 1][j - 1] = 1
    return Mat.from_rows(grid, cols=n)


def edge_count_matrix(sigma: Sequence[int]) -> RankMatrix:
    """Number of 2-cycles of σ with both ends in [i, j]."""
    n = len(sigma)
    cycles = two_cycles(sigma)
    return tuple(tuple(sum(i <= a and b <= j for a, b in cycles) if i < j else 0
                       for j in range(1, n + 1)) for i in range(1, n + 1))


def melnikov_leq(sigma_lo: Sequence[int], sigma_hi: Sequence[int]) -> bool:
    """True iff R(sigma_lo) <= R(sigma_hi) entrywise, i.e. sigma_lo's orbit lies in the closure of sigma_hi's."""
    check_involution(sigma_lo)
    check_involution(sigma_hi)
    if len(sigma_lo) != len(sigma_hi):
        raise DomainError("size_mismatch", "involutions on different numbers of letters")
    r_lo, r_hi = rank_matrix(n_sigma(sigma_lo)), rank_matrix(n_sigma(sigma_hi))
    return all(a <= b for ra, rb in zip(r_lo, r_hi) for a, b in zip(ra, rb))
