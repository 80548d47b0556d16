"""Classify a 2-nilpotent matrix by its flag intersection profile."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, InternalError
from .exactlinalg import Mat, intersection_dim
from .olp import EnhancedOLP, OrientedLinkPattern, from_multiplicity_matrix, validate_enhanced


@dataclass(frozen=True)
class IntersectionProfile:
    """``d[i][j] = dim(U_i ∩ A·U_j)`` for ``0 <= i, j <= n``, with U_i the span of e_1..e_i."""

    n: int
    d: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"n": self.n, "d": [list(r) for r in self.d]}

    def second_difference(self, i: int, j: int, i0: int | None = None, j0: int | None = None) -> int:
        i0 = i - 1 if i0 is None else i0
        j0 = j - 1 if j0 is None else j0
        d = self.d
        return d[i][j] - d[i0][j] - d[i][j0] + d[i0][j0]


def require_2_nilpotent(A: Mat) -> None:
    if not A.is_square:
        raise DomainError("not_square", f"expected a square matrix, got {A.rows}x{A.cols}")
    if not (A @ A).is_zero():
        raise DomainError("not_2_nilpotent", "matrix does not square to zero")


def profile_of(A: Mat) -> IntersectionProfile:
    require_2_nilpotent(A)
    n = A.rows
    flags = [Mat.identity(n, A.p).submatrix(range(n), range(i)) for i in range(n + 1)]
    images = [A.submatrix(range(n), range(j)) for j in range(n + 1)]
    d = tuple(tuple(intersection_dim(flags[i], images[j]) if i and j else 0
                    for j in range(n + 1)) for i in range(n + 1))
    return IntersectionProfile(n, d)


def classify(A: Mat) -> OrientedLinkPattern:
    """The oriented link pattern labelling the B_n-orbit of ``A``."""
    prof = profile_of(A)
    n = prof.n
    grid = [[prof.second_difference(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    try:
        return from_multiplicity_matrix(Mat.from_rows(grid, cols=n))
    except DomainError as exc:
        raise InternalError(f"profile second differences do not form a link pattern: {exc}") from None


def block_corners(blocks: Sequence[int], n: int) -> list[int]:
    if any(b < 1 for b in blocks) or sum(blocks) != n:
        raise DomainError("bad_blocks", f"block sizes {list(blocks)} are not a composition of {n}")
    corners = [0]
    for b in blocks:
        corners.append(corners[-1] + b)
    return corners


def classify_parabolic(A: Mat, blocks: Sequence[int]) -> EnhancedOLP:
    """Orbit label for the block upper-triangular parabolic with the given block sizes."""
    prof = profile_of(A)
    c = block_corners(blocks, prof.n)
    k = len(blocks)
    grid = tuple(tuple(prof.second_difference(c[i], c[j], c[i - 1], c[j - 1]) for j in range(1, k + 1))
                 for i in range(1, k + 1))
    result = EnhancedOLP(tuple(blocks), grid)
    if validate_enhanced(result):
        raise InternalError(f"block multiplicities {grid} violate the incidence bound")
    return result
