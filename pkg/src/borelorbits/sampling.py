"""Random exact test objects: Borel elements, nilpotent matrices, normal forms, semiinvariant data."""

from __future__ import annotations

import random
from fractions import Fraction

from .exactlinalg import Mat, inverse
from .normalform import SemiinvariantDatum


def _nonzero(rng: random.Random, bound: int) -> int:
    return rng.choice([x for x in range(-bound, bound + 1) if x])


def random_borel(rng: random.Random, n: int, bound: int = 3, unipotent: bool = False, rational: bool = False) -> Mat:
    """Invertible upper-triangular matrix with small entries."""
    grid = [[0] * n for _ in range(n)]
    for i in range(n):
        grid[i][i] = 1 if unipotent else _nonzero(rng, bound)
        if rational and not unipotent:
            grid[i][i] = Fraction(grid[i][i], rng.randint(1, bound))
        for j in range(i + 1, n):
            grid[i][j] = rng.randint(-bound, bound)
    return Mat.from_rows(grid, cols=n)


def conjugate(g: Mat, A: Mat) -> Mat:
    return g @ A @ inverse(g)


def random_nilpotent(rng: random.Random, n: int, bound: int = 2, density: float = 0.7) -> Mat:
    """T N T^{-1} with N strictly lower triangular and T unipotent upper triangular."""
    N = [[rng.randint(-bound, bound) if j < i and rng.random() < density else 0 for j in range(n)]
         for i in range(n)]
    T = random_borel(rng, n, bound, unipotent=True)
    return conjugate(T, Mat.from_rows(N, cols=n))


def random_normal_form(rng: random.Random, n: int, bound: int = 5) -> Mat:
    grid = [[(1 if i == j + 1 else rng.randint(-bound, bound)) if j < i else 0 for j in range(n)]
            for i in range(n)]
    return Mat.from_rows(grid, cols=n)


def random_generic_nilpotent(rng: random.Random, n: int) -> Mat:
    """A generic nilpotent matrix: a random normal form conjugated by a random Borel element."""
    return conjugate(random_borel(rng, n), random_normal_form(rng, n))


def random_datum(rng: random.Random, n: int, max_blocks: int = 3, max_degree: int = 3) -> SemiinvariantDatum:
    k = rng.randint(0, n)

    def composition():
        parts = rng.randint(1, max_blocks)
        cuts = sorted(rng.randint(0, k) for _ in range(parts - 1))
        return [b - a for a, b in zip([0] + cuts, cuts + [k])]

    a, b = composition(), composition()
    P = [[tuple(rng.randint(-2, 2) for _ in range(rng.randint(1, max_degree + 1))) for _ in b] for _ in a]
    return SemiinvariantDatum(tuple(a), tuple(b), P)
