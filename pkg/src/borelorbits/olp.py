"""Oriented link patterns: the combinatorial labels of B_n-orbits on 2-nilpotent matrices.

An arrow ``(s, t)`` points from source ``s`` to target ``t``; vertices are
1-indexed.  The multiplicity matrix convention is ``m[t][s] = 1`` for an
arrow ``s -> t``, so the pattern ``{1 -> 2}`` is the matrix unit E21.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

from .errors import DomainError
from .exactlinalg import Mat

MAX_ENUMERATE_N = 8


@dataclass(frozen=True)
class OrientedLinkPattern:
    n: int
    arrows: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        arrows = tuple(sorted({(int(s), int(t)) for s, t in self.arrows}))
        object.__setattr__(self, "arrows", arrows)

    @property
    def sort_key(self):
        return (len(self.arrows), self.arrows)

    def __lt__(self, other: OrientedLinkPattern) -> bool:
        return (self.n, self.sort_key) < (other.n, other.sort_key)

    def incident(self, v: int) -> int:
        return sum((s == v) + (t == v) for s, t in self.arrows)

    def free_vertices(self) -> list[int]:
        used = {v for a in self.arrows for v in a}
        return [v for v in range(1, self.n + 1) if v not in used]

    def label(self) -> str:
        """Canonical arrow list such as ``"1>2,5>3"``; ``"empty"`` when there are no arrows."""
        return ",".join(f"{s}>{t}" for s, t in self.arrows) or "empty"

    def to_json(self) -> dict:
        return {"n": self.n, "arrows": [{"source": s, "target": t} for s, t in self.arrows]}

    @classmethod
    def from_json(cls, obj: dict) -> OrientedLinkPattern:
        try:
            return cls(int(obj["n"]), tuple((a["source"], a["target"]) for a in obj.get("arrows", [])))
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError("malformed_json", f"pattern JSON needs n and arrows[source,target]: {exc}") from None

    def __str__(self) -> str:
        return f"[{self.n}] {self.label()}"


@dataclass(frozen=True)
class Violation:
    vertex: int
    reason: str

    def to_json(self) -> dict:
        return {"vertex": self.vertex, "reason": self.reason}


def validate(p: OrientedLinkPattern) -> list[Violation]:
    """All violations of the pattern axioms, ordered by vertex; empty means valid."""
    found = []
    for s, t in p.arrows:
        for v in (s, t):
            if not 1 <= v <= p.n:
                found.append(Violation(v, f"vertex {v} outside 1..{p.n}"))
        if s == t:
            found.append(Violation(s, f"loop at vertex {s}"))
    for v in range(1, p.n + 1):
        k = p.incident(v)
        if k > 1:
            found.append(Violation(v, f"vertex {v} is incident with {k} arrow ends"))
    return sorted(found, key=lambda x: (x.vertex, x.reason))


def require_valid(p: OrientedLinkPattern) -> OrientedLinkPattern:
    bad = validate(p)
    if bad:
        raise DomainError("invalid_pattern", bad[0].reason)
    return p


def to_multiplicity_matrix(p: OrientedLinkPattern) -> Mat:
    require_valid(p)
    grid = [[0] * p.n for _ in range(p.n)]
    for s, t in p.arrows:
        grid[t - 1][s - 1] = 1
    return Mat.from_rows(grid, cols=p.n)


def from_multiplicity_matrix(M: Mat) -> OrientedLinkPattern:
    if not M.is_square:
        raise DomainError("not_square", "multiplicity matrix must be square")
    n = M.rows
    arrows = []
    for i in range(n):
        for j in range(n):
            x = M[i, j]
            if x not in (0, 1):
                raise DomainError("invalid_pattern", f"entry ({i + 1},{j + 1}) = {x} is not 0 or 1")
            if x:
                arrows.append((j + 1, i + 1))
    for i in range(n):
        if sum(M[i, j] for j in range(n)) + sum(M[j, i] for j in range(n)) > 1:
            raise DomainError("invalid_pattern", f"vertex {i + 1} is incident with more than one arrow")
    return OrientedLinkPattern(n, tuple(arrows))


def _matchings(vertices: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
    if not vertices:
        yield []
        return
    v, rest = vertices[0], vertices[1:]
    yield from _matchings(rest)
    for k, w in enumerate(rest):
        for tail in _matchings(rest[:k] + rest[k + 1:]):
            yield [(v, w)] + tail
            yield [(w, v)] + tail


def enumerate_patterns(n: int) -> list[OrientedLinkPattern]:
    """Every oriented link pattern on n vertices, sorted by arrow count then arrow list."""
    if n > MAX_ENUMERATE_N:
        raise DomainError("guard_exceeded", f"enumeration limited to n <= {MAX_ENUMERATE_N}")
    if n < 0:
        raise DomainError("bad_size", "n must be nonnegative")
    pats = {OrientedLinkPattern(n, tuple(m)) for m in _matchings(tuple(range(1, n + 1)))}
    return sorted(pats, key=lambda p: p.sort_key)


def count_patterns(n: int) -> int:
    """Closed-form number of oriented link patterns on n vertices."""
    return sum(factorial(n) // (factorial(k) * factorial(n - 2 * k)) for k in range(n // 2 + 1))


def involution_from_cycles(n: int, cycles: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Image vector ``(σ(1), …, σ(n))`` of the involution with the given 2-cycles."""
    sigma = list(range(1, n + 1))
    for cyc in cycles:
        if len(cyc) != 2:
            raise DomainError("not_involution", f"cycle {list(cyc)} is not a transposition")
        i, j = cyc
        if not (1 <= i <= n and 1 <= j <= n) or i == j or sigma[i - 1] != i or sigma[j - 1] != j:
            raise DomainError("not_involution", f"cycles {list(map(list, cycles))} do not form an involution on {n} letters")
        sigma[i - 1], sigma[j - 1] = j, i
    return tuple(sigma)


def check_involution(sigma: Sequence[int]) -> tuple[int, ...]:
    n = len(sigma)
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, n + 1)) or any(sigma[sigma[i] - 1] != i + 1 for i in range(n)):
        raise DomainError("not_involution", f"{list(sigma)} is not an involution")
    return sigma


def two_cycles(sigma: Sequence[int]) -> list[tuple[int, int]]:
    return [(i, s) for i, s in enumerate(check_involution(sigma), start=1) if i < s]


def from_involution(sigma: Sequence[int]) -> OrientedLinkPattern:
    """Each 2-cycle (i, j), i < j, becomes the arrow j -> i."""
    return OrientedLinkPattern(len(sigma), tuple((j, i) for i, j in two_cycles(sigma)))


def involutions(n: int) -> list[tuple[int, ...]]:
    out = []
    for m in _matchings(tuple(range(1, n + 1))):
        if all(a < b for a, b in m):
            out.append(involution_from_cycles(n, m))
    return sorted(out)


@dataclass(frozen=True)
class EnhancedOLP:
    """Oriented multigraph on blocks 1..k; ``m[i][j]`` counts arrows j -> i (1-indexed blocks)."""

    blocks: tuple[int, ...]
    m: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        k = len(self.blocks)
        object.__setattr__(self, "blocks", tuple(int(b) for b in self.blocks))
        object.__setattr__(self, "m", tuple(tuple(int(x) for x in r) for r in self.m))
        if len(self.m) != k or any(len(r) != k for r in self.m):
            raise DomainError("bad_shape", f"multiplicity grid must be {k}x{k}")

    @property
    def k(self) -> int:
        return len(self.blocks)

    def arrows(self) -> list[tuple[int, int, int]]:
        """(source, target, count) triples in canonical order."""
        return sorted((j + 1, i + 1, c) for i, r in enumerate(self.m) for j, c in enumerate(r) if c)

    def incidence(self, i: int) -> int:
        """Arrow ends at block i (1-indexed); a loop counts twice."""
        return sum(self.m[i - 1]) + sum(r[i - 1] for r in self.m)

    @classmethod
    def from_arrows(cls, blocks: Sequence[int], arrows) -> EnhancedOLP:
        k = len(blocks)
        grid = [[0] * k for _ in range(k)]
        for a in arrows:
            s, t, c = a if len(a) == 3 else (*a, 1)
            grid[t - 1][s - 1] += c
        return cls(tuple(blocks), tuple(map(tuple, grid)))

    def to_json(self) -> dict:
        return {"blocks": list(self.blocks),
                "arrows": [{"source": s, "target": t, "count": c} for s, t, c in self.arrows()]}

    @classmethod
    def from_json(cls, obj: dict) -> EnhancedOLP:
        try:
            return cls.from_arrows(obj["blocks"], [(a["source"], a["target"], a.get("count", 1)) for a in obj["arrows"]])
        except (KeyError, TypeError) as exc:
            raise DomainError("malformed_json", f"enhanced pattern JSON: {exc}") from None


def validate_enhanced(e: EnhancedOLP) -> list[Violation]:
    found = []
    for i, b in enumerate(e.blocks, start=1):
        if b < 1:
            found.append(Violation(i, f"block {i} has nonpositive size {b}"))
        if any(x < 0 for x in e.m[i - 1]):
            found.append(Violation(i, f"negative multiplicity in row {i}"))
        k = e.incidence(i)
        if k > b:
            found.append(Violation(i, f"block {i} of size {b} is incident with {k} arrow ends"))
    return found
