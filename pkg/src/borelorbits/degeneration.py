"""Degeneration order on oriented link patterns, its Hasse diagram, and local moves.

``leq_deg(p, q)`` means the orbit labelled ``q`` lies in the closure of the
orbit labelled ``p``: ``p`` is the more generic one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations

from .errors import DomainError
from .olp import OrientedLinkPattern, enumerate_patterns, require_valid

MAX_CLOSURE_N = 8
MAX_COVERS_N = 6
MAX_MOVE_CLOSURE_N = 6


@dataclass(frozen=True)
class InvariantProfile:
    """``p[k-1]`` and ``q[k-1][l-1]`` for 1 <= k, l <= n."""

    n: int
    p: tuple[int, ...]
    q: tuple[tuple[int, ...], ...]

    def flat(self) -> tuple[int, ...]:
        return self.p + tuple(x for r in self.q for x in r)

    def to_json(self) -> dict:
        return {"n": self.n, "p": list(self.p), "q": [list(r) for r in self.q]}


@lru_cache(maxsize=None)
def profile(pat: OrientedLinkPattern) -> InvariantProfile:
    """p_k counts free vertices and arrow targets at positions <= k;
    q_{k,l} adds to p_l the arrows with target <= k and source <= l."""
    require_valid(pat)
    n = pat.n
    free = set(pat.free_vertices())
    p = tuple(sum(v in free for v in range(1, k + 1)) + sum(t <= k for _, t in pat.arrows)
              for k in range(1, n + 1))
    q = tuple(tuple(p[l - 1] + sum(t <= k and s <= l for s, t in pat.arrows) for l in range(1, n + 1))
              for k in range(1, n + 1))
    return InvariantProfile(n, p, q)


def _same_n(a: OrientedLinkPattern, b: OrientedLinkPattern) -> None:
    if a.n != b.n:
        raise DomainError("size_mismatch", f"patterns on {a.n} and {b.n} vertices")


def leq_deg(M: OrientedLinkPattern, Mp: OrientedLinkPattern) -> bool:
    """True iff the orbit of ``Mp`` lies in the closure of the orbit of ``M``."""
    _same_n(M, Mp)
    return all(a <= b for a, b in zip(profile(M).flat(), profile(Mp).flat()))


def _check_guard(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise DomainError("guard_exceeded", f"{what} limited to n <= {limit}")


def closure_set(pat: OrientedLinkPattern) -> list[OrientedLinkPattern]:
    _check_guard(pat.n, MAX_CLOSURE_N, "closure_set")
    require_valid(pat)
    return [q for q in enumerate_patterns(pat.n) if leq_deg(pat, q)]


@lru_cache(maxsize=None)
def _order(n: int) -> tuple[tuple[OrientedLinkPattern, ...], tuple[int, ...]]:
    """Patterns in canonical order and, for each, the bitmask of patterns it degenerates to."""
    pats = tuple(enumerate_patterns(n))
    flats = [profile(p).flat() for p in pats]
    ups = []
    for a in flats:
        mask = 0
        for k, b in enumerate(flats):
            if all(x <= y for x, y in zip(a, b)):
                mask |= 1 << k
        ups.append(mask)
    return pats, tuple(ups)


def covers(n: int) -> list[tuple[OrientedLinkPattern, OrientedLinkPattern]]:
    """Hasse diagram of the degeneration order: pairs (p, q) with q a minimal degeneration of p."""
    _check_guard(n, MAX_COVERS_N, "covers")
    pats, ups = _order(n)
    out = []
    for k, up in enumerate(ups):
        strict = up & ~(1 << k)
        below = 0
        rest = strict
        while rest:
            r = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            below |= ups[r] & ~(1 << r)
        minimal = strict & ~below
        out += [(pats[k], pats[r]) for r in range(len(pats)) if minimal >> r & 1]
    return out


def hasse_dot(n: int) -> str:
    """Graphviz source; edges run from the dominating orbit to its minimal degeneration."""
    pats, _ = _order(n)
    index = {p: k for k, p in enumerate(pats)}
    lines = [f"digraph degenerations_n{n} {{", "  rankdir=TB;", "  node [shape=box];"]
    lines += [f'  n{k} [label="{p.label()}"];' for k, p in enumerate(pats)]
    lines += [f"  n{index[a]} -> n{index[b]};" for a, b in covers(n)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def covers_json(n: int) -> dict:
    return {"n": n, "covers": [{"from": a.to_json(), "to": b.to_json()} for a, b in covers(n)]}


# local moves

_LETTERS = "abcd"


@dataclass(frozen=True)
class Move:
    """Local change on ``k`` ordered vertices; arrows use abstract positions 1..k."""

    k: int
    pre: tuple[tuple[int, int], ...]
    post: tuple[tuple[int, int], ...]

    def pattern_pair(self) -> tuple[OrientedLinkPattern, OrientedLinkPattern]:
        return OrientedLinkPattern(self.k, self.pre), OrientedLinkPattern(self.k, self.post)


def _parse_arrows(text: str) -> tuple[tuple[int, int], ...]:
    out = []
    for tok in filter(None, (t.strip() for t in text.split(","))):
        s, t = tok.split(">")
        out.append((_LETTERS.index(s) + 1, _LETTERS.index(t) + 1))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def move_table() -> tuple[Move, ...]:
    raw = json.loads(resources.files("borelorbits").joinpath("data/moves.json").read_text())
    moves = []
    for diagram in raw["diagrams"]:
        k = len(diagram["vertices"])
        for edge in diagram["edges"]:
            moves.append(Move(k, _parse_arrows(edge["from"]), _parse_arrows(edge["to"])))
    return tuple(moves)


def apply_moves(pat: OrientedLinkPattern) -> list[OrientedLinkPattern]:
    """Patterns reachable by one move instantiated on any increasing choice of vertices.

    The chosen vertices must carry exactly the move's source arrows; all
    other arrows are carried over unchanged.
    """
    require_valid(pat)
    arrows = set(pat.arrows)
    results = set()
    for mv in move_table():
        for chosen in combinations(range(1, pat.n + 1), mv.k):
            touching = {a for a in arrows if a[0] in chosen or a[1] in chosen}
            pre = {(chosen[s - 1], chosen[t - 1]) for s, t in mv.pre}
            if touching != pre:
                continue
            post = {(chosen[s - 1], chosen[t - 1]) for s, t in mv.post}
            results.add(OrientedLinkPattern(pat.n, tuple((arrows - pre) | post)))
    return sorted(results, key=lambda p: p.sort_key)


def move_closure(pat: OrientedLinkPattern) -> list[OrientedLinkPattern]:
    _check_guard(pat.n, MAX_MOVE_CLOSURE_N, "move_closure")
    seen = {pat}
    frontier = [pat]
    while frontier:
        nxt = []
        for p in frontier:
            for q in apply_moves(p):
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return sorted(seen, key=lambda p: p.sort_key)
