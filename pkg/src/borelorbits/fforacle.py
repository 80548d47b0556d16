"""Brute-force B_n(F_q)-orbit census on 2-nilpotent matrices over a small prime field.

Every n x n matrix over F_q is screened for A^2 = 0, the survivors are
split into orbits by closing under generators of B_n(F_q), and each orbit is
labelled with the finite-field instance of :func:`classify.classify`.
Matrices are encoded as base-q integers (row-major, entry (0,0) least
significant).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .classify import classify, profile_of
from .errors import DomainError, InternalError
from .exactlinalg import Mat
from .olp import OrientedLinkPattern, enumerate_patterns

MAX_N = 4
ALLOWED_Q = (2, 3)
_CHUNK = 1 << 20


def _check(n: int, q: int) -> None:
    if not (1 <= n <= MAX_N and q in ALLOWED_Q):
        raise DomainError("guard_exceeded", f"census limited to 1 <= n <= {MAX_N} and q in {ALLOWED_Q}")


def decode(code: int, n: int, q: int) -> tuple[int, ...]:
    out = []
    for _ in range(n * n):
        code, r = divmod(code, q)
        out.append(r)
    return tuple(out)


def encode(entries, q: int) -> int:
    code = 0
    for x in reversed(entries):
        code = code * q + x
    return code


def square_zero_codes(n: int, q: int) -> list[int]:
    """Codes of all n x n matrices over F_q with A^2 = 0, by exhaustive screening."""
    total = q ** (n * n)
    found = []
    weights = q ** np.arange(n * n, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        digits = (codes[:, None] // weights[None, :]) % q
        for i in range(n):
            for j in range(n):
                sq = sum(digits[:, i * n + k] * digits[:, k * n + j] for k in range(n)) % q
                keep = sq == 0
                codes, digits = codes[keep], digits[keep]
        found.extend(int(c) for c in codes)
    return found


def _generators(n: int, q: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Pairs (g, g^{-1}) as flat row-major tuples: transvections and diagonal generators."""
    def eye():
        return [int(i == j) for i in range(n) for j in range(n)]

    gens = []
    for i in range(n):
        for j in range(i + 1, n):
            g, h = eye(), eye()
            g[i * n + j], h[i * n + j] = 1, q - 1
            gens.append((tuple(g), tuple(h)))
    prim = next(t for t in range(2, q) if all(pow(t, e, q) != 1 for e in range(1, q - 1))) if q > 2 else None
    if prim is not None:
        for i in range(n):
            g, h = eye(), eye()
            g[i * n + i], h[i * n + i] = prim, pow(prim, -1, q)
            gens.append((tuple(g), tuple(h)))
    return gens


def _mul(a, b, n: int, q: int) -> tuple[int, ...]:
    return tuple(sum(a[i * n + k] * b[k * n + j] for k in range(n)) % q for i in range(n) for j in range(n))


@lru_cache(maxsize=None)
def orbits(n: int, q: int) -> tuple[frozenset[int], ...]:
    """Orbits as sets of codes, sorted by their minimal code."""
    _check(n, q)
    gens = _generators(n, q)
    unseen = set(square_zero_codes(n, q))
    out = []
    while unseen:
        seed = min(unseen)
        orbit, frontier = {seed}, [seed]
        while frontier:
            nxt = []
            for code in frontier:
                A = decode(code, n, q)
                for g, h in gens:
                    c = encode(_mul(_mul(g, A, n, q), h, n, q), q)
                    if c not in orbit:
                        orbit.add(c)
                        nxt.append(c)
            frontier = nxt
        unseen -= orbit
        out.append(frozenset(orbit))
    return tuple(sorted(out, key=min))


def to_mat(code: int, n: int, q: int) -> Mat:
    e = decode(code, n, q)
    return Mat.from_rows([e[i * n:(i + 1) * n] for i in range(n)], cols=n, p=q)


def borel_order(n: int, q: int) -> int:
    return (q - 1) ** n * q ** (n * (n - 1) // 2)


@dataclass(frozen=True)
class OrbitRecord:
    representative: Mat
    size: int
    pattern: OrientedLinkPattern

    def to_json(self) -> dict:
        return {"representative": self.representative.tolist(), "size": self.size,
                "pattern": self.pattern.to_json()}


@dataclass(frozen=True)
class OrbitCensus:
    n: int
    q: int
    orbit_count: int
    total: int
    orbits: tuple[OrbitRecord, ...]

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.q, "orbit_count": self.orbit_count,
                "square_zero_matrices": self.total, "borel_order": borel_order(self.n, self.q),
                "orbits": [o.to_json() for o in self.orbits]}


def census(n: int, q: int) -> OrbitCensus:
    orbs = orbits(n, q)
    records = []
    for orb in orbs:
        rep = to_mat(min(orb), n, q)
        records.append(OrbitRecord(rep, len(orb), classify(rep)))
    labels = [r.pattern for r in records]
    if len(set(labels)) != len(labels):
        raise InternalError(f"two B_{n}(F_{q})-orbits received the same oriented link pattern")
    if set(labels) != set(enumerate_patterns(n)):
        raise InternalError("orbit labels do not exhaust the oriented link patterns")
    total = sum(len(o) for o in orbs)
    if total != len(square_zero_codes(n, q)):
        raise InternalError("orbit sizes do not add up to the number of square-zero matrices")
    bad = [r.size for r in records if borel_order(n, q) % r.size]
    if bad:
        raise InternalError(f"orbit sizes {bad} do not divide |B_n(F_q)|")
    return OrbitCensus(n, q, len(records), total, tuple(records))


@dataclass(frozen=True)
class InvarianceReport:
    n: int
    q: int
    orbit_count: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.q, "orbit_count": self.orbit_count, "violations": list(self.violations)}


def invariance_check(n: int, q: int) -> InvarianceReport:
    """The intersection profile must be constant on orbits and separate distinct orbits."""
    orbs = orbits(n, q)
    violations, seen = [], {}
    for k, orb in enumerate(orbs):
        profiles = {profile_of(to_mat(c, n, q)).d for c in orb}
        if len(profiles) != 1:
            violations.append(f"orbit {k} (min code {min(orb)}) carries {len(profiles)} distinct profiles")
        for d in profiles:
            if d in seen and seen[d] != k:
                violations.append(f"orbits {seen[d]} and {k} share a profile")
            seen.setdefault(d, k)
    return InvarianceReport(n, q, len(orbs), tuple(violations))
