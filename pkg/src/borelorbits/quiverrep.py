"""Representations of the chain quiver 1 -> 2 -> ... -> n with a loop at n squaring to zero.

This module is the representation-theoretic oracle.  Homomorphism spaces
are computed by solving the intertwiner equations directly, never from the
closed formulas, so the combinatorial results elsewhere can be checked
against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .classify import require_2_nilpotent
from .errors import DomainError, InternalError
from .exactlinalg import Mat, rank, solve
from .olp import OrientedLinkPattern, require_valid, to_multiplicity_matrix


@dataclass(frozen=True)
class BoundQuiverRep:
    """``chain[m]`` maps vertex m+1 to vertex m+2 (0-based tuple, 1-based vertices)."""

    dims: tuple[int, ...]
    chain: tuple[Mat, ...]
    loop: Mat

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        if not dims or any(d < 0 for d in dims):
            raise DomainError("bad_dims", f"dimension vector {list(dims)} must be nonempty and nonnegative")
        if len(self.chain) != len(dims) - 1:
            raise DomainError("bad_shape", f"{len(dims)} vertices need {len(dims) - 1} chain maps")
        for m, f in enumerate(self.chain):
            if f.shape != (dims[m + 1], dims[m]):
                raise DomainError("bad_shape", f"chain map {m + 1} has shape {f.shape}, "
                                               f"expected {(dims[m + 1], dims[m])}")
        if self.loop.shape != (dims[-1], dims[-1]):
            raise DomainError("bad_shape", f"loop must be {dims[-1]}x{dims[-1]}")
        if not (self.loop @ self.loop).is_zero():
            raise DomainError("not_bound", "loop does not square to zero")

    @property
    def n(self) -> int:
        return len(self.dims)

    def is_injective_chain(self) -> bool:
        return all(rank(f) == f.cols for f in self.chain)


def _block_diag(a: Mat, b: Mat) -> Mat:
    grid = [list(r) + [0] * b.cols for r in a.entries] + [[0] * a.cols + list(r) for r in b.entries]
    return Mat.from_rows(grid, cols=a.cols + b.cols)


def direct_sum(X: BoundQuiverRep, Y: BoundQuiverRep) -> BoundQuiverRep:
    if X.n != Y.n:
        raise DomainError("size_mismatch", "representations of quivers with different vertex counts")
    return BoundQuiverRep(tuple(a + b for a, b in zip(X.dims, Y.dims)),
                          tuple(_block_diag(f, g) for f, g in zip(X.chain, Y.chain)),
                          _block_diag(X.loop, Y.loop))


def _embedding(src: int, dst: int) -> Mat:
    return Mat.from_rows([[int(r == c) for c in range(src)] for r in range(dst)], cols=src)


def rep_of_matrix(A: Mat, dims: Sequence[int]) -> BoundQuiverRep:
    """Canonical coordinate embeddings along the chain, ``A`` on the loop."""
    dims = tuple(dims)
    require_2_nilpotent(A)
    if not dims or dims[-1] != A.rows:
        raise DomainError("bad_dims", f"last dimension must equal the matrix size {A.rows}")
    if dims[0] < 0 or any(b <= a for a, b in zip(dims, dims[1:])):
        raise DomainError("bad_dims", f"dimension vector {list(dims)} must be strictly increasing")
    return BoundQuiverRep(dims, tuple(_embedding(a, b) for a, b in zip(dims, dims[1:])), A)


def rep_of_pattern(p: OrientedLinkPattern) -> BoundQuiverRep:
    require_valid(p)
    return rep_of_matrix(to_multiplicity_matrix(p), tuple(range(1, p.n + 1)))


# indecomposables

KINDS = ("U", "V", "W")


@dataclass(frozen=True, order=True)
class IndecomposableId:
    kind: str
    i: int
    j: int | None = None

    def check(self, n: int) -> None:
        ok = {
            "U": self.j is not None and 1 <= self.i <= n and 1 <= self.j <= n,
            "V": self.j is None and 1 <= self.i <= n,
            "W": self.j is not None and 1 <= self.i <= self.j < n,
        }.get(self.kind, False)
        if not ok:
            raise DomainError("bad_indecomposable", f"{self} is not an indecomposable for n={n}")

    def __str__(self) -> str:
        return f"{self.kind}{self.i}" if self.j is None else f"{self.kind}{self.i},{self.j}"

    @classmethod
    def parse(cls, text: str) -> IndecomposableId:
        """Parse ``"U2,1"``, ``"V3"`` or ``"W1,2"``."""
        text = text.strip()
        try:
            kind, rest = text[0].upper(), text[1:]
            idx = [int(x) for x in rest.replace("_", ",").split(",")]
        except (IndexError, ValueError):
            raise DomainError("bad_indecomposable", f"cannot parse indecomposable {text!r}") from None
        if kind == "V" and len(idx) == 1:
            return cls("V", idx[0])
        if kind in ("U", "W") and len(idx) == 2:
            return cls(kind, idx[0], idx[1])
        raise DomainError("bad_indecomposable", f"cannot parse indecomposable {text!r}")


U = lambda i, j: IndecomposableId("U", i, j)  # noqa: E731
V = lambda i: IndecomposableId("V", i)  # noqa: E731
W = lambda i, j: IndecomposableId("W", i, j)  # noqa: E731

_ALPHA = Mat.from_rows([[0, 0], [1, 0]])


def _chain_rep(dims: list[int], jump: Mat | None, loop: Mat) -> BoundQuiverRep:
    chain = []
    for a, b in zip(dims, dims[1:]):
        if a == b:
            chain.append(Mat.identity(a))
        elif a == 1 and b == 2:
            chain.append(jump)
        else:
            chain.append(Mat.zeros(b, a))
    return BoundQuiverRep(tuple(dims), tuple(chain), loop)


def indecomposable(ident: IndecomposableId, n: int) -> BoundQuiverRep:
    ident.check(n)
    pos = range(1, n + 1)
    i, j = ident.i, ident.j
    if ident.kind == "U":
        start, top = (j, i) if j <= i else (i, j)
        dims = [0 if m < start else 1 if m < top else 2 for m in pos]
        e = Mat.from_rows([[1], [0]]) if j <= i else Mat.from_rows([[0], [1]])
        return _chain_rep(dims, e, _ALPHA)
    if ident.kind == "V":
        return _chain_rep([int(m >= i) for m in pos], None, Mat.zeros(1, 1))
    return _chain_rep([int(i <= m <= j) for m in pos], None, Mat.zeros(0, 0))


def all_indecomposables(n: int, kinds: str = "UVW") -> list[IndecomposableId]:
    """Indecomposables ordered by total dimension, then kind, then indices."""
    ids = []
    if "U" in kinds:
        ids += [U(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    if "V" in kinds:
        ids += [V(i) for i in range(1, n + 1)]
    if "W" in kinds:
        ids += [W(i, j) for i in range(1, n) for j in range(i, n)]
    return sorted(ids, key=lambda x: (sum(_ind_dims(x, n)), x.kind, x.i, x.j or 0))


@lru_cache(maxsize=None)
def _ind_dims(ident: IndecomposableId, n: int) -> tuple[int, ...]:
    return indecomposable(ident, n).dims


# homomorphisms


def hom_dim(X: BoundQuiverRep, Y: BoundQuiverRep) -> int:
    """dim Hom(X, Y): the solution space of f_{m+1} X_m = Y_m f_m and f_n X_loop = Y_loop f_n."""
    if X.n != Y.n:
        raise DomainError("size_mismatch", "representations of quivers with different vertex counts")
    offsets, nvars = [], 0
    for dx, dy in zip(X.dims, Y.dims):
        offsets.append(nvars)
        nvars += dx * dy
    if nvars == 0:
        return 0

    def var(m, r, c):
        return offsets[m] + r * X.dims[m] + c

    rows = []

    def intertwine(m_src, m_dst, xmap: Mat, ymap: Mat):
        # f_dst @ xmap - ymap @ f_src == 0, entrywise over (r, c)
        for r in range(Y.dims[m_dst]):
            for c in range(X.dims[m_src]):
                eq = [0] * nvars
                for k in range(X.dims[m_dst]):
                    if xmap[k, c]:
                        eq[var(m_dst, r, k)] += xmap[k, c]
                for k in range(Y.dims[m_src]):
                    if ymap[r, k]:
                        eq[var(m_src, k, c)] -= ymap[r, k]
                if any(eq):
                    rows.append(eq)

    for m in range(X.n - 1):
        intertwine(m, m + 1, X.chain[m], Y.chain[m])
    intertwine(X.n - 1, X.n - 1, X.loop, Y.loop)
    if not rows:
        return nvars
    return nvars - rank(Mat.from_rows(rows, cols=nvars))


def _delta(x: int, y: int) -> int:
    return int(x <= y)


def hom_dim_closed_form(a: IndecomposableId, b: IndecomposableId) -> int:
    """Closed-form dim Hom(a, b) for indecomposables of kinds U and V."""
    if a.kind == "W" or b.kind == "W":
        raise DomainError("unsupported", "closed form covers only U and V kinds; use hom_dim")
    if a.kind == "V":
        return _delta(b.i, a.i)
    k, l = a.i, a.j
    if b.kind == "V":
        return _delta(b.i, l)
    i, j = b.i, b.j
    return _delta(i, l) + _delta(j, l) * _delta(i, k)


def endo_dim(X: BoundQuiverRep) -> int:
    return hom_dim(X, X)


def orbit_dimension(p: OrientedLinkPattern) -> int:
    """Dimension of the B_n-orbit: dim B_n minus the dimension of the stabilizer (= End of the rep)."""
    return p.n * (p.n + 1) // 2 - endo_dim(rep_of_pattern(p))


# Krull-Schmidt via hom counts


@dataclass(frozen=True)
class Decomposition:
    """Multiplicities of indecomposable summands (1-based indices in the accessors)."""

    n: int
    mU: tuple[tuple[int, ...], ...]
    nV: tuple[int, ...]
    wW: tuple[tuple[int, ...], ...]

    def multiplicity(self, ident: IndecomposableId) -> int:
        if ident.kind == "U":
            return self.mU[ident.i - 1][ident.j - 1]
        if ident.kind == "V":
            return self.nV[ident.i - 1]
        return self.wW[ident.i - 1][ident.j - 1]

    def summands(self) -> list[tuple[IndecomposableId, int]]:
        return [(x, self.multiplicity(x)) for x in all_indecomposables(self.n) if self.multiplicity(x)]

    def dimension_vector(self) -> tuple[int, ...]:
        tot = [0] * self.n
        for x, mult in self.summands():
            for m, d in enumerate(_ind_dims(x, self.n)):
                tot[m] += mult * d
        return tuple(tot)

    def to_json(self) -> dict:
        return {"n": self.n, "summands": [{"kind": x.kind, "i": x.i, **({"j": x.j} if x.j else {}),
                                            "multiplicity": c} for x, c in self.summands()]}


@lru_cache(maxsize=None)
def hom_matrix(n: int) -> tuple[tuple[IndecomposableId, ...], Mat]:
    """Indecomposables and the square matrix ``H[x][y] = dim Hom(x, y)``; checked invertible."""
    ids = tuple(all_indecomposables(n))
    reps = [indecomposable(x, n) for x in ids]
    H = Mat.from_rows([[hom_dim(x, y) for y in reps] for x in reps], cols=len(ids))
    if rank(H) != len(ids):
        raise InternalError(f"hom matrix of indecomposables for n={n} is singular")
    return ids, H


def krull_schmidt(M: BoundQuiverRep) -> Decomposition:
    """Recover summand multiplicities from the hom counts dim Hom(X, M)."""
    n = M.n
    ids, H = hom_matrix(n)
    h = Mat.from_rows([[hom_dim(indecomposable(x, n), M)] for x in ids], cols=1)
    try:
        sol = solve(H, h)
    except DomainError as exc:
        raise DomainError("inconsistent", f"hom counts admit no decomposition: {exc.message}") from None
    mult = {}
    for x, (v,) in zip(ids, sol.entries):
        if isinstance(v, Fraction) or v < 0:
            raise DomainError("inconsistent", f"multiplicity of {x} came out as {v}")
        mult[x] = v
    mU = tuple(tuple(mult[U(i, j)] for j in range(1, n + 1)) for i in range(1, n + 1))
    nV = tuple(mult[V(i)] for i in range(1, n + 1))
    wW = tuple(tuple(mult.get(W(i, j), 0) for j in range(1, n + 1)) for i in range(1, n + 1))
    dec = Decomposition(n, mU, nV, wW)
    if dec.dimension_vector() != M.dims:
        raise DomainError("inconsistent", f"summands add up to {dec.dimension_vector()}, not {M.dims}")
    return dec


@lru_cache(maxsize=None)
def hom_profile(p: OrientedLinkPattern) -> tuple[int, ...]:
    """dim Hom(X, rep(p)) for every U/V indecomposable X, in ``all_indecomposables`` order."""
    M = rep_of_pattern(p)
    return tuple(hom_dim(indecomposable(x, p.n), M) for x in all_indecomposables(p.n, "UV"))


def zwara_leq(p: OrientedLinkPattern, q: OrientedLinkPattern) -> bool:
    """Hom-count criterion: rep(p) degenerates to rep(q)."""
    if p.n != q.n:
        raise DomainError("size_mismatch", "patterns on different vertex counts")
    return all(a <= b for a, b in zip(hom_profile(p), hom_profile(q)))
