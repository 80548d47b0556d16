"""Generic normal form and determinantal semiinvariants for B_n acting on nilpotent matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, InternalError
from .exactlinalg import Mat, _parse_entry, det, hstack, inverse, mat_poly, rank, solve, submatrix_corner, vstack


def require_nilpotent(A: Mat) -> None:
    if not A.is_square:
        raise DomainError("not_square", f"expected a square matrix, got {A.rows}x{A.cols}")
    if not (A ** A.rows).is_zero():
        raise DomainError("not_nilpotent", "A^n is not zero")


@dataclass(frozen=True)
class GenericityReport:
    generic: bool
    failing_k: int | None
    minors: tuple

    def to_json(self) -> dict:
        return {"generic": self.generic, "failing_k": self.failing_k,
                "minors": [str(m) for m in self.minors]}


def genericity(A: Mat) -> GenericityReport:
    """Corner minors det((A^{n-k})_{(k,k)}) for k = 1..n-1; generic iff all are nonzero.

    The column-independence form of the condition is evaluated alongside and
    must agree with the minor form.
    """
    require_nilpotent(A)
    n = A.rows
    minors, independent = [], True
    for k in range(1, n):
        power = A ** (n - k)
        minors.append(det(submatrix_corner(power, k, k)))
        independent &= rank(power.submatrix(range(n), range(k))) == k
    failing = next((k for k, m in enumerate(minors, start=1) if m == 0), None)
    generic = failing is None
    if generic != independent:
        raise InternalError("minor and column-independence genericity tests disagree")
    return GenericityReport(generic, failing, tuple(minors))


def is_normal_form(H: Mat) -> bool:
    """Strictly lower triangular with ones on the subdiagonal."""
    return H.is_lower_triangular(strict=True) and all(H[i + 1, i] == 1 for i in range(H.rows - 1))


def normal_form(A: Mat) -> tuple[Mat, Mat]:
    """Return ``(H, g)`` with ``g`` upper triangular, ``H = g A g^{-1}`` in normal form."""
    report = genericity(A)
    if not report.generic:
        raise DomainError("not_generic", f"corner minor for k={report.failing_k} vanishes")
    n = A.rows
    top = (A ** (n - 1)).submatrix(range(n), [0])
    columns = []
    for k in range(1, n + 1):
        lhs = (A ** (n - k)).submatrix(range(n), range(k))
        b = solve(lhs, top).col(0)
        if b[k - 1] == 0:
            raise InternalError(f"leading coefficient b[{k},{k}] vanished")
        columns.append(list(b) + [0] * (n - k))
    T = Mat.from_columns(columns, rows=n)
    g = inverse(T)
    H = g @ A @ T
    if not is_normal_form(H):
        raise InternalError("constructed basis did not produce a normal form")
    return H, g


# semiinvariants


@dataclass(frozen=True)
class SemiinvariantDatum:
    """Block sizes ``a`` (rows) and ``b`` (columns) and a grid of polynomials ``P[i][j]``.

    Each polynomial is a coefficient sequence, constant term first.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]
    P: tuple[tuple[tuple, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        object.__setattr__(self, "P", tuple(tuple(tuple(c) for c in r) for r in self.P))
        if any(x < 0 for x in self.a + self.b):
            raise DomainError("invalid_datum", "block sizes must be nonnegative")
        if sum(self.a) != sum(self.b):
            raise DomainError("invalid_datum", f"row blocks sum to {sum(self.a)}, column blocks to {sum(self.b)}")
        if len(self.P) != len(self.a) or any(len(r) != len(self.b) for r in self.P):
            raise DomainError("invalid_datum", f"polynomial grid must be {len(self.a)}x{len(self.b)}")

    @property
    def k(self) -> int:
        return sum(self.a)

    def check_size(self, n: int) -> None:
        if self.k > n:
            raise DomainError("invalid_datum", f"block matrix size {self.k} exceeds n={n}")

    def to_json(self) -> dict:
        return {"a": list(self.a), "b": list(self.b),
                "P": [[[str(c) for c in poly] for poly in r] for r in self.P]}

    @classmethod
    def from_json(cls, obj: dict) -> SemiinvariantDatum:
        try:
            P = [[[_parse_entry(c) for c in poly] for poly in r] for r in obj["P"]]
            return cls(tuple(obj["a"]), tuple(obj["b"]), P)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise DomainError("malformed_json", f"datum JSON needs a, b, P: {exc}") from None


def block_matrix(A: Mat, datum: SemiinvariantDatum) -> Mat:
    require_nilpotent(A)
    datum.check_size(A.rows)
    k = datum.k
    if k == 0:
        return Mat.zeros(0, 0, A.p)
    evaluated = {}
    block_rows = []
    for ai, polys in zip(datum.a, datum.P):
        if ai == 0:
            continue
        parts = []
        for bj, poly in zip(datum.b, polys):
            if bj == 0:
                continue
            if poly not in evaluated:
                evaluated[poly] = mat_poly(poly, A)
            parts.append(submatrix_corner(evaluated[poly], ai, bj))
        block_rows.append(hstack(*parts))
    return vstack(*block_rows)


def semiinvariant(A: Mat, datum: SemiinvariantDatum):
    return det(block_matrix(A, datum))


def weight(datum: SemiinvariantDatum, n: int) -> tuple[int, ...]:
    """Coefficients of ω_1..ω_n: +1 on the last a_i positions per row block, -1 on the first b_j per column block."""
    datum.check_size(n)
    c = [0] * n
    for a in datum.a:
        for pos in range(n - a, n):
            c[pos] += 1
    for b in datum.b:
        for pos in range(b):
            c[pos] -= 1
    return tuple(c)


def character(g: Mat, w: Sequence[int]):
    """Value of the diagonal character with exponents ``w`` at ``g``."""
    if len(w) != g.rows or not g.is_square:
        raise DomainError("size_mismatch", "weight length must match the group element size")
    out = Fraction(1)
    for i, e in enumerate(w):
        out *= Fraction(g[i, i]) ** e
    return out.numerator if out.denominator == 1 else out


def _monomial(d: int) -> tuple[int, ...]:
    return (0,) * d + (1,)


def entry_datum(i: int, j: int, n: int) -> SemiinvariantDatum:
    """Datum whose semiinvariant returns the (i, j) entry of a matrix in normal form.

    Valid for 1 <= j <= n-2 and j+2 <= i <= n.  Row blocks have heights j-1
    and n-i+1; the second row block reads rows i..n.
    """
    if not (1 <= j <= n - 2 and j + 2 <= i <= n):
        raise DomainError("invalid_datum", f"entry ({i},{j}) is outside 1<=j<=n-2, j+2<=i<=n for n={n}")
    return SemiinvariantDatum(
        a=(j - 1, n - i + 1),
        b=(j, n - i),
        P=((_monomial(n - j + 1), (0,)), (_monomial(1), _monomial(i))),
    )
