"""Exact dense linear algebra over Q and over small prime fields.

Matrices are immutable :class:`Mat` values.  Rational entries are stored as
``int`` when integral and as reduced :class:`fractions.Fraction` otherwise;
prime-field entries are ``int`` residues in ``range(p)``.  Subspaces are
always given as column spans.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError

MAX_PRIME = 1 << 16


def _norm(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int) and not isinstance(x, bool):
        return x
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, str):
        return _norm(Fraction(x))
    raise TypeError(f"unsupported matrix entry {x!r}")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def check_prime(p: int) -> None:
    if not (_is_prime(p) and p < MAX_PRIME):
        raise DomainError("bad_field", f"modulus must be a prime below {MAX_PRIME}, got {p}")


@dataclass(frozen=True)
class Mat:
    """Dense ``rows x cols`` matrix; ``p`` is the field characteristic or None for Q."""

    rows: int
    cols: int
    entries: tuple[tuple, ...]
    p: int | None = None

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DomainError("bad_shape", "negative matrix dimension")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DomainError("bad_shape", f"entries do not form a {self.rows}x{self.cols} grid")
        if self.p is None:
            grid = tuple(tuple(_norm(x) for x in r) for r in self.entries)
        else:
            check_prime(self.p)
            grid = tuple(tuple(_to_residue(x, self.p) for x in r) for r in self.entries)
        object.__setattr__(self, "entries", grid)

    # construction

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None, p: int | None = None) -> Mat:
        rows = [tuple(r) for r in rows]
        if cols is None:
            if not rows:
                raise DomainError("bad_shape", "column count needed for a matrix with no rows")
            cols = len(rows[0])
        return cls(len(rows), cols, tuple(rows), p)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int, p: int | None = None) -> Mat:
        return cls.from_rows([[c[i] for c in columns] for i in range(rows)], cols=len(columns), p=p)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int | None = None) -> Mat:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)), p)

    @classmethod
    def identity(cls, n: int, p: int | None = None) -> Mat:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), p)

    @classmethod
    def unit(cls, n: int, i: int, j: int, p: int | None = None) -> Mat:
        """The ``n x n`` matrix unit E_ij (1-indexed)."""
        return cls(n, n, tuple(tuple(int((r, c) == (i - 1, j - 1)) for c in range(n)) for r in range(n)), p)

    # access

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def tolist(self) -> list[list]:
        return [list(r) for r in self.entries]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def is_upper_triangular(self, strict: bool = False) -> bool:
        return all(x == 0 for i, r in enumerate(self.entries) for j, x in enumerate(r)
                   if j < i or (strict and j == i))

    def is_lower_triangular(self, strict: bool = False) -> bool:
        return all(x == 0 for i, r in enumerate(self.entries) for j, x in enumerate(r)
                   if j > i or (strict and j == i))

    # arithmetic

    def _like(self, grid) -> Mat:
        return Mat(len(grid), self.cols if not grid else len(grid[0]), tuple(map(tuple, grid)), self.p)

    def _check_field(self, other: Mat) -> None:
        if self.p != other.p:
            raise DomainError("field_mismatch", "matrices live over different fields")

    def __add__(self, other: Mat) -> Mat:
        self._check_field(other)
        if self.shape != other.shape:
            raise DomainError("dimension_mismatch", f"cannot add {self.shape} and {other.shape}")
        return Mat(self.rows, self.cols,
                   tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)), self.p)

    def __neg__(self) -> Mat:
        return self.scale(-1)

    def __sub__(self, other: Mat) -> Mat:
        return self + (-other)

    def scale(self, c) -> Mat:
        return Mat(self.rows, self.cols, tuple(tuple(c * x for x in r) for r in self.entries), self.p)

    def __matmul__(self, other: Mat) -> Mat:
        self._check_field(other)
        if self.cols != other.rows:
            raise DomainError("dimension_mismatch", f"cannot multiply {self.shape} by {other.shape}")
        cols = other.transpose().entries
        grid = tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.entries)
        return Mat(self.rows, other.cols, grid, self.p)

    def __pow__(self, k: int) -> Mat:
        if not self.is_square:
            raise DomainError("not_square", "matrix power of a non-square matrix")
        if k < 0:
            raise DomainError("bad_exponent", "negative matrix power")
        result, base = Mat.identity(self.rows, self.p), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> Mat:
        return Mat(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)), self.p)

    T = property(transpose)

    def submatrix(self, row_idx: Iterable[int], col_idx: Iterable[int]) -> Mat:
        """Rows and columns picked by 0-based index, order preserved."""
        row_idx, col_idx = list(row_idx), list(col_idx)
        return Mat(len(row_idx), len(col_idx), tuple(tuple(self.entries[i][j] for j in col_idx) for i in row_idx), self.p)

    def mod(self, p: int) -> Mat:
        """Reduce an integer (or p-integral rational) matrix into GF(p)."""
        return Mat(self.rows, self.cols, self.entries, p)

    # serialization

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "entries": [[_entry_str(x) for x in r] for r in self.entries]}

    @classmethod
    def from_json(cls, obj: dict) -> Mat:
        try:
            rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
        except (KeyError, TypeError) as exc:
            raise DomainError("malformed_json", f"matrix JSON needs rows, cols, entries: {exc}") from None
        try:
            grid = tuple(tuple(_parse_entry(x) for x in r) for r in entries)
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise DomainError("malformed_json", f"bad matrix entry: {exc}") from None
        return cls(rows, cols, grid)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(_entry_str(x) for x in r) for r in self.entries)
        suffix = f", p={self.p}" if self.p else ""
        return f"Mat({self.rows}x{self.cols}: [{body}]{suffix})"


def _to_residue(x, p: int) -> int:
    x = _norm(x)
    if isinstance(x, Fraction):
        if x.denominator % p == 0:
            raise DomainError("bad_field", f"{x} has no image in GF({p})")
        return x.numerator * pow(x.denominator, -1, p) % p
    return x % p


def _entry_str(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def _parse_entry(x):
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"entry {x!r} must be an integer or a 'p/q' string")


def hstack(*mats: Mat) -> Mat:
    if not mats:
        raise DomainError("bad_shape", "nothing to stack")
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise DomainError("dimension_mismatch", "hstack needs equal row counts")
    grid = tuple(tuple(x for m in mats for x in m.entries[i]) for i in range(rows))
    return Mat(rows, sum(m.cols for m in mats), grid, mats[0].p)


def vstack(*mats: Mat) -> Mat:
    if not mats:
        raise DomainError("bad_shape", "nothing to stack")
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise DomainError("dimension_mismatch", "vstack needs equal column counts")
    return Mat(sum(m.rows for m in mats), cols, tuple(r for m in mats for r in m.entries), mats[0].p)


# elimination kernels


def _integer_rows(M: Mat) -> tuple[list[list[int]], Fraction]:
    """Scale each row to integers; returns the rows and the product of the scale factors."""
    rows, scale = [], Fraction(1)
    for r in M.entries:
        den = math.lcm(*(x.denominator for x in r if isinstance(x, Fraction))) if r else 1
        rows.append([int(x * den) for x in r])
        scale *= den
    return rows, scale


def _bareiss(a: list[list[int]]) -> tuple[int, int]:
    """Fraction-free elimination in place.

    Returns ``(rank, signed_last_pivot)``; for a square full-rank input the
    second value is the determinant.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    sign, prev, r = 1, 1, 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
            sign = -sign
        pr, pc = a[r], a[r][c]
        for i in range(r + 1, m):
            ai = a[i]
            f = ai[c]
            for j in range(c + 1, n):
                ai[j] = (pc * ai[j] - f * pr[j]) // prev
            ai[c] = 0
        prev = pc
        r += 1
    return r, sign * prev


def _gauss_mod(a: list[list[int]], p: int) -> tuple[int, int]:
    m = len(a)
    n = len(a[0]) if m else 0
    det, r = 1, 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c] % p), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
            det = -det
        inv = pow(a[r][c], -1, p)
        det = det * a[r][c] % p
        pr = a[r]
        for i in range(r + 1, m):
            f = a[i][c] * inv % p
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], pr)]
        r += 1
    return r, det % p


def rank(M: Mat) -> int:
    """Exact rank of ``M``."""
    if M.rows == 0 or M.cols == 0:
        return 0
    if M.p is not None:
        return _gauss_mod([list(r) for r in M.entries], M.p)[0]
    rows, _ = _integer_rows(M)
    return _bareiss(rows)[0]


def kernel_dim(M: Mat) -> int:
    return M.cols - rank(M)


def intersection_dim(U: Mat, V: Mat) -> int:
    """dim(colspan U ∩ colspan V) by the rank formula."""
    if U.rows != V.rows:
        raise DomainError("dimension_mismatch",
                          f"subspaces live in k^{U.rows} and k^{V.rows}")
    return rank(U) + rank(V) - rank(hstack(U, V))


def det(M: Mat):
    if not M.is_square:
        raise DomainError("not_square", f"determinant of a {M.rows}x{M.cols} matrix")
    if M.rows == 0:
        return 1
    if M.p is not None:
        r, d = _gauss_mod([list(r) for r in M.entries], M.p)
        return d if r == M.rows else 0
    rows, scale = _integer_rows(M)
    r, d = _bareiss(rows)
    if r < M.rows:
        return 0
    return _norm(Fraction(d) / scale)


def mat_poly(coeffs: Sequence, A: Mat) -> Mat:
    """Evaluate ``sum(coeffs[c] * A**c)`` by Horner's rule."""
    if not A.is_square:
        raise DomainError("not_square", "polynomial evaluation needs a square matrix")
    n = A.rows
    result = Mat.zeros(n, n, A.p)
    eye = Mat.identity(n, A.p)
    for c in reversed(list(coeffs)):
        result = result @ A + eye.scale(c)
    return result


def submatrix_corner(A: Mat, a: int, b: int) -> Mat:
    """The last ``a`` rows and first ``b`` columns of ``A``."""
    if not (0 <= a <= A.rows and 0 <= b <= A.cols):
        raise DomainError("bad_shape", f"corner ({a},{b}) out of range for a {A.rows}x{A.cols} matrix")
    return A.submatrix(range(A.rows - a, A.rows), range(b))


def _rref(a: list[list], p: int | None, ncols: int) -> list[int]:
    """Gauss-Jordan on the first ``ncols`` columns, in place; returns pivot columns."""
    m = len(a)
    pivots, r = [], 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        if p is None:
            inv = Fraction(1) / a[r][c]
            a[r] = [_norm(x * inv) for x in a[r]]
        else:
            inv = pow(a[r][c], -1, p)
            a[r] = [x * inv % p for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                if p is None:
                    a[i] = [_norm(x - f * y) for x, y in zip(a[i], a[r])]
                else:
                    a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return pivots


def solve(A: Mat, B: Mat) -> Mat:
    """The unique ``X`` with ``A @ X == B``.

    Raises ``DomainError`` when the system is inconsistent (``"inconsistent"``)
    or has more than one solution (``"not_unique"``).
    """
    A._check_field(B)
    if A.rows != B.rows:
        raise DomainError("dimension_mismatch", "right-hand side has the wrong number of rows")
    aug = [list(ra) + list(rb) for ra, rb in zip(A.entries, B.entries)]
    pivots = _rref(aug, A.p, A.cols)
    r = len(pivots)
    if any(x != 0 for row in aug[r:] for x in row[A.cols:]):
        raise DomainError("inconsistent", "linear system has no solution")
    if r < A.cols:
        raise DomainError("not_unique", "linear system has a positive-dimensional solution space")
    return Mat(A.cols, B.cols, tuple(tuple(aug[i][A.cols:]) for i in range(A.cols)), A.p)


def inverse(A: Mat) -> Mat:
    if not A.is_square:
        raise DomainError("not_square", "inverse of a non-square matrix")
    try:
        return solve(A, Mat.identity(A.rows, A.p))
    except DomainError:
        raise DomainError("singular", "matrix is not invertible") from None
