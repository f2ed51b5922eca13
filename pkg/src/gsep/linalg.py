"""Exact integer linear algebra.

Everything here works on :class:`IntMatrix`, an immutable dense matrix of
Python ints.  Python ints never wrap, but the routines still police the
signed 64-bit range so that a result computed here would also be valid in a
fixed-width implementation; leaving the range raises
:class:`~gsep.errors.ArithmeticOverflowError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import (
    ArithmeticOverflowError,
    InvalidArgumentError,
    NotABasisError,
    ParseError,
    UnimodularityError,
    ZeroRankError,
)

INT64_MAX = 2**63 - 1


def _check(v: int) -> int:
    if v > INT64_MAX or v < -INT64_MAX - 1:
        raise ArithmeticOverflowError(f"integer {v} exceeds the 64-bit range")
    return v


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise InvalidArgumentError("matrix must have at least one row and column")
        if len(self.entries) != self.rows * self.cols:
            raise InvalidArgumentError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        object.__setattr__(self, "entries", tuple(_check(int(x)) for x in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise InvalidArgumentError("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise InvalidArgumentError("ragged rows")
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls.from_rows(list(zip(*columns)))

    @classmethod
    def identity(cls, k: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(k)] for i in range(k)])

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list:
        return [self.col(j) for j in range(self.cols)]

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix.from_rows(self.columns())

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "IntMatrix":
        cols = list(cols)
        return IntMatrix.from_rows([[self[i, j] for j in cols] for i in rows])

    def select_columns(self, cols: Iterable[int]) -> "IntMatrix":
        return self.submatrix(range(self.rows), cols)

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if other.rows != self.rows:
            raise InvalidArgumentError("row counts differ")
        return IntMatrix.from_rows([self.row(i) + other.row(i) for i in range(self.rows)])

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InvalidArgumentError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = other.columns()
        return IntMatrix.from_rows(
            [[_check(sum(a * b for a, b in zip(self.row(i), c))) for c in ocols]
             for i in range(self.rows)]
        )

    def apply(self, v: Sequence[int]) -> tuple:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise InvalidArgumentError("vector length mismatch")
        return tuple(_check(sum(a * b for a, b in zip(self.row(i), v))) for i in range(self.rows))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __str__(self) -> str:
        return format_matrix(self)


# ---------------------------------------------------------------------------
# elimination


def _echelon(rows: list, ncols: int) -> tuple:
    """Fraction-free (Bareiss) forward elimination.

    Returns ``(rank, pivot_columns)``; pivot columns are the lexicographically
    first maximal independent set of columns.
    """
    a = [list(r) for r in rows]
    m = len(a)
    r = 0
    prev = 1
    pivots = []
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, m):
            aic = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c + 1, ncols):
                row_i[j] = _check(row_i[j] * piv - aic * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return r, pivots


def det(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if not m.is_square():
        raise InvalidArgumentError(f"determinant of non-square {m.shape} matrix")
    n = m.rows
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = _check(a[i][j] * piv - aik * a[k][j]) // prev
        prev = piv
    return sign * a[n - 1][n - 1]


def rank(m: IntMatrix) -> int:
    return _echelon(m.to_rows(), m.cols)[0]


def column_rank(m: IntMatrix, cols: Iterable[int]) -> int:
    """Rank of the submatrix formed by ``cols``."""
    cols = list(cols)
    if not cols:
        return 0
    return _echelon([[m[i, j] for j in cols] for i in range(m.rows)], len(cols))[0]


def pivot_columns(m: IntMatrix) -> list:
    return _echelon(m.to_rows(), m.cols)[1]


# ---------------------------------------------------------------------------
# unimodularity


def tu_witness(m: IntMatrix) -> Optional[tuple]:
    """First square submatrix with determinant outside {0, +-1}, or None.

    Returns ``((rows, cols), det)``.  Exhaustive; fine for desk-scale input.
    """
    for k in range(1, min(m.rows, m.cols) + 1):
        for rs in combinations(range(m.rows), k):
            for cs in combinations(range(m.cols), k):
                d = det(m.submatrix(rs, cs))
                if d not in (-1, 0, 1):
                    return (rs, cs), d
    return None


def is_totally_unimodular(m: IntMatrix) -> bool:
    if any(x not in (-1, 0, 1) for x in m.entries):
        return False
    return tu_witness(m) is None


def wu_witness(m: IntMatrix) -> Optional[tuple]:
    """Like :func:`tu_witness` but only over maximal square submatrices."""
    k = min(m.rows, m.cols)
    if m.rows <= m.cols:
        candidates = ((tuple(range(m.rows)), cs) for cs in combinations(range(m.cols), k))
    else:
        candidates = ((rs, tuple(range(m.cols))) for rs in combinations(range(m.rows), k))
    for rs, cs in candidates:
        d = det(m.submatrix(rs, cs))
        if d not in (-1, 0, 1):
            return (rs, cs), d
    return None


def is_weakly_unimodular(m: IntMatrix) -> bool:
    return wu_witness(m) is None


# ---------------------------------------------------------------------------
# solving


def solve(m: IntMatrix, rhs: Sequence) -> Optional[tuple]:
    """Solve ``m x = rhs`` exactly for ``m`` of full column rank.

    Returns a tuple of Fractions, or None when the system is inconsistent.
    """
    if len(rhs) != m.rows:
        raise InvalidArgumentError("right-hand side length mismatch")
    a = [[Fraction(x) for x in m.row(i)] + [Fraction(rhs[i])] for i in range(m.rows)]
    k = m.cols
    r = 0
    pivots = []
    for c in range(k):
        p = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if p is None:
            raise InvalidArgumentError("matrix does not have full column rank")
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    if any(a[i][k] != 0 for i in range(r, m.rows)):
        return None
    return tuple(a[i][k] for i in range(k))


def solve_integral(m: IntMatrix, rhs: Sequence[int]) -> Optional[tuple]:
    """As :func:`solve`, but returns ints; None if no integral solution."""
    x = solve(m, rhs)
    if x is None or any(v.denominator != 1 for v in x):
        return None
    return tuple(int(v) for v in x)


def inverse_unimodular(m: IntMatrix) -> IntMatrix:
    """Inverse of a matrix in GL_k(Z)."""
    if not m.is_square():
        raise InvalidArgumentError("inverse of a non-square matrix")
    k = m.rows
    d = det(m)
    if d == 0:
        raise NotABasisError("matrix is singular")
    if d not in (1, -1):
        raise UnimodularityError(
            f"determinant {d} is not a unit", witness=(tuple(range(k)), tuple(range(k))), determinant=d
        )
    cols = []
    for j in range(k):
        e = [int(i == j) for i in range(k)]
        cols.append(solve_integral(m, e))
    return IntMatrix.from_columns(cols)


# ---------------------------------------------------------------------------
# normal forms


def standard_form(m: IntMatrix, basis_cols: Sequence[int]) -> tuple:
    """Bring a full-rank weakly unimodular matrix to ``[I_r | D]``.

    Returns ``(n_inv, perm, std)`` with ``std = n_inv @ m[:, perm]``;
    ``perm`` lists the basis columns first, then the others in order.
    """
    basis_cols = [int(c) for c in basis_cols]
    r = m.rows
    if (len(basis_cols) != r or len(set(basis_cols)) != r
            or any(c < 0 or c >= m.cols for c in basis_cols)):
        raise NotABasisError(f"{basis_cols} does not index {r} distinct columns")
    block = m.select_columns(basis_cols)
    d = det(block)
    if d == 0:
        raise NotABasisError(f"columns {basis_cols} are linearly dependent")
    if d not in (1, -1):
        raise UnimodularityError(
            f"basis block has determinant {d}",
            witness=(tuple(range(r)), tuple(basis_cols)),
            determinant=d,
        )
    n_inv = inverse_unimodular(block)
    chosen = set(basis_cols)
    perm = tuple(basis_cols + [j for j in range(m.cols) if j not in chosen])
    std = n_inv @ m.select_columns(perm)
    return n_inv, perm, std


def reduce_full_rank(m: IntMatrix) -> tuple:
    """Pivot a totally unimodular matrix down to a full-rank ``[I_r | D]``.

    Returns ``(matrix, perm)`` where column ``j`` of ``matrix`` corresponds to
    column ``perm[j]`` of ``m``.  Full-row-rank input is returned unchanged.
    """
    r, basis = _echelon(m.to_rows(), m.cols)
    if r == 0:
        raise ZeroRankError("matrix has rank 0")
    if r == m.rows:
        return m, tuple(range(m.cols))
    a = m.to_rows()
    used = []
    for c in basis:
        p = next(i for i in range(m.rows) if i not in used and a[i][c] != 0)
        if a[p][c] not in (1, -1):
            raise UnimodularityError(
                f"pivot {a[p][c]} at ({p}, {c}); input is not totally unimodular",
                witness=((p,), (c,)), determinant=a[p][c],
            )
        if a[p][c] == -1:
            a[p] = [-x for x in a[p]]
        for i in range(m.rows):
            if i != p and a[i][c] != 0:
                f = a[i][c]
                a[i] = [_check(x - f * y) for x, y in zip(a[i], a[p])]
        used.append(p)
    chosen = set(basis)
    perm = tuple(basis + [j for j in range(m.cols) if j not in chosen])
    out = IntMatrix.from_rows([[a[i][j] for j in perm] for i in used])
    if any(x not in (-1, 0, 1) for x in out.entries):
        raise UnimodularityError("pivoting produced entries outside {0, +-1}")
    return out, perm


# ---------------------------------------------------------------------------
# text format


def _content_lines(text: str) -> list:
    out = []
    for line in text.splitlines():
        s = line.strip()
        if s and not s.startswith("#"):
            out.append(s)
    return out


def parse_matrix(text: str) -> IntMatrix:
    """Parse ``"r n"`` followed by ``r`` rows of ``n`` integers."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty matrix file")
    try:
        head = [int(t) for t in lines[0].split()]
        if len(head) != 2:
            raise ValueError
        r, n = head
        rows = [[int(t) for t in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise ParseError(f"malformed matrix text: {exc}") from None
    if len(rows) != r or any(len(row) != n for row in rows):
        raise ParseError(f"header says {r}x{n} but body does not match")
    return IntMatrix.from_rows(rows)


def format_matrix(m: IntMatrix) -> str:
    width = max(len(str(x)) for x in m.entries)
    body = "\n".join(" ".join(str(x).rjust(width) for x in m.row(i)) for i in range(m.rows))
    return f"{m.rows} {m.cols}\n{body}\n"


def read_matrix(path) -> IntMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())
