"""Exact rational linear algebra on small dense matrices.

Scalars are :class:`fractions.Fraction`, so every operation is exact and
arbitrary precision.  Kernel bases are returned in reduced row echelon form,
which makes all derived solution spaces canonical and directly comparable.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Rational = Fraction
Vector = tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


class LinalgError(ValueError):
    """Base error for exact linear algebra."""


class DimensionMismatch(LinalgError):
    pass


class SingularMatrix(LinalgError):
    pass


class NonSymmetric(LinalgError):
    pass


def rat(value) -> Fraction:
    """Coerce an int, a string like ``-3/4`` or a Fraction to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return rat_from_str(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rat_from_str(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` with q > 0 and the sign on the numerator."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"malformed rational {text!r}")
    return Fraction(text)


def rat_to_str(value: Fraction) -> str:
    """Render a Fraction as ``p`` or ``p/q`` with no whitespace."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def vec(values: Iterable) -> Vector:
    return tuple(rat(x) for x in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def basis_vector(n: int, i: int) -> Vector:
    """Standard basis vector, 1-based index."""
    if not 1 <= i <= n:
        raise IndexError(f"basis index {i} out of range 1..{n}")
    return tuple(Fraction(1 if j == i - 1 else 0) for j in range(n))


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c, u: Vector) -> Vector:
    c = rat(c)
    return tuple(c * a for a in u)


def vec_dot(u: Vector, v: Vector) -> Fraction:
    return sum((a * b for a, b in zip(u, v, strict=True)), Fraction(0))


def is_zero_vector(u: Vector) -> bool:
    return all(a == 0 for a in u)


class Matrix:
    """Immutable dense matrix of exact rationals, row-major."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries: Iterable[Iterable]):
        data = [tuple(rat(x) for x in row) for row in entries]
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise DimensionMismatch("ragged rows")
        else:
            width = 0
        self.rows = len(data)
        self.cols = width
        self._e = tuple(data)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix([[0] * cols for _ in range(rows)])

    @staticmethod
    def diagonal(values: Iterable) -> "Matrix":
        vals = [rat(v) for v in values]
        n = len(vals)
        return Matrix([[vals[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def from_columns(columns: Sequence[Sequence]) -> "Matrix":
        cols = [tuple(rat(x) for x in c) for c in columns]
        if not cols:
            return Matrix([])
        n = len(cols[0])
        if any(len(c) != n for c in cols):
            raise DimensionMismatch("ragged columns")
        return Matrix([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    @staticmethod
    def vstack(blocks: Sequence["Matrix"]) -> "Matrix":
        blocks = [b for b in blocks if b.rows > 0]
        if not blocks:
            return Matrix([])
        width = blocks[0].cols
        if any(b.cols != width for b in blocks):
            raise DimensionMismatch("inconsistent widths in vstack")
        return Matrix([row for b in blocks for row in b._e])

    def __getitem__(self, key) -> Fraction:
        i, j = key
        return self._e[i][j]

    def row(self, i: int) -> Vector:
        return self._e[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._e)

    def row_list(self) -> list[Vector]:
        return list(self._e)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._e == other._e
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self._e))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(rat_to_str(x) for x in row) for row in self._e)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def __add__(self, other: "Matrix") -> "Matrix":
        self._require_same_shape(other)
        return Matrix(
            [vec_add(r, s) for r, s in zip(self._e, other._e)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._require_same_shape(other)
        return Matrix(
            [vec_sub(r, s) for r, s in zip(self._e, other._e)]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in row] for row in self._e])

    def scale(self, c) -> "Matrix":
        c = rat(c)
        return Matrix([[c * x for x in row] for row in self._e])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        cols = [other.column(j) for j in range(other.cols)]
        return Matrix(
            [[vec_dot(row, col) for col in cols] for row in self._e]
        )

    def apply(self, v: Sequence) -> Vector:
        """Matrix-vector product."""
        u = vec(v)
        if len(u) != self.cols:
            raise DimensionMismatch(f"vector length {len(u)} != cols {self.cols}")
        return tuple(vec_dot(row, u) for row in self._e)

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.cols)])

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self._e[i][j] == self._e[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._e for x in row)

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise DimensionMismatch("trace of a non-square matrix")
        return sum((self._e[i][i] for i in range(self.rows)), Fraction(0))

    def flatten(self) -> Vector:
        return tuple(x for row in self._e for x in row)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix([[self._e[i][j] for j in cols] for i in rows])

    def _require_same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("shape mismatch")

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and the pivot column indices."""
        m = [list(row) for row in self._e]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pivot_row = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            inv = 1 / m[r][c]
            m[r] = [inv * x for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix(m), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of a non-square matrix")
        m = [list(row) for row in self._e]
        n = self.rows
        det = Fraction(1)
        for c in range(n):
            pivot_row = next((i for i in range(c, n) if m[i][c] != 0), None)
            if pivot_row is None:
                return Fraction(0)
            if pivot_row != c:
                m[c], m[pivot_row] = m[pivot_row], m[c]
                det = -det
            det *= m[c][c]
            inv = 1 / m[c][c]
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] * inv
                    m[i] = [x - f * y for x, y in zip(m[i], m[c])]
        return det


def kernel(m: Matrix) -> list[Vector]:
    """Canonical basis of the null space, in reduced row echelon form.

    Returns ``cols - rank`` vectors; empty list for injective maps.
    """
    red, pivots = m.rref()
    free = [c for c in range(m.cols) if c not in pivots]
    raw: list[Vector] = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -red[r, f]
        raw.append(tuple(v))
    if not raw:
        return []
    canon, _ = Matrix(raw).rref()
    return [canon.row(i) for i in range(len(raw))]


def solve(m: Matrix, b: Sequence) -> Optional[Vector]:
    """Particular solution of ``m x = b`` or None when inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    rhs = vec(b)
    if len(rhs) != m.rows:
        raise DimensionMismatch(f"rhs length {len(rhs)} != rows {m.rows}")
    aug = Matrix([list(row) + [rhs[i]] for i, row in enumerate(m.row_list())])
    red, pivots = aug.rref()
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for r, p in enumerate(pivots):
        x[p] = red[r, m.cols]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    """Exact inverse; raises :class:`SingularMatrix` when not invertible."""
    if m.rows != m.cols:
        raise DimensionMismatch("inverse of a non-square matrix")
    n = m.rows
    ident = Matrix.identity(n)
    aug = Matrix(
        [list(m.row(i)) + list(ident.row(i)) for i in range(n)]
    )
    red, pivots = aug.rref()
    if tuple(pivots[:n]) != tuple(range(n)):
        raise SingularMatrix("matrix is singular")
    return Matrix([red.row(i)[n:] for i in range(n)])


def is_positive_definite(m: Matrix) -> bool:
    """Exact Sylvester criterion; requires a symmetric input."""
    if m.rows != m.cols:
        raise DimensionMismatch("positive definiteness of a non-square matrix")
    if not m.is_symmetric():
        raise NonSymmetric("matrix is not symmetric")
    idx: list[int] = []
    for k in range(m.rows):
        idx.append(k)
        if m.submatrix(idx, idx).det() <= 0:
            return False
    return True
