# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
Immutable integer matrices with exact arithmetic.

Matrices act on column vectors. An automorphism of Z^n is recorded by the
images of the standard basis vectors as columns.
"""

import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass


class LinalgError(ValueError):
    """Base class for errors raised by the exact linear algebra layer."""


class DimensionError(LinalgError):
    """Raised when matrix shapes do not fit the requested operation."""


class NotSquareError(DimensionError):
    """Raised when a square-only operation receives a rectangular matrix."""


class NotUnimodularError(LinalgError):
    """Raised when an operation requires |det| = 1."""


@dataclass(frozen=True, slots=True)
class IntMatrix:
    """A rectangular matrix of arbitrary-precision integers stored row-major."""

    nrows: int
    ncols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.nrows < 0 or self.ncols < 0:
            raise DimensionError(f"Matrix dimensions must be non-negative, got {self.nrows}x{self.ncols}")
        if len(self.entries) != self.nrows * self.ncols:
            raise DimensionError(
                f"Expected {self.nrows * self.ncols} entries for a {self.nrows}x{self.ncols} matrix, "
                f"got {len(self.entries)}"
            )
        for value in self.entries:
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"Matrix entries must be integers, got {value!r}")

    # Construction

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> "IntMatrix":
        """Build a matrix from a list of rows. `ncols` is only needed when there are no rows."""
        width = len(rows[0]) if rows else (ncols or 0)
        if ncols is not None and rows and width != ncols:
            raise DimensionError(f"Rows have {width} columns, expected {ncols}")
        for row in rows:
            if len(row) != width:
                raise DimensionError("All rows must have the same length")
        return cls(len(rows), width, tuple(x for row in rows for x in row))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int | None = None) -> "IntMatrix":
        """Build a matrix whose columns are the given vectors."""
        height = len(columns[0]) if columns else (nrows or 0)
        if nrows is not None and columns and height != nrows:
            raise DimensionError(f"Columns have {height} rows, expected {nrows}")
        return cls.from_rows([list(col) for col in columns], ncols=height).transpose()

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(nrows, ncols, (0,) * (nrows * ncols))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def block_diag(cls, *blocks: "IntMatrix") -> "IntMatrix":
        nrows = sum(b.nrows for b in blocks)
        ncols = sum(b.ncols for b in blocks)
        rows = [[0] * ncols for _ in range(nrows)]
        r0 = c0 = 0
        for block in blocks:
            for i in range(block.nrows):
                for j in range(block.ncols):
                    rows[r0 + i][c0 + j] = block[i, j]
            r0 += block.nrows
            c0 += block.ncols
        return cls.from_rows(rows, ncols=ncols)

    @classmethod
    def hstack(cls, *blocks: "IntMatrix") -> "IntMatrix":
        if not blocks:
            raise DimensionError("hstack needs at least one block")
        height = blocks[0].nrows
        if any(b.nrows != height for b in blocks):
            raise DimensionError("hstack blocks must have the same number of rows")
        rows = [[x for b in blocks for x in b.row(i)] for i in range(height)]
        return cls.from_rows(rows, ncols=sum(b.ncols for b in blocks))

    @classmethod
    def vstack(cls, *blocks: "IntMatrix") -> "IntMatrix":
        if not blocks:
            raise DimensionError("vstack needs at least one block")
        width = blocks[0].ncols
        if any(b.ncols != width for b in blocks):
            raise DimensionError("vstack blocks must have the same number of columns")
        return cls(sum(b.nrows for b in blocks), width, tuple(x for b in blocks for x in b.entries))

    # Access

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"Index ({i}, {j}) out of range for {self.nrows}x{self.ncols} matrix")
        return self.entries[i * self.ncols + j]

    def row(self, i: int) -> list[int]:
        return list(self.entries[i * self.ncols : (i + 1) * self.ncols])

    def column(self, j: int) -> list[int]:
        return [self.entries[i * self.ncols + j] for i in range(self.nrows)]

    def rows(self) -> list[list[int]]:
        return [self.row(i) for i in range(self.nrows)]

    def columns(self) -> list[list[int]]:
        return [self.column(j) for j in range(self.ncols)]

    def __iter__(self) -> Iterator[list[int]]:
        return iter(self.rows())

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_identity(self) -> bool:
        return self.is_square and self == IntMatrix.identity(self.nrows)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def max_abs(self) -> int:
        return max((abs(x) for x in self.entries), default=0)

    def require_square(self, operation: str) -> None:
        if not self.is_square:
            raise NotSquareError(f"{operation} requires a square matrix, got {self.nrows}x{self.ncols}")

    # Arithmetic

    def transpose(self) -> "IntMatrix":
        entries = tuple(self.entries[i * self.ncols + j] for j in range(self.ncols) for i in range(self.nrows))
        return IntMatrix(self.ncols, self.nrows, entries)

    @property
    def T(self) -> "IntMatrix":  # noqa: N802
        return self.transpose()

    def _same_shape(self, other: "IntMatrix", op: str) -> None:
        if self.shape != other.shape:
            raise DimensionError(f"Cannot {op} {self.nrows}x{self.ncols} and {other.nrows}x{other.ncols} matrices")

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other, "add")
        return IntMatrix(self.nrows, self.ncols, tuple(a + b for a, b in zip(self.entries, other.entries, strict=True)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other, "subtract")
        return IntMatrix(self.nrows, self.ncols, tuple(a - b for a, b in zip(self.entries, other.entries, strict=True)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.nrows, self.ncols, tuple(-a for a in self.entries))

    def scale(self, factor: int) -> "IntMatrix":
        return IntMatrix(self.nrows, self.ncols, tuple(factor * a for a in self.entries))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise DimensionError(
                f"Cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols} matrices"
            )
        cols = other.columns()
        rows = self.rows()
        return IntMatrix(
            self.nrows,
            other.ncols,
            tuple(sum(a * b for a, b in zip(r, c, strict=True)) for r in rows for c in cols),
        )

    def apply(self, vector: Sequence[int]) -> list[int]:
        """Multiply this matrix by a column vector."""
        if len(vector) != self.ncols:
            raise DimensionError(f"Vector of length {len(vector)} does not fit a {self.nrows}x{self.ncols} matrix")
        return [sum(a * b for a, b in zip(self.row(i), vector, strict=True)) for i in range(self.nrows)]

    def power(self, k: int) -> "IntMatrix":
        """Return self**k for k >= 0 by repeated squaring."""
        self.require_square("power")
        if k < 0:
            raise LinalgError(f"Negative powers are not supported, got {k}")
        result = IntMatrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __pow__(self, k: int) -> "IntMatrix":
        return self.power(k)

    def det(self) -> int:
        """Determinant via fraction-free Bareiss elimination."""
        self.require_square("det")
        n = self.nrows
        if n == 0:
            return 1
        a = self.rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def rank(self) -> int:
        """Rank over the rationals."""
        a = self.rows()
        r = 0
        for c in range(self.ncols):
            pivot = next((i for i in range(r, self.nrows) if a[i][c] != 0), None)
            if pivot is None:
                continue
            a[r], a[pivot] = a[pivot], a[r]
            for i in range(r + 1, self.nrows):
                if a[i][c]:
                    f, p = a[i][c], a[r][c]
                    reduced = [p * x - f * y for x, y in zip(a[i], a[r], strict=True)]
                    g = math.gcd(*reduced)
                    a[i] = [x // g for x in reduced] if g > 1 else reduced
            r += 1
            if r == self.nrows:
                break
        return r

    def trace(self) -> int:
        self.require_square("trace")
        return sum(self.entries[i * self.ncols + i] for i in range(self.nrows))

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "IntMatrix":
        row_idx = list(rows)
        col_idx = list(cols)
        return IntMatrix(len(row_idx), len(col_idx), tuple(self[i, j] for i in row_idx for j in col_idx))

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.rows()) + "]"
