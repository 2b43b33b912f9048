"""Small exact matrices over an arbitrary ring.

Entries may be `Fraction`, `CommPoly`, `NcPoly`, `TensorPoly` or anything
else supporting +, * and scalar action; nothing here rounds or approximates.
Used for substitution targets (matrix rings) and for witness bookkeeping.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class SquareMatrix:
    """An n-by-n matrix over a commutative or noncommutative ring."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence]):
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ValueError("matrix must be square and nonempty")
        self.n = n
        self.rows = tuple(tuple(row) for row in rows)

    @classmethod
    def identity(cls, n: int, one, zero) -> "SquareMatrix":
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int, zero) -> "SquareMatrix":
        return cls([[zero] * n for _ in range(n)])

    @classmethod
    def unit(cls, n: int, i: int, j: int, one, zero) -> "SquareMatrix":
        """Matrix unit e_{ij} (1-based indices)."""
        return cls([[one if (r, c) == (i - 1, j - 1) else zero
                     for c in range(n)] for r in range(n)])

    def __add__(self, other: "SquareMatrix") -> "SquareMatrix":
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("size mismatch")
        return SquareMatrix([[a + b for a, b in zip(r1, r2)]
                             for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "SquareMatrix") -> "SquareMatrix":
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self + (-1) * other

    def __mul__(self, other) -> "SquareMatrix":
        if isinstance(other, SquareMatrix):
            if self.n != other.n:
                raise ValueError("size mismatch")
            n = self.n
            out = []
            for i in range(n):
                row = []
                for j in range(n):
                    acc = self.rows[i][0] * other.rows[0][j]
                    for k in range(1, n):
                        acc = acc + self.rows[i][k] * other.rows[k][j]
                    row.append(acc)
                out.append(row)
            return SquareMatrix(out)
        return self.__rmul__(other)

    def __rmul__(self, scalar) -> "SquareMatrix":
        return SquareMatrix([[scalar * entry for entry in row] for row in self.rows])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.n == other.n and all(
            a == b for r1, r2 in zip(self.rows, other.rows) for a, b in zip(r1, r2))

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self) -> bool:
        return all(not entry for row in self.rows for entry in row)

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(e) for e in row) for row in self.rows) + "]"

    def __repr__(self) -> str:
        return f"SquareMatrix({self})"


def rational_matrix(rows: Sequence[Sequence]) -> SquareMatrix:
    """Build a matrix of exact rationals from ints/strings/fractions."""
    return SquareMatrix([[Fraction(entry) for entry in row] for row in rows])


def det_rational(matrix: SquareMatrix) -> Fraction:
    """Determinant of a rational matrix by fraction-free elimination."""
    n = matrix.n
    rows = [[Fraction(entry) for entry in row] for row in matrix.rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            factor = rows[r][col] * inv
            if factor:
                for c in range(col, n):
                    rows[r][c] -= factor * rows[col][c]
    return det


def invert_rational(matrix: SquareMatrix) -> SquareMatrix | None:
    """Exact inverse of a rational matrix, or None if singular."""
    n = matrix.n
    rows = [[Fraction(e) for e in row] + [Fraction(1 if i == j else 0) for j in range(n)]
            for i, row in enumerate(matrix.rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return None
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [entry * inv for entry in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return SquareMatrix([row[n:] for row in rows])
