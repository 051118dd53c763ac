"""Exact integer matrices.

Entries are Python ints, so nothing ever overflows.  Matrices are immutable
values; algorithms that need to mutate work on ``to_lists()`` copies.
Shapes with zero rows or zero columns are legal and stand for maps to or
from the zero module.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class IntegerMatrix:
    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Iterable[Sequence[int]] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError(f"negative shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        if data is None:
            self._data = tuple((0,) * cols for _ in range(rows))
        else:
            self._data = tuple(tuple(int(x) for x in row) for row in data)
            if len(self._data) != rows or any(len(r) != cols for r in self._data):
                raise ValueError(f"entries do not fit a {rows}x{cols} shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntegerMatrix:
        """Build from a list of rows; ``cols`` is needed only when there are no rows."""
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, rows)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntegerMatrix:
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls(n, n, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_sparse(cls, rows: int, cols: int, entries: dict[tuple[int, int], int]) -> IntegerMatrix:
        data = [[0] * cols for _ in range(rows)]
        for (i, j), v in entries.items():
            data[i][j] = v
        return cls(rows, cols, data)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._data)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    def entries(self) -> list[int]:
        """All entries, row-major."""
        return [x for r in self._data for x in r]

    def nonzero(self) -> dict[tuple[int, int], int]:
        return {(i, j): x for i, r in enumerate(self._data) for j, x in enumerate(r) if x}

    def transpose(self) -> IntegerMatrix:
        data = [[r[j] for r in self._data] for j in range(self.cols)]
        return IntegerMatrix(self.cols, self.rows, data)

    @property
    def T(self) -> IntegerMatrix:
        return self.transpose()

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._data)

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        n = other.cols
        b = other._data
        out = []
        # boundary matrices are very sparse, so skip zero entries of the left factor
        for r in self._data:
            acc = [0] * n
            for k, a in enumerate(r):
                if a:
                    bk = b[k]
                    for j in range(n):
                        if bk[j]:
                            acc[j] += a * bk[j]
            out.append(acc)
        return IntegerMatrix(self.rows, n, out)

    def __neg__(self) -> IntegerMatrix:
        return IntegerMatrix(self.rows, self.cols, [[-x for x in r] for r in self._data])

    def __add__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntegerMatrix(self.rows, self.cols,
                             [[x + y for x, y in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __sub__(self, other: IntegerMatrix) -> IntegerMatrix:
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.rows}, {self.cols}, {self.to_lists()!r})"

    def to_text(self) -> str:
        """Render as a bar-delimited grid with left-justified, per-column padding.

        >>> print(IntegerMatrix.from_rows([[-1], [1], [0]]).to_text())
        | -1 |
        | 1  |
        | 0  |
        """
        if self.rows == 0 or self.cols == 0:
            return f"0 ({self.rows}x{self.cols})"
        cells = [[str(x) for x in r] for r in self._data]
        widths = [max(len(cells[i][j]) for i in range(self.rows)) for j in range(self.cols)]
        lines = []
        for r in cells:
            body = " ".join(c.ljust(w) for c, w in zip(r, widths))
            lines.append(f"| {body} |")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": self.entries()}

    @classmethod
    def from_json(cls, obj: dict) -> IntegerMatrix:
        rows, cols, flat = obj["rows"], obj["cols"], obj["entries"]
        if len(flat) != rows * cols:
            raise ValueError("entry count does not match shape")
        return cls(rows, cols, [flat[i * cols:(i + 1) * cols] for i in range(rows)])


def determinant(A: IntegerMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if A.rows != A.cols:
        raise ValueError("determinant of a non-square matrix")
    n = A.rows
    if n == 0:
        return 1
    m = A.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
