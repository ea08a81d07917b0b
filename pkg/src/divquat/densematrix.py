"""Small dense matrices over arbitrary scalars.

Deliberately naive: products are plain sums of entry products, so the
reference pipelines built on top stay independent of the straight-line
kernel.  Sign and permutation matrices hold plain ``int`` entries; their
integer zeros are the only entries skipped in a product.
"""
from __future__ import annotations

from typing import Any, Callable, Sequence

from .errors import DimensionMismatch, ParseError
from .scalars import format_scalar, pow2_scale, rational_parse

__all__ = [
    "DenseMatrix",
    "matmul",
    "matvec",
    "kron",
    "direct_sum",
    "diag",
    "identity",
    "hadamard2",
    "dump",
    "parse_dump",
]


class DenseMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[Any]) -> None:
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> DenseMatrix:
        n = len(rows)
        m = len(rows[0]) if n else 0
        if any(len(row) != m for row in rows):
            raise DimensionMismatch("ragged rows")
        return cls(n, m, [v for row in rows for v in row])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def map(self, fn: Callable[[Any], Any]) -> DenseMatrix:
        return DenseMatrix(self.rows, self.cols, [fn(v) for v in self.entries])

    def _zip(self, other: DenseMatrix, fn) -> DenseMatrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        return DenseMatrix(self.rows, self.cols,
                           [fn(a, b) for a, b in zip(self.entries, other.entries)])

    def __add__(self, other: DenseMatrix) -> DenseMatrix:
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other: DenseMatrix) -> DenseMatrix:
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self) -> DenseMatrix:
        return self.map(lambda v: -v)

    def __matmul__(self, other):
        if isinstance(other, DenseMatrix):
            return matmul(self, other)
        return matvec(self, other)

    def pow2_scale(self, k: int) -> DenseMatrix:
        return self.map(lambda v: pow2_scale(v, k))

    def nonzero_count(self) -> int:
        return sum(1 for v in self.entries if v != 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for a, b in zip(self.entries, other.entries))

    __hash__ = None

    def __repr__(self) -> str:
        return f"DenseMatrix({self.rows}, {self.cols}, {self.to_rows()!r})"


def _dot(row: Sequence[Any], col: Sequence[Any]):
    # Integer-zero entries (structural zeros of sign/permutation matrices)
    # contribute nothing on finite scalars and are skipped.
    acc = None
    for a, b in zip(row, col):
        if a.__class__ is int and a == 0:
            continue
        term = a * b
        acc = term if acc is None else acc + term
    return row[0] * col[0] if acc is None else acc


def matmul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    bcols = [b.entries[j::b.cols] for j in range(b.cols)]
    return DenseMatrix(a.rows, b.cols,
                       [_dot(a.row(i), bcols[j])
                        for i in range(a.rows) for j in range(b.cols)])


def matvec(a: DenseMatrix, v: Sequence[Any]) -> tuple:
    """Matrix times column vector; the vector is any sequence of scalars."""
    v = tuple(v)
    if a.cols != len(v):
        raise DimensionMismatch(f"cannot apply {a.shape} matrix to length-{len(v)} vector")
    return tuple(_dot(a.row(i), v) for i in range(a.rows))


def kron(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    out = []
    for i in range(rows):
        ia, ib = divmod(i, b.rows)
        for j in range(cols):
            ja, jb = divmod(j, b.cols)
            out.append(a[ia, ja] * b[ib, jb])
    return DenseMatrix(rows, cols, out)


def direct_sum(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    """Block-diagonal ``a ⊕ b``; off-diagonal blocks are integer zeros."""
    rows = a.rows + b.rows
    cols = a.cols + b.cols
    out = []
    for i in range(rows):
        for j in range(cols):
            if i < a.rows and j < a.cols:
                out.append(a[i, j])
            elif i >= a.rows and j >= a.cols:
                out.append(b[i - a.rows, j - a.cols])
            else:
                out.append(0)
    return DenseMatrix(rows, cols, out)


def diag(values: Sequence[Any]) -> DenseMatrix:
    values = tuple(values)
    n = len(values)
    return DenseMatrix(n, n, [values[i] if i == j else 0
                              for i in range(n) for j in range(n)])


def identity(n: int) -> DenseMatrix:
    return diag([1] * n)


def hadamard2() -> DenseMatrix:
    return DenseMatrix(2, 2, [1, 1, 1, -1])


def dump(m: DenseMatrix) -> str:
    """Golden-dump text: one row per line, entries separated by spaces."""
    return "\n".join(" ".join(format_scalar(v) for v in m.row(i))
                     for i in range(m.rows))


def parse_dump(text: str) -> DenseMatrix:
    """Inverse of :func:`dump`; entries come back as exact fractions."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append([rational_parse(tok) for tok in line.split()])
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    if not rows:
        raise ParseError("empty matrix dump")
    return DenseMatrix.from_rows(rows)
