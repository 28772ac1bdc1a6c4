"""Linear algebra over Z2: int-bitset matrices for homology maps, row-index sets for chain boundaries."""
from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Dict, Iterable, List, Optional, Sequence, Set, Tuple


@dataclass(frozen=True)
class BitMatrix:
    """A ``rows`` x ``cols`` matrix over Z2; column j is an int whose bit i is entry (i, j)."""

    rows: int
    cols: int
    columns: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"invalid-shape:{self.rows}x{self.cols}")
        if len(self.columns) != self.cols:
            raise ValueError(f"column-count-mismatch:{len(self.columns)}!={self.cols}")
        limit = 1 << self.rows
        if any(column < 0 or column >= limit for column in self.columns):
            raise ValueError("column-out-of-bounds")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows=rows, cols=cols, columns=(0,) * cols)

    @classmethod
    def identity(cls, size: int) -> "BitMatrix":
        return cls(rows=size, cols=size, columns=tuple(1 << i for i in range(size)))

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]], cols: Optional[int] = None) -> "BitMatrix":
        rows = len(dense)
        width = len(dense[0]) if rows else (cols or 0)
        columns = []
        for j in range(width):
            bits = 0
            for i in range(rows):
                if dense[i][j] % 2:
                    bits |= 1 << i
            columns.append(bits)
        return cls(rows=rows, cols=width, columns=tuple(columns))

    def entry(self, i: int, j: int) -> int:
        return (self.columns[j] >> i) & 1

    def column(self, j: int) -> int:
        return self.columns[j]

    def to_dense(self) -> List[List[int]]:
        return [[(self.columns[j] >> i) & 1 for j in range(self.cols)] for i in range(self.rows)]

    def apply(self, vector: int) -> int:
        """Image of a bitset vector: XOR of the columns selected by its bits."""

        result = 0
        j = 0
        while vector:
            if vector & 1:
                result ^= self.columns[j]
            vector >>= 1
            j += 1
        return result

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape-mismatch:{self.rows}x{self.cols}@{other.rows}x{other.cols}")
        return BitMatrix(rows=self.rows, cols=other.cols, columns=tuple(self.apply(col) for col in other.columns))

    def hstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.rows != other.rows:
            raise ValueError(f"row-count-mismatch:{self.rows}!={other.rows}")
        return BitMatrix(rows=self.rows, cols=self.cols + other.cols, columns=self.columns + other.columns)

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.cols:
            raise ValueError(f"column-count-mismatch:{self.cols}!={other.cols}")
        shift = self.rows
        columns = tuple(top | (bottom << shift) for top, bottom in zip(self.columns, other.columns))
        return BitMatrix(rows=self.rows + other.rows, cols=self.cols, columns=columns)


def lowest_one(column: int) -> int:
    """Index of the highest set bit (the "low" of a boundary column), -1 when zero."""

    return column.bit_length() - 1


def reduce_columns(columns: Sequence[int]) -> Tuple[List[int], Dict[int, int]]:
    """Left-to-right column reduction.

    Returns the reduced columns and the map ``low -> column index`` of the
    non-zero ones; after reduction no two non-zero columns share a low.
    """

    reduced = list(columns)
    pivots: Dict[int, int] = {}
    for j, column in enumerate(reduced):
        low = lowest_one(column)
        while low >= 0 and low in pivots:
            column ^= reduced[pivots[low]]
            low = lowest_one(column)
        reduced[j] = column
        if low >= 0:
            pivots[low] = j
    return reduced, pivots


def sparse_low(column: AbstractSet[int]) -> int:
    """Largest row index of a column stored as a set of row indices, -1 when empty."""

    return max(column) if column else -1


def reduce_sparse(columns: Iterable[Iterable[int]]) -> Tuple[List[Set[int]], Dict[int, int]]:
    """:func:`reduce_columns` for columns given as row-index sets.

    Only the non-zero entries are stored, so memory follows the number of
    ones rather than the row count.
    """

    reduced: List[Set[int]] = []
    pivots: Dict[int, int] = {}
    for j, rows in enumerate(columns):
        column = set(rows)
        low = sparse_low(column)
        while low >= 0 and low in pivots:
            column ^= reduced[pivots[low]]
            low = sparse_low(column)
        reduced.append(column)
        if low >= 0:
            pivots[low] = j
    return reduced, pivots


def reduce_sparse_tracked(columns: Iterable[Iterable[int]]) -> Tuple[List[Set[int]], Dict[int, int], List[Set[int]]]:
    """Sparse reduction that also records, per column, the original columns summed into it.

    For a zero reduced column ``transforms[j]`` is a kernel vector.
    """

    reduced: List[Set[int]] = []
    transforms: List[Set[int]] = []
    pivots: Dict[int, int] = {}
    for j, rows in enumerate(columns):
        column, transform = set(rows), {j}
        low = sparse_low(column)
        while low >= 0 and low in pivots:
            other = pivots[low]
            column ^= reduced[other]
            transform ^= transforms[other]
            low = sparse_low(column)
        reduced.append(column)
        transforms.append(transform)
        if low >= 0:
            pivots[low] = j
    return reduced, pivots, transforms


def rank_z2(matrix: BitMatrix) -> int:
    """Rank over Z2 by Gaussian elimination on the columns."""

    _, pivots = reduce_columns(matrix.columns)
    return len(pivots)


__all__ = [
    "BitMatrix",
    "lowest_one",
    "rank_z2",
    "reduce_columns",
    "reduce_sparse",
    "reduce_sparse_tracked",
    "sparse_low",
]
