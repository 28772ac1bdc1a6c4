"""Cubical realization of pixel sets and window-based local systems.

Cells use doubled coordinates: pixel ``(r, c)`` is the square cell
``(2r + 1, 2c + 1)``; a coordinate is odd exactly in the directions a cell
extends, so edges have one odd coordinate and vertices none.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import AbstractSet, Dict, FrozenSet, Iterable, List, Set, Tuple

from ..imaging.images import BinaryImage, Pixel

Cell = Tuple[int, int]


def cell_dimension(cell: Cell) -> int:
    return (cell[0] & 1) + (cell[1] & 1)


def canonical_key(cell: Cell) -> Tuple[int, int, int]:
    return cell_dimension(cell), cell[0], cell[1]


def cell_boundary(cell: Cell) -> Tuple[Cell, ...]:
    """The 2d faces of a d-cell, found by stepping each odd coordinate by one."""

    row, col = cell
    faces: List[Cell] = []
    if row & 1:
        faces.extend(((row - 1, col), (row + 1, col)))
    if col & 1:
        faces.extend(((row, col - 1), (row, col + 1)))
    return tuple(faces)


def closed_square(pixel: Pixel) -> Tuple[Cell, ...]:
    """The nine cells of the closed unit square of ``pixel``."""

    row, col = 2 * pixel[0] + 1, 2 * pixel[1] + 1
    return tuple((row + dr, col + dc) for dr in (-1, 0, 1) for dc in (-1, 0, 1))


def incident_pixels(cell: Cell) -> Tuple[Pixel, ...]:
    """Pixels whose closed square contains ``cell`` (one, two or four of them)."""

    row, col = cell
    rows = (row,) if row & 1 else (row - 1, row + 1)
    cols = (col,) if col & 1 else (col - 1, col + 1)
    return tuple(((r - 1) // 2, (c - 1) // 2) for r in rows for c in cols)


@dataclass(frozen=True)
class CubicalComplex:
    """A face-closed set of cells kept in canonical (dimension, row, col) order."""

    cells: Tuple[Cell, ...]
    _by_dim: Tuple[Tuple[Cell, ...], ...] = field(init=False, repr=False, compare=False)
    _index: Dict[Cell, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        ordered = tuple(sorted(set(self.cells), key=canonical_key))
        object.__setattr__(self, "cells", ordered)
        by_dim: List[List[Cell]] = [[], [], []]
        for cell in ordered:
            by_dim[cell_dimension(cell)].append(cell)
        index: Dict[Cell, int] = {}
        for group in by_dim:
            for position, cell in enumerate(group):
                index[cell] = position
        object.__setattr__(self, "_by_dim", tuple(tuple(group) for group in by_dim))
        object.__setattr__(self, "_index", index)
        for cell in ordered:
            for face in cell_boundary(cell):
                if face not in index:
                    raise ValueError(f"not-face-closed:{cell}")

    def __contains__(self, cell: object) -> bool:
        return cell in self._index

    def __len__(self) -> int:
        return len(self.cells)

    def cells_of_dim(self, q: int) -> Tuple[Cell, ...]:
        if 0 <= q < len(self._by_dim):
            return self._by_dim[q]
        return ()

    def count(self, q: int) -> int:
        return len(self.cells_of_dim(q))

    def issubcomplex(self, other: "CubicalComplex") -> bool:
        return all(cell in other for cell in self.cells)

    def boundary_columns(self, q: int) -> List[FrozenSet[int]]:
        """Columns of the boundary map from q-chains to (q-1)-chains, as sets of face positions."""

        if q <= 0:
            return [frozenset()] * self.count(q)
        return [frozenset(self._index[face] for face in cell_boundary(cell)) for cell in self.cells_of_dim(q)]

    def boundary_of(self, chain: Iterable[int], q: int) -> FrozenSet[int]:
        """Boundary of a q-chain given by cell positions, as (q-1)-cell positions."""

        if q <= 0:
            return frozenset()
        group = self.cells_of_dim(q)
        result: Set[int] = set()
        for position in chain:
            result.symmetric_difference_update(self._index[face] for face in cell_boundary(group[position]))
        return frozenset(result)

    def chain_indices(self, chain: Iterable[Cell], q: int) -> FrozenSet[int]:
        """Positions of the cells of a q-chain; a cell listed twice cancels."""

        positions: Set[int] = set()
        for cell in chain:
            if cell_dimension(cell) != q or cell not in self._index:
                raise ValueError(f"cell-not-in-complex:{cell}")
            positions.symmetric_difference_update((self._index[cell],))
        return frozenset(positions)

    def chain_cells(self, positions: Iterable[int], q: int) -> FrozenSet[Cell]:
        group = self.cells_of_dim(q)
        return frozenset(group[i] for i in positions)


def realize(pixels: Iterable[Pixel]) -> CubicalComplex:
    """Cubical complex of the union of the closed squares of ``pixels``."""

    cells = set()
    for pixel in pixels:
        cells.update(closed_square(pixel))
    return CubicalComplex(cells=tuple(cells))


@dataclass(frozen=True)
class WindowRect:
    """Rectangle R of pixels: rows top..top+size_rows-1, cols left..left+size_cols-1."""

    top: int
    left: int
    size_rows: int
    size_cols: int

    def __post_init__(self) -> None:
        if self.size_rows < 3 or self.size_cols < 3:
            raise ValueError(f"window-too-small:{self.size_rows}x{self.size_cols}")

    @classmethod
    def square(cls, top: int, left: int, size: int) -> "WindowRect":
        return cls(top=top, left=left, size_rows=size, size_cols=size)

    @property
    def bottom(self) -> int:
        return self.top + self.size_rows - 1

    @property
    def right(self) -> int:
        return self.left + self.size_cols - 1

    def contains(self, pixel: Pixel) -> bool:
        return self.top <= pixel[0] <= self.bottom and self.left <= pixel[1] <= self.right

    def in_interior(self, pixel: Pixel) -> bool:
        return self.top < pixel[0] < self.bottom and self.left < pixel[1] < self.right

    def pixels(self) -> FrozenSet[Pixel]:
        return frozenset(
            (r, c) for r in range(self.top, self.bottom + 1) for c in range(self.left, self.right + 1)
        )

    def interior(self) -> FrozenSet[Pixel]:
        return frozenset(
            (r, c) for r in range(self.top + 1, self.bottom) for c in range(self.left + 1, self.right)
        )

    def fits(self, height: int, width: int) -> bool:
        return self.top >= 0 and self.left >= 0 and self.bottom < height and self.right < width


def boundary_band(window: WindowRect) -> FrozenSet[Pixel]:
    """B: the outermost ring of pixels of the window."""

    return window.pixels() - window.interior()


def chebyshev_separated(first: AbstractSet[Pixel], second: AbstractSet[Pixel]) -> bool:
    """True when every pixel of ``first`` is at Chebyshev distance >= 2 from ``second``."""

    small, large = (first, second) if len(first) <= len(second) else (second, first)
    for row, col in small:
        for dr in (-1, 0, 1):
            for dc in (-1, 0, 1):
                if (row + dr, col + dc) in large:
                    return False
    return True


@dataclass(frozen=True)
class LocalSystem:
    """Triad (X, X1, X2) cut out of a binary image by a window."""

    ambient: BinaryImage
    window: WindowRect
    x1: FrozenSet[Pixel]
    x2: FrozenSet[Pixel]

    def __post_init__(self) -> None:
        object.__setattr__(self, "x1", frozenset(self.x1))
        object.__setattr__(self, "x2", frozenset(self.x2))
        black = self.ambient.black
        if not self.x1 <= black or not self.x2 <= black:
            raise ValueError("part-outside-ambient")
        if not chebyshev_separated(self.x1, self.x2):
            raise ValueError("closure-overlap")

    @property
    def black(self) -> FrozenSet[Pixel]:
        return self.ambient.black

    @property
    def union(self) -> FrozenSet[Pixel]:
        return self.x1 | self.x2


def build_local_system(image: BinaryImage, window: WindowRect) -> LocalSystem:
    """X1 = X inside the window interior, X2 = X outside the window."""

    if not window.fits(image.height, image.width):
        raise ValueError(
            f"window-outside-image:top={window.top}:left={window.left}:"
            f"size={window.size_rows}x{window.size_cols}:image={image.height}x{image.width}"
        )
    x1 = frozenset(pixel for pixel in image.black if window.in_interior(pixel))
    x2 = frozenset(pixel for pixel in image.black if not window.contains(pixel))
    return LocalSystem(ambient=image, window=window, x1=x1, x2=x2)


__all__ = [
    "Cell",
    "CubicalComplex",
    "LocalSystem",
    "WindowRect",
    "boundary_band",
    "build_local_system",
    "canonical_key",
    "cell_boundary",
    "cell_dimension",
    "chebyshev_separated",
    "closed_square",
    "incident_pixels",
    "realize",
]
