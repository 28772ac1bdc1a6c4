"""Image value types: grayscale grids, black-pixel sets and heatmaps."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Sequence, Tuple

import numpy as np

Pixel = Tuple[int, int]


@dataclass(frozen=True)
class GrayscaleImage:
    """Row-major grid of non-negative integers, one value per pixel."""

    width: int
    height: int
    values: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ValueError(f"invalid-dimensions:{self.width}x{self.height}")
        if len(self.values) != self.width * self.height:
            raise ValueError(f"dimension-mismatch:expected={self.width * self.height}:got={len(self.values)}")
        if any(value < 0 for value in self.values):
            raise ValueError("negative-grayscale-value")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "GrayscaleImage":
        if not rows:
            raise ValueError("empty-grid")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("ragged-grid")
        return cls(width=width, height=len(rows), values=tuple(int(v) for row in rows for v in row))

    def value(self, row: int, col: int) -> int:
        return self.values[row * self.width + col]

    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(self.values[r * self.width:(r + 1) * self.width] for r in range(self.height))

    def to_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.int64).reshape(self.height, self.width)

    @property
    def max_value(self) -> int:
        return max(self.values)


@dataclass(frozen=True)
class BinaryImage:
    """A grid of ``height`` x ``width`` pixels with a set of black (row, col) pixels."""

    width: int
    height: int
    black: FrozenSet[Pixel] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ValueError(f"invalid-dimensions:{self.width}x{self.height}")
        object.__setattr__(self, "black", frozenset(self.black))
        for row, col in self.black:
            if not (0 <= row < self.height and 0 <= col < self.width):
                raise ValueError(f"pixel-outside-grid:{row},{col}")

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> "BinaryImage":
        """Build from a boolean array where True marks a black pixel."""

        grid = np.asarray(mask, dtype=bool)
        rows, cols = np.nonzero(grid)
        return cls(
            width=int(grid.shape[1]),
            height=int(grid.shape[0]),
            black=frozenset(zip(rows.tolist(), cols.tolist())),
        )

    @classmethod
    def from_strings(cls, lines: Sequence[str], ink: str = "#") -> "BinaryImage":
        width = len(lines[0])
        black = {(r, c) for r, line in enumerate(lines) for c, char in enumerate(line) if char == ink}
        return cls(width=width, height=len(lines), black=frozenset(black))

    @classmethod
    def blank(cls, height: int, width: int, black: Iterable[Pixel] = ()) -> "BinaryImage":
        return cls(width=width, height=height, black=frozenset(black))

    def to_mask(self) -> np.ndarray:
        mask = np.zeros((self.height, self.width), dtype=bool)
        for row, col in self.black:
            mask[row, col] = True
        return mask


@dataclass(frozen=True, eq=False)
class Heatmap:
    """Per-pixel accumulated heat aligned with a source image."""

    width: int
    height: int
    heat: np.ndarray

    def __post_init__(self) -> None:
        grid = np.asarray(self.heat)
        if grid.shape != (self.height, self.width):
            raise ValueError(f"heat-shape-mismatch:{grid.shape}")
        if np.issubdtype(grid.dtype, np.floating) and not np.all(np.isfinite(grid)):
            raise ValueError("non-finite-heat")
        object.__setattr__(self, "heat", grid)

    @classmethod
    def zeros(cls, height: int, width: int) -> "Heatmap":
        return cls(width=width, height=height, heat=np.zeros((height, width), dtype=np.int64))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]]) -> "Heatmap":
        grid = np.asarray(rows)
        return cls(width=int(grid.shape[1]), height=int(grid.shape[0]), heat=grid)

    def __add__(self, other: "Heatmap") -> "Heatmap":
        if (self.height, self.width) != (other.height, other.width):
            raise ValueError("heatmap-size-mismatch")
        return Heatmap(width=self.width, height=self.height, heat=self.heat + other.heat)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Heatmap):
            return NotImplemented
        return (self.height, self.width) == (other.height, other.width) and bool(np.array_equal(self.heat, other.heat))

    def value(self, row: int, col: int) -> float:
        return self.heat[row, col].item()

    def support(self) -> FrozenSet[Pixel]:
        rows, cols = np.nonzero(self.heat)
        return frozenset(zip(rows.tolist(), cols.tolist()))

    def argmax(self) -> Pixel:
        row, col = np.unravel_index(int(np.argmax(self.heat)), self.heat.shape)
        return int(row), int(col)


__all__ = ["BinaryImage", "GrayscaleImage", "Heatmap", "Pixel"]
