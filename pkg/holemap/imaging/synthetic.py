"""Synthetic binary scenes: rectangular rings, ring clusters and random blobs."""
from __future__ import annotations

import random
from typing import FrozenSet, Iterable, Set

from .images import BinaryImage, Pixel


def rectangular_ring(top: int, left: int, rows: int, cols: int, thickness: int = 1) -> FrozenSet[Pixel]:
    """Pixels of a hollow rectangle whose outer corner is at (top, left)."""

    if rows <= 2 * thickness or cols <= 2 * thickness:
        raise ValueError(f"ring-without-hole:{rows}x{cols}:thickness={thickness}")
    pixels: Set[Pixel] = set()
    for r in range(top, top + rows):
        for c in range(left, left + cols):
            inner_row = top + thickness <= r < top + rows - thickness
            inner_col = left + thickness <= c < left + cols - thickness
            if not (inner_row and inner_col):
                pixels.add((r, c))
    return frozenset(pixels)


def filled_rectangle(top: int, left: int, rows: int, cols: int) -> FrozenSet[Pixel]:
    return frozenset((r, c) for r in range(top, top + rows) for c in range(left, left + cols))


def ring_cluster(top: int, left: int, grid: int, ring_size: int, pitch: int) -> FrozenSet[Pixel]:
    """A ``grid`` x ``grid`` lattice of square rings, ``pitch`` pixels apart."""

    pixels: Set[Pixel] = set()
    for i in range(grid):
        for j in range(grid):
            pixels |= rectangular_ring(top + i * pitch, left + j * pitch, ring_size, ring_size)
    return frozenset(pixels)


def compose(height: int, width: int, *parts: Iterable[Pixel]) -> BinaryImage:
    black: Set[Pixel] = set()
    for part in parts:
        black |= set(part)
    return BinaryImage.blank(height, width, black)


def random_image(rng: random.Random, height: int, width: int, density: float) -> BinaryImage:
    black = {(r, c) for r in range(height) for c in range(width) if rng.random() < density}
    return BinaryImage.blank(height, width, black)


def random_blob(rng: random.Random, height: int, width: int, steps: int) -> BinaryImage:
    """A random walk of filled 2x2 stamps; usually connected, sometimes holey."""

    r, c = rng.randrange(height), rng.randrange(width)
    black: Set[Pixel] = set()
    for _ in range(steps):
        for dr in (0, 1):
            for dc in (0, 1):
                if r + dr < height and c + dc < width:
                    black.add((r + dr, c + dc))
        r = min(max(r + rng.choice((-1, 0, 1)), 0), height - 1)
        c = min(max(c + rng.choice((-1, 0, 1)), 0), width - 1)
    return BinaryImage.blank(height, width, black)


def size_estimation_scene() -> BinaryImage:
    """120x180 scene: one 40x40 ring beside a 4x4 cluster of 8x8 rings."""

    large = rectangular_ring(40, 15, 40, 40)
    cluster = ring_cluster(41, 110, grid=4, ring_size=8, pitch=10)
    return compose(120, 180, large, cluster)


__all__ = [
    "compose",
    "filled_rectangle",
    "random_blob",
    "random_image",
    "rectangular_ring",
    "ring_cluster",
    "size_estimation_scene",
]
