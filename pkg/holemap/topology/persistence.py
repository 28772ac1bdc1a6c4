"""Persistence of filtered cubical complexes and short-filtration counts."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Sequence, Tuple

from ..imaging.images import BinaryImage, GrayscaleImage, Pixel
from .cubical import (
    Cell,
    CubicalComplex,
    LocalSystem,
    canonical_key,
    cell_boundary,
    cell_dimension,
    chebyshev_separated,
    closed_square,
    realize,
)
from .gf2 import rank_z2, reduce_sparse
from .homology import betti, induced_matrix

INFINITY = math.inf
SHORT_LEVELS = (1, 2, 3)
FILTRATION_ORDERS = ("x1-first", "x2-first")


@dataclass(frozen=True)
class Filtration:
    """A complex with an integer level per cell, monotone along faces."""

    complex: CubicalComplex
    level: Mapping[Cell, int]
    values: Tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        levels = dict(self.level)
        if set(levels) != set(self.complex.cells):
            raise ValueError("filtration-levels-do-not-cover-complex")
        for cell in self.complex.cells:
            for face in cell_boundary(cell):
                if levels[face] > levels[cell]:
                    raise ValueError(f"non-monotone-filtration:{face}>{cell}")
        object.__setattr__(self, "level", levels)
        object.__setattr__(self, "values", tuple(sorted(set(levels.values()))))

    def subcomplex_at(self, t: float) -> CubicalComplex:
        return CubicalComplex(cells=tuple(cell for cell in self.complex.cells if self.level[cell] <= t))


def _lower_star(pixel_levels: Mapping[Pixel, int]) -> Filtration:
    """Squares at their pixel level, every face at the minimum over incident squares."""

    levels: Dict[Cell, int] = {}
    for pixel, value in pixel_levels.items():
        for cell in closed_square(pixel):
            current = levels.get(cell)
            if current is None or value < current:
                levels[cell] = value
    return Filtration(complex=CubicalComplex(cells=tuple(levels)), level=levels)


def sublevel_filtration(image: GrayscaleImage) -> Filtration:
    return _lower_star({(r, c): image.value(r, c) for r in range(image.height) for c in range(image.width)})


def nested_filtration(images: Sequence[BinaryImage]) -> Filtration:
    """Filtration of a nested sequence of binary images; level i is the i-th black set."""

    if not images:
        raise ValueError("empty-image-sequence")
    shape = (images[0].height, images[0].width)
    levels: Dict[Pixel, int] = {}
    previous: FrozenSet[Pixel] = frozenset()
    for index, image in enumerate(images):
        if (image.height, image.width) != shape:
            raise ValueError(f"image-size-mismatch:index={index}")
        if not previous <= image.black:
            raise ValueError(f"non-nested-sequence:index={index}")
        for pixel in image.black - previous:
            levels[pixel] = index
        previous = image.black
    return _lower_star(levels)


def short_filtration(system: LocalSystem, order: str = "x1-first") -> Filtration:
    """The three-step filtration X1 < X1 u X2 < X (or X2 first) at levels 1, 2, 3."""

    if order not in FILTRATION_ORDERS:
        raise ValueError(f"unknown-filtration-order:{order}")
    first, second = (system.x1, system.x2) if order == "x1-first" else (system.x2, system.x1)
    if not chebyshev_separated(first, second):
        raise ValueError("closure-overlap")
    pixel_levels = {pixel: 3 for pixel in system.black}
    pixel_levels.update({pixel: 2 for pixel in second})
    pixel_levels.update({pixel: 1 for pixel in first})
    return _lower_star(pixel_levels)


@dataclass(frozen=True, order=True)
class Bar:
    q: int
    birth: int
    death: float

    @property
    def finite(self) -> bool:
        return self.death != INFINITY


def _format_level(value: float) -> str:
    return "inf" if value == INFINITY else str(int(value))


@dataclass(frozen=True)
class PersistenceDiagram:
    """Multiset of bars sorted by (q, birth, death)."""

    bars: Tuple[Bar, ...]

    def __post_init__(self) -> None:
        for bar in self.bars:
            if not bar.birth < bar.death:
                raise ValueError(f"empty-bar:{bar}")
        object.__setattr__(self, "bars", tuple(sorted(self.bars)))

    def in_dimension(self, q: int) -> Tuple[Tuple[int, float], ...]:
        return tuple((bar.birth, bar.death) for bar in self.bars if bar.q == q)

    def count(self, q: int, birth: int, death: float) -> int:
        return sum(1 for bar in self.bars if bar.q == q and bar.birth == birth and bar.death == death)

    def betti_at(self, q: int, t: float) -> int:
        """Bars of dimension q alive at level t."""

        return sum(1 for bar in self.bars if bar.q == q and bar.birth <= t < bar.death)

    def to_text(self) -> str:
        return "".join(f"{bar.q} {bar.birth} {_format_level(bar.death)}\n" for bar in self.bars)


def persistence(filtration: Filtration) -> PersistenceDiagram:
    """Standard column reduction over the cells in (level, dimension, canonical) order."""

    level = filtration.level
    order = sorted(filtration.complex.cells, key=lambda cell: (level[cell],) + canonical_key(cell))
    position = {cell: index for index, cell in enumerate(order)}
    reduced, pivots = reduce_sparse([position[face] for face in cell_boundary(cell)] for cell in order)

    bars: List[Bar] = []
    for low, killer in pivots.items():
        birth, death = level[order[low]], level[order[killer]]
        if birth != death:
            bars.append(Bar(q=cell_dimension(order[low]), birth=birth, death=death))
    for index, cell in enumerate(order):
        if not reduced[index] and index not in pivots:
            bars.append(Bar(q=cell_dimension(cell), birth=level[cell], death=INFINITY))
    return PersistenceDiagram(bars=tuple(bars))


@dataclass(frozen=True)
class MergingProfile:
    """Short-filtration counts in dimension q: m = (2,3) bars, o = (3,inf) bars, i = (1,inf) bars."""

    q: int
    m: int
    o: int
    i: int

    def __post_init__(self) -> None:
        if min(self.m, self.o, self.i) < 0:
            raise ValueError(f"negative-count:{self}")


def merging_profile(diagram: PersistenceDiagram, q: int) -> MergingProfile:
    for bar in diagram.bars:
        if bar.birth not in SHORT_LEVELS or (bar.finite and bar.death not in SHORT_LEVELS):
            raise ValueError(f"not-a-short-filtration:{bar.birth},{_format_level(bar.death)}")
    return MergingProfile(
        q=q,
        m=diagram.count(q, 2, 3),
        o=diagram.count(q, 3, INFINITY),
        i=diagram.count(q, 1, INFINITY),
    )


def short_profile(system: LocalSystem, q: int, order: str = "x1-first") -> MergingProfile:
    return merging_profile(persistence(short_filtration(system, order)), q)


def rank_oracle_counts(system: LocalSystem, q: int) -> MergingProfile:
    """The same counts from ranks of H(X1) -a-> H(X1 u X2) -b-> H(X), without any barcode."""

    first = realize(system.x1)
    union = realize(system.union)
    ambient = realize(system.black)
    a = induced_matrix(first, union, q)
    b = induced_matrix(union, ambient, q)
    rank_b = rank_z2(b)
    rank_ba = rank_z2(b @ a)
    return MergingProfile(
        q=q,
        m=betti(realize(system.x2), q) - rank_b + rank_ba,
        o=b.rows - rank_b,
        i=rank_ba,
    )


def birth_counts(diagram: PersistenceDiagram, q: int) -> Dict[int, int]:
    counts: Dict[int, int] = {}
    for bar in diagram.bars:
        if bar.q == q:
            counts[bar.birth] = counts.get(bar.birth, 0) + 1
    return counts


__all__ = [
    "Bar",
    "FILTRATION_ORDERS",
    "Filtration",
    "INFINITY",
    "MergingProfile",
    "PersistenceDiagram",
    "birth_counts",
    "merging_profile",
    "nested_filtration",
    "persistence",
    "rank_oracle_counts",
    "short_filtration",
    "short_profile",
    "sublevel_filtration",
]
