"""Short-filtration counts of planar windows from connected-component labels.

For a union of closed squares in the plane, H_1 is dual to the reduced H_0 of
the complement, whose components are the 4-connected white regions of the
image padded by one white pixel; the padding region is the unbounded one.
Inclusion Y <= X induces, on H_1, a map of the same rank as the map sending
white components of X to the white components of Y containing them. Removing
the band B from X (or the whole window R for X2) fuses every white component
meeting B (or R) or 4-adjacent to it into a single component; nothing else
changes. H_0 is read off 8-connected black labels directly.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Tuple

import numpy as np
from scipy import ndimage

from ..imaging.images import BinaryImage
from ..topology.cubical import WindowRect
from ..topology.persistence import MergingProfile

_CROSS = ndimage.generate_binary_structure(2, 1)
_SQUARE = ndimage.generate_binary_structure(2, 2)


@lru_cache(maxsize=64)
def _collar_template(size_rows: int, size_cols: int, with_interior: bool) -> np.ndarray:
    """Mask over R grown by one pixel: R plus its 4-neighbours (corners excluded).

    Without the interior it covers only B and its 4-neighbours, dropping the
    pixels of the window at distance >= 2 from its border.
    """

    mask = np.ones((size_rows + 2, size_cols + 2), dtype=bool)
    for row in (0, -1):
        for col in (0, -1):
            mask[row, col] = False
    if not with_interior:
        mask[3:size_rows - 1, 3:size_cols - 1] = False
    return mask


@lru_cache(maxsize=64)
def _band_template(size_rows: int, size_cols: int) -> np.ndarray:
    mask = np.ones((size_rows, size_cols), dtype=bool)
    mask[1:-1, 1:-1] = False
    return mask


class PlanarProfiler:
    """Labels an image once, then answers merging profiles for any window."""

    def __init__(self, image: BinaryImage) -> None:
        self.height = image.height
        self.width = image.width
        self._black = image.to_mask()

        white, _ = ndimage.label(np.pad(~self._black, 1, constant_values=True), structure=_CROSS)
        self._white = white
        self._outer = int(white[0, 0])
        holes = [
            (label, slices)
            for label, slices in enumerate(ndimage.find_objects(white), start=1)
            if slices is not None and label != self._outer
        ]
        self.hole_count = len(holes)
        # bounding boxes in unpadded pixel coordinates, inclusive
        self._hole_top = np.array([s[0].start - 1 for _, s in holes], dtype=np.int64)
        self._hole_bottom = np.array([s[0].stop - 2 for _, s in holes], dtype=np.int64)
        self._hole_left = np.array([s[1].start - 1 for _, s in holes], dtype=np.int64)
        self._hole_right = np.array([s[1].stop - 2 for _, s in holes], dtype=np.int64)

        components, count = ndimage.label(self._black, structure=_SQUARE)
        self._components = components
        self.component_count = int(count)
        self._component_sizes = np.bincount(components.ravel(), minlength=count + 1)

    def _require_inside(self, window: WindowRect) -> None:
        if not window.fits(self.height, self.width):
            raise ValueError(
                f"window-outside-image:top={window.top}:left={window.left}:"
                f"size={window.size_rows}x{window.size_cols}:image={self.height}x{self.width}"
            )

    def _touched(self, window: WindowRect, with_interior: bool) -> Tuple[int, bool]:
        """Number of white components meeting the collar, and whether the outer one is among them."""

        block = self._white[window.top:window.bottom + 3, window.left:window.right + 3]
        labels = np.unique(block[_collar_template(window.size_rows, window.size_cols, with_interior)])
        labels = labels[labels != 0]
        return int(labels.size), bool(np.any(labels == self._outer))

    def _enclosed_holes(self, window: WindowRect) -> int:
        """Holes whose closure lies in the window interior."""

        inside = (
            (self._hole_top >= window.top + 2)
            & (self._hole_bottom <= window.bottom - 2)
            & (self._hole_left >= window.left + 2)
            & (self._hole_right <= window.right - 2)
        )
        return int(np.count_nonzero(inside))

    def _profile_holes(self, window: WindowRect) -> MergingProfile:
        touched, _ = self._touched(window, with_interior=False)
        outer_merged = max(touched - 1, 0)
        rank_b = self.hole_count - outer_merged
        enclosed = self._enclosed_holes(window)

        touched_r, outer_in_r = self._touched(window, with_interior=True)
        untouched_holes = self.hole_count - (touched_r - (1 if outer_in_r else 0))
        beta_x2 = untouched_holes + (0 if outer_in_r else 1)
        return MergingProfile(q=1, m=beta_x2 - rank_b + enclosed, o=outer_merged, i=enclosed)

    def _profile_components(self, window: WindowRect) -> MergingProfile:
        rows = slice(window.top, window.bottom + 1)
        cols = slice(window.left, window.right + 1)
        block = self._components[rows, cols]

        inner = np.unique(block[1:-1, 1:-1])
        rank_ba = int(np.count_nonzero(inner))

        band_counts = np.bincount(
            block[_band_template(window.size_rows, window.size_cols)],
            minlength=self.component_count + 1,
        )
        rank_b = int(np.count_nonzero((self._component_sizes - band_counts)[1:] > 0))

        outside = self._black.copy()
        outside[rows, cols] = False
        _, beta_x2 = ndimage.label(outside, structure=_SQUARE)
        return MergingProfile(
            q=0,
            m=int(beta_x2) - rank_b + rank_ba,
            o=self.component_count - rank_b,
            i=rank_ba,
        )

    def profile(self, window: WindowRect, q: int) -> MergingProfile:
        self._require_inside(window)
        if q == 0:
            return self._profile_components(window)
        if q == 1:
            return self._profile_holes(window)
        if q == 2:
            return MergingProfile(q=2, m=0, o=0, i=0)
        raise ValueError(f"unsupported-dimension:{q}")


__all__ = ["PlanarProfiler"]
