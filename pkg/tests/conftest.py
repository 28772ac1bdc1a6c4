import sys
from pathlib import Path

import pytest


ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from holemap.imaging.images import BinaryImage, GrayscaleImage  # noqa: E402
from holemap.topology.cubical import WindowRect, build_local_system  # noqa: E402


# Ring of zeros around a 4x4 block whose two dark diagonals open two loops.
STAIRCASE_GRID = [
    [0, 0, 0, 0, 0, 0],
    [0, 1, 3, 3, 3, 0],
    [0, 2, 1, 2, 3, 0],
    [0, 3, 2, 1, 2, 0],
    [0, 3, 3, 3, 2, 0],
    [0, 0, 0, 0, 0, 0],
]

# One loop through rows 2..5 with a spur on top and a tail to the right.
CROSSING_ROWS = [
    "...#..",
    "...#..",
    "######",
    "#..#..",
    "#..#..",
    "####..",
]

HOOKED_RING_ROWS = [
    ".........",
    "..###....",
    "..#.#....",
    "..#.#....",
    "..#.#....",
    "..#.####.",
    "..#....#.",
    "..######.",
    ".........",
]


@pytest.fixture
def staircase_grid():
    return GrayscaleImage.from_rows(STAIRCASE_GRID)


@pytest.fixture
def crossing_image():
    return BinaryImage.from_strings(CROSSING_ROWS)


@pytest.fixture
def crossing_window():
    return WindowRect.square(1, 1, 4)


@pytest.fixture
def crossing_system(crossing_image, crossing_window):
    return build_local_system(crossing_image, crossing_window)


@pytest.fixture
def hooked_ring():
    return BinaryImage.from_strings(HOOKED_RING_ROWS)


def grid_text(rows):
    return "".join(" ".join(str(value) for value in row) + "\n" for row in rows)


def crossing_grid_text():
    """CROSSING_ROWS as a grayscale grid: black pixels 0, white 255."""

    return grid_text([[0 if char == "#" else 255 for char in line] for line in CROSSING_ROWS])
