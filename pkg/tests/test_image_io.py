import random

import numpy as np
import pytest

from holemap.imaging.images import BinaryImage, GrayscaleImage, Heatmap
from holemap.imaging.pnm import (
    load_grayscale,
    read_heatmap_csv,
    save_grayscale,
    threshold_sublevel,
    write_heatmap,
)
from holemap.imaging.synthetic import rectangular_ring, ring_cluster, size_estimation_scene

from conftest import STAIRCASE_GRID, grid_text


def test_load_plain_grid(tmp_path):
    path = tmp_path / "grid.txt"
    path.write_text(grid_text(STAIRCASE_GRID))
    image = load_grayscale(path)
    assert (image.height, image.width) == (6, 6)
    assert image.value(1, 2) == 3
    assert image.rows()[3] == (0, 3, 2, 1, 2, 0)


def test_load_p2_with_comments(tmp_path):
    path = tmp_path / "tiny.pgm"
    path.write_text("P2\n# made by hand\n3 2\n# maxval next\n9\n0 1 2\n3 4 9\n")
    image = load_grayscale(path)
    assert (image.width, image.height) == (3, 2)
    assert image.values == (0, 1, 2, 3, 4, 9)


def test_load_p5_binary_raster(tmp_path):
    path = tmp_path / "tiny.pgm"
    path.write_bytes(b"P5\n2 2\n255\n" + bytes([0, 10, 200, 255]))
    assert load_grayscale(path).values == (0, 10, 200, 255)


def test_load_p5_sixteen_bit(tmp_path):
    path = tmp_path / "deep.pgm"
    path.write_bytes(b"P5 2 1 1000\n" + (300).to_bytes(2, "big") + (1000).to_bytes(2, "big"))
    assert load_grayscale(path).values == (300, 1000)


def test_load_p1_ink_is_black(tmp_path):
    path = tmp_path / "bits.pbm"
    path.write_text("P1\n3 2\n1 0 1\n010\n")
    image = load_grayscale(path)
    assert image.values == (0, 255, 0, 255, 0, 255)
    assert threshold_sublevel(image, 0).black == frozenset({(0, 0), (0, 2), (1, 1)})


def test_load_rejects_short_payload(tmp_path):
    path = tmp_path / "short.pgm"
    path.write_text("P2\n3 3\n255\n0 0 0\n")
    with pytest.raises(ValueError, match="dimension-mismatch"):
        load_grayscale(path)


def test_load_rejects_bad_header(tmp_path):
    path = tmp_path / "bad.pgm"
    path.write_text("P2\nthree 3\n255\n")
    with pytest.raises(ValueError, match="malformed-header"):
        load_grayscale(path)


def test_load_rejects_ragged_grid(tmp_path):
    path = tmp_path / "ragged.txt"
    path.write_text("0 1 2\n0 1\n")
    with pytest.raises(ValueError, match="dimension-mismatch"):
        load_grayscale(path)


def test_load_missing_file_raises_oserror(tmp_path):
    with pytest.raises(OSError):
        load_grayscale(tmp_path / "absent.pgm")


def test_grayscale_rejects_negative_values():
    with pytest.raises(ValueError, match="negative-grayscale-value"):
        GrayscaleImage(width=2, height=1, values=(0, -1))


def test_threshold_is_sublevel(staircase_grid):
    assert len(threshold_sublevel(staircase_grid, 0).black) == 20
    assert threshold_sublevel(staircase_grid, 1).black >= threshold_sublevel(staircase_grid, 0).black
    assert len(threshold_sublevel(staircase_grid, 3).black) == 36


def test_binary_image_rejects_outside_pixels():
    with pytest.raises(ValueError, match="pixel-outside-grid"):
        BinaryImage(width=2, height=2, black=frozenset({(2, 0)}))


def test_write_heatmap_csv(tmp_path):
    heatmap = Heatmap.from_rows([[0, 3, -2], [5, 0, 0]])
    path = tmp_path / "heat.csv"
    write_heatmap(heatmap, path, "csv")
    assert path.read_text() == "0,3,-2\n5,0,0\n"
    assert read_heatmap_csv(path) == ((0, 3, -2), (5, 0, 0))


def test_write_heatmap_pgm_scales_and_clamps(tmp_path):
    heatmap = Heatmap.from_rows([[0, 3, -2], [6, 0, 0]])
    path = tmp_path / "heat.pgm"
    write_heatmap(heatmap, path, "pgm")
    assert path.read_text() == "P2\n3 2\n255\n0 127 0\n255 0 0\n"


def test_write_heatmap_pgm_all_zero(tmp_path):
    path = tmp_path / "zero.pgm"
    write_heatmap(Heatmap.zeros(2, 2), path, "pgm")
    assert load_grayscale(path).values == (0, 0, 0, 0)


def test_write_heatmap_rejects_unknown_format(tmp_path):
    with pytest.raises(ValueError, match="unknown-heatmap-format"):
        write_heatmap(Heatmap.zeros(1, 1), tmp_path / "x", "png")


@pytest.mark.parametrize("fmt", ["grid", "pgm"])
def test_save_grayscale_reloads(tmp_path, staircase_grid, fmt):
    path = tmp_path / f"image.{fmt}"
    save_grayscale(staircase_grid, path, fmt)
    assert load_grayscale(path) == staircase_grid


def test_heatmap_addition_and_equality():
    first = Heatmap.from_rows([[1, 2]])
    second = Heatmap.from_rows([[3, -2]])
    assert first + second == Heatmap.from_rows([[4, 0]])
    assert (first + second).support() == frozenset({(0, 0)})
    with pytest.raises(ValueError, match="heatmap-size-mismatch"):
        first + Heatmap.zeros(2, 2)


def test_heatmap_rejects_non_finite():
    with pytest.raises(ValueError, match="non-finite-heat"):
        Heatmap.from_rows([[np.inf]])


def test_rectangular_ring_shape():
    ring = rectangular_ring(0, 0, 4, 5)
    assert len(ring) == 2 * 4 + 2 * 5 - 4
    with pytest.raises(ValueError, match="ring-without-hole"):
        rectangular_ring(0, 0, 2, 5)


def test_ring_cluster_and_scene_sizes():
    assert len(ring_cluster(0, 0, grid=2, ring_size=4, pitch=6)) == 4 * 12
    scene = size_estimation_scene()
    assert (scene.height, scene.width) == (120, 180)
    assert len(scene.black) == 156 + 16 * 28


def _random_grid(rng, peaks=(1, 7, 255, 4000)):
    height, width = rng.randint(1, 8), rng.randint(1, 8)
    peak = rng.choice(peaks)
    return GrayscaleImage.from_rows([[rng.randint(0, peak) for _ in range(width)] for _ in range(height)])


def test_load_single_zero_pixel(tmp_path):
    path = tmp_path / "one.txt"
    path.write_text("0\n")
    assert load_grayscale(path) == GrayscaleImage(width=1, height=1, values=(0,))


def test_threshold_is_monotone_on_random_grids():
    rng = random.Random(52)
    for _ in range(60):
        image = _random_grid(rng, peaks=(1, 7, 255))
        blacks = [threshold_sublevel(image, t).black for t in range(image.max_value + 1)]
        for smaller, larger in zip(blacks, blacks[1:]):
            assert smaller <= larger
        assert len(blacks[-1]) == image.width * image.height


@pytest.mark.parametrize("fmt", ["grid", "pgm"])
def test_save_then_load_reproduces_random_grids(tmp_path, fmt):
    rng = random.Random(71)
    for index in range(40):
        image = _random_grid(rng)
        path = tmp_path / f"image{index}.{fmt}"
        save_grayscale(image, path, fmt)
        assert load_grayscale(path) == image
