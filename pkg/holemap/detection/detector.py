"""Sliding-window heatmaps: hole location, hole size and local merging."""
from __future__ import annotations

import logging
import time
from multiprocessing import Pool
from typing import Callable, List, Sequence, Tuple

import numpy as np

from ..imaging.images import BinaryImage, Heatmap
from ..topology.cubical import WindowRect, build_local_system
from ..topology.persistence import MergingProfile, short_profile
from .config import DetectorConfig
from .planar import PlanarProfiler

LOGGER = logging.getLogger(__name__)

Placement = Tuple[int, int]
Profiler = Callable[[WindowRect, int], MergingProfile]


def window_placements(height: int, width: int, size: int, step: int) -> List[Placement]:
    """Top-left corners (i*k, j*k) of every size x size window inside the grid."""

    if size > height or size > width:
        return []
    return [(top, left) for top in range(0, height - size + 1, step) for left in range(0, width - size + 1, step)]


def window_score(mode: str, profile: MergingProfile, size: int) -> int:
    if mode == "detect":
        return profile.i + profile.o
    if mode == "size":
        return size * size * (profile.o - profile.i)
    if mode == "merge":
        return profile.m
    raise ValueError(f"unknown-mode:{mode}")


def make_profiler(image: BinaryImage, engine: str) -> Profiler:
    if engine == "planar":
        return PlanarProfiler(image).profile
    if engine == "reduction":
        return lambda window, q: short_profile(build_local_system(image, window), q)
    raise ValueError(f"unknown-engine:{engine}")


def _sweep_chunk(
    image: BinaryImage,
    placements: Sequence[Placement],
    size: int,
    mode: str,
    q: int,
    engine: str,
) -> np.ndarray:
    """Unmasked heat from the given windows, deposited on each window interior."""

    profiler = make_profiler(image, engine)
    heat = np.zeros((image.height, image.width), dtype=np.int64)
    for top, left in placements:
        score = window_score(mode, profiler(WindowRect.square(top, left, size), q), size)
        if score:
            heat[top + 1:top + size - 1, left + 1:left + size - 1] += score
    return heat


def _split(placements: List[Placement], parts: int) -> List[List[Placement]]:
    return [placements[index::parts] for index in range(parts) if placements[index::parts]]


def _sweep(image: BinaryImage, config: DetectorConfig) -> Heatmap:
    size = config.window_size
    placements = window_placements(image.height, image.width, size, config.step)
    started = time.perf_counter()
    LOGGER.info(
        "window_sweep_started",
        extra={
            "mode": config.mode,
            "window_size": size,
            "step": config.step,
            "windows": len(placements),
            "engine": config.engine,
            "workers": config.workers,
        },
    )

    if config.workers > 1 and len(placements) > 1:
        chunks = _split(placements, config.workers)
        arguments = [(image, chunk, size, config.mode, config.q, config.engine) for chunk in chunks]
        with Pool(processes=len(chunks)) as pool:
            partials = pool.starmap(_sweep_chunk, arguments)
        heat = np.sum(partials, axis=0, dtype=np.int64)
    else:
        heat = _sweep_chunk(image, placements, size, config.mode, config.q, config.engine)

    heat = np.where(image.to_mask(), heat, 0).astype(np.int64)
    LOGGER.info(
        "window_sweep_finished",
        extra={
            "mode": config.mode,
            "window_size": size,
            "nonzero": int(np.count_nonzero(heat)),
            "elapsed_ms": round((time.perf_counter() - started) * 1000, 1),
        },
    )
    return Heatmap(width=image.width, height=image.height, heat=heat)


def _require_mode(config: DetectorConfig, mode: str) -> None:
    if config.mode != mode:
        raise ValueError(f"mode-mismatch:expected={mode}:got={config.mode}")


def detect_holes(image: BinaryImage, config: DetectorConfig) -> Heatmap:
    """Deposit i_1 + o_1 of every window on its interior, masked to black pixels."""

    _require_mode(config, "detect")
    return _sweep(image, config)


def estimate_sizes(image: BinaryImage, config: DetectorConfig) -> Heatmap:
    """Deposit n^2 (o_1 - i_1): holes larger than the window score, enclosed ones are punished."""

    _require_mode(config, "size")
    return _sweep(image, config)


def merge_heatmap(image: BinaryImage, config: DetectorConfig) -> Heatmap:
    """Deposit the local merging number m_q; with step equal to the window size the windows tile the image."""

    _require_mode(config, "merge")
    return _sweep(image, config)


def multiscale(
    image: BinaryImage,
    scales: Sequence[int],
    step: int,
    engine: str = "planar",
    workers: int = 1,
) -> Heatmap:
    if not scales:
        raise ValueError("empty-scales")
    total = Heatmap.zeros(image.height, image.width)
    for size in scales:
        config = DetectorConfig(window_size=size, step=step, mode="size", engine=engine, workers=workers)
        total = total + estimate_sizes(image, config)
    return total


def run_detector(image: BinaryImage, config: DetectorConfig) -> Heatmap:
    if config.mode == "detect":
        return detect_holes(image, config)
    if config.mode == "merge":
        return merge_heatmap(image, config)
    return multiscale(image, config.window_sizes(), config.step, engine=config.engine, workers=config.workers)


def keep_above(heatmap: Heatmap, level: float) -> Heatmap:
    """Zero every entry strictly below ``level``."""

    heat = np.where(heatmap.heat >= level, heatmap.heat, 0)
    return Heatmap(width=heatmap.width, height=heatmap.height, heat=heat.astype(heatmap.heat.dtype))


__all__ = [
    "detect_holes",
    "estimate_sizes",
    "keep_above",
    "make_profiler",
    "merge_heatmap",
    "multiscale",
    "run_detector",
    "window_placements",
    "window_score",
]
