"""Sliding-window hole detection and size estimation."""

from .config import MODES, DetectorConfig
from .detector import detect_holes, estimate_sizes, keep_above, merge_heatmap, multiscale, run_detector
from .planar import PlanarProfiler

__all__ = [
    "DetectorConfig",
    "MODES",
    "PlanarProfiler",
    "detect_holes",
    "estimate_sizes",
    "keep_above",
    "merge_heatmap",
    "multiscale",
    "run_detector",
]
