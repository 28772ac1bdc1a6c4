"""Image types and file formats."""

from .images import BinaryImage, GrayscaleImage, Heatmap, Pixel
from .pnm import load_grayscale, save_grayscale, threshold_sublevel, write_heatmap

__all__ = [
    "BinaryImage",
    "GrayscaleImage",
    "Heatmap",
    "Pixel",
    "load_grayscale",
    "save_grayscale",
    "threshold_sublevel",
    "write_heatmap",
]
