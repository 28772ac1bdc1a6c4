"""Readers and writers for PGM/PBM files, plain integer grids and heatmaps."""
from __future__ import annotations

import logging
from pathlib import Path
from typing import List, Tuple, Union

import numpy as np

from .images import BinaryImage, GrayscaleImage, Heatmap

LOGGER = logging.getLogger(__name__)

PathLike = Union[str, Path]
HEATMAP_FORMATS = ("csv", "pgm")
GRID_FORMATS = ("grid", "pgm")
_WHITESPACE = b" \t\r\n\v\f"


class _HeaderReader:
    """Token reader over the ASCII header of a netpbm file."""

    def __init__(self, data: bytes) -> None:
        self.data = data
        self.pos = 0

    def _skip_separators(self) -> None:
        while self.pos < len(self.data):
            byte = self.data[self.pos:self.pos + 1]
            if byte == b"#":
                newline = self.data.find(b"\n", self.pos)
                self.pos = len(self.data) if newline < 0 else newline + 1
            elif byte in _WHITESPACE:
                self.pos += 1
            else:
                return

    def token(self) -> bytes:
        self._skip_separators()
        start = self.pos
        while self.pos < len(self.data) and self.data[self.pos:self.pos + 1] not in _WHITESPACE + b"#":
            self.pos += 1
        if start == self.pos:
            raise ValueError("malformed-header:truncated")
        return self.data[start:self.pos]

    def integer(self, name: str) -> int:
        raw = self.token()
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"malformed-header:{name}={raw.decode(errors='replace')}") from None
        if value <= 0:
            raise ValueError(f"malformed-header:{name}={value}")
        return value

    def ascii_digits(self) -> List[int]:
        """Remaining payload of a P1 file: every 0/1 digit, whitespace optional."""

        digits: List[int] = []
        while True:
            self._skip_separators()
            if self.pos >= len(self.data):
                return digits
            char = self.data[self.pos:self.pos + 1]
            if char not in (b"0", b"1"):
                raise ValueError(f"malformed-payload:{char.decode(errors='replace')}")
            digits.append(int(char))
            self.pos += 1

    def ascii_integers(self) -> List[int]:
        values: List[int] = []
        while True:
            self._skip_separators()
            if self.pos >= len(self.data):
                return values
            raw = self.token()
            try:
                values.append(int(raw))
            except ValueError:
                raise ValueError(f"malformed-payload:{raw.decode(errors='replace')}") from None


def _parse_netpbm(data: bytes) -> GrayscaleImage:
    reader = _HeaderReader(data)
    magic = reader.token()
    width = reader.integer("width")
    height = reader.integer("height")
    expected = width * height

    if magic == b"P1":
        bits = reader.ascii_digits()
        if len(bits) != expected:
            raise ValueError(f"dimension-mismatch:expected={expected}:got={len(bits)}")
        # ink (1) is a black pixel, i.e. grayscale value 0
        return GrayscaleImage(width=width, height=height, values=tuple(0 if bit else 255 for bit in bits))

    maxval = reader.integer("maxval")
    if maxval > 65535:
        raise ValueError(f"malformed-header:maxval={maxval}")

    if magic == b"P2":
        values = reader.ascii_integers()
    elif magic == b"P5":
        # exactly one whitespace byte separates the header from the raster
        raster = data[reader.pos + 1:]
        dtype = np.dtype(np.uint8) if maxval < 256 else np.dtype(">u2")
        if len(raster) != expected * dtype.itemsize:
            raise ValueError(f"dimension-mismatch:expected={expected * dtype.itemsize}:got={len(raster)}")
        values = np.frombuffer(raster, dtype=dtype).astype(np.int64).tolist()
    else:
        raise ValueError(f"malformed-header:magic={magic.decode(errors='replace')}")

    if len(values) != expected:
        raise ValueError(f"dimension-mismatch:expected={expected}:got={len(values)}")
    if any(value > maxval for value in values):
        raise ValueError(f"malformed-payload:value-exceeds-maxval={maxval}")
    return GrayscaleImage(width=width, height=height, values=tuple(values))


def _parse_grid(text: str) -> GrayscaleImage:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("malformed-grid:empty")
    rows: List[List[int]] = []
    for number, line in enumerate(lines):
        try:
            rows.append([int(token) for token in line.split()])
        except ValueError:
            raise ValueError(f"malformed-grid:line={number + 1}") from None
    width = len(rows[0])
    for number, row in enumerate(rows):
        if len(row) != width:
            raise ValueError(f"dimension-mismatch:line={number + 1}:expected={width}:got={len(row)}")
    return GrayscaleImage.from_rows(rows)


def load_grayscale(path: PathLike) -> GrayscaleImage:
    """Load a P1/P2/P5 netpbm file or a whitespace-separated integer grid."""

    data = Path(path).read_bytes()
    if data.lstrip()[:2] in (b"P1", b"P2", b"P5"):
        image = _parse_netpbm(data.lstrip())
    else:
        try:
            text = data.decode("ascii")
        except UnicodeDecodeError:
            raise ValueError("malformed-header:not-netpbm-or-grid") from None
        image = _parse_grid(text)
    LOGGER.debug("image_loaded", extra={"path": str(path), "width": image.width, "height": image.height})
    return image


def threshold_sublevel(image: GrayscaleImage, t: int) -> BinaryImage:
    """Black pixels are those with value <= t."""

    mask = image.to_array() <= t
    return BinaryImage.from_mask(mask)


def _format_heat(value: Union[int, float]) -> str:
    if isinstance(value, float) and value.is_integer():
        return str(int(value))
    return str(value)


def _scale_to_byte(heat: np.ndarray) -> np.ndarray:
    clamped = np.maximum(heat, 0)
    peak = clamped.max() if clamped.size else 0
    if peak <= 0:
        return np.zeros(heat.shape, dtype=np.int64)
    if np.issubdtype(clamped.dtype, np.integer):
        return (clamped.astype(np.int64) * 255) // int(peak)
    return np.floor(clamped * 255.0 / float(peak)).astype(np.int64)


def write_heatmap(heatmap: Heatmap, path: PathLike, fmt: str = "csv") -> None:
    """Write ``heatmap`` as CSV rows or as a P2 image scaled so the peak is 255.

    Negative heat has no PGM representation and is written as 0.
    """

    if fmt not in HEATMAP_FORMATS:
        raise ValueError(f"unknown-heatmap-format:{fmt}")

    if fmt == "csv":
        lines = [",".join(_format_heat(value) for value in row.tolist()) for row in heatmap.heat]
        body = "".join(f"{line}\n" for line in lines)
    else:
        scaled = _scale_to_byte(heatmap.heat)
        rows = [" ".join(str(value) for value in row.tolist()) for row in scaled]
        body = f"P2\n{heatmap.width} {heatmap.height}\n255\n" + "".join(f"{row}\n" for row in rows)

    Path(path).write_text(body, encoding="ascii")
    LOGGER.info("heatmap_written", extra={"path": str(path), "format": fmt})


def save_grayscale(image: GrayscaleImage, path: PathLike, fmt: str = "grid") -> None:
    """Write a grayscale image as a plain integer grid or an ASCII P2 file."""

    if fmt not in GRID_FORMATS:
        raise ValueError(f"unknown-grid-format:{fmt}")
    rows = [" ".join(str(value) for value in row) for row in image.rows()]
    if fmt == "grid":
        body = "".join(f"{row}\n" for row in rows)
    else:
        maxval = max(1, image.max_value)
        if maxval > 65535:
            raise ValueError(f"value-exceeds-pgm-range:{maxval}")
        body = f"P2\n{image.width} {image.height}\n{maxval}\n" + "".join(f"{row}\n" for row in rows)
    Path(path).write_text(body, encoding="ascii")


def read_heatmap_csv(path: PathLike) -> Tuple[Tuple[float, ...], ...]:
    """Parse a heatmap CSV back into rows of numbers."""

    rows = []
    for line in Path(path).read_text(encoding="ascii").splitlines():
        if line:
            rows.append(tuple(float(token) if "." in token else int(token) for token in line.split(",")))
    return tuple(rows)


__all__ = [
    "GRID_FORMATS",
    "HEATMAP_FORMATS",
    "load_grayscale",
    "read_heatmap_csv",
    "save_grayscale",
    "threshold_sublevel",
    "write_heatmap",
]
