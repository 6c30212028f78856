"""Rendering of growth results to grayscale images, plus PGM I/O and hashing.

World frame: the viewport is the unit square centered on the origin,
[-0.5, 0.5] x [-0.5, 0.5], mapped to image coordinates by
px = (x + 0.5) * resolution. The world origin lands at the image center.
Row index increases with world y (no vertical flip).

Cells are splatted as filled disks of radius `cell_radius` world units
(floored at 0.75 px so a lone cell is always visible). Each disk adds 1 to
an integer coverage count per pixel whose center it contains; counts are
tone-mapped by value = round(255 * (1 - exp(-count))).
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

import numpy as np

from .growth import GrowthResult

RESOLUTIONS = (128, 256, 512)
MIN_SPLAT_RADIUS_PX = 0.75


@dataclass
class Image:
    """8-bit grayscale image, row-major pixels of shape (height, width)."""

    width: int
    height: int
    pixels: np.ndarray  # uint8 (height, width)

    def __post_init__(self):
        if self.width != self.height:
            raise ValueError("images must be square")
        if self.pixels.shape != (self.height, self.width):
            raise ValueError("pixel array shape does not match dimensions")
        if self.pixels.dtype != np.uint8:
            raise ValueError("pixels must be uint8")


def render(result: GrowthResult, resolution: int = 256) -> Image:
    """Splat the cells of a growth result into a square grayscale image."""
    if resolution not in RESOLUTIONS:
        raise ValueError(f"resolution must be one of {RESOLUTIONS}")
    res = resolution
    counts = np.zeros((res, res), dtype=np.int64)
    radius = max(result.cell_radius * res, MIN_SPLAT_RADIUS_PX)
    r2 = radius * radius
    for i in range(result.cell_count):
        x = float(result.positions[i, 0])
        y = float(result.positions[i, 1])
        if not (math.isfinite(x) and math.isfinite(y)):
            continue  # blow-up runs keep their finite cells renderable
        cx = (x + 0.5) * res
        cy = (y + 0.5) * res
        x0 = max(0, int(math.floor(cx - radius - 0.5)))
        x1 = min(res - 1, int(math.ceil(cx + radius - 0.5)))
        y0 = max(0, int(math.floor(cy - radius - 0.5)))
        y1 = min(res - 1, int(math.ceil(cy + radius - 0.5)))
        if x0 > x1 or y0 > y1:
            continue
        dx = np.arange(x0, x1 + 1, dtype=np.float64) + 0.5 - cx
        dy = np.arange(y0, y1 + 1, dtype=np.float64) + 0.5 - cy
        mask = (dx[None, :] ** 2 + dy[:, None] ** 2) <= r2
        counts[y0:y1 + 1, x0:x1 + 1] += mask
    values = np.floor(255.0 * (1.0 - np.exp(-counts.astype(np.float64))) + 0.5)
    pixels = np.minimum(values, 255.0).astype(np.uint8)
    return Image(width=res, height=res, pixels=pixels)


def classify_empty(image: Image) -> bool:
    """True when the lit-pixel fraction (value > 127) is < 0.5% or > 99.5%."""
    lit = int((image.pixels > 127).sum())
    frac = lit / (image.width * image.height)
    return frac < 0.005 or frac > 0.995


def image_hash(image: Image) -> int:
    """64-bit content hash: blake2b-64 over little-endian width, height, then
    row-major pixel bytes, read as an unsigned little-endian integer."""
    h = hashlib.blake2b(digest_size=8)
    h.update(int(image.width).to_bytes(4, "little"))
    h.update(int(image.height).to_bytes(4, "little"))
    h.update(image.pixels.tobytes())
    return int.from_bytes(h.digest(), "little")


def write_pgm(image: Image, path) -> None:
    """Write as binary PGM (P5, maxval 255)."""
    header = f"P5\n{image.width} {image.height}\n255\n".encode("ascii")
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(image.pixels.tobytes())


def read_pgm(path) -> Image:
    with open(path, "rb") as fh:
        data = fh.read()
    if not data.startswith(b"P5"):
        raise ValueError("not a binary PGM (P5) file")
    # header: magic, width, height, maxval, single whitespace, then payload
    fields = []
    pos = 2
    while len(fields) < 3:
        while pos < len(data) and data[pos] in b" \t\r\n":
            pos += 1
        if pos < len(data) and data[pos:pos + 1] == b"#":
            while pos < len(data) and data[pos] not in b"\r\n":
                pos += 1
            continue
        start = pos
        while pos < len(data) and data[pos] not in b" \t\r\n":
            pos += 1
        fields.append(int(data[start:pos]))
    pos += 1  # single whitespace after maxval
    width, height, maxval = fields
    if maxval != 255:
        raise ValueError("only maxval 255 PGM images are supported")
    payload = data[pos:pos + width * height]
    if len(payload) != width * height:
        raise ValueError("truncated PGM payload")
    pixels = np.frombuffer(payload, dtype=np.uint8).reshape(height, width).copy()
    return Image(width=width, height=height, pixels=pixels)
