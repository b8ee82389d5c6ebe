"""Pattern rasterization and binary PPM / PNG image files.

Images are ``(height, width, 3)`` float64 arrays with channels in [0, 1],
row 0 at the top.  World coordinates have y pointing up and the origin at
the image center.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .pattern import Pattern, Rgb

__all__ = ["CanvasConfig", "render", "write_ppm", "read_ppm", "write_png",
           "write_image", "read_image", "MalformedImageError"]


class MalformedImageError(ValueError):
    pass


@dataclass(frozen=True)
class CanvasConfig:
    width: int = 256
    height: int = 256
    background: Rgb = Rgb(1.0, 1.0, 1.0)
    pellet_radius: float = 2.0
    #: world units spanned by the image width
    world_extent: float = 256.0

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("canvas dimensions must be positive")
        if self.pellet_radius <= 0:
            raise ValueError("pellet_radius must be positive")
        if self.world_extent <= 0:
            raise ValueError("world_extent must be positive")


def render(p: Pattern, cfg: CanvasConfig = CanvasConfig()) -> np.ndarray:
    """Draw visible pellets as hard-edged discs, later pellets on top.

    A pixel is covered when its center lies within ``pellet_radius`` of the
    pellet center.  Offsets are measured from the image center so a pellet
    at ``(-a, b)`` covers the exact mirror of the pixels covered at ``(a, b)``.
    """
    w, h = cfg.width, cfg.height
    img = np.empty((h, w, 3))
    img[:] = cfg.background
    vis = [pel for _, pel in p.pellets() if pel.visible]
    if not vis:
        img.flags.writeable = False
        return img

    scale = w / cfg.world_extent
    rad = cfg.pellet_radius
    xy = np.array([pel.position for pel in vis], dtype=float)
    colors = np.array([pel.color for pel in vis], dtype=float)
    px = xy[:, 0] * scale    # offset from center, in pixels, rightwards
    py = -xy[:, 1] * scale   # downwards
    span = int(math.ceil(rad)) + 1
    offs = np.arange(-span, span + 1)
    # nearest pixel index to each center, then a window around it
    c0 = np.floor(px + w / 2).astype(int)
    r0 = np.floor(py + h / 2).astype(int)
    cols = c0[:, None] + offs[None, :]                      # (n, m)
    rows = r0[:, None] + offs[None, :]
    dx = (cols + 0.5 - w / 2) - px[:, None]
    dy = (rows + 0.5 - h / 2) - py[:, None]
    inside = dx[:, None, :] ** 2 + dy[:, :, None] ** 2 <= rad * rad   # (n, m_row, m_col)
    inside &= ((cols >= 0) & (cols < w))[:, None, :]
    inside &= ((rows >= 0) & (rows < h))[:, :, None]
    who, ri, ci = np.nonzero(inside)
    flat = rows[who, ri] * w + cols[who, ci]
    owner = np.full(h * w, -1)
    np.maximum.at(owner, flat, who)
    hit = owner >= 0
    img.reshape(-1, 3)[hit] = colors[owner[hit]]
    img.flags.writeable = False
    return img


# -- files ---------------------------------------------------------------------

def to_bytes(img: np.ndarray) -> np.ndarray:
    return np.clip(np.rint(np.asarray(img) * 255.0), 0, 255).astype(np.uint8)


def write_ppm(img: np.ndarray, path) -> None:
    """Binary PPM: ``P6``, width, height, 255, then RGB bytes row-major from the top."""
    data = to_bytes(img)
    h, w, _ = data.shape
    Path(path).write_bytes(f"P6\n{w} {h}\n255\n".encode("ascii") + data.tobytes())


_HEADER = re.compile(rb"P6(?:\s+|#[^\n]*\n)+(\d+)(?:\s+|#[^\n]*\n)+(\d+)(?:\s+|#[^\n]*\n)+(\d+)\s")


def parse_ppm(raw: bytes) -> np.ndarray:
    m = _HEADER.match(raw)
    if not m:
        raise MalformedImageError("not a binary PPM (P6) header")
    w, h, maxval = (int(v) for v in m.groups())
    if w <= 0 or h <= 0 or maxval != 255:
        raise MalformedImageError(f"unsupported PPM geometry {w}x{h} maxval {maxval}")
    body = raw[m.end():]
    need = w * h * 3
    if len(body) < need:
        raise MalformedImageError(f"truncated PPM: {len(body)} of {need} pixel bytes")
    arr = np.frombuffer(body[:need], dtype=np.uint8).reshape(h, w, 3)
    return arr.astype(float) / 255.0


def read_ppm(path) -> np.ndarray:
    return parse_ppm(Path(path).read_bytes())


def write_png(img: np.ndarray, path) -> None:
    from PIL import Image
    Image.fromarray(to_bytes(img), "RGB").save(path)


def write_image(img: np.ndarray, path) -> None:
    """Write by extension: ``.png`` through Pillow, anything else as PPM."""
    if str(path).lower().endswith(".png"):
        write_png(img, path)
    else:
        write_ppm(img, path)


def read_image(path) -> np.ndarray:
    if str(path).lower().endswith(".png"):
        from PIL import Image
        with Image.open(path) as im:
            return np.asarray(im.convert("RGB"), dtype=float) / 255.0
    return read_ppm(path)
