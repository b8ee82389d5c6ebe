"""Sand-bubbler pellet patterns.

A pattern is a set of burrows; each burrow radiates trenches, and each trench
holds pellets placed at increasing radial distance with Gaussian jitter.
All containers are frozen dataclasses holding tuples, so patterns can be
shared freely; transformations build new patterns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterator, NamedTuple

from .rng import Rng

__all__ = [
    "Point2", "Rgb", "Pellet", "Trench", "Burrow", "Pattern", "GenConfig",
    "ConfigError", "pellet_position", "generate_pattern",
    "dump_pattern", "load_pattern", "save_pattern", "read_pattern",
]


class ConfigError(ValueError):
    """Invalid generation or experiment configuration."""


class Point2(NamedTuple):
    x: float
    y: float


class Rgb(NamedTuple):
    r: float
    g: float
    b: float

    def check(self) -> "Rgb":
        if not all(0.0 <= c <= 1.0 for c in self):
            raise ValueError(f"color channel outside [0, 1]: {tuple(self)}")
        return self


GREY = Rgb(0.5, 0.5, 0.5)


@dataclass(frozen=True, slots=True)
class Pellet:
    position: Point2
    color: Rgb = GREY
    visible: bool = True


@dataclass(frozen=True, slots=True)
class Trench:
    angle: float
    pellets: tuple[Pellet, ...]
    radial_coords: tuple[float, ...]

    def __post_init__(self):
        rc = self.radial_coords
        if any(b <= a for a, b in zip(rc, rc[1:])):
            raise ValueError("radial_coords must be strictly increasing")


@dataclass(frozen=True, slots=True)
class Burrow:
    center: Point2
    trenches: tuple[Trench, ...]
    #: index of the burrow this one is an isometric image of, if any
    image_of: int | None = None

    def __post_init__(self):
        if not self.trenches:
            raise ValueError("a burrow needs at least one trench")


@dataclass(frozen=True, slots=True)
class Pattern:
    burrows: tuple[Burrow, ...] = ()

    @property
    def pellet_count(self) -> int:
        """Total pellet count, the I_Sigma of the generator."""
        return sum(len(t.pellets) for b in self.burrows for t in b.trenches)

    def pellets(self) -> Iterator[tuple[tuple[int, int, int], Pellet]]:
        """Yield ``((burrow, trench, pellet), pellet)`` in draw order."""
        for i, b in enumerate(self.burrows):
            for j, t in enumerate(b.trenches):
                for k, p in enumerate(t.pellets):
                    yield (i, j, k), p

    def image_indices(self) -> list[int]:
        return [i for i, b in enumerate(self.burrows) if b.image_of is not None]

    def map_pellets(self, fn, burrows=None) -> "Pattern":
        """Return a copy with ``fn(index, pellet)`` applied to pellets of ``burrows``.

        ``fn`` returns the replacement pellet.  ``burrows=None`` means all.
        """
        chosen = range(len(self.burrows)) if burrows is None else set(burrows)
        out = []
        for i, b in enumerate(self.burrows):
            if i not in chosen:
                out.append(b)
                continue
            trenches = tuple(
                replace(t, pellets=tuple(fn((i, j, k), p) for k, p in enumerate(t.pellets)))
                for j, t in enumerate(b.trenches)
            )
            out.append(replace(b, trenches=trenches))
        return Pattern(tuple(out))


@dataclass(frozen=True)
class GenConfig:
    """Generation parameters.

    Ranges are closed integer intervals ``(lo, hi)``.  ``radial_step=None``
    sizes the step so the longest possible trench spans 40 % of the canvas,
    and ``noise_std=None`` means 0.3 radial steps.
    """

    burrow_count_range: tuple[int, int] = (1, 4)
    trenches_per_burrow_range: tuple[int, int] = (6, 12)
    pellets_per_trench_range: tuple[int, int] = (8, 20)
    noise_mean: float = 0.0
    noise_std: float | None = None
    radial_step: float | None = None
    canvas_extent: float = 256.0
    #: burrow centers are drawn uniformly from a centered square of this
    #: fraction of the canvas extent
    center_spread: float = 0.5
    #: angular span of a burrow's trenches; 2*pi gives a full circle
    trench_arc: float = 1.2 * math.pi
    seed: int = 0

    def __post_init__(self):
        for name in ("burrow_count_range", "trenches_per_burrow_range",
                     "pellets_per_trench_range"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ConfigError(f"{name} is empty: [{lo}, {hi}]")
            if lo < 0 or (lo < 1 and name != "pellets_per_trench_range"):
                raise ConfigError(f"{name} has an invalid lower bound {lo}")
        if self.step <= 0:
            raise ConfigError("radial_step must be positive")
        if self.std < 0:
            raise ConfigError("noise_std must be non-negative")
        if self.canvas_extent <= 0:
            raise ConfigError("canvas_extent must be positive")

    @property
    def step(self) -> float:
        if self.radial_step is not None:
            return self.radial_step
        return 0.4 * self.canvas_extent / max(self.pellets_per_trench_range[1], 1)

    @property
    def std(self) -> float:
        return 0.3 * self.step if self.noise_std is None else self.noise_std


def pellet_position(burrow_center: Point2, theta: float, r: float,
                    noise: tuple[float, float] = (0.0, 0.0)) -> Point2:
    if r < 0:
        raise ValueError("radial coordinate must be non-negative")
    x0, y0 = burrow_center
    return Point2(x0 + r * math.cos(theta) + noise[0],
                  y0 + r * math.sin(theta) + noise[1])


def generate_pattern(cfg: GenConfig) -> Pattern:
    """Draw a pattern; a pure function of ``cfg`` including its seed.

    Pellets get the neutral grey placeholder color; coloring is a separate step.
    """
    rng = Rng(cfg.seed)
    half = 0.5 * cfg.center_spread * cfg.canvas_extent
    mu, sd, step = cfg.noise_mean, cfg.std, cfg.step
    burrows = []
    for _ in range(rng.integer(*cfg.burrow_count_range)):
        center = Point2(rng.uniform(-half, half), rng.uniform(-half, half))
        n_trench = rng.integer(*cfg.trenches_per_burrow_range)
        start = rng.uniform(0.0, 2.0 * math.pi)
        angles = sorted(start + rng.uniform(0.0, cfg.trench_arc) for _ in range(n_trench))
        trenches = []
        for theta in angles:
            radii = tuple(step * (k + 1) for k in range(rng.integer(*cfg.pellets_per_trench_range)))
            pellets = tuple(
                Pellet(pellet_position(center, theta, r, (rng.normal(mu, sd), rng.normal(mu, sd))))
                for r in radii
            )
            trenches.append(Trench(theta, pellets, radii))
        burrows.append(Burrow(center, tuple(trenches)))
    return Pattern(tuple(burrows))


# -- text format -------------------------------------------------------------
#
#   burrow <i> <cx> <cy> <image_of|->
#   trench <i> <j> <angle> <r_1,r_2,...>
#   <i> <j> <k> <x> <y> <r> <g> <b> <visible 0|1>
#
# Floats are written with repr() so a dump/load round trip is exact.

def dump_pattern(p: Pattern) -> str:
    lines = ["# sandbubbler pattern v1"]
    for i, b in enumerate(p.burrows):
        src = "-" if b.image_of is None else str(b.image_of)
        lines.append(f"burrow {i} {b.center.x!r} {b.center.y!r} {src}")
        for j, t in enumerate(b.trenches):
            radii = ",".join(repr(r) for r in t.radial_coords) or "-"
            lines.append(f"trench {i} {j} {t.angle!r} {radii}")
            for k, pel in enumerate(t.pellets):
                (x, y), (r, g, bl) = pel.position, pel.color
                lines.append(f"{i} {j} {k} {x!r} {y!r} {r!r} {g!r} {bl!r} {int(pel.visible)}")
    return "\n".join(lines) + "\n"


def load_pattern(text: str) -> Pattern:
    burrows: list[dict] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        f = line.split()
        try:
            if f[0] == "burrow":
                burrows.append({"center": Point2(float(f[2]), float(f[3])),
                                "image_of": None if f[4] == "-" else int(f[4]),
                                "trenches": []})
            elif f[0] == "trench":
                radii = () if f[4] == "-" else tuple(float(v) for v in f[4].split(","))
                burrows[int(f[1])]["trenches"].append([float(f[3]), [], radii])
            else:
                i, j = int(f[0]), int(f[1])
                pel = Pellet(Point2(float(f[3]), float(f[4])),
                             Rgb(float(f[5]), float(f[6]), float(f[7])), f[8] == "1")
                burrows[i]["trenches"][j][1].append(pel)
        except (IndexError, ValueError) as exc:
            raise ValueError(f"line {lineno}: malformed pattern record {raw!r}") from exc
    return Pattern(tuple(
        Burrow(b["center"], tuple(Trench(a, tuple(ps), rc) for a, ps, rc in b["trenches"]),
               b["image_of"])
        for b in burrows
    ))


def save_pattern(p: Pattern, path) -> None:
    Path(path).write_text(dump_pattern(p))


def read_pattern(path) -> Pattern:
    return load_pattern(Path(path).read_text())
