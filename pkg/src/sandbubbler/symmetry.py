"""Isometric images of burrows and pattern-symmetry breaking.

Coordinates are taken in the canvas-centered frame, so the reflection axis
and the rotation center sit in the middle of the rendered image.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .pattern import Burrow, Pattern, Pellet, Point2, Trench
from .rng import Rng

__all__ = [
    "IsoKind", "Isometry", "BreakMode", "BreakSpec",
    "apply_isometry", "transform", "break_symmetry", "affected_count", "choose_pellets",
]


class IsoKind(str, Enum):
    REFLECTION = "reflection"
    ROTATION = "rotation"
    TRANSLATION = "translation"
    GLIDE = "glide"


@dataclass(frozen=True)
class Isometry:
    kind: IsoKind
    n: int = 2
    dx: float = 0.0
    dy: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "kind", IsoKind(self.kind))
        if self.kind is IsoKind.ROTATION and self.n < 2:
            raise ValueError("rotation order must be at least 2")
        if not all(math.isfinite(v) for v in (self.dx, self.dy)):
            raise ValueError("isometry parameters must be finite")

    @property
    def order(self) -> int:
        """Order of the cyclic group the map generates (0 when infinite)."""
        if self.kind is IsoKind.REFLECTION:
            return 2
        if self.kind is IsoKind.ROTATION:
            return self.n
        if self.kind is IsoKind.GLIDE and self.dx == 0.0:
            return 2
        return 1 if self.dx == self.dy == 0.0 else 0

    def point(self, x: float, y: float) -> tuple[float, float]:
        k = self.kind
        if k is IsoKind.REFLECTION:
            return -x, y
        if k is IsoKind.ROTATION:
            a = 2.0 * math.pi / self.n
            c, s = math.cos(a), math.sin(a)
            return x * c - y * s, x * s + y * c
        if k is IsoKind.TRANSLATION:
            return x + self.dx, y + self.dy
        return x + self.dx, -y

    def angle(self, theta: float) -> float:
        k = self.kind
        if k is IsoKind.REFLECTION:
            return math.pi - theta
        if k is IsoKind.ROTATION:
            return theta + 2.0 * math.pi / self.n
        if k is IsoKind.TRANSLATION:
            return theta
        return -theta


def _image_burrow(b: Burrow, iso: Isometry, src: int) -> Burrow:
    trenches = []
    for t in b.trenches:
        pellets = tuple(replace(p, position=Point2(*iso.point(*p.position))) for p in t.pellets)
        trenches.append(Trench(iso.angle(t.angle), pellets, t.radial_coords))
    return Burrow(Point2(*iso.point(*b.center)), tuple(trenches), image_of=src)


def transform(p: Pattern, iso: Isometry) -> Pattern:
    """Map every burrow in place (no originals kept, provenance unchanged)."""
    return Pattern(tuple(replace(_image_burrow(b, iso, 0), image_of=b.image_of) for b in p.burrows))


def apply_isometry(p: Pattern, iso: Isometry, burrows: Iterable[int] | None = None) -> Pattern:
    """Append the image of each selected burrow (default: every burrow).

    Originals are kept and come first, so images are drawn over them.
    Image pellets keep their source colors.
    """
    if not p.burrows:
        raise ValueError("cannot apply an isometry to an empty pattern")
    idx = range(len(p.burrows)) if burrows is None else burrows
    return Pattern(p.burrows + tuple(_image_burrow(p.burrows[i], iso, i) for i in idx))


class BreakMode(str, Enum):
    REMOVE = "remove"
    DISPLACE = "displace"


@dataclass(frozen=True)
class BreakSpec:
    rate: float
    mode: BreakMode = BreakMode.REMOVE
    displace_std: float = 0.0
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "mode", BreakMode(self.mode))
        if not 0.0 <= self.rate <= 1.0:
            raise ValueError(f"breaking rate {self.rate} outside [0, 1]")
        if self.displace_std < 0:
            raise ValueError("displace_std must be non-negative")


def affected_count(rate: float, total: int) -> int:
    """``ceil(rate * total)``, with products within 1e-9 of an integer snapped.

    Without the snap, decimal rates such as 0.07 (stored slightly above 7/100)
    would round 7.0000000000000006 up to 8.
    """
    x = Fraction(rate) * total
    near = round(x)
    if abs(x - near) <= Fraction(1, 10**9) * max(1, total):
        return int(near)
    return math.ceil(x)


def choose_pellets(pattern: Pattern, scope, rate: float, seed: int):
    """Choose the affected pellet indices within ``scope``; returns the rng too."""
    chosen = set(range(len(pattern.burrows)) if scope is None else scope)
    pool = [ix for ix, _ in pattern.pellets() if ix[0] in chosen]
    rng = Rng(seed)
    hit = [pool[i] for i in rng.sample(len(pool), affected_count(rate, len(pool)))]
    return rng, hit


def break_symmetry(p: Pattern, spec: BreakSpec, scope: Iterable[int] | None = None) -> Pattern:
    """Remove or jitter ``ceil(rate * n)`` randomly chosen pellets of ``scope``.

    ``scope`` is a collection of burrow indices; ``None`` means the whole pattern.
    Remove mode marks pellets invisible, Displace mode adds independent
    Gaussian offsets with standard deviation ``spec.displace_std``.
    """
    rng, hit = choose_pellets(p, scope, spec.rate, spec.seed)
    if not hit:
        return p
    if spec.mode is BreakMode.REMOVE:
        edits = {ix: None for ix in hit}
    else:
        # offsets drawn in selection order so the result is seed-stable
        edits = {ix: (rng.normal(0.0, spec.displace_std), rng.normal(0.0, spec.displace_std))
                 for ix in hit}

    def edit(ix, pel: Pellet) -> Pellet:
        if ix not in edits:
            return pel
        off = edits[ix]
        if off is None:
            return replace(pel, visible=False)
        return replace(pel, position=Point2(pel.position.x + off[0], pel.position.y + off[1]))

    return p.map_pellets(edit, {ix[0] for ix in hit})
