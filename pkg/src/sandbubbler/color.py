"""Twelve-slot color wheels, color permutations and color-symmetry breaking.

Slot colors are compared by exact equality, so patterns that are to be
permuted must be colored from a wheel (``color_by_slot``), never by
approximate values.
"""

from __future__ import annotations

import colorsys
from dataclasses import dataclass, replace
from typing import Iterable, Mapping, Sequence

from .pattern import Pattern, Pellet, Rgb
from .symmetry import choose_pellets

__all__ = [
    "ColorWheel", "ColorPermutation", "RYB", "RGB", "wheel_by_name",
    "complementary", "apply_color_permutation", "color_by_slot",
    "AlternatePermutation", "RandomRgbShift", "FixedColor", "WheelRemap",
    "ColorBreakSpec", "break_color_symmetry", "validate_homomorphism",
    "OffWheelColor",
]


class OffWheelColor(ValueError):
    """A pellet color is not one of the wheel's slot colors."""


@dataclass(frozen=True)
class ColorWheel:
    kind: str
    slots: tuple[tuple[str, Rgb], ...]

    def __post_init__(self):
        names = [n for n, _ in self.slots]
        if len(self.slots) != 12 or len(set(names)) != 12:
            raise ValueError("a color wheel has exactly 12 uniquely named slots")

    def __len__(self):
        return 12

    def color(self, slot: int) -> Rgb:
        return self.slots[slot][1]

    def name(self, slot: int) -> str:
        return self.slots[slot][0]

    def index(self, name: str) -> int:
        for i, (n, _) in enumerate(self.slots):
            if n == name:
                return i
        raise KeyError(f"{self.kind} wheel has no slot named {name!r}")

    def slot_of(self, color: Rgb) -> int | None:
        for i, (_, c) in enumerate(self.slots):
            if c == color:
                return i
        return None


def _hex(h: str) -> Rgb:
    return Rgb(*(int(h[i:i + 2], 16) / 255 for i in (0, 2, 4)))


# Artist's RYB wheel; values follow the widely used 12-hue RYB chart.
RYB = ColorWheel("RYB", (
    ("r", _hex("FE2712")),   # red
    ("ve", _hex("FC600A")),  # vermillion
    ("o", _hex("FB9902")),   # orange
    ("am", _hex("FCCC1A")),  # amber
    ("y", _hex("FEFE33")),   # yellow
    ("ch", _hex("B2D732")),  # chartreuse
    ("g", _hex("66B032")),   # green
    ("te", _hex("347C98")),  # teal
    ("b", _hex("0247FE")),   # blue
    ("vi", _hex("4424D6")),  # violet
    ("p", _hex("8601AF")),   # purple
    ("ma", _hex("C21460")),  # magenta
))

# Light wheel: hue k*30 degrees at full saturation and value.
_RGB_NAMES = ("r", "o", "y", "ch", "g", "sg", "c", "az", "b", "vi", "m", "ro")
RGB = ColorWheel("RGB", tuple(
    (name, Rgb(*colorsys.hsv_to_rgb(k / 12, 1.0, 1.0))) for k, name in enumerate(_RGB_NAMES)
))

RYB_NAMES = {
    "r": "red", "ve": "vermillion", "o": "orange", "am": "amber", "y": "yellow",
    "ch": "chartreuse", "g": "green", "te": "teal", "b": "blue", "vi": "violet",
    "p": "purple", "ma": "magenta",
}


def wheel_by_name(name: str) -> ColorWheel:
    try:
        return {"RYB": RYB, "RGB": RGB}[name.upper()]
    except KeyError:
        raise ValueError(f"unknown color wheel {name!r}") from None


def complementary(wheel: ColorWheel, slot: int) -> int:
    if not 0 <= slot < 12:
        raise ValueError(f"slot {slot} outside 0..11")
    return (slot + 6) % 12


class ColorPermutation:
    """A bijection on a set of wheel slots; slots outside the domain are fixed."""

    def __init__(self, mapping: Mapping[int, int]):
        m = {int(k): int(v) for k, v in mapping.items()}
        if set(m) != set(m.values()):
            raise ValueError(f"not a bijection on its domain: {m}")
        self.mapping = m

    @classmethod
    def from_partial(cls, mapping: Mapping[int, int]) -> "ColorPermutation":
        """Close an injective partial map into a permutation.

        Each chain ``a -> ... -> z`` that leaves the domain is closed by
        sending ``z`` back to ``a``; ``{r: ch}`` becomes the swap ``(r ch)``.
        """
        m = dict(mapping)
        if len(set(m.values())) != len(m):
            raise ValueError(f"map is not injective: {m}")
        out = dict(m)
        for start in set(m) - set(m.values()):
            end = start
            while end in m:
                end = m[end]
            out[end] = start
        return cls(out)

    @classmethod
    def identity(cls) -> "ColorPermutation":
        return cls({})

    @classmethod
    def parse(cls, text: str, wheel: ColorWheel) -> "ColorPermutation":
        """Read two-line notation such as ``"r y b / g p o"``."""
        try:
            top, bottom = (part.split() for part in text.split("/"))
        except ValueError:
            raise ValueError(f"expected 'sources / targets', got {text!r}") from None
        if len(top) != len(bottom):
            raise ValueError(f"two-line notation rows differ in length: {text!r}")
        return cls.from_partial({wheel.index(a): wheel.index(b) for a, b in zip(top, bottom)})

    def __call__(self, slot: int) -> int:
        return self.mapping.get(slot, slot)

    def __eq__(self, other):
        if not isinstance(other, ColorPermutation):
            return NotImplemented
        dom = set(self.mapping) | set(other.mapping)
        return all(self(s) == other(s) for s in dom)

    def __repr__(self):
        return f"ColorPermutation({self.mapping})"

    @property
    def domain(self) -> set[int]:
        return set(self.mapping)

    def inverse(self) -> "ColorPermutation":
        return ColorPermutation({v: k for k, v in self.mapping.items()})

    def compose(self, other: "ColorPermutation") -> "ColorPermutation":
        """``self after other``."""
        dom = self.domain | other.domain
        return ColorPermutation({s: self(other(s)) for s in dom})

    def power(self, n: int) -> "ColorPermutation":
        out = ColorPermutation.identity()
        for _ in range(n):
            out = self.compose(out)
        return out

    def is_identity(self) -> bool:
        return all(k == v for k, v in self.mapping.items())

    def two_line(self, wheel: ColorWheel) -> str:
        keys = sorted(self.mapping)
        return (" ".join(wheel.name(k) for k in keys) + " / "
                + " ".join(wheel.name(self.mapping[k]) for k in keys))


def validate_homomorphism(iso_order: int, perm: ColorPermutation) -> bool:
    """True when ``perm`` repeated ``iso_order`` times is the identity."""
    if iso_order < 1:
        raise ValueError("isometry order must be at least 1")
    return perm.power(iso_order).is_identity()


def _scope_set(p: Pattern, scope):
    return set(range(len(p.burrows))) if scope is None else set(scope)


def _slot(wheel: ColorWheel, ix, pel: Pellet) -> int:
    s = wheel.slot_of(pel.color)
    if s is None:
        raise OffWheelColor(f"pellet {ix} has color {tuple(pel.color)} not on the {wheel.kind} wheel")
    return s


def color_by_slot(p: Pattern, slots: Mapping[int, int] | Sequence[int], wheel: ColorWheel) -> Pattern:
    """Paint every pellet of burrow ``i`` with wheel slot ``slots[i]``."""
    lookup = dict(enumerate(slots)) if not isinstance(slots, Mapping) else dict(slots)
    return p.map_pellets(lambda ix, pel: replace(pel, color=wheel.color(lookup[ix[0]])),
                         lookup.keys())


def apply_color_permutation(p: Pattern, perm: ColorPermutation, wheel: ColorWheel,
                            scope: Iterable[int] | None = None) -> Pattern:
    def recolor(ix, pel):
        return replace(pel, color=wheel.color(perm(_slot(wheel, ix, pel))))
    return p.map_pellets(recolor, _scope_set(p, scope))


# -- breaking strategies -------------------------------------------------------

@dataclass(frozen=True)
class AlternatePermutation:
    """Recolor through another slot permutation."""
    perm: ColorPermutation


@dataclass(frozen=True)
class RandomRgbShift:
    """Replace the color with an independent uniform draw on the RGB cube."""


@dataclass(frozen=True)
class FixedColor:
    color: Rgb


@dataclass(frozen=True)
class WheelRemap:
    """Move a slot color to the same slot index of another wheel."""
    source: ColorWheel
    target: ColorWheel


@dataclass(frozen=True)
class ColorBreakSpec:
    rate: float
    strategy: object = RandomRgbShift()
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.rate <= 1.0:
            raise ValueError(f"breaking rate {self.rate} outside [0, 1]")


def break_color_symmetry(p: Pattern, spec: ColorBreakSpec, wheel: ColorWheel | None = None,
                         scope: Iterable[int] | None = None) -> Pattern:
    """Recolor ``ceil(rate * n)`` randomly chosen pellets of ``scope``.

    Positions and visibility are never touched.  ``wheel`` is needed only by
    :class:`AlternatePermutation`.
    """
    rng, hit = choose_pellets(p, None if scope is None else list(scope), spec.rate, spec.seed)
    if not hit:
        return p
    st = spec.strategy
    if isinstance(st, RandomRgbShift):
        draws = rng.uniforms(3 * len(hit))
        new = {ix: Rgb(float(draws[3 * n]), float(draws[3 * n + 1]), float(draws[3 * n + 2]))
               for n, ix in enumerate(hit)}
        fn = lambda ix, pel: new[ix]  # noqa: E731
    elif isinstance(st, FixedColor):
        fn = lambda ix, pel: st.color  # noqa: E731
    elif isinstance(st, AlternatePermutation):
        if wheel is None:
            raise ValueError("AlternatePermutation needs the color wheel")
        fn = lambda ix, pel: wheel.color(st.perm(_slot(wheel, ix, pel)))  # noqa: E731
    elif isinstance(st, WheelRemap):
        fn = lambda ix, pel: st.target.color(_slot(st.source, ix, pel))  # noqa: E731
    else:
        raise TypeError(f"unknown color-breaking strategy {st!r}")

    hits = set(hit)

    def edit(ix, pel):
        return replace(pel, color=fn(ix, pel)) if ix in hits else pel

    return p.map_pellets(edit, {ix[0] for ix in hit})
