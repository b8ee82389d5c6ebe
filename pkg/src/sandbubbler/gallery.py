"""Named image presets illustrating each kind of symmetry breaking.

Each preset returns ``(label, pattern)`` panels; the CLI renders them to
files and a contact sheet.
"""

from __future__ import annotations

from .color import (RGB, RYB, AlternatePermutation, ColorBreakSpec, ColorPermutation,
                    FixedColor, WheelRemap, apply_color_permutation, break_color_symmetry,
                    color_by_slot)
from .pattern import GenConfig, Pattern, generate_pattern
from .symmetry import (BreakMode, BreakSpec, IsoKind, Isometry, apply_isometry, break_symmetry,
                       transform)

__all__ = ["GALLERIES", "gallery_panels"]


def _base(seed: int, burrows: int, center_spread: float = 0.35, shift: tuple = (0.0, 0.0)) -> Pattern:
    p = generate_pattern(GenConfig(burrow_count_range=(burrows, burrows), center_spread=center_spread,
                                   pellets_per_trench_range=(6, 14), seed=seed))
    if shift == (0.0, 0.0):
        return p
    return transform(p, Isometry(IsoKind.TRANSLATION, dx=shift[0], dy=shift[1]))


def fig1(seed: int = 7) -> list[tuple[str, Pattern]]:
    """Dichromatic reflection, broken by removal (top) and displacement (bottom)."""
    swap = ColorPermutation.parse("b / o", RYB)
    p = color_by_slot(_base(seed, 1, shift=(-60.0, 0.0)), [RYB.index("b")], RYB)
    refl = apply_isometry(p, Isometry(IsoKind.REFLECTION))
    refl = apply_color_permutation(refl, swap, RYB, refl.image_indices())
    panels = []
    for s in (0.0, 0.1, 0.3):
        panels.append((f"remove_s{s:.2f}", break_symmetry(refl, BreakSpec(s, seed=seed))))
    # reflection, then a color-preserving translation of the whole motif
    shifted = apply_isometry(refl, Isometry(IsoKind.TRANSLATION, dx=0.0, dy=-70.0))
    for s in (0.0, 0.1, 0.3):
        spec = BreakSpec(s, BreakMode.DISPLACE, displace_std=6.0, seed=seed)
        panels.append((f"displace_s{s:.2f}", break_symmetry(shifted, spec, refl.image_indices())))
    return panels


def fig3(seed: int = 3) -> list[tuple[str, Pattern]]:
    """Three primary burrows mirrored up-down onto their complements, broken toward tertiaries."""
    p = _base(seed, 3, center_spread=0.6)
    p = color_by_slot(p, [RYB.index(c) for c in ("r", "y", "b")], RYB)
    theta = ColorPermutation.parse("r y b / g p o", RYB)
    updown = Isometry(IsoKind.GLIDE, dx=0.0)
    full = apply_isometry(p, updown)
    full = apply_color_permutation(full, theta, RYB, full.image_indices())
    alt = AlternatePermutation(ColorPermutation.parse("r y b g p o / ch te vi ma ve am", RYB))
    return [(f"s{s:.2f}", break_color_symmetry(full, ColorBreakSpec(s, alt, seed), RYB))
            for s in (0.0, 0.15, 0.35, 0.55, 0.75, 0.95)]


def fig4(seed: int = 11) -> list[tuple[str, Pattern]]:
    """Point-symmetric motif on the left, glide-reflected to the right.

    Top row breaks the right half toward cyan on the RGB wheel; bottom row
    moves a growing fraction of an RYB-colored pattern onto the RGB wheel.
    """
    base = _base(seed, 3, center_spread=0.25)
    motif = apply_isometry(base, Isometry(IsoKind.ROTATION, n=2))
    motif = transform(motif, Isometry(IsoKind.TRANSLATION, dx=-64.0))
    full = apply_isometry(motif, Isometry(IsoKind.GLIDE, dx=128.0))
    k = len(base.burrows)
    # rotated burrows take the complementary slot; the glide preserves color
    slots = [(4 * (i % k) + 6 * ((i % (2 * k)) >= k)) % 12 for i in range(len(full.burrows))]
    right = full.image_indices()[k:]
    rgb = color_by_slot(full, slots, RGB)
    cyan = FixedColor(RGB.color(RGB.index("c")))
    panels = [(f"cyan_s{s:.2f}", break_color_symmetry(rgb, ColorBreakSpec(s, cyan, seed), scope=right))
              for s in (0.0, 0.25, 0.75)]
    ryb = color_by_slot(full, slots, RYB)
    remap = WheelRemap(RYB, RGB)
    panels += [(f"remap_s{s:.2f}", break_color_symmetry(ryb, ColorBreakSpec(s, remap, seed)))
               for s in (0.0, 0.5, 0.95)]
    return panels


GALLERIES = {"fig1": fig1, "fig3": fig3, "fig4": fig4}


def gallery_panels(name: str, seed: int | None = None) -> list[tuple[str, Pattern]]:
    try:
        fn = GALLERIES[name]
    except KeyError:
        raise ValueError(f"unknown gallery {name!r}; choose from {', '.join(GALLERIES)}") from None
    return fn() if seed is None else fn(seed)
