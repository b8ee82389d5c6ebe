"""Batch sweeps of aesthetic measures against the symmetry-breaking rate.

A sweep draws ``images_per_sigma`` random patterns for every rate, colors
their pellets uniformly on the RGB cube, adds the isometric image burrows,
breaks pattern or color symmetry at the rate, renders and measures.  Every
image has its own seed derived from ``(seed, sigma index, image index)``, so
any single image can be regenerated without running the batch.

Configuration files are flat ``key = value`` text; see :data:`KEYS`.
"""

from __future__ import annotations

import configparser
import csv
import io
import logging
import math
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .color import ColorBreakSpec, FixedColor, RandomRgbShift, break_color_symmetry
from .measures import ALPHA, bfl, intensity, sym
from .pattern import ConfigError, GenConfig, Pattern, Rgb, generate_pattern
from .raster import CanvasConfig, render
from .rng import Rng, child_seed
from .symmetry import BreakMode, BreakSpec, IsoKind, Isometry, apply_isometry, break_symmetry

log = logging.getLogger(__name__)

__all__ = [
    "SweepConfig", "SweepResult", "SweepError", "run_sweep", "build_image",
    "parse_config", "load_config", "PRESETS", "preset", "CSV_HEADER", "KEYS",
]

CSV_HEADER = ("sigma", "measure", "g", "mean", "std")


class SweepError(RuntimeError):
    """A single image of a sweep failed; carries its (sigma, index) address."""


@dataclass(frozen=True)
class SweepConfig:
    axis: str = "pattern"
    sigma_values: tuple[float, ...] = tuple(np.linspace(0.0, 1.0, 21).tolist())
    images_per_sigma: int = 100
    isometry: Isometry = Isometry(IsoKind.REFLECTION, n=2, dx=128.0, dy=0.0)
    break_mode: BreakMode = BreakMode.REMOVE
    displace_std: float = 0.0
    #: "image" breaks only the isometric copies, "all" the whole pattern
    break_scope: str = "image"
    color_strategy: object = RandomRgbShift()
    gen: GenConfig = GenConfig()
    canvas: CanvasConfig = CanvasConfig()
    gs: tuple[int, ...] = (2,)
    bfl: bool = False
    alpha: float = ALPHA
    seed: int = 0
    jobs: int = 1

    def __post_init__(self):
        if self.axis not in ("pattern", "color"):
            raise ConfigError(f"axis must be 'pattern' or 'color', not {self.axis!r}")
        s = list(self.sigma_values)
        if not s or s != sorted(s) or s[0] < 0 or s[-1] > 1:
            raise ConfigError("sigma_values must be sorted within [0, 1]")
        if self.images_per_sigma < 1:
            raise ConfigError("images_per_sigma must be positive")
        if self.break_scope not in ("image", "all"):
            raise ConfigError(f"break_scope must be 'image' or 'all', not {self.break_scope!r}")
        if not self.gs and not self.bfl:
            raise ConfigError("no measures requested")
        for g in self.gs:
            if g < 2 or self.canvas.width % g or self.canvas.height % g:
                raise ConfigError(f"grid g={g} does not divide the canvas")

    @property
    def measures(self) -> list[tuple[str, int | None]]:
        out: list[tuple[str, int | None]] = [("SYM", g) for g in self.gs]
        if self.bfl:
            out.append(("BFL", None))
        return out


@dataclass
class SweepResult:
    sigmas: tuple[float, ...]
    measures: list[tuple[str, int | None]]
    means: np.ndarray          # (n_sigma, n_measure)
    stds: np.ndarray
    samples: np.ndarray | None = field(default=None, repr=False)   # (n_sigma, n_image, n_measure)

    def series(self, name: str, g: int | None = None) -> np.ndarray:
        return self.means[:, self.measures.index((name, g))]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for m, (name, g) in enumerate(self.measures):
            for i, s in enumerate(self.sigmas):
                w.writerow([repr(float(s)), name, "" if g is None else g,
                            repr(float(self.means[i, m])), repr(float(self.stds[i, m]))])
        return buf.getvalue()

    def write_csv(self, path) -> None:
        Path(path).write_text(self.to_csv())


def colored_pattern(cfg: SweepConfig, img_seed: int) -> Pattern:
    """Base pattern with uniform random RGB pellets (before any isometry)."""
    p = generate_pattern(replace(cfg.gen, seed=child_seed(img_seed, 0)))
    rng = Rng(child_seed(img_seed, 1))
    return p.map_pellets(lambda ix, pel: replace(
        pel, color=Rgb(rng.uniform(), rng.uniform(), rng.uniform())))


def build_image(cfg: SweepConfig, sigma_index: int, image_index: int) -> tuple[Pattern, np.ndarray]:
    sigma = cfg.sigma_values[sigma_index]
    img_seed = child_seed(cfg.seed, sigma_index, image_index)
    p = apply_isometry(colored_pattern(cfg, img_seed), cfg.isometry)
    scope = p.image_indices() if cfg.break_scope == "image" else None
    if cfg.axis == "pattern":
        spec = BreakSpec(sigma, cfg.break_mode, cfg.displace_std, child_seed(img_seed, 2))
        p = break_symmetry(p, spec, scope)
    else:
        spec = ColorBreakSpec(sigma, cfg.color_strategy, child_seed(img_seed, 2))
        p = break_color_symmetry(p, spec, scope=scope)
    return p, render(p, cfg.canvas)


def _measure_one(cfg: SweepConfig, si: int, ii: int) -> list[float]:
    try:
        _, img = build_image(cfg, si, ii)
        f = intensity(img)
        vals = [sym(f, g, cfg.alpha) for g in cfg.gs]
        if cfg.bfl:
            vals.append(bfl(img))
        return vals
    except Exception as exc:
        raise SweepError(f"sweep failed at sigma={cfg.sigma_values[si]!r} "
                         f"(index {si}), image {ii}: {exc}") from exc


def _measure_batch(args) -> list[list[float]]:
    cfg, si = args
    return [_measure_one(cfg, si, ii) for ii in range(cfg.images_per_sigma)]


def run_sweep(cfg: SweepConfig, progress: Callable[[int, int], None] | None = None) -> SweepResult:
    """Run the sweep; results depend on ``cfg`` only, not on ``cfg.jobs``."""
    tasks = [(cfg, si) for si in range(len(cfg.sigma_values))]
    if cfg.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(cfg.jobs) as ex:
            batches = list(ex.map(_measure_batch, tasks))
    else:
        batches = []
        for si, task in enumerate(tasks):
            batches.append(_measure_batch(task))
            if progress:
                progress(si + 1, len(tasks))
    samples = np.array(batches, dtype=float)           # (sigma, image, measure)
    ddof = 1 if cfg.images_per_sigma > 1 else 0
    return SweepResult(tuple(cfg.sigma_values), cfg.measures,
                       samples.mean(axis=1), samples.std(axis=1, ddof=ddof), samples)


# -- config files ----------------------------------------------------------------

KEYS = {
    "axis": "pattern | color",
    "sigma_values": "comma list of rates, or 'linspace LO HI N'",
    "images_per_sigma": "images per rate (default 100)",
    "isometry": "reflection | rotation | translation | glide",
    "rotation_n": "rotation order (default 2)",
    "dx": "translation / glide x offset, world units (default 128, half the canvas)",
    "dy": "translation y offset (default 0)",
    "break_mode": "remove | displace",
    "displace_std": "Gaussian std of displacements, world units",
    "break_scope": "image | all",
    "color_strategy": "random | fixed",
    "fixed_color": "r,g,b for color_strategy = fixed",
    "g": "comma list of grid subdivisions (2, 4, 8); empty for none",
    "bfl": "yes | no",
    "alpha": "similarity threshold (default 0.05)",
    "seed": "master seed",
    "jobs": "worker processes",
    "burrows": "burrow count range LO-HI",
    "trenches": "trenches per burrow LO-HI",
    "pellets": "pellets per trench LO-HI",
    "noise_mean": "pellet jitter mean",
    "noise_std": "pellet jitter std",
    "radial_step": "pellet spacing along a trench",
    "canvas_extent": "world size of the generation canvas",
    "center_spread": "burrow centers lie in this fraction of the canvas",
    "trench_arc": "angular span of trenches in units of pi",
    "width": "image width in pixels",
    "height": "image height in pixels",
    "pellet_radius": "disc radius in pixels",
    "background": "r,g,b background color",
}


def _range(v: str) -> tuple[int, int]:
    lo, _, hi = v.partition("-")
    return int(lo), int(hi or lo)


def _floats(v: str) -> tuple[float, ...]:
    return tuple(float(x) for x in v.split(",") if x.strip())


def _bool(v: str) -> bool:
    if v.lower() in ("1", "yes", "true", "on"):
        return True
    if v.lower() in ("0", "no", "false", "off"):
        return False
    raise ValueError(f"not a boolean: {v!r}")


def _sigmas(v: str) -> tuple[float, ...]:
    parts = v.split()
    if parts and parts[0] == "linspace":
        lo, hi, n = float(parts[1]), float(parts[2]), int(parts[3])
        return tuple(np.linspace(lo, hi, n).tolist())
    return _floats(v)


def parse_config(text: str, overrides: dict[str, str] | None = None) -> SweepConfig:
    cp = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#",))
    try:
        cp.read_string("[sweep]\n" + text)
    except configparser.Error as exc:
        raise ConfigError(f"unreadable config: {exc}") from None
    kv = dict(cp["sweep"])
    kv.update({k.lower(): v for k, v in (overrides or {}).items()})
    unknown = set(kv) - set(KEYS)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
    try:
        return _build(kv)
    except ConfigError:
        raise
    except (ValueError, TypeError) as exc:
        raise ConfigError(str(exc)) from None


def _build(kv: dict[str, str]) -> SweepConfig:
    gen_kw, canvas_kw, kw = {}, {}, {}
    get = kv.get
    for key, name in (("burrows", "burrow_count_range"), ("trenches", "trenches_per_burrow_range"),
                      ("pellets", "pellets_per_trench_range")):
        if key in kv:
            gen_kw[name] = _range(kv[key])
    for key in ("noise_mean", "noise_std", "radial_step", "canvas_extent", "center_spread"):
        if key in kv:
            gen_kw[key] = float(kv[key])
    if "trench_arc" in kv:
        gen_kw["trench_arc"] = float(kv["trench_arc"]) * math.pi
    for key in ("width", "height"):
        if key in kv:
            canvas_kw[key] = int(kv[key])
    if "pellet_radius" in kv:
        canvas_kw["pellet_radius"] = float(kv["pellet_radius"])
    if "background" in kv:
        canvas_kw["background"] = Rgb(*_floats(kv["background"])).check()
    gen = GenConfig(**gen_kw)
    canvas_kw.setdefault("world_extent", gen.canvas_extent)
    canvas = CanvasConfig(**canvas_kw)

    iso = Isometry(IsoKind(get("isometry", "reflection")), n=int(get("rotation_n", 2)),
                   dx=float(get("dx", 0.5 * gen.canvas_extent)), dy=float(get("dy", 0.0)))
    strategy = get("color_strategy", "random")
    if strategy == "random":
        color = RandomRgbShift()
    elif strategy == "fixed":
        color = FixedColor(Rgb(*_floats(get("fixed_color", "0,1,1"))).check())
    else:
        raise ConfigError(f"unknown color_strategy {strategy!r}")
    if "sigma_values" in kv:
        kw["sigma_values"] = _sigmas(kv["sigma_values"])
    if "g" in kv:
        kw["gs"] = tuple(int(x) for x in kv["g"].split(",") if x.strip())
    if "bfl" in kv:
        kw["bfl"] = _bool(kv["bfl"])
    for key in ("images_per_sigma", "seed", "jobs"):
        if key in kv:
            kw[key] = int(kv[key])
    for key in ("displace_std", "alpha"):
        if key in kv:
            kw[key] = float(kv[key])
    for key in ("axis", "break_scope"):
        if key in kv:
            kw[key] = kv[key]
    if "break_mode" in kv:
        kw["break_mode"] = BreakMode(kv["break_mode"])
    return SweepConfig(isometry=iso, color_strategy=color, gen=gen, canvas=canvas, **kw)


def load_config(path, overrides: dict[str, str] | None = None) -> SweepConfig:
    return parse_config(Path(path).read_text(), overrides)


# Standard measure sweeps: SYM4 / SYM16 on each axis, and SYM4+SYM16+BFL.
# Isometries use rotation order 2 and a half-canvas glide/translation.
PRESETS: dict[str, str] = {
    "fig5a": "axis = pattern\ng = 2\nbfl = no\n",
    "fig5b": "axis = color\ng = 2\nbfl = no\n",
    "fig5c": "axis = pattern\ng = 4\nbfl = no\n",
    "fig5d": "axis = color\ng = 4\nbfl = no\n",
    "fig6a": "axis = pattern\ng =\nbfl = yes\n",
    "fig6b": "axis = color\ng =\nbfl = yes\n",
}


def preset(name: str, overrides: dict[str, str] | None = None) -> SweepConfig:
    try:
        text = PRESETS[name]
    except KeyError:
        raise ConfigError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}") from None
    return parse_config(text, overrides)
