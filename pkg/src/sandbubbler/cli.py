"""Command line interface: ``sandbubbler {generate,measure,sweep,gallery,report}``."""

from __future__ import annotations

import argparse
import csv
import logging
import sys
from dataclasses import replace
from pathlib import Path

from .color import RandomRgbShift
from .experiment import KEYS, PRESETS, SweepError, load_config, preset, run_sweep
from .measures import ALPHA, measure_image
from .pattern import ConfigError, GenConfig, Rgb, generate_pattern, save_pattern
from .raster import CanvasConfig, MalformedImageError, read_image, render, write_image
from .rng import Rng
from .symmetry import IsoKind, Isometry, apply_isometry

log = logging.getLogger("sandbubbler")


def _overrides(pairs: list[str]) -> dict[str, str]:
    out = {}
    for item in pairs:
        key, sep, val = item.partition("=")
        if not sep:
            raise ConfigError(f"--set expects KEY=VALUE, got {item!r}")
        out[key.strip()] = val.strip()
    return out


def cmd_generate(args) -> int:
    gen = GenConfig(seed=args.seed)
    p = generate_pattern(gen)
    rng = Rng(args.seed ^ 0x5EED)
    p = p.map_pellets(lambda ix, pel: replace(pel, color=Rgb(rng.uniform(), rng.uniform(), rng.uniform())))
    if args.isometry:
        p = apply_isometry(p, Isometry(IsoKind(args.isometry), n=args.n, dx=args.dx, dy=args.dy))
    img = render(p, CanvasConfig(width=args.size, height=args.size, world_extent=gen.canvas_extent))
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    write_image(img, out)
    save_pattern(p, out.with_suffix(".pattern"))
    print(f"wrote {out} and {out.with_suffix('.pattern')} ({p.pellet_count} pellets)")
    return 0


def cmd_measure(args) -> int:
    gs = [int(g) for g in args.g.split(",") if g]
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["image", "g", "sym", "bfl"])
    for path in args.images:
        rep = measure_image(read_image(path), gs, not args.no_bfl, args.alpha, image_id=str(path))
        w.writerow(rep.csv_row())
    return 0


def _sweep_config(args):
    over = _overrides(args.set)
    if args.preset:
        return preset(args.preset, over)
    if args.config:
        return load_config(args.config, over)
    raise ConfigError("sweep needs a config file or --preset")


def _progress(done: int, total: int) -> None:
    log.info("sigma %d/%d done", done, total)


def cmd_sweep(args) -> int:
    cfg = _sweep_config(args)
    res = run_sweep(cfg, progress=_progress)
    text = res.to_csv()
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(text)
        if args.plot:
            from .plotting import plot_sweep
            png = Path(args.out).with_suffix(".png")
            plot_sweep(res, png, title=f"{cfg.axis} breaking, {cfg.isometry.kind.value}")
            log.info("wrote %s", png)
    else:
        sys.stdout.write(text)
    if args.gallery:
        gdir = Path(args.gallery)
        gdir.mkdir(parents=True, exist_ok=True)
        from .experiment import build_image
        name = args.preset or Path(args.config).stem
        for si, s in enumerate(cfg.sigma_values):
            _, img = build_image(cfg, si, 0)
            write_image(img, gdir / f"{name}_s{s:.2f}.png")
    return 0


def cmd_gallery(args) -> int:
    from .gallery import gallery_panels
    from .plotting import contact_sheet
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    shots = []
    for label, p in gallery_panels(args.preset, args.seed):
        img = render(p)
        write_image(img, out / f"{args.preset}_{label}.{args.format}")
        shots.append((label, img))
    contact_sheet(shots, out / f"{args.preset}_sheet.png")
    print(f"wrote {len(shots)} panels to {out}")
    return 0


def cmd_report(args) -> int:
    """Run one preset for every isometry; CSV per isometry plus an overlay figure."""
    from .plotting import plot_comparison
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    results = {}
    for kind in IsoKind:
        over = _overrides(args.set)
        over["isometry"] = kind.value
        over.setdefault("images_per_sigma", str(args.images))
        res = run_sweep(preset(args.preset, over), progress=_progress)
        res.write_csv(out / f"{args.preset}_{kind.value}.csv")
        results[kind.value] = res
    plot_comparison(results, out / f"{args.preset}.png")
    print(f"wrote {len(results)} CSV files and {args.preset}.png to {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sandbubbler", description=__doc__)
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="draw one pattern to an image and a pattern file")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--isometry", choices=[k.value for k in IsoKind])
    g.add_argument("--n", type=int, default=2)
    g.add_argument("--dx", type=float, default=128.0)
    g.add_argument("--dy", type=float, default=0.0)
    g.add_argument("--size", type=int, default=256)
    g.add_argument("-o", "--out", default="pattern.ppm")
    g.set_defaults(func=cmd_generate)

    m = sub.add_parser("measure", help="CSV of symmetry and Benford measures for image files")
    m.add_argument("images", nargs="+")
    m.add_argument("--g", default="2,4", help="comma list of grid subdivisions")
    m.add_argument("--alpha", type=float, default=ALPHA)
    m.add_argument("--no-bfl", action="store_true")
    m.set_defaults(func=cmd_measure)

    s = sub.add_parser("sweep", help="measure-vs-breaking-rate sweep to CSV",
                       epilog="config keys: " + ", ".join(KEYS))
    s.add_argument("config", nargs="?")
    s.add_argument("--preset", choices=sorted(PRESETS))
    s.add_argument("--set", action="append", default=[], metavar="KEY=VALUE")
    s.add_argument("-o", "--out")
    s.add_argument("--plot", action="store_true", help="also write a PNG figure next to the CSV")
    s.add_argument("--gallery", metavar="DIR", help="save the first image of every rate")
    s.set_defaults(func=cmd_sweep)

    gl = sub.add_parser("gallery", help="render an example-panel preset")
    gl.add_argument("preset", choices=["fig1", "fig3", "fig4"])
    gl.add_argument("--seed", type=int)
    gl.add_argument("--format", choices=["ppm", "png"], default="png")
    gl.add_argument("-o", "--out", default="gallery")
    gl.set_defaults(func=cmd_gallery)

    r = sub.add_parser("report", help="sweep a preset for all four isometries, with a figure")
    r.add_argument("preset", choices=sorted(PRESETS))
    r.add_argument("--images", type=int, default=100)
    r.add_argument("--set", action="append", default=[], metavar="KEY=VALUE")
    r.add_argument("-o", "--out", default="report")
    r.set_defaults(func=cmd_report)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (ConfigError, SweepError, MalformedImageError, OSError, ValueError) as exc:
        print(f"sandbubbler: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
