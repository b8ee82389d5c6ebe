"""Matplotlib figures for sweep results and image galleries."""

from __future__ import annotations

from pathlib import Path
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .experiment import SweepResult  # noqa: E402

_STYLE = {"reflection": "o-", "rotation": "s-", "translation": "^-", "glide": "d-"}


def _label(name: str, g: int | None) -> str:
    return name if g is None else f"{name}$_{{{g * g}}}$"


def plot_sweep(result: SweepResult, path, title: str = "", xlabel: str = r"$\sigma_{break}$") -> None:
    """One panel per measure, mean with a one-std band."""
    n = len(result.measures)
    fig, axes = plt.subplots(1, n, figsize=(4.2 * n, 3.4), squeeze=False)
    s = np.asarray(result.sigmas)
    for m, (name, g) in enumerate(result.measures):
        ax = axes[0, m]
        mu, sd = result.means[:, m], result.stds[:, m]
        ax.plot(s, mu, "o-", ms=3)
        ax.fill_between(s, mu - sd, mu + sd, alpha=0.2)
        ax.set_xlabel(xlabel)
        ax.set_ylabel(_label(name, g))
        ax.grid(alpha=0.3)
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_comparison(results: Mapping[str, SweepResult], path, xlabel: str = r"$\sigma_{break}$") -> None:
    """Overlay several sweeps (e.g. one per isometry), one panel per measure."""
    first = next(iter(results.values()))
    n = len(first.measures)
    fig, axes = plt.subplots(1, n, figsize=(4.2 * n, 3.4), squeeze=False)
    for label, res in results.items():
        for m, (name, g) in enumerate(res.measures):
            axes[0, m].plot(res.sigmas, res.means[:, m], _STYLE.get(label, "o-"), ms=3, label=label)
    for m, (name, g) in enumerate(first.measures):
        axes[0, m].set_xlabel(xlabel)
        axes[0, m].set_ylabel(_label(name, g))
        axes[0, m].grid(alpha=0.3)
    axes[0, 0].legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def contact_sheet(images: Sequence[tuple[str, np.ndarray]], path, cols: int = 3) -> None:
    rows = -(-len(images) // cols)
    fig, axes = plt.subplots(rows, cols, figsize=(3 * cols, 3.2 * rows), squeeze=False)
    for ax in axes.flat:
        ax.axis("off")
    for ax, (label, img) in zip(axes.flat, images):
        ax.imshow(img, interpolation="nearest")
        ax.set_title(label, fontsize=9)
    fig.tight_layout()
    fig.savefig(Path(path), dpi=120)
    plt.close(fig)
