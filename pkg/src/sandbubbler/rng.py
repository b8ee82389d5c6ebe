"""Seeded random streams.

All randomness in the package flows through :class:`Rng`, a thin wrapper over
numpy's PCG64 bit generator.  Only its raw 53-bit uniform doubles are used;
normals, integers and subsets are derived here so the stream is bit-stable
across platforms and numpy releases (the distribution samplers of
``numpy.random.Generator`` carry no such guarantee).
"""

from __future__ import annotations

import math

import numpy as np

__all__ = ["Rng", "child_seed"]

_MASK64 = (1 << 64) - 1


def child_seed(master: int, *path: int) -> int:
    """Derive a 64-bit seed from ``master`` and an index path.

    Uses numpy's ``SeedSequence`` hashing, so seeds for different paths are
    decorrelated and any sub-batch can be regenerated on its own.
    """
    ss = np.random.SeedSequence([master & _MASK64, *[int(p) for p in path]])
    return int(ss.generate_state(1, np.uint64)[0])


class Rng:
    """Portable PCG64 stream with Box-Muller normals."""

    def __init__(self, seed: int):
        self._bits = np.random.PCG64(seed & _MASK64)
        self._gen = np.random.Generator(self._bits)
        self._spare: float | None = None

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        return lo + (hi - lo) * float(self._gen.random())

    def uniforms(self, n: int) -> np.ndarray:
        return self._gen.random(n)

    def integer(self, lo: int, hi: int) -> int:
        """Uniform integer in the closed interval ``[lo, hi]``."""
        span = hi - lo + 1
        return lo + min(int(self._gen.random() * span), span - 1)

    def normal(self, mean: float = 0.0, std: float = 1.0) -> float:
        if self._spare is not None:
            z, self._spare = self._spare, None
            return mean + std * z
        u1 = 1.0 - float(self._gen.random())  # (0, 1], keeps log finite
        u2 = float(self._gen.random())
        rad = math.sqrt(-2.0 * math.log(u1))
        self._spare = rad * math.sin(2.0 * math.pi * u2)
        return mean + std * rad * math.cos(2.0 * math.pi * u2)

    def sample(self, n: int, k: int) -> list[int]:
        """``k`` distinct indices from ``range(n)``, uniformly (partial Fisher-Yates)."""
        if not 0 <= k <= n:
            raise ValueError(f"cannot sample {k} of {n}")
        idx = list(range(n))
        for i in range(k):
            j = i + min(int(self._gen.random() * (n - i)), n - i - 1)
            idx[i], idx[j] = idx[j], idx[i]
        return idx[:k]
