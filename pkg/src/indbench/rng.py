"""Seeded random streams with a fixed, auditable draw order.

Only ``random.Random.random()`` is ever consumed from the underlying
generator (the one stream the standard library guarantees stable across
versions).  Every derived distribution costs a fixed number of uniform
draws: uniform / Bernoulli / exponential / randint take one, the Gaussian
takes exactly two (single-use Box-Muller, no cached second value).  That
makes the stream position a deterministic function of the branch profile,
which replay and serialization rely on.
"""

from __future__ import annotations

import hashlib
import math
import random


def derive_seed(seed: int, label: str) -> int:
    """Derive a stable 64-bit child seed for an independent sub-stream."""
    digest = hashlib.sha256(f"{seed}:{label}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


class RandomStream:
    """Deterministic uniform stream plus the distributions the simulator needs."""

    def __init__(self, seed: int):
        self._rng = random.Random(seed)
        self.draw_count = 0

    def random(self) -> float:
        """One uniform draw in [0, 1)."""
        self.draw_count += 1
        return self._rng.random()

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer with inclusive bounds."""
        return lo + int(self.random() * (hi - lo + 1))

    def bernoulli(self, p: float) -> int:
        return 1 if self.random() < p else 0

    def exponential(self, mean: float) -> float:
        # random() < 1 strictly, so the log argument stays positive.
        return -mean * math.log(1.0 - self.random())

    def gauss(self, mu: float, sigma: float) -> float:
        u1 = 1.0 - self.random()
        u2 = self.random()
        return mu + sigma * math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)

    # -- state capture (JSON-safe) ------------------------------------

    def state_as_json(self) -> list:
        version, internal, gauss_next = self._rng.getstate()
        return [version, list(internal), gauss_next, self.draw_count]

    def set_state_from_json(self, payload: list) -> None:
        version, internal, gauss_next, draws = payload
        self._rng.setstate((version, tuple(internal), gauss_next))
        self.draw_count = int(draws)


class Sampler:
    """Distribution draws for one environment instance.

    ``suppress`` is a test-only hook: when set to ``"zero"`` or ``"mean"``
    every draw is replaced by the distribution's zero / mean value and the
    underlying stream is *not* consumed.  It is not reachable from the
    public configuration schema.
    """

    def __init__(self, stream: RandomStream, suppress: str | None = None):
        if suppress not in (None, "zero", "mean"):
            raise ValueError(f"unknown suppression mode: {suppress!r}")
        self.stream = stream
        self.suppress = suppress

    @property
    def live(self) -> bool:
        return self.suppress is None

    def uniform01(self) -> float:
        if self.suppress is None:
            return self.stream.random()
        return 0.0 if self.suppress == "zero" else 0.5

    def randint(self, lo: int, hi: int) -> int:
        if self.suppress is None:
            return self.stream.randint(lo, hi)
        return lo if self.suppress == "zero" else (lo + hi) // 2

    def bernoulli(self, p: float) -> float:
        if self.suppress is None:
            return float(self.stream.bernoulli(p))
        return 0.0 if self.suppress == "zero" else p

    def exponential(self, mean: float) -> float:
        if self.suppress is None:
            return self.stream.exponential(mean)
        return 0.0 if self.suppress == "zero" else mean

    def gauss(self, mu: float, sigma: float) -> float:
        if self.suppress is None:
            return self.stream.gauss(mu, sigma)
        return 0.0 if self.suppress == "zero" else mu
