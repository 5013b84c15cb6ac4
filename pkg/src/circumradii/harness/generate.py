"""Seeded lattice point sets in general position."""

from __future__ import annotations

import hashlib
import itertools
import random
from dataclasses import dataclass

from ..exact_core import Mode, Point, _cross, circle_key, is_general_position

DRAWS_PER_POINT = 500


class GenerationTimeout(RuntimeError):
    """The retry budget ran out; the grid is too small for the request."""


def derive_seed(seed: int, *labels) -> int:
    """Stable 64-bit sub-seed for (seed, labels...), independent of scheduling."""
    text = ":".join(str(x) for x in (seed, *labels))
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big")


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int
    n: int
    grid: int
    mode: Mode = Mode.PAPER

    def __post_init__(self):
        if self.n < 0 or self.grid < 1:
            raise ValueError(f"need n >= 0 and grid >= 1, got n={self.n}, grid={self.grid}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        object.__setattr__(self, "mode", Mode(self.mode))


def generate_instance(cfg: GeneratorConfig) -> list[Point]:
    """Draw points uniformly from {0..grid-1}^2, redrawing any point that would
    complete a forbidden configuration with the points already accepted."""
    rng = random.Random(cfg.seed)
    points: list[Point] = []
    taken: set[Point] = set()
    keys: set[tuple] = set()  # circles/lines through accepted triples
    budget = DRAWS_PER_POINT * max(cfg.n, 1)
    while len(points) < cfg.n:
        if budget == 0:
            raise GenerationTimeout(
                f"could not place {cfg.n} points on a {cfg.grid}x{cfg.grid} grid in {cfg.mode.value} position"
            )
        budget -= 1
        p = Point.of(rng.randrange(cfg.grid), rng.randrange(cfg.grid))
        if p in taken:
            continue
        new_keys = []
        ok = True
        for a, b in itertools.combinations(points, 2):
            if cfg.mode is Mode.STRICT and _cross(a, b, p) == 0:
                ok = False
                break
            key = circle_key(a, b, p)
            if key in keys:
                ok = False
                break
            new_keys.append(key)
        if not ok:
            continue
        points.append(p)
        taken.add(p)
        keys.update(new_keys)
    assert is_general_position(points, cfg.mode).ok
    return points
