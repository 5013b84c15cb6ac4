"""Local search for point sets whose largest distinct-radii subset is small."""

from __future__ import annotations

import random
from typing import Optional

from ..bounds import main_n_bound
from ..exact_core import Mode, Point, is_general_position
from ..radius_subsets import max_distinct_subset
from .experiments import ExperimentRecord, certificate_payload
from .generate import GeneratorConfig, derive_seed, generate_instance

PATIENCE = 60


def default_search_grid(n: int) -> int:
    return max(6, 2 * n)


def search_extremal(
    k: int,
    n: int,
    iterations: int,
    seed: int,
    grid: Optional[int] = None,
    mode: Mode = Mode.PAPER,
    patience: int = PATIENCE,
) -> tuple[list[Point], ExperimentRecord]:
    """Minimize the maximum distinct-radii subset size over n lattice points.

    Moves one random point to a random grid cell, keeping general position,
    and accepts the move unless the objective increases.  Restarts from a
    fresh instance after ``patience`` iterations without a new best.  Stops
    early once the objective drops below k.
    """
    if n >= main_n_bound(k):
        raise ValueError(f"n={n} is not below main_n_bound({k})={main_n_bound(k)}")
    mode = Mode(mode)
    grid = grid or default_search_grid(n)
    rng = random.Random(derive_seed(seed, "search", k, n))

    def fresh(restart: int) -> list[Point]:
        return generate_instance(GeneratorConfig(derive_seed(seed, "search", k, n, restart), n, grid, mode))

    restarts = 0
    current = fresh(restarts)
    cur_size = len(max_distinct_subset(current).chosen)
    best, best_size = current, cur_size
    stale = 0
    used = 0
    for used in range(1, iterations + 1):
        if best_size < k:
            used -= 1
            break
        i = rng.randrange(n)
        p = Point.of(rng.randrange(grid), rng.randrange(grid))
        if p in current:
            continue
        cand = current[:i] + [p] + current[i + 1:]
        if not is_general_position(cand, mode).ok:
            continue
        size = len(max_distinct_subset(cand).chosen)
        if size <= cur_size:
            current, cur_size = cand, size
        if size < best_size:
            best, best_size = cand, size
            stale = 0
        else:
            stale += 1
        if stale >= patience:
            restarts += 1
            current = fresh(restarts)
            cur_size = len(max_distinct_subset(current).chosen)
            stale = 0
            if cur_size < best_size:
                best, best_size = current, cur_size

    cert = max_distinct_subset(best)
    payload = {
        "k": k,
        "iterations": used,
        "restarts": restarts,
        "best_subset_size": len(cert.chosen),
        "below_k": len(cert.chosen) < k,
        **certificate_payload(best, cert),
    }
    return best, ExperimentRecord("search", seed, 0, n, grid, mode.value, payload)
