"""Greedy Gaussian random-walk (chemotaxis-style) minimizer of the index.

One iteration costs exactly one objective evaluation: propose a step,
keep it only if the index strictly improves. A successful step direction
is replayed until it stops paying off (the "run"); a streak of rejected
proposals shrinks the step scale. Everything is driven by a single seeded
generator per restart, so results are reproducible bit for bit.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .circuit import CircuitParams
from .objective import SampleGrid, TargetFunction, max_pointwise_error, performance_index

N_DIM = 6


@dataclass(frozen=True)
class OptimizerConfig:
    """Search knobs. ``init=None`` draws a fresh random start per restart.

    Restart r runs on seed ``seed + r``; with ``init=None`` its starting
    point is exactly ``random_init(seed + r)``.
    """

    iterations: int = 5000
    restarts: int = 10
    sigma0: float = 0.3
    sigma_shrink: float = 0.7
    fail_streak: int = 50
    init: CircuitParams | None = None
    seed: int = 42

    def __post_init__(self) -> None:
        if self.iterations < 0:
            raise ValueError(f"iterations must be >= 0, got {self.iterations}")
        if self.restarts < 1:
            raise ValueError(f"restarts must be >= 1, got {self.restarts}")
        if not (math.isfinite(self.sigma0) and self.sigma0 > 0):
            raise ValueError(f"sigma0 must be positive, got {self.sigma0}")
        if not (0.0 < self.sigma_shrink < 1.0):
            raise ValueError(f"sigma_shrink must lie in (0, 1), got {self.sigma_shrink}")
        if self.fail_streak < 1:
            raise ValueError(f"fail_streak must be >= 1, got {self.fail_streak}")
        if self.seed < 0:
            raise ValueError(f"seed must be a non-negative integer, got {self.seed}")


@dataclass(frozen=True)
class FitResult:
    """Outcome of one optimize() call (best restart after merging)."""

    best: CircuitParams
    j_final: float
    j_trace: tuple[tuple[int, float], ...]
    max_error: float
    evals: int


def _random_vector(rng: np.random.Generator) -> np.ndarray:
    theta = rng.uniform(-math.pi, math.pi, 2)
    g = rng.uniform(-2.0, 2.0, 4)
    return np.concatenate([theta, g])


def random_init(seed: int) -> CircuitParams:
    """Random starting point: angles uniform on (-pi, pi), diagonal on (-2, 2)."""
    return CircuitParams.from_vector(_random_vector(np.random.default_rng(seed)))


def _run_restart(
    target: TargetFunction,
    grid: SampleGrid,
    cfg: OptimizerConfig,
    restart_seed: int,
) -> tuple[np.ndarray, float, list[tuple[int, float]], int]:
    rng = np.random.default_rng(restart_seed)
    point = cfg.init.as_vector() if cfg.init is not None else _random_vector(rng)

    def index_at(v: np.ndarray) -> float:
        return performance_index(CircuitParams.from_vector(v), target, grid)

    current = index_at(point)
    evals = 1
    if not math.isfinite(current):
        raise ValueError("performance index is not finite at the starting point")

    trace = [(0, current)]
    sigma = cfg.sigma0
    fails = 0
    run_direction: np.ndarray | None = None
    for it in range(1, cfg.iterations + 1):
        step = run_direction if run_direction is not None else rng.normal(0.0, sigma, N_DIM)
        candidate = point + step
        value = index_at(candidate)
        evals += 1
        if math.isfinite(value) and value < current:
            point, current = candidate, value
            run_direction = step
            fails = 0
            trace.append((it, current))
        else:
            # a non-finite candidate counts as an ordinary rejection
            run_direction = None
            fails += 1
            if fails >= cfg.fail_streak:
                sigma *= cfg.sigma_shrink
                fails = 0
    return point, current, trace, evals


def optimize(
    target: TargetFunction,
    grid: SampleGrid,
    cfg: OptimizerConfig,
    workers: int = 1,
) -> FitResult:
    """Minimize the performance index; returns the best restart's outcome.

    Restarts are independent and may run on a thread pool (``workers``);
    the merge picks the lowest final index with ties broken by lowest
    restart number, so the result does not depend on scheduling.
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    seeds = [cfg.seed + r for r in range(cfg.restarts)]
    if workers == 1:
        runs = [_run_restart(target, grid, cfg, s) for s in seeds]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            runs = list(pool.map(lambda s: _run_restart(target, grid, cfg, s), seeds))

    winner = min(range(len(runs)), key=lambda i: (runs[i][1], i))
    point, j_final, trace, _ = runs[winner]
    best = CircuitParams.from_vector(point)
    return FitResult(
        best=best,
        j_final=j_final,
        j_trace=tuple(trace),
        max_error=max_pointwise_error(best, target, grid),
        evals=sum(r[3] for r in runs),
    )
