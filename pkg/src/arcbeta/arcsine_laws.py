"""Monte Carlo check that the argmax time of a random walk is arcsine distributed.

A symmetric +/-1 walk of ``steps`` steps starts at 0 and its maximum is taken
over indices ``0..steps``.  The argmax time is reported as ``index / steps``.

A discrete walk usually attains its maximum more than once, so the argmax
needs a tie rule:

``mid`` (default)
    Halfway between the first and the last index attaining the maximum.
    Reversing time and flipping sign maps one walk onto another and swaps
    first and last hits, so this rule keeps the argmax time exactly
    symmetric about 1/2 at every walk length.
``first`` / ``last``
    The first or last hit.  Both converge to the same arcsine limit, but only
    at rate ``1/sqrt(steps)``: with 1000 steps the mean fraction under
    ``first`` is still about 0.49, and the point 0 carries mass
    ``~sqrt(2 / (pi * steps))``.  That is enough to push the KS distance
    past 0.02.

Paths are generated in fixed-size blocks.  Block ``j`` draws its increments
from ``PCG64`` seeded with ``SeedSequence(seed).spawn(...)[j]``, so output
does not depend on how many workers process the blocks.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .distribution import GeneralizedBetaDist, make_dist
from .errors import DomainError
from .special import _as_int

__all__ = [
    "WalkConfig",
    "KsReport",
    "argmax_indices",
    "simulate_argmax_fractions",
    "ks_statistic",
    "ks_against",
    "arcsine_law_check",
    "KS_COEF_1PCT",
]

KS_COEF_1PCT = 1.63
BLOCK_PATHS = 1024
TIE_RULES = ("mid", "first", "last")


@dataclass(frozen=True)
class WalkConfig:
    steps: int
    paths: int
    seed: int

    def __post_init__(self):
        steps, paths, seed = _as_int(self.steps), _as_int(self.paths), _as_int(self.seed)
        if steps < 2:
            raise DomainError("steps must be >= 2")
        if paths < 1:
            raise DomainError("paths must be >= 1")
        if not 0 <= seed < 2**64:
            raise DomainError("seed must be an unsigned 64-bit integer")
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "paths", paths)
        object.__setattr__(self, "seed", seed)


@dataclass(frozen=True)
class KsReport:
    statistic: float
    n: int
    critical_at_1pct: float
    passed: bool

    def as_record(self) -> dict:
        return {
            "statistic": self.statistic,
            "n": self.n,
            "critical_at_1pct": self.critical_at_1pct,
            "passed": self.passed,
        }


def _block_argmax(steps, count, seed_seq, tie):
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    bits = rng.integers(0, 2, size=(count, steps), dtype=np.int8)
    walk = np.cumsum(2 * bits - 1, axis=1, dtype=np.int32)
    walk = np.concatenate([np.zeros((count, 1), dtype=np.int32), walk], axis=1)
    # np.argmax returns the first index attaining the maximum
    first = np.argmax(walk, axis=1)
    if tie == "first":
        return first.astype(float)
    last = steps - np.argmax(walk[:, ::-1], axis=1)
    if tie == "last":
        return last.astype(float)
    return 0.5 * (first + last)


def argmax_indices(cfg: WalkConfig, tie: str = "mid", workers: int = 1) -> np.ndarray:
    """Argmax index of each path under the tie rule, in path order.

    With ``tie="mid"`` the index may be a half integer.
    """
    if tie not in TIE_RULES:
        raise DomainError(f"tie must be one of {TIE_RULES}")
    n_blocks = -(-cfg.paths // BLOCK_PATHS)
    seeds = np.random.SeedSequence(cfg.seed).spawn(n_blocks)
    counts = [min(BLOCK_PATHS, cfg.paths - j * BLOCK_PATHS) for j in range(n_blocks)]
    jobs = list(zip(counts, seeds))
    if workers > 1 and n_blocks > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda job: _block_argmax(cfg.steps, *job, tie), jobs))
    else:
        parts = [_block_argmax(cfg.steps, c, sd, tie) for c, sd in jobs]
    return np.concatenate(parts)


def simulate_argmax_fractions(cfg: WalkConfig, tie: str = "mid", workers: int = 1) -> np.ndarray:
    """Argmax times ``index / steps`` in ``[0, 1]``, one per path."""
    return argmax_indices(cfg, tie, workers) / cfg.steps


def ks_statistic(sorted_cdf: np.ndarray) -> float:
    """Two-sided sup distance given the reference CDF at the sorted samples."""
    n = sorted_cdf.size
    i = np.arange(1, n + 1)
    d_plus = np.max(i / n - sorted_cdf)
    d_minus = np.max(sorted_cdf - (i - 1) / n)
    return float(max(d_plus, d_minus))


def ks_against(samples, d: GeneralizedBetaDist) -> KsReport:
    """One-sample Kolmogorov-Smirnov test of ``samples`` against ``d.cdf``.

    The 1% critical value is the asymptotic ``1.63 / sqrt(n)``.
    """
    x = np.sort(np.asarray(samples, dtype=float).ravel())
    if x.size == 0:
        raise DomainError("need at least one sample")
    if np.any(np.isnan(x)) or x[0] < d.r1 or x[-1] > d.r2:
        raise DomainError(f"samples must lie in [{d.r1}, {d.r2}]")
    stat = ks_statistic(np.asarray(d.cdf(x), dtype=float))
    crit = KS_COEF_1PCT / math.sqrt(x.size)
    return KsReport(stat, int(x.size), crit, stat < crit)


def arcsine_law_check(
    cfg: WalkConfig, tie: str = "mid", workers: int = 1
) -> tuple[np.ndarray, KsReport]:
    """Simulate argmax fractions and compare them with the standard arcsine CDF."""
    fractions = simulate_argmax_fractions(cfg, tie, workers)
    return fractions, ks_against(fractions, make_dist((0.0, 1.0), (0.5, 0.5)))
