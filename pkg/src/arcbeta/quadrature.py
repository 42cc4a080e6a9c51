"""Tanh-sinh quadrature on a finite interval.

The integrand may blow up like a power ``(x - a)**alpha`` with ``alpha > -1``
at either end.  Nodes are never placed on the endpoints.  Because a node very
close to ``b`` cannot be told apart from ``b`` once it is written as a float
``x``, callers with endpoint singularities should ask for the distances to
both ends (``distances=True``); those are computed from the transformation
directly and keep full relative precision all the way into the tails.

Integrands are evaluated on numpy arrays of nodes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DomainError

__all__ = ["QuadratureEstimate", "integrate", "DEFAULT_TOL", "MAX_LEVEL"]

DEFAULT_TOL = 1e-12
MAX_LEVEL = 12
MIN_LEVEL = 3
# exp(-pi sinh t) stays a normal double up to here
_T_MAX = 6.0


@dataclass(frozen=True)
class QuadratureEstimate:
    value: float
    abs_error_estimate: float
    evaluations: int
    level: int = 0

    def __post_init__(self):
        if not (math.isfinite(self.abs_error_estimate) and self.abs_error_estimate >= 0):
            raise ValueError("abs_error_estimate must be finite and >= 0")
        if self.evaluations <= 0:
            raise ValueError("evaluations must be positive")

    def scaled(self, factor: float) -> "QuadratureEstimate":
        return QuadratureEstimate(
            self.value * factor,
            self.abs_error_estimate * abs(factor),
            self.evaluations,
            self.level,
        )


def _nodes(t):
    """Offsets from the nearer endpoint (as a fraction of the half width) and weights."""
    q = np.exp(-math.pi * np.sinh(t))
    gap = 2.0 * q / (1.0 + q)
    weight = 0.5 * math.pi * np.cosh(t) * 4.0 * q / (1.0 + q) ** 2
    return gap, weight


def _sum_nodes(f, t, a, b, half, distances):
    """Weighted sum over +t and -t nodes for t > 0 (plus t == 0 if present)."""
    gap, weight = _nodes(t)
    width = b - a
    near = half * gap
    far = width - near
    centre = t == 0.0
    # right-hand nodes: distance to b is `near`; left-hand nodes mirror them
    da = np.concatenate([far, near[~centre]])
    db = np.concatenate([near, far[~centre]])
    w = np.concatenate([weight, weight[~centre]])
    x = np.concatenate([b - near, (a + near)[~centre]])
    if distances:
        keep = (da > 0.0) & (db > 0.0)
        vals = f(x[keep], da[keep], db[keep])
    else:
        keep = (x > a) & (x < b)
        vals = f(x[keep])
    vals = np.broadcast_to(np.asarray(vals, dtype=float), x[keep].shape)
    if not np.all(np.isfinite(vals)):
        raise DomainError("integrand returned a non-finite value inside the interval")
    return float(np.dot(w[keep], vals)), int(np.count_nonzero(keep))


def integrate(
    f: Callable[..., np.ndarray],
    a: float,
    b: float,
    tol: float = DEFAULT_TOL,
    *,
    distances: bool = False,
    max_level: int = MAX_LEVEL,
) -> QuadratureEstimate:
    """Integrate ``f`` over the open interval ``(a, b)``.

    Parameters
    ----------
    f : callable
        ``f(x)`` or, with ``distances=True``, ``f(x, x - a, b - x)``.  Receives
        1-d float arrays and must return an array of the same length (or a
        scalar, which is broadcast).
    a, b : float
        Finite limits, ``a < b``.
    tol : float
        Stop once two successive levels differ by at most
        ``tol * max(1, |value|)``; that difference is reported as the error
        estimate.
    distances : bool
        Pass exact distances to both endpoints as extra arguments.
    max_level : int
        Number of step halvings allowed (step ``2**-level``).

    Raises
    ------
    ConvergenceError
        When ``max_level`` is reached first; ``estimate`` carries the last
        :class:`QuadratureEstimate`.
    """
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)) or not a < b:
        raise DomainError(f"need finite a < b, got ({a}, {b})")
    if not tol > 0:
        raise DomainError("tol must be positive")

    half = 0.5 * (b - a)
    h = 1.0
    k = np.arange(0, int(_T_MAX) + 1, dtype=float)
    raw, evals = _sum_nodes(f, k, a, b, half, distances)
    value = half * h * raw
    diff = math.inf
    for level in range(1, max_level + 1):
        h *= 0.5
        n_odd = int(_T_MAX / h)
        t = h * np.arange(1, n_odd + 1, 2, dtype=float)
        new, n = _sum_nodes(f, t, a, b, half, distances)
        evals += n
        raw += new
        prev, value = value, half * h * raw
        diff = abs(value - prev)
        if level >= MIN_LEVEL and diff <= tol * max(1.0, abs(value)):
            return QuadratureEstimate(value, diff, evals, level)
    est = QuadratureEstimate(value, diff, evals, max_level)
    raise ConvergenceError(
        f"tanh-sinh did not reach tol={tol:g} by level {max_level} (last diff {diff:.3g})",
        est,
    )
