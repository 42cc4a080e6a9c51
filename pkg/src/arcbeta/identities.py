"""Closed forms for shifted and split beta integrals, checked against quadrature.

Three integral families reduce to the beta function:

* the shifted integral over ``[r1, r2]``::

      int (x - r1)**(s-1) (r2 - x)**(t-1) dx = (r2 - r1)**(s+t-1) B(s, t)

* the two half-interval integrals around the midpoint ``m``::

      int_m^r2  (x - r1)**(s-1) (x - m)**(t-1) (r2 - x)**(s-1) dx
      int_r1^m  (x - r1)**(s-1) (m - x)**(t-1) (r2 - x)**(s-1) dx

  both equal ``0.5 * ((r2 - r1) / 2)**(2s+t-2) * B(s, t/2)``;

* the unit-interval special case with ``t -> 2t``::

      2**(2s+2t-1) int_0^1/2 x**(s-1) (1/2 - x)**(2t-1) (1 - x)**(s-1) dx = B(s, t)

  Note the constant ``2**(2s+2t-1)``: without it the half-interval integral
  does not reproduce ``B(s, t)``.

Every closed value is computed in log space.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from itertools import product

from .errors import ConvergenceError, DomainError
from .params import ShapeParams, SupportInterval, as_interval, as_shape
from .quadrature import DEFAULT_TOL, QuadratureEstimate, integrate
from .special import beta, log_beta

__all__ = [
    "IdentityName",
    "IdentityReport",
    "shifted_beta_integral_closed",
    "split_integral_upper_closed",
    "split_integral_lower_closed",
    "half_interval_beta_corrected",
    "half_interval_prefactor",
    "half_interval_integral",
    "oracle_integral",
    "verify_identity",
    "sweep",
    "SWEEP_INTERVALS",
    "SWEEP_VALUES",
    "EXAMPLE_CASES",
]

SWEEP_INTERVALS = ((0.0, 1.0), (-1.0, 1.0), (1.0, 3.0), (-5.0, 2.0))
SWEEP_VALUES = (0.3, 0.5, 1.0, 1.5, 2.5, 7.0)

DEFAULT_REL_THRESHOLD = 1e-8
DEFAULT_ABS_FLOOR = 1e-12


class IdentityName(str, enum.Enum):
    SHIFTED = "shifted"
    SPLIT_UPPER = "split_upper"
    SPLIT_LOWER = "split_lower"
    HALF_INTERVAL = "half_interval"


# worked examples with known values; appended to the matching sweeps
EXAMPLE_CASES = {
    IdentityName.SPLIT_UPPER: [((1.0, 3.0), (1.5, 1.5))],
    IdentityName.SPLIT_LOWER: [((-1.0, 3.0), (0.5, 7.0))],
}


@dataclass(frozen=True)
class IdentityReport:
    identity_name: IdentityName
    interval: SupportInterval
    shape: ShapeParams
    closed_value: float
    oracle: QuadratureEstimate | None
    abs_diff: float
    rel_diff: float
    passed: bool

    def as_row(self) -> dict:
        return {
            "identity": self.identity_name.value,
            "r1": self.interval.r1,
            "r2": self.interval.r2,
            "s": self.shape.s,
            "t": self.shape.t,
            "closed_value": self.closed_value,
            "oracle_value": self.oracle.value if self.oracle else math.nan,
            "oracle_error": self.oracle.abs_error_estimate if self.oracle else math.nan,
            "abs_diff": self.abs_diff,
            "rel_diff": self.rel_diff,
            "passed": self.passed,
        }


def shifted_beta_integral_closed(iv, sp) -> float:
    """``(r2 - r1)**(s+t-1) * B(s, t)``."""
    iv, sp = as_interval(iv), as_shape(sp)
    return math.exp((sp.s + sp.t - 1.0) * math.log(iv.width) + log_beta(sp.s, sp.t))


def _split_closed(iv, sp):
    half = 0.5 * iv.width
    return math.exp(
        (2.0 * sp.s + sp.t - 2.0) * math.log(half) + log_beta(sp.s, 0.5 * sp.t) - math.log(2.0)
    )


def split_integral_upper_closed(iv, sp) -> float:
    """Closed value of the integral over ``[midpoint, r2]``."""
    return _split_closed(as_interval(iv), as_shape(sp))


def split_integral_lower_closed(iv, sp) -> float:
    """Closed value of the integral over ``[r1, midpoint]``; same as the upper one."""
    return _split_closed(as_interval(iv), as_shape(sp))


def half_interval_prefactor(sp) -> float:
    sp = as_shape(sp)
    return 2.0 ** (2.0 * sp.s + 2.0 * sp.t - 1.0)


def half_interval_beta_corrected(sp) -> float:
    """``B(s, t)``, the value of the prefactor-corrected half-interval integral."""
    sp = as_shape(sp)
    return beta(sp.s, sp.t)


def _shifted_integrand(iv, sp):
    s1, t1 = sp.s - 1.0, sp.t - 1.0

    def f(x, da, db):
        return da**s1 * db**t1

    return f, iv.r1, iv.r2


def _upper_integrand(iv, sp):
    mid = iv.midpoint()
    off = mid - iv.r1
    s1, t1 = sp.s - 1.0, sp.t - 1.0

    def f(x, da, db):
        # da = x - mid, db = r2 - x
        return (off + da) ** s1 * da**t1 * db**s1

    return f, mid, iv.r2


def _lower_integrand(iv, sp):
    mid = iv.midpoint()
    off = iv.r2 - mid
    s1, t1 = sp.s - 1.0, sp.t - 1.0

    def f(x, da, db):
        # da = x - r1, db = mid - x
        return da**s1 * db**t1 * (off + db) ** s1

    return f, iv.r1, mid


def _half_integrand(sp):
    s1, t2 = sp.s - 1.0, 2.0 * sp.t - 1.0

    def f(x, da, db):
        # da = x, db = 1/2 - x
        return da**s1 * db**t2 * (0.5 + db) ** s1

    return f, 0.0, 0.5


def half_interval_integral(sp, tol: float = DEFAULT_TOL) -> QuadratureEstimate:
    """Quadrature of ``int_0^1/2 x**(s-1) (1/2 - x)**(2t-1) (1 - x)**(s-1) dx``, no prefactor."""
    f, a, b = _half_integrand(as_shape(sp))
    return integrate(f, a, b, tol, distances=True)


def oracle_integral(name, iv, sp, tol: float = DEFAULT_TOL) -> QuadratureEstimate:
    """Integrate the raw integrand behind ``name`` numerically.

    For ``half_interval`` the estimate is already multiplied by the prefactor
    so it is directly comparable with ``B(s, t)``; ``iv`` is ignored there.
    """
    name = IdentityName(name)
    sp = as_shape(sp)
    if name is IdentityName.HALF_INTERVAL:
        return half_interval_integral(sp, tol).scaled(half_interval_prefactor(sp))
    iv = as_interval(iv)
    build = {
        IdentityName.SHIFTED: _shifted_integrand,
        IdentityName.SPLIT_UPPER: _upper_integrand,
        IdentityName.SPLIT_LOWER: _lower_integrand,
    }[name]
    f, a, b = build(iv, sp)
    return integrate(f, a, b, tol, distances=True)


def closed_value(name, iv, sp) -> float:
    name = IdentityName(name)
    if name is IdentityName.SHIFTED:
        return shifted_beta_integral_closed(iv, sp)
    if name is IdentityName.SPLIT_UPPER:
        return split_integral_upper_closed(iv, sp)
    if name is IdentityName.SPLIT_LOWER:
        return split_integral_lower_closed(iv, sp)
    return half_interval_beta_corrected(sp)


def _compare(closed, oracle_value, rel_threshold, abs_floor):
    abs_diff = abs(closed - oracle_value)
    rel_diff = abs_diff / abs(closed) if closed != 0.0 else abs_diff
    passed = rel_diff <= rel_threshold or abs_diff <= abs_floor
    return abs_diff, rel_diff, passed


def verify_identity(
    name,
    iv=None,
    sp=None,
    rel_threshold: float = DEFAULT_REL_THRESHOLD,
    *,
    abs_floor: float = DEFAULT_ABS_FLOOR,
    tol: float = DEFAULT_TOL,
) -> IdentityReport:
    """Compare a closed form with its quadrature oracle.

    A mismatch yields ``passed=False``.  A quadrature failure re-raises the
    :class:`ConvergenceError` with a partial report (built from the best
    estimate) attached as ``err.report``.
    """
    if not rel_threshold > 0:
        raise DomainError("rel_threshold must be positive")
    name = IdentityName(name)
    if sp is None:
        raise DomainError("shape parameters are required")
    sp = as_shape(sp)
    iv = SupportInterval(0.0, 1.0) if iv is None else as_interval(iv)
    closed = closed_value(name, iv, sp)
    # the stopping rule is absolute below |value| = 1; tighten it for small integrals
    scale = abs(closed)
    if name is IdentityName.HALF_INTERVAL:
        scale /= half_interval_prefactor(sp)
    tol_eff = tol * min(1.0, scale) if scale > 0.0 else tol
    try:
        oracle = oracle_integral(name, iv, sp, tol_eff)
    except ConvergenceError as err:
        best = err.estimate
        if name is IdentityName.HALF_INTERVAL and best is not None:
            best = best.scaled(half_interval_prefactor(sp))
        value = best.value if best is not None else math.nan
        abs_diff, rel_diff, _ = _compare(closed, value, rel_threshold, abs_floor)
        err.report = IdentityReport(name, iv, sp, closed, best, abs_diff, rel_diff, False)
        raise
    abs_diff, rel_diff, passed = _compare(closed, oracle.value, rel_threshold, abs_floor)
    return IdentityReport(name, iv, sp, closed, oracle, abs_diff, rel_diff, passed)


def sweep(
    name,
    intervals=SWEEP_INTERVALS,
    values=SWEEP_VALUES,
    rel_threshold: float = DEFAULT_REL_THRESHOLD,
    *,
    include_examples: bool = True,
) -> list[IdentityReport]:
    """Run :func:`verify_identity` over ``intervals x values x values``.

    The half-interval identity lives on ``[0, 1]`` only, so it is swept over
    the shape grid once.
    """
    name = IdentityName(name)
    shapes = list(product(values, values))
    if name is IdentityName.HALF_INTERVAL:
        cases = [((0.0, 1.0), st) for st in shapes]
    else:
        cases = [(iv, st) for iv in intervals for st in shapes]
    if include_examples:
        cases += EXAMPLE_CASES.get(name, [])
    return [verify_identity(name, iv, st, rel_threshold) for iv, st in cases]

