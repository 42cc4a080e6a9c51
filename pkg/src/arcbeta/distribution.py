"""Beta distribution on a bounded interval ``[r1, r2]``.

The density is::

    f(x) = (x - r1)**(s-1) (r2 - x)**(t-1) / ((r2 - r1)**(s+t-1) B(s, t)),   r1 < x < r2

With ``s == t`` this is the generalized arcsine distribution, symmetric about
the midpoint; ``s == t == 1/2`` on ``[0, 1]`` is the standard arcsine law with
CDF ``(2/pi) arcsin(sqrt(x))``.

Random numbers
--------------
:meth:`GeneralizedBetaDist.sample` draws by inverse transform.  Uniforms come
from numpy's ``PCG64`` bit generator seeded with the caller's integer seed:
each raw 64-bit output ``r`` becomes ``((r >> 11) + 0.5) / 2**53``, which lies
strictly inside ``(0, 1)``.  The raw PCG64 stream is fixed by the algorithm,
so a given seed produces the same samples on every release.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, UnsupportedCaseError
from .params import ShapeParams, SupportInterval, as_interval, as_shape
from .quadrature import DEFAULT_TOL, integrate
from .special import _as_int, inv_reg_inc_beta, log_beta, reg_inc_beta

__all__ = ["GeneralizedBetaDist", "MomentTable", "make_dist", "uniforms"]

_LOG2 = math.log(2.0)


def _xlogy(c, y):
    # c * log(y) with 0 * log(0) == 0
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(c == 0.0, 0.0, c * np.log(y))


def uniforms(n: int, seed: int) -> np.ndarray:
    """``n`` doubles in the open interval ``(0, 1)`` from PCG64(seed)."""
    seed = _as_int(seed)
    if seed < 0 or seed >= 2**64:
        raise DomainError("seed must be an unsigned 64-bit integer")
    raw = np.random.PCG64(seed).random_raw(n)
    return ((raw >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53


@dataclass(frozen=True)
class MomentTable:
    """Central moments ``mu_k`` in increasing ``k``."""

    rows: tuple  # of (k, mu_k, method)

    def __post_init__(self):
        ks = [r[0] for r in self.rows]
        if any(b <= a for a, b in zip(ks, ks[1:])):
            raise ValueError("moment orders must be strictly increasing")

    def as_dict(self) -> dict:
        return {k: mu for k, mu, _ in self.rows}

    def as_records(self) -> list[dict]:
        return [{"k": k, "mu_k": mu, "method": m} for k, mu, m in self.rows]


@dataclass(frozen=True)
class GeneralizedBetaDist:
    support: SupportInterval
    shape: ShapeParams
    log_normalizer: float = field(init=False, repr=False)

    def __post_init__(self):
        support = as_interval(self.support)
        shape = as_shape(self.shape)
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(
            self,
            "log_normalizer",
            (shape.s + shape.t - 1.0) * math.log(support.width) + log_beta(shape.s, shape.t),
        )

    @property
    def r1(self) -> float:
        return self.support.r1

    @property
    def r2(self) -> float:
        return self.support.r2

    @property
    def s(self) -> float:
        return self.shape.s

    @property
    def t(self) -> float:
        return self.shape.t

    @property
    def is_generalized_arcsine(self) -> bool:
        return self.shape.s == self.shape.t

    @property
    def is_standard_arcsine(self) -> bool:
        return (
            self.shape.s == 0.5
            and self.shape.t == 0.5
            and self.support.r1 == 0.0
            and self.support.r2 == 1.0
        )

    # -- density ---------------------------------------------------------

    def _log_density(self, da, db):
        return _xlogy(self.s - 1.0, da) + _xlogy(self.t - 1.0, db) - self.log_normalizer

    def log_pdf(self, x):
        """Log density; ``-inf`` outside ``[r1, r2]``.

        At an endpoint the value follows the limit: ``+inf`` for an exponent
        below one, the finite limit for an exponent of exactly one, ``-inf``
        above one.
        """
        arr = np.asarray(x, dtype=float)
        da = arr - self.r1
        db = self.r2 - arr
        inside = (da >= 0.0) & (db >= 0.0)
        with np.errstate(invalid="ignore"):
            out = np.where(inside, self._log_density(np.abs(da), np.abs(db)), -np.inf)
        return float(out) if out.ndim == 0 else out

    def pdf(self, x):
        with np.errstate(over="ignore"):
            out = np.exp(self.log_pdf(x))
        return float(out) if np.ndim(out) == 0 else out

    def pdf_from_distances(self, da, db):
        """Density given ``x - r1`` and ``r2 - x`` directly (both positive)."""
        return np.exp(self._log_density(da, db))

    # -- distribution function -------------------------------------------

    def cdf(self, x):
        arr = np.asarray(x, dtype=float)
        u = np.clip((arr - self.r1) / self.support.width, 0.0, 1.0)
        out = reg_inc_beta(u, self.s, self.t)
        out = np.where(arr <= self.r1, 0.0, np.where(arr >= self.r2, 1.0, out))
        return float(out) if out.ndim == 0 else out

    def quantile(self, p):
        arr = np.asarray(p, dtype=float)
        if np.any(np.isnan(arr)) or np.any((arr < 0.0) | (arr > 1.0)):
            raise DomainError("p must lie in [0, 1]")
        u = inv_reg_inc_beta(arr, self.s, self.t)
        out = self.r1 + self.support.width * np.asarray(u)
        out = np.where(arr == 0.0, self.r1, np.where(arr == 1.0, self.r2, out))
        return float(out) if out.ndim == 0 else out

    # -- moments ----------------------------------------------------------

    def mean(self) -> float:
        return self.r1 + self.s / (self.s + self.t) * self.support.width

    def variance(self) -> float:
        s, t = self.s, self.t
        return s * t * self.support.width**2 / ((s + t) ** 2 * (s + t + 1.0))

    def central_moment(self, k: int) -> float:
        """Closed-form ``E[(X - mean)**k]`` for the symmetric case ``s == t``.

        Odd orders are exactly zero.  For ``k = 2n``::

            mu_2n = (r2 - r1)**(2n) B(s, n + 1/2) / (2**(2s+2n-1) B(s, s))

        Raises
        ------
        UnsupportedCaseError
            If ``s != t``; use :meth:`central_moment_numeric` instead.
        """
        k = _as_int(k)
        if k < 1:
            raise DomainError(f"k must be >= 1, got {k}")
        if not self.is_generalized_arcsine:
            raise UnsupportedCaseError(
                "closed-form central moments need s == t; use central_moment_numeric"
            )
        if k % 2:
            return 0.0
        n = k // 2
        s = self.s
        log_mu = (
            k * math.log(self.support.width)
            + log_beta(s, n + 0.5)
            - (2.0 * s + k - 1.0) * _LOG2
            - log_beta(s, s)
        )
        return math.exp(log_mu)

    def standard_arcsine_central_moment(self, n: int) -> float:
        """``mu_2n = (r2 - r1)**(2n) (2n)! / (16**n (n!)**2)`` for ``s == t == 1/2``.

        ``n = 0`` returns 1.
        """
        n = _as_int(n)
        if n < 0:
            raise DomainError(f"n must be >= 0, got {n}")
        if not (self.s == 0.5 and self.t == 0.5):
            raise UnsupportedCaseError("requires s == t == 1/2")
        if n == 0:
            return 1.0
        # (2n)! / (n!)**2 is the central binomial coefficient
        log_mu = 2 * n * math.log(self.support.width) + math.log(math.comb(2 * n, n)) - n * math.log(16.0)
        return math.exp(log_mu)

    def central_moment_numeric(self, k: int, tol: float = DEFAULT_TOL) -> float:
        """``E[(X - mean)**k]`` by quadrature; works for any ``s, t``."""
        k = _as_int(k)
        if k < 1:
            raise DomainError(f"k must be >= 1, got {k}")
        mu = self.mean()
        off = mu - self.r1
        # integrate the standardized variable so the stopping rule is relative
        sigma = math.sqrt(self.variance())

        def f(x, da, db):
            return ((da - off) / sigma) ** k * self.pdf_from_distances(da, db)

        est = integrate(f, self.r1, self.r2, tol, distances=True)
        return est.value * sigma**k

    def moment_table(self, max_k: int, method: str = "auto") -> MomentTable:
        """Rows ``k = 1 .. max_k``; ``auto`` uses the closed form when ``s == t``."""
        max_k = _as_int(max_k)
        if max_k < 1:
            raise DomainError("max_k must be >= 1")
        if method not in ("auto", "closed", "quadrature"):
            raise DomainError(f"unknown method {method!r}")
        if method == "auto":
            method = "closed" if self.is_generalized_arcsine else "quadrature"
        rows = []
        for k in range(1, max_k + 1):
            if method == "closed":
                rows.append((k, self.central_moment(k), "closed"))
            else:
                rows.append((k, self.central_moment_numeric(k), "quadrature"))
        return MomentTable(tuple(rows))

    # -- sampling ----------------------------------------------------------

    def sample(self, n: int, seed: int) -> np.ndarray:
        """``n`` inverse-transform draws, all strictly inside ``(r1, r2)``."""
        n = _as_int(n)
        if n < 1:
            raise DomainError("n must be >= 1")
        x = self.quantile(uniforms(n, seed))
        x = np.atleast_1d(x)
        lo = np.nextafter(self.r1, self.r2)
        hi = np.nextafter(self.r2, self.r1)
        return np.clip(x, lo, hi)


def make_dist(iv, sp) -> GeneralizedBetaDist:
    """Build a distribution from an interval and shape, either as value objects or pairs.

    >>> make_dist((0, 1), (0.5, 0.5)).is_standard_arcsine
    True
    """
    return GeneralizedBetaDist(as_interval(iv), as_shape(sp))
