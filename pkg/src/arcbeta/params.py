"""Parameter value types shared by the identities and the distribution."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = ["SupportInterval", "ShapeParams"]


@dataclass(frozen=True)
class SupportInterval:
    """A bounded interval ``[r1, r2]`` with ``r1 < r2``."""

    r1: float
    r2: float

    def __post_init__(self):
        r1, r2 = float(self.r1), float(self.r2)
        if not (math.isfinite(r1) and math.isfinite(r2)):
            raise DomainError(f"interval ends must be finite, got [{r1}, {r2}]")
        if not r1 < r2:
            raise DomainError(f"need r1 < r2, got [{r1}, {r2}]")
        mid = 0.5 * (r1 + r2)
        if not r1 < mid < r2:
            raise DomainError(f"interval [{r1}, {r2}] has no interior midpoint in floating point")
        object.__setattr__(self, "r1", r1)
        object.__setattr__(self, "r2", r2)

    @property
    def width(self) -> float:
        return self.r2 - self.r1

    def midpoint(self) -> float:
        return 0.5 * (self.r1 + self.r2)


@dataclass(frozen=True)
class ShapeParams:
    """Beta exponents ``s, t > 0``."""

    s: float
    t: float

    def __post_init__(self):
        for name in ("s", "t"):
            v = float(getattr(self, name))
            if not math.isfinite(v) or v <= 0.0:
                raise DomainError(f"{name} must be finite and > 0, got {v}")
            object.__setattr__(self, name, v)

    @property
    def symmetric(self) -> bool:
        return self.s == self.t


def as_interval(iv) -> SupportInterval:
    if isinstance(iv, SupportInterval):
        return iv
    r1, r2 = iv
    return SupportInterval(r1, r2)


def as_shape(sp) -> ShapeParams:
    if isinstance(sp, ShapeParams):
        return sp
    s, t = sp
    return ShapeParams(s, t)
