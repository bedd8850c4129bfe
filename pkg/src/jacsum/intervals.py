"""Exact rational intervals with decidable floor and ceiling.

Endpoints are `fractions.Fraction`, so every comparison on a decision path
is exact.  No floating point enters any verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = [
    "NotInvertibleError",
    "RatInterval",
    "ceil_decide",
    "floor_decide",
    "interval_reciprocal",
    "rat_str",
]

RatLike = Union[Fraction, int]


class NotInvertibleError(ValueError):
    """The interval contains zero, so it has no bounded reciprocal image."""


def rat_str(value: RatLike) -> str:
    """Serialize an exact rational as "p/q", omitting "/q" when q = 1."""
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class RatInterval:
    """Closed interval [lo, hi] with exact rational endpoints, lo <= hi."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, value: RatLike) -> bool:
        return self.lo <= value <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def shift(self, offset: RatLike) -> "RatInterval":
        """Translate both endpoints by an exact offset."""
        return RatInterval(self.lo + offset, self.hi + offset)

    def encloses(self, other: "RatInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


def interval_reciprocal(iv: RatInterval) -> RatInterval:
    """Exact image of a sign-definite interval under x -> 1/x.

    The reciprocal is antitone on intervals that avoid zero, so the image
    of [lo, hi] is [1/hi, 1/lo].  Applying it twice returns the original
    interval exactly.
    """
    if iv.contains_zero():
        raise NotInvertibleError(
            f"interval [{iv.lo}, {iv.hi}] contains zero; refine the enclosure first"
        )
    return RatInterval(1 / iv.hi, 1 / iv.lo)


def floor_decide(iv: RatInterval) -> int | None:
    """Common floor of all points of the interval, or None if it straddles.

    Floor rounds toward -inf: floor(-26/5) = -6.  A decision requires both
    endpoints to agree, so a value lying exactly on an integer may remain
    undecided under one-sided refinement; callers must cap refinement.
    """
    lo = math.floor(iv.lo)
    return lo if lo == math.floor(iv.hi) else None


def ceil_decide(iv: RatInterval) -> int | None:
    """Common ceiling of all points of the interval, or None if it straddles.

    Dual of floor_decide, rounding toward +inf.
    """
    lo = math.ceil(iv.lo)
    return lo if lo == math.ceil(iv.hi) else None
