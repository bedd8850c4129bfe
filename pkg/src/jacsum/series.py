"""Exact partial sums and rigorous enclosures of the reciprocal series.

Four series families over the Jacobsthal numbers, each starting at an
index n >= 1:

    recip               sum_{k>=n} 1/J(k)
    recip-squared       sum_{k>=n} 1/J(k)^2
    alt-recip           sum_{k>=n} (-1)^k / J(k)
    alt-recip-squared   sum_{k>=n} (-1)^k / J(k)^2

An enclosure is an exact rational interval guaranteed to contain the
series limit: a partial sum through index K plus a two-sided bound on the
omitted tail.  Tail bounds:

  * positive families use 2^(k-2) < J(k) < 2^(k-1), valid for k >= 3,
    summed geometrically over k > K:
        recip:          [2^(1-K),   2^(2-K)]
        recip-squared:  [4^(1-K)/3, 4^(2-K)/3]
  * alternating families use first-omitted-term bracketing, valid once
    term magnitudes strictly decrease (k >= 2): the tail lies between 0
    and term(K+1).

Refinement doubles K from start+8 until a width or decision goal is met,
capped at K <= start + 4096.  Each doubling roughly doubles the number of
correct bits, so the cap is unreachable in practice but guarantees
termination even if a limit happens to sit exactly on a floor boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator

from .intervals import (
    RatInterval,
    ceil_decide,
    floor_decide,
    interval_reciprocal,
    rat_str,
)
from .sequence import jacobsthal as J

__all__ = [
    "Enclosure",
    "InverseEnclosure",
    "NeedMoreTermsError",
    "SeriesFamily",
    "SeriesSpec",
    "enclose_inverse",
    "enclose_sum",
    "enclosures",
    "partial_sum",
    "series_term",
    "tail_bound",
]

INITIAL_EXTRA_TERMS = 8
MAX_EXTRA_TERMS = 4096


class NeedMoreTermsError(ValueError):
    """The truncation index is too small for the tail bound to be valid."""


class SeriesFamily(str, Enum):
    RECIP = "recip"
    RECIP_SQUARED = "recip-squared"
    ALT_RECIP = "alt-recip"
    ALT_RECIP_SQUARED = "alt-recip-squared"

    @property
    def alternating(self) -> bool:
        return self in (SeriesFamily.ALT_RECIP, SeriesFamily.ALT_RECIP_SQUARED)

    @property
    def squared(self) -> bool:
        return self in (SeriesFamily.RECIP_SQUARED, SeriesFamily.ALT_RECIP_SQUARED)


@dataclass(frozen=True)
class SeriesSpec:
    """One series family plus its start index (start >= 1; J(0) = 0)."""

    family: SeriesFamily
    start: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", SeriesFamily(self.family))
        if self.start < 1:
            raise ValueError(f"start must be >= 1, got {self.start}")


def series_term(spec: SeriesSpec, k: int) -> Fraction:
    """Exact k-th term of the series."""
    if k < 1:
        raise ValueError(f"term index must be >= 1, got {k}")
    denom = J(k) ** 2 if spec.family.squared else J(k)
    num = (-1) ** k if spec.family.alternating else 1
    return Fraction(num, denom)


def partial_sum(spec: SeriesSpec, last: int) -> Fraction:
    """Exact sum of terms from spec.start through `last` inclusive."""
    if last < spec.start:
        raise ValueError(f"last index {last} is below start {spec.start}")
    total = Fraction(0)
    for k in range(spec.start, last + 1):
        total += series_term(spec, k)
    return total


def _min_tail_index(spec: SeriesSpec) -> int:
    # positive tails need every omitted index >= 3; alternating bracketing
    # needs strictly decreasing magnitudes, which holds from k >= 2
    return max(spec.start, 2 if spec.family.alternating else 3)


def tail_bound(spec: SeriesSpec, last: int) -> RatInterval:
    """Interval guaranteed to contain the omitted remainder beyond `last`."""
    if last < _min_tail_index(spec):
        raise NeedMoreTermsError(
            f"tail bound for {spec.family.value} needs last >= {_min_tail_index(spec)},"
            f" got {last}"
        )
    if spec.family is SeriesFamily.RECIP:
        return RatInterval(Fraction(2) ** (1 - last), Fraction(2) ** (2 - last))
    if spec.family is SeriesFamily.RECIP_SQUARED:
        return RatInterval(Fraction(4) ** (1 - last) / 3, Fraction(4) ** (2 - last) / 3)
    t = series_term(spec, last + 1)
    return RatInterval(min(Fraction(0), t), max(Fraction(0), t))


@dataclass(frozen=True)
class Enclosure:
    """Partial sum plus tail bound: an interval containing the limit.

    `terms` is the index of the last summed term (the truncation point K).
    """

    spec: SeriesSpec
    interval: RatInterval
    terms: int

    def as_payload(self) -> dict:
        return {
            "lo": rat_str(self.interval.lo),
            "hi": rat_str(self.interval.hi),
            "terms": self.terms,
        }


def _truncation_cap(spec: SeriesSpec, max_terms: int | None) -> int:
    if max_terms is None:
        return spec.start + MAX_EXTRA_TERMS
    if max_terms < 1:
        raise ValueError(f"max_terms must be >= 1, got {max_terms}")
    return spec.start + max_terms - 1


def enclosures(spec: SeriesSpec, *, max_terms: int | None = None) -> Iterator[Enclosure]:
    """Yield successively tighter enclosures at K, 2K, ... up to the cap.

    `max_terms` optionally limits how many terms may be summed in total
    (the default budget is the standard cap start+4096).  If the budget
    cannot even reach the first valid truncation the iterator is empty;
    callers then report the result undecided.
    """
    cap = _truncation_cap(spec, max_terms)
    lowest = _min_tail_index(spec)
    if cap < lowest:
        return
    k = min(spec.start + INITIAL_EXTRA_TERMS, cap)
    total = partial_sum(spec, k)
    while True:
        yield Enclosure(spec, tail_bound(spec, k).shift(total), k)
        if k >= cap:
            return
        nxt = min(2 * k, cap)
        for i in range(k + 1, nxt + 1):
            total += series_term(spec, i)
        k = nxt


def enclose_sum(
    spec: SeriesSpec,
    width_goal: Fraction,
    *,
    max_terms: int | None = None,
) -> Enclosure | None:
    """Refine until the enclosure width is <= width_goal.

    Returns the best enclosure reached; the caller decides whether an
    unmet goal (width still above the target at the refinement cap) counts
    as undecided.  Returns None when the budget admits no enclosure at all.
    """
    width_goal = Fraction(width_goal)
    if width_goal <= 0:
        raise ValueError(f"width goal must be positive, got {width_goal}")
    best: Enclosure | None = None
    for enc in enclosures(spec, max_terms=max_terms):
        best = enc
        if enc.interval.width <= width_goal:
            break
    return best


@dataclass(frozen=True)
class InverseEnclosure:
    """Enclosure of the reciprocal of a series limit, plus its floor/ceil.

    `decided` is None when the refinement cap was reached first, either
    because the reciprocal interval kept straddling an integer or because
    the sum enclosure never excluded zero (`interval` is then None too).
    """

    spec: SeriesSpec
    mode: str
    decided: int | None
    interval: RatInterval | None
    sum_enclosure: Enclosure | None


def enclose_inverse(
    spec: SeriesSpec,
    mode: str = "floor",
    *,
    max_terms: int | None = None,
) -> InverseEnclosure:
    """Enclose the reciprocal of the series limit and decide its floor/ceil.

    Refines the sum enclosure until zero is excluded and the requested
    rounding of the reciprocal interval is decided, or the cap is reached.
    """
    if mode not in ("floor", "ceil"):
        raise ValueError(f"mode must be 'floor' or 'ceil', got {mode!r}")
    decide = floor_decide if mode == "floor" else ceil_decide
    best: Enclosure | None = None
    inverse: RatInterval | None = None
    for enc in enclosures(spec, max_terms=max_terms):
        best = enc
        if enc.interval.contains_zero():
            continue
        inverse = interval_reciprocal(enc.interval)
        value = decide(inverse)
        if value is not None:
            return InverseEnclosure(spec, mode, value, inverse, enc)
    return InverseEnclosure(spec, mode, None, inverse, best)
