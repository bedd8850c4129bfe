"""Per-index verdicts for the five reciprocal-sum claims.

The claims under test, indexed by the series start n:

    2.1   J(n-2) < (sum_{k>=n} 1/J(k))^-1 < 4(J(n-2)+1)         n >= 2
    2.2   odd n: floor((sum_{k>=n} 1/J(k)^2)^-1) <= J(n-1)J(n)
    3.1   even n: floor((sum_{k>=n} (-1)^k/J(k)^2)^-1) = 2^(n-1)-1
    3.2   odd n: floor((sum_{k>=n} (-1)^k/J(k))^-1) <= -(2^(n-1)+1)
    3.3   ceil((sum_{k>=n} (-1)^k/J(k)^2)^-1) <= J(n-1)^2+J(n)^2-1

Two of the claims come with a supporting derivation that establishes a
different statement than the printed one, so those are verified in two
variants and both verdicts are reported:

  * 2.2: the derivation shows sum < 1/(J(n-1)J(n)), which forces the floor
    of the inverse *upward* past J(n-1)J(n); "stated" checks the printed
    <=, "proof-implied" checks the derived strict sum bound (and at n = 1
    the exact floor 0 = J(0)J(1)).
  * 3.1: the derivation brackets the *unsquared* alternating series while
    the statement displays the squared one; "proof-implied" decides the
    unsquared floor, "stated" the squared floor.

When the two variants disagree the pair is flagged (`discrepancy=True`)
and the notes carry the evidence; nothing is reconciled silently.

Every verified/refuted status is backed by the enclosure stored on the
verdict: the claim holds (or fails) on that entire interval, so the
verdict can be re-checked from the serialized enclosure alone.  Strict
inequalities are never concluded from a touching endpoint; refinement
continues instead, and the refinement cap turns into an `undecided`.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction

from .intervals import RatInterval, ceil_decide, floor_decide, interval_reciprocal
from .sequence import jacobsthal as J
from .series import Enclosure, SeriesFamily, SeriesSpec, enclose_inverse, enclosures

__all__ = [
    "Status",
    "Verdict",
    "THEOREM_IDS",
    "default_variant",
    "verify_cor_3_2",
    "verify_range",
    "verify_thm_2_1",
    "verify_thm_2_2",
    "verify_thm_3_1",
    "verify_thm_3_3",
]


class Status(str, Enum):
    VERIFIED = "verified"
    REFUTED = "refuted"
    UNDECIDED = "undecided"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class Verdict:
    """Outcome of one claim at one index.

    `decided` is the exactly decided floor/ceiling where the claim calls
    for one; `expected` is the integer the claim compares it against.
    `enclosure` is the final sum enclosure backing the verdict.
    """

    theorem: str
    n: int
    status: Status
    variant: str = "stated"
    decided: int | None = None
    expected: int | None = None
    enclosure: Enclosure | None = None
    discrepancy: bool = False
    note: str = ""


def _flag_disagreement(a: Verdict, b: Verdict) -> tuple[Verdict, Verdict]:
    statuses = {a.status, b.status}
    if Status.VERIFIED in statuses and Status.REFUTED in statuses:
        stamp = "variants disagree: " + "; ".join(
            f"{v.variant} {v.status.value}" for v in (a, b)
        )
        a = replace(a, discrepancy=True, note=f"{a.note}; {stamp}" if a.note else stamp)
        b = replace(b, discrepancy=True, note=f"{b.note}; {stamp}" if b.note else stamp)
    return a, b


def verify_thm_2_1(n: int, *, max_terms: int | None = None) -> Verdict:
    """Strict two-sided bound on the inverse of the plain reciprocal sum.

    Verified only when the whole reciprocal interval lies strictly inside
    (J(n-2), 4(J(n-2)+1)); an interval wholly at-or-outside either bound
    refutes.  For n >= 3 this is equivalently the derivation's combined
    bound 1/(4(J(n-2)+1)) < sum < 1/J(n-2) on the sum side.
    """
    if n < 2:
        return Verdict("2.1", n, Status.NOT_APPLICABLE, note="stated for n >= 2")
    lo_bound = J(n - 2)
    hi_bound = 4 * (J(n - 2) + 1)
    last: Enclosure | None = None
    for enc in enclosures(SeriesSpec(SeriesFamily.RECIP, n), max_terms=max_terms):
        last = enc
        if enc.interval.contains_zero():
            continue
        inv = interval_reciprocal(enc.interval)
        if lo_bound < inv.lo and inv.hi < hi_bound:
            return Verdict(
                "2.1",
                n,
                Status.VERIFIED,
                enclosure=enc,
                note=f"inverse within ({lo_bound}, {hi_bound})",
            )
        if inv.hi <= lo_bound or inv.lo >= hi_bound:
            return Verdict(
                "2.1",
                n,
                Status.REFUTED,
                enclosure=enc,
                note=f"inverse escapes ({lo_bound}, {hi_bound})",
            )
    return Verdict("2.1", n, Status.UNDECIDED, enclosure=last, note="refinement cap hit")


def verify_thm_2_2(n: int, *, max_terms: int | None = None) -> tuple[Verdict, Verdict]:
    """Floor claim for the squared reciprocal sum at odd n, both variants.

    Returns (stated, proof-implied).  Even n yields not-applicable.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n % 2 == 0:
        na = Verdict("2.2", n, Status.NOT_APPLICABLE, note="stated for odd n")
        return na, replace(na, variant="proof-implied")
    spec = SeriesSpec(SeriesFamily.RECIP_SQUARED, n)
    bound = J(n - 1) * J(n)

    inv = enclose_inverse(spec, "floor", max_terms=max_terms)
    if inv.decided is None:
        stated = Verdict(
            "2.2", n, Status.UNDECIDED, decided=None, expected=bound,
            enclosure=inv.sum_enclosure, note="floor undecided at refinement cap",
        )
    else:
        ok = inv.decided <= bound
        stated = Verdict(
            "2.2",
            n,
            Status.VERIFIED if ok else Status.REFUTED,
            decided=inv.decided,
            expected=bound,
            enclosure=inv.sum_enclosure,
            note=f"decided floor {inv.decided} {'<=' if ok else '>'} J(n-1)J(n) = {bound}",
        )

    # independent evaluation for the derivation-side claim
    if n == 1:
        inv2 = enclose_inverse(spec, "floor", max_terms=max_terms)
        if inv2.decided is None:
            proof = Verdict(
                "2.2", n, Status.UNDECIDED, variant="proof-implied", expected=0,
                enclosure=inv2.sum_enclosure, note="floor undecided at refinement cap",
            )
        else:
            proof = Verdict(
                "2.2",
                n,
                Status.VERIFIED if inv2.decided == 0 else Status.REFUTED,
                variant="proof-implied",
                decided=inv2.decided,
                expected=0,
                enclosure=inv2.sum_enclosure,
                note="floor must equal J(0)J(1) = 0 exactly",
            )
    else:
        target = Fraction(1, bound)
        proof = None
        last: Enclosure | None = None
        for enc in enclosures(spec, max_terms=max_terms):
            last = enc
            if enc.interval.hi < target:
                proof = Verdict(
                    "2.2", n, Status.VERIFIED, variant="proof-implied",
                    enclosure=enc, note=f"sum < 1/(J(n-1)J(n)) = 1/{bound}",
                )
                break
            if enc.interval.lo >= target:
                proof = Verdict(
                    "2.2", n, Status.REFUTED, variant="proof-implied",
                    enclosure=enc, note=f"sum >= 1/(J(n-1)J(n)) = 1/{bound}",
                )
                break
        if proof is None:
            proof = Verdict(
                "2.2", n, Status.UNDECIDED, variant="proof-implied",
                enclosure=last, note="refinement cap hit",
            )
    return _flag_disagreement(stated, proof)


def verify_thm_3_1(n: int, *, max_terms: int | None = None) -> tuple[Verdict, Verdict]:
    """Floor-equality claim at even n, both variants.

    Returns (proof-implied, stated): the proof-implied variant decides the
    floor of the inverse of the *unsquared* alternating sum and also
    requires the derivation's strict bracket
        2^(n-1)-1 < inverse < 2^(n-1)
    to hold on the whole interval; the stated variant decides the same
    floor for the squared alternating sum.  Odd n yields not-applicable.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n % 2 == 1:
        na = Verdict("3.1", n, Status.NOT_APPLICABLE, variant="proof-implied",
                     note="stated for even n")
        return na, replace(na, variant="stated")
    expected = 2 ** (n - 1) - 1

    proof = None
    last: Enclosure | None = None
    for enc in enclosures(SeriesSpec(SeriesFamily.ALT_RECIP, n), max_terms=max_terms):
        last = enc
        if enc.interval.contains_zero():
            continue
        inv = interval_reciprocal(enc.interval)
        decided = floor_decide(inv)
        if decided is not None and decided != expected:
            proof = Verdict(
                "3.1", n, Status.REFUTED, variant="proof-implied",
                decided=decided, expected=expected, enclosure=enc,
                note=f"decided floor {decided} != 2^(n-1)-1 = {expected}",
            )
            break
        if decided == expected and expected < inv.lo and inv.hi < expected + 1:
            proof = Verdict(
                "3.1", n, Status.VERIFIED, variant="proof-implied",
                decided=decided, expected=expected, enclosure=enc,
                note=f"inverse strictly inside ({expected}, {expected + 1})",
            )
            break
    if proof is None:
        proof = Verdict(
            "3.1", n, Status.UNDECIDED, variant="proof-implied",
            expected=expected, enclosure=last, note="refinement cap hit",
        )

    inv2 = enclose_inverse(
        SeriesSpec(SeriesFamily.ALT_RECIP_SQUARED, n), "floor", max_terms=max_terms
    )
    if inv2.decided is None:
        stated = Verdict(
            "3.1", n, Status.UNDECIDED, expected=expected,
            enclosure=inv2.sum_enclosure, note="floor undecided at refinement cap",
        )
    else:
        ok = inv2.decided == expected
        stated = Verdict(
            "3.1",
            n,
            Status.VERIFIED if ok else Status.REFUTED,
            decided=inv2.decided,
            expected=expected,
            enclosure=inv2.sum_enclosure,
            note=f"squared-series floor {inv2.decided} {'==' if ok else '!='} {expected}",
        )
    return _flag_disagreement(proof, stated)


def verify_cor_3_2(n: int, *, max_terms: int | None = None) -> Verdict:
    """Floor bound for the unsquared alternating sum at odd n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n % 2 == 0:
        return Verdict("3.2", n, Status.NOT_APPLICABLE, note="stated for odd n")
    bound = -(2 ** (n - 1) + 1)
    inv = enclose_inverse(SeriesSpec(SeriesFamily.ALT_RECIP, n), "floor", max_terms=max_terms)
    if inv.decided is None:
        return Verdict(
            "3.2", n, Status.UNDECIDED, expected=bound,
            enclosure=inv.sum_enclosure, note="floor undecided at refinement cap",
        )
    ok = inv.decided <= bound
    return Verdict(
        "3.2",
        n,
        Status.VERIFIED if ok else Status.REFUTED,
        decided=inv.decided,
        expected=bound,
        enclosure=inv.sum_enclosure,
        note=f"decided floor {inv.decided} {'<=' if ok else '>'} -(2^(n-1)+1) = {bound}",
    )


def verify_thm_3_3(n: int, *, max_terms: int | None = None) -> Verdict:
    """Ceiling bound for the squared alternating sum, swept over all n >= 1.

    The supporting derivation only covers even n >= 5 (its sign step needs
    n >= 5 and the final inequality is drawn for even n), but the claim is
    stated for every positive n, so every index gets a verdict and
    refutations outside the derivation's range are annotated as such.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    bound = J(n - 1) ** 2 + J(n) ** 2 - 1
    coverage = "" if (n >= 5 and n % 2 == 0) else "; outside derivation range (even n >= 5)"
    inv = enclose_inverse(
        SeriesSpec(SeriesFamily.ALT_RECIP_SQUARED, n), "ceil", max_terms=max_terms
    )
    if inv.decided is None:
        return Verdict(
            "3.3", n, Status.UNDECIDED, expected=bound,
            enclosure=inv.sum_enclosure,
            note="ceiling undecided at refinement cap" + coverage,
        )
    ok = inv.decided <= bound
    return Verdict(
        "3.3",
        n,
        Status.VERIFIED if ok else Status.REFUTED,
        decided=inv.decided,
        expected=bound,
        enclosure=inv.sum_enclosure,
        note=f"decided ceiling {inv.decided} {'<=' if ok else '>'} {bound}" + coverage,
    )


THEOREM_IDS = ("2.1", "2.2", "3.1", "3.2", "3.3")

# (min admissible n, parity constraint, variants carried by the pair)
_ADMISSIBLE = {
    "2.1": (2, "any", ("stated",)),
    "2.2": (1, "odd", ("stated", "proof-implied")),
    "3.1": (2, "even", ("proof-implied", "stated")),
    "3.2": (1, "odd", ("stated",)),
    "3.3": (1, "any", ("stated",)),
}

_DEFAULT_VARIANT = {
    "2.1": "stated",
    "2.2": "proof-implied",
    "3.1": "proof-implied",
    "3.2": "stated",
    "3.3": "stated",
}


def default_variant(theorem: str) -> str:
    """Variant verified by default: the one the derivation establishes."""
    return _DEFAULT_VARIANT[theorem]


def _verdicts_for(theorem: str, n: int, max_terms: int | None) -> tuple[Verdict, ...]:
    if theorem == "2.1":
        return (verify_thm_2_1(n, max_terms=max_terms),)
    if theorem == "2.2":
        return verify_thm_2_2(n, max_terms=max_terms)
    if theorem == "3.1":
        return verify_thm_3_1(n, max_terms=max_terms)
    if theorem == "3.2":
        return (verify_cor_3_2(n, max_terms=max_terms),)
    if theorem == "3.3":
        return (verify_thm_3_3(n, max_terms=max_terms),)
    raise ValueError(f"unknown theorem id {theorem!r}; expected one of {THEOREM_IDS}")


def verify_range(
    theorem: str,
    n_lo: int,
    n_hi: int,
    parity: str = "any",
    variant: str = "default",
    *,
    max_terms: int | None = None,
) -> list[Verdict]:
    """Apply one claim's verifier to every admissible index in [n_lo, n_hi].

    `parity` further filters the sweep ("any", "even", "odd"); indices the
    claim itself does not cover are skipped rather than reported.
    `variant` selects which verdict rows are returned: "default" picks the
    derivation-established variant, "both" keeps the full pairs.  Output
    is sorted by (n, variant) regardless of evaluation order.
    """
    if not 1 <= n_lo <= n_hi:
        raise ValueError(f"need 1 <= n_lo <= n_hi, got {n_lo}..{n_hi}")
    if parity not in ("any", "even", "odd"):
        raise ValueError(f"parity must be any/even/odd, got {parity!r}")
    if theorem not in _ADMISSIBLE:
        raise ValueError(f"unknown theorem id {theorem!r}; expected one of {THEOREM_IDS}")
    min_n, own_parity, variants = _ADMISSIBLE[theorem]
    if variant == "default":
        variant = _DEFAULT_VARIANT[theorem]
    if variant != "both" and variant not in variants:
        raise ValueError(f"theorem {theorem} has no {variant!r} variant")

    def admissible(n: int) -> bool:
        if n < min_n:
            return False
        if own_parity == "even" and n % 2 == 1:
            return False
        if own_parity == "odd" and n % 2 == 0:
            return False
        if parity == "even" and n % 2 == 1:
            return False
        if parity == "odd" and n % 2 == 0:
            return False
        return True

    indices = [n for n in range(n_lo, n_hi + 1) if admissible(n)]
    if not indices:
        warnings.warn(
            f"no admissible indices for theorem {theorem} in [{n_lo}, {n_hi}]"
            f" with parity {parity}",
            stacklevel=2,
        )
        return []
    out: list[Verdict] = []
    for n in indices:
        for v in _verdicts_for(theorem, n, max_terms):
            if variant == "both" or v.variant == variant:
                out.append(v)
    out.sort(key=lambda v: (v.n, v.variant))
    return out
