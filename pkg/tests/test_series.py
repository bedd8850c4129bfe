import random
from fractions import Fraction

import pytest

from jacsum import (
    NeedMoreTermsError,
    SeriesFamily,
    SeriesSpec,
    enclose_inverse,
    enclose_sum,
    enclosures,
    interval_reciprocal,
    partial_sum,
    series_term,
    tail_bound,
)

import oracles

F = Fraction

ALL_FAMILIES = list(SeriesFamily)


def spec(family, start):
    return SeriesSpec(SeriesFamily(family), start)


def test_spec_validation():
    with pytest.raises(ValueError):
        spec("recip", 0)
    with pytest.raises(ValueError):
        SeriesSpec("no-such-family", 3)
    assert spec("alt-recip", 2).family is SeriesFamily.ALT_RECIP


def test_terms_match_oracle():
    for family in ALL_FAMILIES:
        for k in range(1, 40):
            assert series_term(spec(family, 1), k) == oracles.term(family.value, k)


def test_partial_sum_examples():
    assert partial_sum(spec("recip", 3), 4) == F(8, 15)
    assert partial_sum(spec("recip-squared", 1), 1) == 1
    assert partial_sum(spec("alt-recip", 2), 3) == F(2, 3)


def test_partial_sum_rejects_short_range():
    with pytest.raises(ValueError):
        partial_sum(spec("recip", 5), 4)


def test_tail_bound_exact_values():
    assert tail_bound(spec("recip", 3), 5) == _iv(F(1, 16), F(1, 8))
    assert tail_bound(spec("recip-squared", 3), 4) == _iv(F(1, 192), F(1, 48))
    # first omitted term at k=5 is -1/11
    assert tail_bound(spec("alt-recip", 2), 4) == _iv(F(-1, 11), F(0))
    assert tail_bound(spec("alt-recip-squared", 2), 4) == _iv(F(-1, 121), F(0))


def _iv(lo, hi):
    from jacsum import RatInterval

    return RatInterval(lo, hi)


def test_tail_bound_validity_thresholds():
    with pytest.raises(NeedMoreTermsError):
        tail_bound(spec("recip", 1), 2)
    with pytest.raises(NeedMoreTermsError):
        tail_bound(spec("alt-recip", 1), 1)
    with pytest.raises(NeedMoreTermsError):
        tail_bound(spec("recip", 7), 6)
    # thresholds themselves are fine
    tail_bound(spec("recip", 1), 3)
    tail_bound(spec("alt-recip", 1), 2)


def test_tail_bound_contains_true_remainder():
    rng = random.Random(7)
    for _ in range(40):
        family = rng.choice(ALL_FAMILIES).value
        start = rng.randint(1, 12)
        s = spec(family, start)
        last = rng.randint(max(start, 3), 60)
        bound = tail_bound(s, last)
        rem_lo, rem_hi = oracles.sum_bracket(family, last + 1, last + 200)
        assert bound.lo <= rem_lo and rem_hi <= bound.hi


def test_enclosures_contain_limit_and_shrink():
    for family in ALL_FAMILIES:
        for start in (1, 2, 3, 7):
            s = spec(family.value, start)
            seen = []
            for enc in enclosures(s):
                seen.append(enc)
                if len(seen) == 4:
                    break
            lo, hi = oracles.sum_bracket(family.value, start, 3 * start + 200)
            for enc in seen:
                assert enc.interval.lo <= lo and hi <= enc.interval.hi
            for a, b in zip(seen, seen[1:]):
                assert a.interval.encloses(b.interval)
                assert b.interval.width < a.interval.width
            assert seen[0].terms == start + 8
            assert seen[1].terms == 2 * (start + 8)


def test_positive_family_enclosures_stay_positive():
    for family in ("recip", "recip-squared"):
        for start in (1, 2, 5):
            for i, enc in enumerate(enclosures(spec(family, start))):
                assert enc.interval.lo > 0
                if i == 2:
                    break


def test_alternating_partial_sums_bracket_limit():
    for family in ("alt-recip", "alt-recip-squared"):
        for start in (1, 2, 3, 6):
            s = spec(family, start)
            lo, hi = oracles.sum_bracket(family, start, 3 * start + 200)
            for last in range(max(start, 2), start + 12):
                a = partial_sum(s, last)
                b = partial_sum(s, last + 1)
                lo_pair, hi_pair = min(a, b), max(a, b)
                assert lo_pair <= lo and hi <= hi_pair


def test_enclose_sum_meets_width_goal():
    goal = F(1, 10**6)
    enc = enclose_sum(spec("recip", 3), goal)
    assert enc is not None and enc.interval.width <= goal
    mid = (enc.interval.lo + enc.interval.hi) / 2
    lo, hi = oracles.sum_bracket("recip", 3, 400)
    assert enc.interval.lo <= lo and hi <= enc.interval.hi
    assert abs(mid - (lo + hi) / 2) <= goal


def test_enclose_sum_decimal_spot_values():
    # limits to 6 decimal places, oracle-computed: 0.718592 / 0.807995 / 0.033573
    for family, start, digits in (
        ("recip", 3, F(718592, 10**6)),
        ("alt-recip", 2, F(807995, 10**6)),
        ("alt-recip-squared", 4, F(33573, 10**6)),
    ):
        enc = enclose_sum(spec(family, start), F(1, 10**9))
        mid = (enc.interval.lo + enc.interval.hi) / 2
        assert abs(mid - digits) < F(2, 10**6)


def test_enclose_sum_budget_exhaustion():
    # budget below the first valid truncation index: no enclosure at all
    assert enclose_sum(spec("recip", 1), F(1), max_terms=2) is None
    # valid but coarse budget: enclosure exists, goal unmet
    enc = enclose_sum(spec("recip", 4), F(1, 10**40), max_terms=3)
    assert enc is not None
    assert enc.terms == 6
    assert enc.interval.width > F(1, 10**40)


def test_enclose_inverse_examples():
    assert enclose_inverse(spec("alt-recip", 2), "floor").decided == 1
    assert enclose_inverse(spec("recip-squared", 1), "floor").decided == 0
    assert enclose_inverse(spec("alt-recip", 3), "floor").decided == -6


def test_enclose_inverse_interval_is_reciprocal_of_sum():
    inv = enclose_inverse(spec("recip", 5), "floor")
    assert inv.decided is not None
    assert inv.interval == interval_reciprocal(inv.sum_enclosure.interval)
    lo, hi = oracles.sum_bracket("recip", 5, 300)
    assert inv.interval.lo <= 1 / hi and 1 / lo <= inv.interval.hi


def test_enclose_inverse_undecided_under_tiny_budget():
    inv = enclose_inverse(spec("alt-recip", 8), "floor", max_terms=2)
    assert inv.decided is None
    assert inv.sum_enclosure is not None and inv.sum_enclosure.terms == 9


def test_enclose_inverse_rejects_bad_mode():
    with pytest.raises(ValueError):
        enclose_inverse(spec("recip", 3), "round")


def test_enclosure_serialization_schema():
    enc = enclose_sum(spec("recip", 3), F(1, 100))
    payload = enc.as_payload()
    assert set(payload) == {"lo", "hi", "terms"}
    assert payload["terms"] == enc.terms
    assert F(payload["lo"]) == enc.interval.lo
    assert F(payload["hi"]) == enc.interval.hi
