from fractions import Fraction

import pytest

from jacsum import (
    Status,
    default_variant,
    interval_reciprocal,
    jacobsthal,
    verify_cor_3_2,
    verify_range,
    verify_thm_2_1,
    verify_thm_2_2,
    verify_thm_3_1,
    verify_thm_3_3,
)

import oracles

F = Fraction


def test_thm_2_1_small_indices_verified():
    for n in (2, 3, 6):
        v = verify_thm_2_1(n)
        assert v.status is Status.VERIFIED
        assert v.theorem == "2.1" and v.n == n


def test_thm_2_1_verdict_recheckable_from_enclosure():
    v = verify_thm_2_1(6)
    inv = interval_reciprocal(v.enclosure.interval)
    assert jacobsthal(4) < inv.lo and inv.hi < 4 * (jacobsthal(4) + 1)
    # equivalent combined bound on the sum side
    assert v.enclosure.interval.lo > F(1, 4 * (jacobsthal(4) + 1))
    assert v.enclosure.interval.hi < F(1, jacobsthal(4))


def test_thm_2_1_below_range():
    assert verify_thm_2_1(1).status is Status.NOT_APPLICABLE
    assert verify_thm_2_1(0).status is Status.NOT_APPLICABLE


def test_thm_2_1_undecided_when_budget_admits_no_enclosure():
    # at n=2 the tail bound needs truncation index >= 3, out of reach here
    v = verify_thm_2_1(2, max_terms=1)
    assert v.status is Status.UNDECIDED and v.enclosure is None


def test_thm_2_2_at_one_both_variants_verified():
    stated, proof = verify_thm_2_2(1)
    assert stated.status is Status.VERIFIED and stated.decided == 0
    assert proof.status is Status.VERIFIED and proof.decided == 0
    assert proof.variant == "proof-implied" and stated.variant == "stated"
    assert not stated.discrepancy and not proof.discrepancy


def test_thm_2_2_direction_flip_at_three():
    stated, proof = verify_thm_2_2(3)
    assert stated.status is Status.REFUTED
    assert stated.decided == 6 and stated.expected == 3
    assert proof.status is Status.VERIFIED
    assert proof.enclosure.interval.hi < F(1, 3)
    assert stated.discrepancy and proof.discrepancy


def test_thm_2_2_spot_floor_at_five():
    stated, proof = verify_thm_2_2(5)
    assert stated.decided == 88 and stated.expected == 55
    assert stated.status is Status.REFUTED and proof.status is Status.VERIFIED
    assert stated.decided == oracles.floor_of_inverse("recip-squared", 5)


def test_thm_2_2_even_is_not_applicable():
    stated, proof = verify_thm_2_2(4)
    assert stated.status is proof.status is Status.NOT_APPLICABLE


def test_thm_3_1_proof_implied_floor():
    proof, stated = verify_thm_3_1(2)
    assert proof.status is Status.VERIFIED and proof.decided == 1
    assert stated.status is Status.VERIFIED and stated.decided == 1
    assert not proof.discrepancy

    proof, stated = verify_thm_3_1(4)
    assert proof.status is Status.VERIFIED and proof.decided == 7
    assert stated.status is Status.REFUTED and stated.decided == 29
    assert proof.discrepancy and stated.discrepancy


def test_thm_3_1_bracket_recheckable():
    proof, _ = verify_thm_3_1(6)
    inv = interval_reciprocal(proof.enclosure.interval)
    assert 2**5 - 1 < inv.lo and inv.hi < 2**5


def test_thm_3_1_odd_not_applicable():
    proof, stated = verify_thm_3_1(5)
    assert proof.status is stated.status is Status.NOT_APPLICABLE


def test_cor_3_2_examples():
    v = verify_cor_3_2(3)
    assert v.status is Status.VERIFIED
    assert v.decided == -6 and v.expected == -5

    v = verify_cor_3_2(1)
    assert v.status is Status.VERIFIED and v.decided == -6 and v.expected == -2

    v = verify_cor_3_2(5)
    assert v.status is Status.VERIFIED and v.expected == -17
    assert v.decided == oracles.floor_of_inverse("alt-recip", 5) == -18

    assert verify_cor_3_2(4).status is Status.NOT_APPLICABLE


def test_thm_3_3_examples():
    v = verify_thm_3_3(4)
    assert v.status is Status.VERIFIED and v.decided == 30 and v.expected == 33

    v = verify_thm_3_3(2)
    assert v.status is Status.REFUTED and v.decided == 2 and v.expected == 1
    assert "outside derivation range" in v.note

    v = verify_thm_3_3(5)
    assert v.status is Status.VERIFIED and v.decided == -155 and v.expected == 145

    v = verify_thm_3_3(1)
    assert v.status is Status.VERIFIED and v.decided == -12 and v.expected == 0


def test_verdicts_match_oracle_floors_small_range():
    for n in range(2, 17, 2):
        proof, stated = verify_thm_3_1(n)
        assert proof.decided == oracles.floor_of_inverse("alt-recip", n)
        assert stated.decided == oracles.floor_of_inverse("alt-recip-squared", n)
    for n in range(1, 17):
        assert verify_thm_3_3(n).decided == oracles.ceil_of_inverse(
            "alt-recip-squared", n
        )


def test_verify_range_shapes():
    rows = verify_range("3.1", 2, 8, parity="even")
    assert [v.n for v in rows] == [2, 4, 6, 8]
    assert all(v.variant == "proof-implied" for v in rows)
    assert all(v.status is Status.VERIFIED for v in rows)

    rows = verify_range("3.1", 2, 8, variant="both")
    assert len(rows) == 8

    rows = verify_range("3.2", 1, 9, parity="odd")
    assert [v.n for v in rows] == [1, 3, 5, 7, 9]

    rows = verify_range("2.1", 2, 2)
    assert len(rows) == 1

    assert default_variant("3.1") == "proof-implied"
    assert default_variant("3.3") == "stated"


def test_verify_range_skips_inadmissible_indices():
    rows = verify_range("2.2", 1, 6)
    assert [v.n for v in rows] == [1, 3, 5]


def test_verify_range_empty_set_warns():
    with pytest.warns(UserWarning):
        rows = verify_range("3.1", 3, 3, parity="odd")
    assert rows == []


def test_verify_range_is_deterministic():
    a = verify_range("2.2", 1, 9, variant="both")
    b = verify_range("2.2", 1, 9, variant="both")
    assert a == b


def test_verify_range_rejects_bad_arguments():
    with pytest.raises(ValueError):
        verify_range("9.9", 1, 4)
    with pytest.raises(ValueError):
        verify_range("3.1", 4, 1)
    with pytest.raises(ValueError):
        verify_range("3.1", 1, 4, parity="prime")
    with pytest.raises(ValueError):
        verify_range("2.1", 2, 4, variant="proof-implied")


def test_undecided_statuses_under_budget():
    proof, stated = verify_thm_3_1(8, max_terms=2)
    assert proof.status is Status.UNDECIDED
    assert stated.status is Status.UNDECIDED
    v = verify_thm_3_3(8, max_terms=2)
    assert v.status is Status.UNDECIDED
