"""Tests for the admissible marked basket enumeration."""

import pytest

from fano_enriques.enumeration import (
    MAX_TORSION,
    BtCandidate,
    canonicalize,
    check_restrictions,
    enumerate_bt,
)
from fano_enriques.errors import OutOfRangeError
from fano_enriques.orbifold import Basket, MarkedSingularity, SingularityType


def mk(r, a, l):
    return MarkedSingularity(SingularityType(r, a), l)


WORKED_BT = Basket.parse("1/10(1,3,7)_6, 2x1/5(1,2,3)_1")
NO13_BT = Basket.parse("5x1/2(1,1,1)_1, 1/6(1,1,5)_3")


class TestBtCandidate:
    def test_valid_candidate(self):
        c = BtCandidate(5, WORKED_BT)
        assert len(c.entries) == 3
        assert str(c).startswith("r=5 | ")

    def test_rejects_unmarked_entries(self):
        with pytest.raises(OutOfRangeError):
            BtCandidate(2, Basket.parse("1/2(1,1,1)"))

    def test_rejects_incompatible_stabilizer(self):
        # 1/5(1,2,3)_1 has stabilizer order 5, which does not divide 2
        with pytest.raises(OutOfRangeError):
            BtCandidate(2, Basket.parse("1/5(1,2,3)_1"))

    def test_entries_coerced_to_basket(self):
        c = BtCandidate(2, (mk(2, 1, 1), mk(2, 1, 1)))
        assert isinstance(c.entries, Basket)
        assert len(c.entries) == 2


class TestCheckRestrictions:
    def test_admissible_candidate_passes_all(self):
        report = check_restrictions(BtCandidate(2, NO13_BT))
        assert report.admissible
        assert report.failures() == []
        assert report["R3"][0] is True

    def test_strict_variant_on_admissible_candidate(self):
        assert check_restrictions(BtCandidate(2, NO13_BT), strict_chi=True).admissible
        assert check_restrictions(BtCandidate(5, WORKED_BT), strict_chi=True).admissible

    def test_r1_basket_too_heavy(self):
        c = BtCandidate(2, (mk(24, 1, 12), mk(24, 1, 12)))
        report = check_restrictions(c)
        assert "R1" in report.failures()

    def test_r2_preimage_too_heavy(self):
        # one point of index 20 marked to order 2 pulls back to four index-10
        # points on a degree-8 cover: fine downstairs, too heavy upstairs
        c = BtCandidate(8, (mk(20, 1, 10),))
        report = check_restrictions(c)
        assert report["R1"][0] is True
        assert "R2" in report.failures()

    def test_r3_needs_full_order_stabilizer(self):
        c = BtCandidate(4, (mk(2, 1, 1),))
        report = check_restrictions(c)
        assert "R3" in report.failures()
        assert report["R3"][1] == "no entry with stabilizer order r"

    def test_r4_fractional_delta(self):
        c = BtCandidate(2, (mk(2, 1, 1),))
        report = check_restrictions(c)
        assert "R4" in report.failures()
        assert "R5" in report.failures()
        assert "chi" in report["R5"][1]

    def test_report_str(self):
        report = check_restrictions(BtCandidate(2, NO13_BT))
        assert "R1:pass" in str(report)


class TestCanonicalize:
    def test_idempotent(self):
        c = BtCandidate(5, WORKED_BT)
        once = canonicalize(c)
        assert canonicalize(once) == once

    def test_minimizes_over_unit_rescaling(self):
        # rescale the worked basket's markings by the unit 2 and recover it
        rescaled = BtCandidate(
            5,
            Basket(
                tuple(
                    MarkedSingularity(e.type, (2 * e.l) % e.type.r)
                    for e in WORKED_BT
                )
            ),
        )
        assert rescaled.entries != WORKED_BT
        assert canonicalize(rescaled).entries == WORKED_BT


class TestEnumerateBt:
    def test_out_of_range_orders(self):
        with pytest.raises(OutOfRangeError):
            enumerate_bt(1)
        with pytest.raises(OutOfRangeError):
            enumerate_bt(MAX_TORSION + 1)

    def test_counts_for_fast_orders(self):
        assert len(enumerate_bt(5)) == 4
        assert len(enumerate_bt(6)) == 2
        assert len(enumerate_bt(8)) == 1

    def test_empty_orders(self):
        assert enumerate_bt(7) == []
        assert enumerate_bt(11) == []

    def test_all_results_canonical_and_admissible(self):
        for c in enumerate_bt(5) + enumerate_bt(6) + enumerate_bt(8):
            assert c.canonical
            assert check_restrictions(c).admissible

    def test_worked_basket_enumerated(self):
        assert any(c.entries == WORKED_BT for c in enumerate_bt(5))

    def test_results_sorted(self):
        got = enumerate_bt(5)
        assert got == sorted(got, key=lambda c: c.entries.entries)
