"""Tests for terminal quotient singularity algebra and baskets."""

from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fano_enriques.errors import InconsistentMarkingError, NotTerminalError
from fano_enriques.exact import Rational
from fano_enriques.orbifold import (
    SMOOTH,
    Basket,
    MarkedSingularity,
    SingularityType,
    compose_actions,
    contribution_cQ,
    inverse_weight,
    normalize_type,
    preimage_singularity,
    terminal_sum,
)


def mk(r, a, l=0):
    return MarkedSingularity(SingularityType(r, a), l)


class TestSingularityType:
    def test_canonical_entries(self):
        s = SingularityType(5, 2)
        assert s.exponents == (1, 2, 3)
        assert str(s) == "1/5(1,2,3)"
        assert str(SingularityType(2, 1)) == "1/2(1,1,1)"

    def test_rejects_non_canonical_weight(self):
        # the canonical representative has 1 <= a <= r/2
        with pytest.raises(NotTerminalError):
            SingularityType(5, 3)
        with pytest.raises(NotTerminalError):
            SingularityType(4, 2)
        with pytest.raises(NotTerminalError):
            SingularityType(1, 0)

    def test_ordering(self):
        assert SingularityType(2, 1) < SingularityType(3, 1)
        assert SingularityType(5, 1) < SingularityType(5, 2)


class TestMarkedSingularity:
    def test_derived_quantities(self):
        m = mk(10, 3, 6)
        assert m.d == 2
        assert m.alpha == 5
        assert str(m) == "1/10(1,3,7)_6"
        assert str(mk(2, 1)) == "1/2(1,1,1)"

    def test_marking_range(self):
        with pytest.raises(InconsistentMarkingError):
            mk(5, 2, 5)
        with pytest.raises(InconsistentMarkingError):
            mk(5, 2, -1)


class TestNormalizeType:
    def test_non_minimal_weight_triples(self):
        assert normalize_type(5, (4, 2, 3)) == SingularityType(5, 2)
        assert normalize_type(10, (13, 9, 11)) == SingularityType(10, 3)
        assert normalize_type(8, (6, 6, 10)) == SingularityType(4, 1)

    def test_smooth_reductions(self):
        assert normalize_type(1, (0, 0, 0)) is SMOOTH
        assert normalize_type(1, (5, 7, 2)) is SMOOTH
        assert normalize_type(4, (0, 4, 8)) is SMOOTH

    def test_non_faithful_part_divided_out(self):
        assert normalize_type(4, (2, 2, 2)) == SingularityType(2, 1)
        assert normalize_type(6, (2, 2, 4)) == SingularityType(3, 1)

    def test_non_terminal_rejected(self):
        with pytest.raises(NotTerminalError):
            normalize_type(4, (1, 1, 1))
        with pytest.raises(NotTerminalError):
            normalize_type(3, (1, 1, 1))
        with pytest.raises(NotTerminalError):
            normalize_type(0, (1, 1, 1))
        with pytest.raises(NotTerminalError):
            normalize_type(5, (1, 2))  # type: ignore[arg-type]

    @given(st.integers(2, 60), st.data())
    def test_unit_rescaling_invariance(self, r, data):
        choices = [a for a in range(1, r // 2 + 1) if gcd(a, r) == 1]
        a = data.draw(st.sampled_from(choices))
        u = data.draw(st.sampled_from([v for v in range(1, r) if gcd(v, r) == 1]))
        scrambled = tuple((u * e) % r for e in (1, a, r - a))
        assert normalize_type(r, scrambled) == SingularityType(r, a)


class TestComposeActions:
    def test_index_two_point_under_order_five_action(self):
        got = compose_actions(5, (4, 2, 3), SingularityType(2, 1))
        assert got == SingularityType(10, 3)
        assert str(got) == "1/10(1,3,7)"

    def test_smooth_point_under_order_five_action(self):
        assert compose_actions(5, (4, 2, 3), SMOOTH) == SingularityType(5, 2)

    def test_composition_collapsing_to_smaller_index(self):
        # order 4*2 = 8 action that is faithful only on a Z/4 quotient
        got = compose_actions(4, (1, 1, 3), SingularityType(2, 1))
        assert got == SingularityType(4, 1)

    def test_requires_nontrivial_quotient(self):
        with pytest.raises(NotTerminalError):
            compose_actions(1, (1, 1, 1), SMOOTH)


class TestPreimageSingularity:
    def test_unmarked_entries_split_completely(self):
        count, fiber = preimage_singularity(mk(2, 1), 2)
        # l = 0 gives d = r_Q, alpha = 1: r copies of the same type
        assert (count, fiber) == (2, SingularityType(2, 1))

    def test_fully_marked_point_is_smooth_upstairs(self):
        count, fiber = preimage_singularity(mk(2, 1, 1), 2)
        assert count == 1
        assert fiber is SMOOTH

    def test_partially_marked_point(self):
        count, fiber = preimage_singularity(mk(6, 1, 3), 2)
        assert count == 1
        assert fiber == SingularityType(3, 1)

    def test_index_ten_point_over_order_five_quotient(self):
        count, fiber = preimage_singularity(mk(10, 3, 6), 5)
        assert count == 1
        assert fiber == SingularityType(2, 1)

    def test_incompatible_stabilizer(self):
        with pytest.raises(InconsistentMarkingError):
            preimage_singularity(mk(3, 1, 1), 2)

    def test_inverts_composition(self):
        # going down by compose_actions and back up must recover the point
        m = mk(10, 3, 6)
        count, fiber = preimage_singularity(m, 5)
        assert compose_actions(5, (4, 2, 3), fiber) == m.type
        assert count * m.alpha == 5 * 1


class TestContributions:
    def test_half_point(self):
        s = SingularityType(2, 1)
        assert contribution_cQ(s, 1) == Rational(-1, 8)
        assert contribution_cQ(s, 0) == 0
        assert contribution_cQ(s, 2) == 0
        assert contribution_cQ(s, 3) == Rational(-1, 8)

    def test_third_point(self):
        s = SingularityType(3, 1)
        assert contribution_cQ(s, 1) == Rational(-2, 9)
        assert contribution_cQ(s, 2) == Rational(-1, 9)

    def test_one_fifth_123(self):
        s = SingularityType(5, 2)
        assert inverse_weight(s) == 3
        assert contribution_cQ(s, 1) == Rational(-2, 5)
        assert contribution_cQ(s, 2) == Rational(-1, 5)

    @given(st.sampled_from([(2, 1), (3, 1), (5, 2), (7, 3), (10, 3), (11, 4)]), st.integers(0, 40))
    def test_periodicity(self, ra, i):
        s = SingularityType(*ra)
        assert contribution_cQ(s, i) == contribution_cQ(s, i + s.r)

    def test_terminal_sum(self):
        b = Basket.parse("5x1/2(1,1,1)_1, 1/6(1,1,5)_3")
        assert terminal_sum(b) == Rational(40, 3)
        assert terminal_sum(Basket()) == 0


class TestBasket:
    def test_parse_multiplicity_forms(self):
        assert Basket.parse("2x1/5(1,2,3)_1") == Basket.parse("1/5(1,2,3)_1 x2")
        assert len(Basket.parse("3x1/2(1,1,1)")) == 3

    def test_parse_normalizes_entries(self):
        assert Basket.parse("1/4(2,2,2)") == Basket.parse("1/2(1,1,1)")
        assert Basket.parse("1/5(4,2,3)") == Basket.parse("1/5(1,2,3)")

    def test_parse_empty(self):
        assert Basket.parse("") == Basket()
        assert Basket.parse("(empty)") == Basket()
        assert str(Basket()) == "(empty)"

    def test_parse_rejects_smooth_and_garbage(self):
        with pytest.raises(NotTerminalError):
            Basket.parse("1/1(1,1,1)")
        with pytest.raises(NotTerminalError):
            Basket.parse("not a basket")

    def test_sorted_on_construction(self):
        b = Basket((mk(6, 1, 3), mk(2, 1, 1), mk(2, 1)))
        assert b.entries == (mk(2, 1), mk(2, 1, 1), mk(6, 1, 3))

    def test_str_round_trip(self):
        for text in (
            "1/2(1,1,1)",
            "1/2(1,1,1)_1 x5, 1/6(1,1,5)_3",
            "1/10(1,3,7)_6, 1/5(1,2,3)_1 x2",
        ):
            b = Basket.parse(text)
            assert Basket.parse(str(b)) == b

    def test_json_round_trip(self):
        b = Basket.parse("2x1/5(1,2,3)_1, 1/2(1,1,1)")
        assert Basket.from_json(b.to_json()) == b
        # unmarked entries leave the marking key out entirely
        assert all("l" not in rec for rec in Basket.parse("1/3(1,1,2)").to_json())

    def test_concatenation_and_views(self):
        b = Basket.parse("1/2(1,1,1)_1") + Basket.parse("1/3(1,1,2)")
        assert len(b) == 2
        assert not b.unmarked
        assert b.types() == (SingularityType(2, 1), SingularityType(3, 1))
        assert b.counts() == {mk(2, 1, 1): 1, mk(3, 1): 1}
        assert bool(Basket()) is False
