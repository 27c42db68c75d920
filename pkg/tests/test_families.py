from collections import Counter

import pytest

from khtwist.diagram import is_alternating, is_prime_diagram, is_reduced, twist_classes
from khtwist.families import (
    braid_closure,
    continued_fraction_value,
    hopf,
    positive_continued_fraction,
    pretzel,
    rolfsen_name,
    trefoil,
    twist_chain,
    two_bridge,
    two_bridge_census,
    two_bridge_from_cf,
)
from khtwist.states import circle_count
from khtwist.tait import spanning_tree_count, tait_graphs


class TestTwistChain:
    def test_hopf_matches_reference_pd(self):
        assert [c.arcs for c in hopf().crossings] == [(1, 4, 2, 3), (3, 2, 4, 1)]

    def test_all_zero_state_has_k_circles(self):
        for k in range(1, 7):
            assert circle_count(twist_chain(k), 0) == k

    def test_single_twist_class(self):
        for k in range(2, 7):
            assert twist_classes(twist_chain(k)).twist_number == 1

    def test_validity(self):
        for k in range(1, 7):
            d = twist_chain(k)
            assert is_alternating(d)
            assert d.connected


class TestBraidClosure:
    def test_unused_strand_becomes_free_loop(self):
        d = braid_closure([1], 3)
        assert d.free_loops == 1

    def test_two_strand_chain(self):
        d = braid_closure([1, 1], 2)
        assert d.n == 2 and is_alternating(d)


class TestContinuedFractions:
    @pytest.mark.parametrize(
        "p,q,cf",
        [(3, 1, [3]), (5, 2, [2, 2]), (13, 5, [2, 1, 1, 2]), (21, 8, [2, 1, 1, 1, 2])],
    )
    def test_expansion_roundtrip(self, p, q, cf):
        assert positive_continued_fraction(p, q) == cf
        assert continued_fraction_value(cf) == (p, q)


class TestTwoBridge:
    def test_census_counts(self):
        counts = Counter(e.crossing_number for e in two_bridge_census(9))
        assert dict(counts) == {3: 1, 4: 1, 5: 2, 6: 3, 7: 7, 8: 12, 9: 24}

    def test_all_entries_validate(self):
        for e in two_bridge_census(8):
            d = two_bridge(e.p, e.q)
            assert d.n == e.crossing_number
            assert d.is_knot and d.connected
            assert is_alternating(d) and is_reduced(d) and is_prime_diagram(d)
            assert spanning_tree_count(tait_graphs(d)[0]) == e.p

    def test_twist_number_counts_fraction_terms(self):
        for e in two_bridge_census(7):
            d = two_bridge(e.p, e.q)
            assert twist_classes(d).twist_number == len(e.cf)

    def test_amphichiral_entries(self):
        amphi = {(e.p, e.q) for e in two_bridge_census(9) if e.amphichiral}
        assert (5, 2) in amphi and (13, 5) in amphi and (17, 4) in amphi
        assert (3, 1) not in amphi

    def test_rolfsen_names(self):
        assert rolfsen_name(3, 3) == "3_1"
        assert rolfsen_name(6, 11) == "6_2"
        assert rolfsen_name(8, 17) is None

    def test_bad_cf_rejected(self):
        with pytest.raises(ValueError):
            two_bridge_from_cf([2, 0, 2])


class TestPretzel:
    def test_validity(self):
        for twists in [(2, 2, 2), (3, 3, 2), (3, 3, 3), (2, 2, 2, 2)]:
            d = pretzel(*twists)
            assert d.n == sum(twists)
            assert is_alternating(d) and is_reduced(d) and is_prime_diagram(d)
            assert twist_classes(d).twist_number == len(twists)

    def test_knot_detection(self):
        assert pretzel(3, 3, 2).is_knot
        assert pretzel(3, 3, 3).is_knot
        assert not pretzel(2, 2, 2).is_knot


class TestTrefoilFixture:
    def test_positive_smoothing_gives_hopf_type(self):
        from khtwist.diagram import smooth

        d = smooth(trefoil(), 1, 0)
        assert d.n == 2 and d.strand_components() == 2
