import pytest

from khtwist.diagram import parse_pd
from khtwist.errors import PreconditionViolated
from khtwist.families import twist_chain
from khtwist.homology import bracket_state_sum
from khtwist.skein import (
    build_alpha,
    build_beta,
    check_lemma,
    check_les_identities,
    check_ses,
    grading_offsets,
    skein_triple,
)
from khtwist.states import build_complex


class TestTriple:
    def test_crossing_counts(self, trefoil_diagram):
        for c in range(3):
            t = skein_triple(trefoil_diagram, c)
            assert (t.d_minus.n, t.d.n, t.d_plus.n) == (2, 3, 2)

    def test_trefoil_smoothings_are_two_crossing(self, trefoil_diagram):
        t = skein_triple(trefoil_diagram, 0)
        assert t.d_minus.n == 2 and t.d_plus.n == 2

    def test_hopf_smoothings_are_kinks(self, hopf_diagram):
        t = skein_triple(hopf_diagram, 1)
        for s in (t.d_minus, t.d_plus):
            assert s.n == 1

    def test_chosen_crossing_moved_last(self, trefoil_diagram):
        t = skein_triple(trefoil_diagram, 0)
        assert t.d.crossings[-1].arcs == trefoil_diagram.crossings[0].arcs


class TestChainMaps:
    def test_alpha_is_injection_of_generators(self, hopf_diagram):
        t = skein_triple(hopf_diagram, 1)
        alpha = build_alpha(t)
        for (j, k), block in alpha.blocks.items():
            assert block.ncols == alpha.source.dim(j, k)
            assert block.nrows == alpha.target.dim(j - 1, k - 1)
            for _, _, v in block.triplets():
                assert v == 1

    def test_beta_kills_trailing_one(self, hopf_diagram):
        t = skein_triple(hopf_diagram, 1)
        beta = build_beta(t)
        n = t.d.n
        for (j, k), block in beta.blocks.items():
            dense = block.to_dense()
            for col, (s, _) in enumerate(beta.source.generators[(j, k)]):
                col_entries = [dense[r][col] for r in range(block.nrows)]
                if s >> (n - 1) & 1:
                    assert not any(col_entries)
                else:
                    assert sum(col_entries) == 1

    def test_maps_commute(self, trefoil_diagram):
        for c in range(3):
            t = skein_triple(trefoil_diagram, c)
            assert build_alpha(t).commutes_with_differentials()
            assert build_beta(t).commutes_with_differentials()

    def test_shift_is_minus_one_minus_one(self, figure_eight_diagram):
        t = skein_triple(figure_eight_diagram, 2)
        assert build_alpha(t).shift == (-1, -1)
        assert build_beta(t).shift == (-1, -1)


class TestSES:
    def test_hopf_exact(self, hopf_diagram):
        for c in range(2):
            rep = check_ses(skein_triple(hopf_diagram, c))
            assert rep.exact
            assert rep.alpha_commutes and rep.beta_commutes

    def test_trefoil_exact(self, trefoil_diagram):
        rep = check_ses(skein_triple(trefoil_diagram, 1))
        assert rep.exact

    def test_dimension_bookkeeping(self, trefoil_diagram):
        rep = check_ses(skein_triple(trefoil_diagram, 0))
        for b in rep.buckets:
            assert b.dim_middle == b.dim_minus + b.dim_plus

    def test_kink_degenerate_triple(self, kink_diagram):
        rep = check_ses(skein_triple(kink_diagram, 0))
        assert rep.exact

    def test_json_shape(self, hopf_diagram):
        payload = check_ses(skein_triple(hopf_diagram, 0)).to_json()
        assert payload["exact"] is True
        assert {"alpha_injective", "beta_surjective"} <= set(payload["buckets"][0])


class TestLES:
    def test_hopf_all_degrees(self, hopf_diagram):
        rep = check_les_identities(skein_triple(hopf_diagram, 1))
        assert rep.passed
        assert any(i.degree == 2 for i in rep.identities)

    def test_unknot_kink_degenerate(self, kink_diagram):
        assert check_les_identities(skein_triple(kink_diagram, 0)).passed

    def test_trefoil_top_degree_entry(self, trefoil_diagram):
        rep = check_les_identities(skein_triple(trefoil_diagram, 2))
        b = bracket_state_sum(trefoil_diagram)
        top = [i for i in rep.identities if i.degree == b.k_max]
        assert top and top[0].holds


class TestLemma:
    def test_trefoil_every_crossing(self, trefoil_diagram):
        for c in range(3):
            assert check_lemma(trefoil_diagram, c).passed

    def test_figure_eight_every_crossing(self, figure_eight_diagram):
        for c in range(4):
            assert check_lemma(figure_eight_diagram, c).passed

    def test_hopf_with_degenerate_smoothings(self, hopf_diagram):
        for c in range(2):
            rep = check_lemma(hopf_diagram, c)
            assert rep.passed
            assert rep.k_top == 6 and rep.k_bottom == -6

    def test_precondition(self, kink_diagram):
        with pytest.raises(PreconditionViolated):
            check_lemma(kink_diagram, 0)

    def test_identity_values_recorded(self, hopf_diagram):
        rep = check_lemma(hopf_diagram, 0)
        for name, (lhs, rhs) in rep.identities.items():
            assert lhs == rhs, name


class TestGradingOffsets:
    def test_corpus_offsets(self, small_corpus):
        from khtwist.diagram import is_alternating, is_reduced

        for d in small_corpus:
            if not (is_reduced(d) and is_alternating(d)):
                continue
            for c in range(d.n):
                offs = grading_offsets(skein_triple(d, c))
                assert all(offs.values()), (d.name, c, offs)

    def test_twist_region_vanishing(self):
        # smoothing inside a k-crossing twist region kills the bottom
        # coefficient of the positively smoothed diagram
        for k in (3, 4, 5):
            d = twist_chain(k)
            b = bracket_state_sum(d)
            t = skein_triple(d, 0)
            b_plus = bracket_state_sum(t.d_plus)
            assert not b_plus.coefficient(b.k_min + 3)
