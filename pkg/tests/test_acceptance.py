"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s``.
"""

import random
import time

import pytest

from khtwist.adequacy import check_adequacy
from khtwist.cli import load_bundled_corpus
from khtwist.diagram import is_alternating, is_reduced, mirror, parse_pd, reorder, twist_classes
from khtwist.families import figure_eight, kink, trefoil, twist_chain
from khtwist.homology import (
    GaussianInt,
    bracket_from_homology,
    bracket_state_sum,
    homology_table,
    pure_difference_magnitude,
)
from khtwist.skein import check_lemma, check_ses, grading_offsets, skein_triple
from khtwist.states import build_complex
from khtwist.tait import psi, reduce_graph, tait_graphs
from khtwist.verify import run_corpus, verify_corollary, verify_theorem

HOPF_PD = "X 1 4 2 3\nX 3 2 4 1"


@pytest.fixture(scope="module")
def corpus():
    return load_bundled_corpus()


def report(number: int, description: str, ok: bool):
    print(f"{'PASS' if ok else 'FAIL'} criterion {number}: {description}")
    assert ok, f"criterion {number}: {description}"


def test_criterion_01_hopf_base_case():
    start = time.monotonic()
    d = parse_pd(HOPF_PD, name="hopf")
    expected = {6: GaussianInt(-1), 2: GaussianInt(-1), -2: GaussianInt(-1), -6: GaussianInt(-1)}
    state_sum = bracket_state_sum(d)
    from_homology = bracket_from_homology(homology_table(build_complex(d)))
    g, g_star = tait_graphs(d)
    psis = (psi(reduce_graph(g)), psi(reduce_graph(g_star)))
    diffs = (
        pure_difference_magnitude(state_sum.coefficient(2), state_sum.coefficient(6)),
        pure_difference_magnitude(state_sum.coefficient(-2), state_sum.coefficient(-6)),
    )
    elapsed = time.monotonic() - start
    ok = (
        state_sum.coefficients() == expected
        and from_homology == state_sum
        and psis == (0, 0)
        and diffs == (0, 0)
        and elapsed < 1.0
    )
    report(1, f"Hopf bracket, psi values, and coefficient gaps ({elapsed:.2f}s)", ok)


def test_criterion_02_oracle_equivalence(corpus):
    start = time.monotonic()
    ok = True
    for d in corpus:
        if d.n > 10:
            continue
        table = homology_table(build_complex(d))
        if bracket_from_homology(table) != bracket_state_sum(d):
            ok = False
            print(f"  oracle mismatch: {d.name}")
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 300
    report(2, f"homology bracket equals state sum on all {len(corpus)} entries ({elapsed:.1f}s)", ok)


def test_criterion_03_complex_validity(corpus):
    ok = True
    for d in corpus:
        if d.n > 10:
            continue
        c = build_complex(d)  # raises InternalInconsistency if d∘d != 0
        c.verify()
        for (j, k), m in c.differentials.items():
            if m.shape() != (c.dim(j - 2, k), c.dim(j, k)):
                ok = False
    rng = random.Random(1729)
    for d in (trefoil(), figure_eight()):
        base = homology_table(build_complex(d)).as_dict()
        perm = list(range(d.n))
        rng.shuffle(perm)
        if homology_table(build_complex(reorder(d, perm))).as_dict() != base:
            ok = False
    report(3, "d∘d = 0, k-preservation, and reordering invariance", ok)


def test_criterion_04_ses_exactness(corpus):
    start = time.monotonic()
    ok = True
    count = 0
    for d in corpus:
        if d.n > 8:
            continue
        for c in range(d.n):
            rep = check_ses(skein_triple(d, c))
            count += 1
            if not rep.exact:
                ok = False
                print(f"  SES failure: {d.name} crossing {c}")
    elapsed = time.monotonic() - start
    report(4, f"SES exact for {count} (diagram, crossing) pairs with n <= 8 ({elapsed:.1f}s)", ok)


def test_criterion_05_lemma_identities(corpus):
    start = time.monotonic()
    ok = True
    count = 0
    for d in corpus:
        if d.n > 9 or not (is_reduced(d) and is_alternating(d)):
            continue
        for c in range(d.n):
            rep = check_lemma(d, c)
            count += 1
            if not rep.passed:
                ok = False
                print(f"  lemma failure: {d.name} crossing {c}: {rep.to_json()}")
    elapsed = time.monotonic() - start
    report(5, f"extreme-coefficient and skein identities at {count} crossings ({elapsed:.1f}s)", ok)


def test_criterion_06_twist_region_vanishing():
    ok = True
    for k in (3, 4, 5):
        d = twist_chain(k)
        b = bracket_state_sum(d)
        for c in range(d.n):
            t = skein_triple(d, c)
            if bracket_state_sum(t.d_plus).coefficient(b.k_min + 3):
                ok = False
    report(6, "a[l+3](D+) = 0 for the (2,k) chains, k = 3, 4, 5", ok)


def test_criterion_07_theorem(corpus):
    start = time.monotonic()
    eligible = [d for d in corpus if d.n <= 9 and is_reduced(d) and is_alternating(d)]
    both = eligible + [mirror(d).with_name(f"{d.name}!") for d in eligible]
    result = run_corpus(both)
    elapsed = time.monotonic() - start
    ok = result.all_passed and len(result.verified) == len(both)
    for e in result.entries:
        if not e.passed:
            print(f"  theorem failure: {e.name}")
    report(7, f"theorem on {len(both)} diagrams incl. mirrors, uniform pairing ({elapsed:.1f}s)", ok)


def test_criterion_08_corollary(corpus):
    ok = True
    count = 0
    for d in corpus:
        if d.n > 9 or not d.is_knot or not (is_reduced(d) and is_alternating(d)):
            continue
        rep = verify_corollary(d)
        count += 1
        if not rep.passed:
            ok = False
            print(f"  corollary failure: {d.name}: {rep.to_json()}")
    tre = verify_corollary(trefoil())
    fig = verify_corollary(figure_eight())
    ok = ok and tre.twist_number == 1 and tre.passed and fig.twist_number == 2 and fig.passed
    report(8, f"coefficient sums equal twist numbers for {count} knots; trefoil 1, figure-eight 2", ok)


def test_criterion_09_adequacy(corpus):
    ok = not check_adequacy(kink()).adequate
    for d in corpus:
        if is_reduced(d) and is_alternating(d):
            if not check_adequacy(d).adequate:
                ok = False
                print(f"  adequacy failure: {d.name}")
        rep, m = check_adequacy(d), check_adequacy(mirror(d))
        if (rep.plus_adequate, rep.minus_adequate) != (m.minus_adequate, m.plus_adequate):
            ok = False
            print(f"  mirror swap failure: {d.name}")
    report(9, "reduced alternating entries adequate, kink not, mirror swaps plus/minus", ok)


def test_criterion_10_span_structure(corpus):
    start = time.monotonic()
    ok = True
    for d in corpus:
        if not (is_reduced(d) and is_alternating(d)):
            continue
        b = bracket_state_sum(d)
        k, l = b.k_max, b.k_min
        if (k - l) % 4 != 0 or any((k - m) % 4 for m in b.support):
            ok = False
            print(f"  span failure: {d.name} support {b.support}")
        if b.coefficient(k).pure_magnitude() != 1 or b.coefficient(l).pure_magnitude() != 1:
            ok = False
            print(f"  extreme coefficient failure: {d.name}")
        for c in range(d.n):
            offs = grading_offsets(skein_triple(d, c))
            if not all(offs.values()):
                ok = False
                print(f"  offset failure: {d.name} crossing {c}: {offs}")
    elapsed = time.monotonic() - start
    report(10, f"step-4 spans and smoothed-diagram offsets (-3/-1 top, +1/+3 bottom) ({elapsed:.1f}s)", ok)
