"""The skein triple (D-, D, D+) at a crossing, the chain maps between the
three complexes, and the rank identities they force.

With the chosen crossing moved to the last position, alpha sends a generator
of C(D-) to the generator of C(D) whose state gains a trailing 1 and whose
circles keep their orientations; beta kills trailing-1 generators of C(D) and
strips the trailing 0 from the rest.  Both maps shift the bigrading by
(-1, -1) and commute with the differentials on the nose, giving a short
exact sequence per bucket.

The long-exact-sequence bookkeeping collapses, coefficient by coefficient,
to the exact Gaussian identity

    a[m+1](D-) - i*a[m](D) - a[m-1](D+) = 0        for every degree m,

and at the extreme degrees of an adequate alternating diagram to

    i*a[k]   = -a[k-1](D+)
    i*a[k-4] =  a[k-3](D-) - a[k-5](D+)
    i*a[l]   =  a[l+1](D-)
    i*a[l+4] =  a[l+5](D-) - a[l+3](D+).
"""

from __future__ import annotations

from dataclasses import dataclass

from .adequacy import check_adequacy
from .diagram import Diagram, is_alternating, is_reduced, reorder, smooth_with_map
from .errors import InternalInconsistency, PreconditionViolated
from .homology import (
    BracketPolynomial,
    GaussianInt,
    bracket_from_homology,
    bracket_state_sum,
    homology_table,
)
from .linalg import SparseIntMatrix, matrix_rank
from .states import DEFAULT_COMPLEX_CAP, ChainComplex, build_complex, resolve_state


@dataclass(frozen=True)
class SkeinTriple:
    """A diagram with the chosen crossing reordered last, and its smoothings."""

    d: Diagram
    d_minus: Diagram
    d_plus: Diagram
    crossing: int
    minus_arc_map: dict
    plus_arc_map: dict


def skein_triple(d: Diagram, c: int) -> SkeinTriple:
    """Move crossing ``c`` last, then smooth it both ways."""
    if not 0 <= c < d.n:
        raise ValueError(f"crossing {c} out of range")
    order = [i for i in range(d.n) if i != c] + [c]
    reordered = reorder(d, order)
    last = reordered.n - 1
    d_plus, plus_map = smooth_with_map(reordered, last, 0)
    d_minus, minus_map = smooth_with_map(reordered, last, 1)
    return SkeinTriple(reordered, d_minus, d_plus, c, minus_map, plus_map)


@dataclass
class ChainMap:
    """Bucketed matrices of a chain map with bidegree shift (-1, -1)."""

    source: ChainComplex
    target: ChainComplex
    blocks: dict[tuple[int, int], SparseIntMatrix]
    shift: tuple[int, int] = (-1, -1)

    def block(self, j: int, k: int) -> SparseIntMatrix:
        m = self.blocks.get((j, k))
        if m is None:
            m = SparseIntMatrix.zero(
                self.target.dim(j + self.shift[0], k + self.shift[1]), self.source.dim(j, k)
            )
        return m

    def commutes_with_differentials(self) -> bool:
        """d_target ∘ f == f ∘ d_source on every bucket."""
        dj, dk = self.shift
        buckets = set(self.source.generators) | set(self.blocks)
        for (j, k) in buckets:
            left = self.target.differential(j + dj, k + dk).mul(self.block(j, k))
            right = self.block(j - 2, k).mul(self.source.differential(j, k))
            if not left.sub(right).is_zero():
                return False
        return True


def _bit_translation(smoothed_circles, unsmoothed_circles, unsmoothed_arc_index, arc_map) -> list[int]:
    """For each circle of the smoothed resolution, the position of its
    counterpart circle in the unsmoothed resolution (positions as orientation
    bits).  Matching goes through the arc images of the smoothing; circles
    the smoothing closed off land on free-loop slots."""
    free_preimage: dict[int, int] = {}
    for old_arc, (kind, value) in arc_map.items():
        if kind == "free":
            free_preimage.setdefault(value, old_arc)
    inverse_arc: dict[int, int] = {}
    for old_arc, (kind, value) in arc_map.items():
        if kind == "arc":
            inverse_arc.setdefault(value, old_arc)
    out = []
    for arcs in smoothed_circles.arc_circles:
        out.append(unsmoothed_arc_index[inverse_arc[min(arcs)]])
    base_un = len(unsmoothed_circles.arc_circles)
    for f in range(smoothed_circles.free_count):
        if f in free_preimage:
            out.append(unsmoothed_arc_index[free_preimage[f]])
        else:
            out.append(base_un + f)
    return out


def build_alpha(t: SkeinTriple, cap: int = DEFAULT_COMPLEX_CAP,
                complexes: tuple[ChainComplex, ChainComplex] | None = None) -> ChainMap:
    """alpha: C[j, k](D-) -> C[j-1, k-1](D), appending a negative smoothing."""
    src = complexes[0] if complexes else build_complex(t.d_minus, cap)
    tgt = complexes[1] if complexes else build_complex(t.d, cap)
    n = t.d.n
    last_bit = 1 << (n - 1)
    translations: dict[int, tuple[int, list[int]]] = {}

    def translation(s: int) -> tuple[int, list[int]]:
        cached = translations.get(s)
        if cached is None:
            circ_minus = resolve_state(t.d_minus, s)
            circ_d = resolve_state(t.d, s | last_bit)
            # orientation bits live on D- circles; find each D- circle's D position
            trans = _bit_translation(circ_minus, circ_d, circ_d.index_of_arc(), t.minus_arc_map)
            cached = (circ_minus.count, trans)
            translations[s] = cached
        return cached

    entries: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
    for (j, k), gens in src.generators.items():
        bucket = entries.setdefault((j, k), [])
        tgt_index = tgt.index[(j - 1, k - 1)]
        for col, (s, m) in enumerate(gens):
            count, trans = translation(s)
            m_t = 0
            for si in range(count):
                if (m >> si) & 1:
                    m_t |= 1 << trans[si]
            row = tgt_index[(s | last_bit, m_t)]
            bucket.append((row, col, 1))
    blocks = {
        (j, k): SparseIntMatrix.from_triplets(tgt.dim(j - 1, k - 1), src.dim(j, k), triple)
        for (j, k), triple in entries.items()
    }
    return ChainMap(src, tgt, blocks)


def build_beta(t: SkeinTriple, cap: int = DEFAULT_COMPLEX_CAP,
               complexes: tuple[ChainComplex, ChainComplex] | None = None) -> ChainMap:
    """beta: C[j, k](D) -> C[j-1, k-1](D+); trailing-1 states die, trailing-0
    states map to the smoothed diagram with their circles."""
    src = complexes[0] if complexes else build_complex(t.d, cap)
    tgt = complexes[1] if complexes else build_complex(t.d_plus, cap)
    n = t.d.n
    last_bit = 1 << (n - 1)
    translations: dict[int, tuple[int, list[int]]] = {}

    def translation(s: int) -> tuple[int, list[int]]:
        cached = translations.get(s)
        if cached is None:
            circ_d = resolve_state(t.d, s)
            circ_plus = resolve_state(t.d_plus, s)
            trans = _bit_translation(circ_plus, circ_d, circ_d.index_of_arc(), t.plus_arc_map)
            cached = (circ_plus.count, trans)
            translations[s] = cached
        return cached

    entries: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
    for (j, k), gens in src.generators.items():
        bucket = entries.setdefault((j, k), [])
        tgt_index = tgt.index.get((j - 1, k - 1), {})
        for col, (s, m) in enumerate(gens):
            if s & last_bit:
                continue
            count, trans = translation(s)
            # orientation bits live on D circles; push them down to D+ circles
            m_t = 0
            for ti in range(count):
                if (m >> trans[ti]) & 1:
                    m_t |= 1 << ti
            row = tgt_index[(s, m_t)]
            bucket.append((row, col, 1))
    blocks = {
        (j, k): SparseIntMatrix.from_triplets(tgt.dim(j - 1, k - 1), src.dim(j, k), triple)
        for (j, k), triple in entries.items()
    }
    return ChainMap(src, tgt, blocks)


@dataclass
class BucketExactness:
    bucket: tuple[int, int]
    dim_minus: int
    dim_middle: int
    dim_plus: int
    alpha_injective: bool
    beta_surjective: bool
    composite_zero: bool
    image_equals_kernel: bool

    @property
    def exact(self) -> bool:
        return (
            self.alpha_injective
            and self.beta_surjective
            and self.composite_zero
            and self.image_equals_kernel
            and self.dim_middle == self.dim_minus + self.dim_plus
        )


@dataclass
class SESReport:
    triple: SkeinTriple
    buckets: list[BucketExactness]
    alpha_commutes: bool
    beta_commutes: bool

    @property
    def exact(self) -> bool:
        return self.alpha_commutes and self.beta_commutes and all(b.exact for b in self.buckets)

    def to_json(self) -> dict:
        return {
            "crossing": self.triple.crossing,
            "alpha_commutes": self.alpha_commutes,
            "beta_commutes": self.beta_commutes,
            "exact": self.exact,
            "buckets": [
                {
                    "j": b.bucket[0],
                    "k": b.bucket[1],
                    "dims": [b.dim_minus, b.dim_middle, b.dim_plus],
                    "alpha_injective": b.alpha_injective,
                    "beta_surjective": b.beta_surjective,
                    "composite_zero": b.composite_zero,
                    "image_equals_kernel": b.image_equals_kernel,
                }
                for b in self.buckets
            ],
        }


def check_ses(t: SkeinTriple, cap: int = DEFAULT_COMPLEX_CAP) -> SESReport:
    """Certify exactness of 0 -> C(D-) -> C(D) -> C(D+) -> 0 bucket by bucket."""
    c_minus = build_complex(t.d_minus, cap)
    c_mid = build_complex(t.d, cap)
    c_plus = build_complex(t.d_plus, cap)
    alpha = build_alpha(t, cap, complexes=(c_minus, c_mid))
    beta = build_beta(t, cap, complexes=(c_mid, c_plus))

    buckets = []
    middle_buckets = sorted(set(c_mid.generators))
    for (j, k) in middle_buckets:
        a_block = alpha.block(j + 1, k + 1)
        b_block = beta.block(j, k)
        dim_minus = c_minus.dim(j + 1, k + 1)
        dim_mid = c_mid.dim(j, k)
        dim_plus = c_plus.dim(j - 1, k - 1)
        rank_a = matrix_rank(a_block)
        rank_b = matrix_rank(b_block)
        composite_zero = b_block.mul(a_block).is_zero()
        buckets.append(
            BucketExactness(
                bucket=(j, k),
                dim_minus=dim_minus,
                dim_middle=dim_mid,
                dim_plus=dim_plus,
                alpha_injective=rank_a == dim_minus,
                beta_surjective=rank_b == dim_plus,
                composite_zero=composite_zero,
                image_equals_kernel=rank_a == dim_mid - rank_b,
            )
        )
    return SESReport(t, buckets, alpha.commutes_with_differentials(), beta.commutes_with_differentials())


@dataclass
class DegreeIdentity:
    degree: int
    a_minus: GaussianInt  # a[m+1](D-)
    a_mid: GaussianInt    # a[m](D)
    a_plus: GaussianInt   # a[m-1](D+)

    @property
    def holds(self) -> bool:
        return not (self.a_minus - self.a_mid.times_i() - self.a_plus)


@dataclass
class LESReport:
    triple: SkeinTriple
    identities: list[DegreeIdentity]

    @property
    def passed(self) -> bool:
        return all(i.holds for i in self.identities)

    def to_json(self) -> dict:
        return {
            "crossing": self.triple.crossing,
            "passed": self.passed,
            "degrees": [
                {
                    "m": i.degree,
                    "a_minus": [i.a_minus.re, i.a_minus.im],
                    "a_mid": [i.a_mid.re, i.a_mid.im],
                    "a_plus": [i.a_plus.re, i.a_plus.im],
                    "holds": i.holds,
                }
                for i in self.identities
            ],
        }


def _les_identities(b_minus: BracketPolynomial, b_mid: BracketPolynomial,
                    b_plus: BracketPolynomial, t: SkeinTriple) -> LESReport:
    degrees = set()
    for d in b_mid.support:
        degrees.add(d)
    for d in b_minus.support:
        degrees.add(d - 1)
    for d in b_plus.support:
        degrees.add(d + 1)
    identities = [
        DegreeIdentity(
            m,
            b_minus.coefficient(m + 1),
            b_mid.coefficient(m),
            b_plus.coefficient(m - 1),
        )
        for m in sorted(degrees)
    ]
    return LESReport(t, identities)


def check_les_identities(t: SkeinTriple, cap: int = DEFAULT_COMPLEX_CAP) -> LESReport:
    """Alternating rank sums of the long exact sequence, per polynomial degree.

    The alternating sum of homology ranks over one degree class vanishes;
    weighting by i-powers folds all classes into the coefficient identity
    a[m+1](D-) - i*a[m](D) - a[m-1](D+) = 0, evaluated here on ranks computed
    from the three complexes.
    """
    b_minus = bracket_from_homology(homology_table(build_complex(t.d_minus, cap)))
    b_mid = bracket_from_homology(homology_table(build_complex(t.d, cap)))
    b_plus = bracket_from_homology(homology_table(build_complex(t.d_plus, cap)))
    return _les_identities(b_minus, b_mid, b_plus, t)


@dataclass
class LemmaReport:
    triple: SkeinTriple
    k_top: int
    k_bottom: int
    identities: dict[str, tuple[GaussianInt, GaussianInt]]  # name -> (lhs, rhs)
    skein_identity: LESReport

    @property
    def passed(self) -> bool:
        return self.skein_identity.passed and all(not (l - r) for l, r in self.identities.values())

    def to_json(self) -> dict:
        return {
            "crossing": self.triple.crossing,
            "k": self.k_top,
            "l": self.k_bottom,
            "identities": {
                name: {"lhs": [l.re, l.im], "rhs": [r.re, r.im], "holds": not (l - r)}
                for name, (l, r) in self.identities.items()
            },
            "passed": self.passed,
        }


def check_lemma(d: Diagram, c: int, cap: int = 20) -> LemmaReport:
    """The four extreme-coefficient identities at crossing ``c``.

    Requires a reduced alternating (hence adequate) diagram; the smoothed
    diagrams may be unreduced, only the identities themselves are asserted.
    Brackets are computed by the state sum, so this scales past the homology
    cap.
    """
    if not (is_reduced(d) and is_alternating(d)):
        raise PreconditionViolated("lemma identities need a reduced alternating diagram")
    if not check_adequacy(d).adequate:  # pragma: no cover - implied by the above
        raise PreconditionViolated("diagram is not adequate")
    t = skein_triple(d, c)
    b = bracket_state_sum(t.d, cap)
    b_minus = bracket_state_sum(t.d_minus, cap)
    b_plus = bracket_state_sum(t.d_plus, cap)
    k, l = b.k_max, b.k_min
    identities = {
        "top": (b.coefficient(k).times_i(), -b_plus.coefficient(k - 1)),
        "near_top": (
            b.coefficient(k - 4).times_i(),
            b_minus.coefficient(k - 3) - b_plus.coefficient(k - 5),
        ),
        "bottom": (b.coefficient(l).times_i(), b_minus.coefficient(l + 1)),
        "near_bottom": (
            b.coefficient(l + 4).times_i(),
            b_minus.coefficient(l + 5) - b_plus.coefficient(l + 3),
        ),
    }
    return LemmaReport(t, k, l, identities, _les_identities(b_minus, b, b_plus, t))


def grading_offsets(t: SkeinTriple, cap: int = 20) -> dict[str, bool]:
    """Degree-span bookkeeping of the triple.

    The chain-level spans force: top of D+ at k-1 and bottom of D- at l+1,
    both attained; support of D- within [l+1, k-3] and of D+ within
    [l+3, k-1], on the step-4 progressions; the D+-to-D- grading offset of
    the crossing-change composite is (2, 2), i.e. polynomial degree 2.
    """
    b = bracket_state_sum(t.d, cap)
    b_minus = bracket_state_sum(t.d_minus, cap)
    b_plus = bracket_state_sum(t.d_plus, cap)
    k, l = b.k_max, b.k_min
    out = {
        "plus_top_attained": bool(b_plus.coefficient(k - 1)),
        "minus_bottom_attained": bool(b_minus.coefficient(l + 1)),
        "minus_support_in_window": all(l + 1 <= m <= k - 3 and (k - 3 - m) % 4 == 0 for m in b_minus.support),
        "plus_support_in_window": all(l + 3 <= m <= k - 1 and (k - 1 - m) % 4 == 0 for m in b_plus.support),
        "composite_degree_two": (k - 1) - (k - 3) == 2 and (l + 3) - (l + 1) == 2,
    }
    return out
