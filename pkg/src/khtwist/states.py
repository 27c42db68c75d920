"""Kauffman states, enhanced states, and the bigraded chain complex.

A state is an n-tuple over {0, 1}: 0 smooths a crossing positively (the
A-smoothing), 1 negatively.  An enhanced state also orients every circle of
the resolved diagram, clockwise or counterclockwise.  The gradings are

    sigma = #positive smoothings - #negative smoothings
    tau   = #clockwise circles   - #counterclockwise circles
    J     = sigma + 2 * tau

and the complex C[j, k] is generated by enhanced states with j = sigma and
k = J.  The differential flips one 0 to a 1 and rewrites circle orientations
by the merge/split rules implemented in :func:`transition_orientations`, with
sign (-1)**t where t counts the 1-entries strictly before the flipped
position.

Internally states and orientation assignments are packed into bit masks
(bit i of a state = entry i; bit c of an orientation mask = 1 when circle c
is clockwise, circles in canonical order).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

from .diagram import Diagram, smoothing_pairs
from .errors import CapExceeded, InternalInconsistency
from .linalg import SparseIntMatrix

DEFAULT_COMPLEX_CAP = 14

CW: Literal["cw"] = "cw"
CCW: Literal["ccw"] = "ccw"


@dataclass(frozen=True)
class Circles:
    """The circles of one resolution: arc circles first (sorted by smallest
    arc), then one slot per crossingless free loop of the diagram."""

    arc_circles: tuple[frozenset[int], ...]
    free_count: int

    @property
    def count(self) -> int:
        return len(self.arc_circles) + self.free_count

    def index_of_arc(self) -> dict[int, int]:
        table = {}
        for i, circ in enumerate(self.arc_circles):
            for a in circ:
                table[a] = i
        return table

    def __iter__(self) -> Iterator[frozenset[int]]:
        yield from self.arc_circles
        for _ in range(self.free_count):
            yield frozenset()


def resolve_state(d: Diagram, choices: Sequence[int] | int) -> Circles:
    """Partition the arcs into circles for one smoothing choice per crossing."""
    n = d.n
    s = _as_mask(choices, n)
    arcs = list(d.arcs())
    parent = {a: a for a in arcs}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, c in enumerate(d.crossings):
        for x, y in smoothing_pairs(c, (s >> i) & 1):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry
    groups: dict[int, list[int]] = {}
    for a in arcs:
        groups.setdefault(find(a), []).append(a)
    circles = tuple(sorted((frozenset(g) for g in groups.values()), key=min))
    return Circles(circles, d.free_loops)


def circle_count(d: Diagram, choices: Sequence[int] | int) -> int:
    return resolve_state(d, choices).count


def _as_mask(choices: Sequence[int] | int, n: int) -> int:
    if isinstance(choices, int):
        if choices < 0 or choices >= 1 << n:
            raise ValueError("state mask out of range")
        return choices
    if len(choices) != n:
        raise ValueError(f"state has {len(choices)} entries, diagram has {n} crossings")
    mask = 0
    for i, c in enumerate(choices):
        if c not in (0, 1):
            raise ValueError("state entries must be 0 or 1")
        mask |= c << i
    return mask


def _as_tuple(mask: int, n: int) -> tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(n))


@dataclass(frozen=True)
class EnhancedState:
    """A smoothing choice plus one orientation label per circle.

    ``orientations`` follows the canonical circle order of
    :func:`resolve_state` for the same diagram and state.
    """

    state: tuple[int, ...]
    orientations: tuple[str, ...]

    def __post_init__(self):
        for o in self.orientations:
            if o not in (CW, CCW):
                raise ValueError(f"orientation must be {CW!r} or {CCW!r}")

    @property
    def sigma(self) -> int:
        return len(self.state) - 2 * sum(self.state)

    @property
    def tau(self) -> int:
        cw = sum(1 for o in self.orientations if o == CW)
        return 2 * cw - len(self.orientations)

    @property
    def j_degree(self) -> int:
        return self.sigma + 2 * self.tau

    def grading(self) -> tuple[int, int]:
        return (self.sigma, self.j_degree)


def transition_orientations(action: str, source: tuple[str, ...]) -> list[tuple[str, ...]]:
    """Orientation rewriting for one merge or split.

    Merges (two circles into one): (ccw, ccw) -> ccw and a mixed pair -> cw;
    two clockwise circles admit no transition.  Splits (one circle into two):
    cw -> (cw, cw); ccw -> (cw, ccw) or (ccw, cw).
    """
    if action == "merge":
        a, b = source
        if a == CCW and b == CCW:
            return [(CCW,)]
        if a == CW and b == CW:
            return []
        return [(CW,)]
    if action == "split":
        (a,) = source
        if a == CW:
            return [(CW, CW)]
        return [(CW, CCW), (CCW, CW)]
    raise ValueError(f"unknown action {action!r}")


def incidence(d: Diagram, s1: EnhancedState, s2: EnhancedState) -> int:
    """Incidence number of two enhanced states, in {-1, 0, +1}.

    Nonzero only when the states differ by a single 0 -> 1 flip, every circle
    untouched by the flip keeps its orientation, and the touched circles
    follow the merge/split rules.  The sign is (-1)**t with t the number of
    1-entries before the flipped position in ``s1``.
    """
    n = d.n
    if len(s1.state) != n or len(s2.state) != n:
        raise ValueError("state length does not match the diagram")
    diffs = [i for i in range(n) if s1.state[i] != s2.state[i]]
    if len(diffs) != 1:
        return 0
    i = diffs[0]
    if s1.state[i] != 0:
        return 0
    c1 = resolve_state(d, s1.state)
    c2 = resolve_state(d, s2.state)
    if len(s1.orientations) != c1.count or len(s2.orientations) != c2.count:
        raise ValueError("orientation tuple does not match the circle count")

    touched_arcs = set(d.crossings[i].arcs)
    src_untouched, src_touched = [], []
    for idx, circ in enumerate(c1.arc_circles):
        (src_touched if circ & touched_arcs else src_untouched).append(idx)
    tgt_untouched, tgt_touched = [], []
    for idx, circ in enumerate(c2.arc_circles):
        (tgt_touched if circ & touched_arcs else tgt_untouched).append(idx)

    # Untouched circles are identical arc sets; free loops match by slot.
    tgt_by_set = {c2.arc_circles[idx]: idx for idx in tgt_untouched}
    for idx in src_untouched:
        other = tgt_by_set.get(c1.arc_circles[idx])
        if other is None:  # pragma: no cover - cannot happen for a real flip
            raise InternalInconsistency("untouched circle has no counterpart")
        if s1.orientations[idx] != s2.orientations[other]:
            return 0
    for f in range(c1.free_count):
        if s1.orientations[len(c1.arc_circles) + f] != s2.orientations[len(c2.arc_circles) + f]:
            return 0

    if len(src_touched) == 2 and len(tgt_touched) == 1:
        source = tuple(s1.orientations[idx] for idx in src_touched)
        target = (s2.orientations[tgt_touched[0]],)
        ok = target in transition_orientations("merge", source)
    elif len(src_touched) == 1 and len(tgt_touched) == 2:
        source = (s1.orientations[src_touched[0]],)
        target = tuple(s2.orientations[idx] for idx in tgt_touched)
        ok = target in transition_orientations("split", source)
    else:  # pragma: no cover - a flip always merges or splits
        raise InternalInconsistency("flip changed the circle count by more than one")
    if not ok:
        return 0
    t = sum(s1.state[:i])
    return -1 if t % 2 else 1


class ChainComplex:
    """Bigraded free complex of enhanced states with sparse integer differentials.

    ``generators[(j, k)]`` lists (state mask, orientation mask) pairs in
    lexicographic order of their tuple forms; ``differentials[(j, k)]`` maps
    C[j, k] into C[j - 2, k].
    """

    def __init__(self, diagram: Diagram, generators, differentials):
        self.diagram = diagram
        self.generators: dict[tuple[int, int], list[tuple[int, int]]] = generators
        self.differentials: dict[tuple[int, int], SparseIntMatrix] = differentials
        self.index: dict[tuple[int, int], dict[tuple[int, int], int]] = {
            bucket: {g: i for i, g in enumerate(gens)} for bucket, gens in generators.items()
        }

    def dim(self, j: int, k: int) -> int:
        return len(self.generators.get((j, k), ()))

    def buckets(self) -> list[tuple[int, int]]:
        return sorted(self.generators)

    def k_values(self) -> list[int]:
        return sorted({k for _, k in self.generators})

    def total_generators(self) -> int:
        return sum(len(g) for g in self.generators.values())

    def differential(self, j: int, k: int) -> SparseIntMatrix:
        m = self.differentials.get((j, k))
        if m is None:
            m = SparseIntMatrix.zero(self.dim(j - 2, k), self.dim(j, k))
        return m

    def enhanced_state(self, j: int, k: int, position: int) -> EnhancedState:
        """Unpack a generator into its public tuple form."""
        s, m = self.generators[(j, k)][position]
        n = self.diagram.n
        count = resolve_state(self.diagram, s).count
        orientations = tuple(CW if (m >> c) & 1 else CCW for c in range(count))
        return EnhancedState(_as_tuple(s, n), orientations)

    def verify(self) -> None:
        """Check d∘d = 0 on every composable pair; raise InternalInconsistency."""
        for (j, k), d1 in self.differentials.items():
            d0 = self.differentials.get((j - 2, k))
            if d0 is not None and not d0.mul(d1).is_zero():
                raise InternalInconsistency(f"d∘d != 0 out of bucket {(j, k)}")

    def to_debug_dict(self) -> dict:
        """Text-diffable content dump: generators and matrix triplets."""
        gens = {}
        for (j, k), lst in sorted(self.generators.items()):
            gens[f"{j},{k}"] = [
                {"state": list(_as_tuple(s, self.diagram.n)), "orientations": m}
                for s, m in lst
            ]
        diffs = {
            f"{j},{k}": sorted(self.differentials[(j, k)].triplets())
            for (j, k) in sorted(self.differentials)
        }
        return {"generators": gens, "differentials": diffs}


def _enumerate_packed(d: Diagram, cap: int):
    """All enhanced states, bucketed by (sigma, J), plus per-state circle data."""
    n = d.n
    if n > cap:
        raise CapExceeded(f"{n} crossings exceeds the enumeration cap {cap}")
    resolutions: list[Circles] = [resolve_state(d, s) for s in range(1 << n)]
    buckets: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for s in range(1 << n):
        circ = resolutions[s]
        sigma = n - 2 * s.bit_count()
        cnt = circ.count
        for m in range(1 << cnt):
            tau = 2 * m.bit_count() - cnt
            buckets.setdefault((sigma, sigma + 2 * tau), []).append((s, m))
    for bucket, gens in buckets.items():
        gens.sort(key=lambda g: (_as_tuple(g[0], n), _as_tuple(g[1], resolutions[g[0]].count)))
    return buckets, resolutions


def enumerate_enhanced(d: Diagram, cap: int = DEFAULT_COMPLEX_CAP) -> dict[tuple[int, int], list[EnhancedState]]:
    """All enhanced states bucketed by (j, k) = (sigma, J), in generator order."""
    buckets, resolutions = _enumerate_packed(d, cap)
    n = d.n
    out = {}
    for bucket, gens in sorted(buckets.items()):
        lst = []
        for s, m in gens:
            cnt = resolutions[s].count
            lst.append(
                EnhancedState(_as_tuple(s, n), tuple(CW if (m >> c) & 1 else CCW for c in range(cnt)))
            )
        out[bucket] = lst
    return out


def build_complex(d: Diagram, cap: int = DEFAULT_COMPLEX_CAP, check: bool = True) -> ChainComplex:
    """Assemble the full complex and its differentials; verifies d∘d = 0."""
    n = d.n
    buckets, resolutions = _enumerate_packed(d, cap)
    index = {bucket: {g: i for i, g in enumerate(gens)} for bucket, gens in buckets.items()}
    arc_index: list[dict[int, int] | None] = [None] * (1 << n)

    def arcidx(s: int) -> dict[int, int]:
        table = arc_index[s]
        if table is None:
            table = resolutions[s].index_of_arc()
            arc_index[s] = table
        return table

    entries: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
    for s in range(1 << n):
        circ_s = resolutions[s]
        sigma = n - 2 * s.bit_count()
        idx_s = arcidx(s)
        for i in range(n):
            if (s >> i) & 1:
                continue
            s2 = s | (1 << i)
            circ_2 = resolutions[s2]
            n_arc_2 = len(circ_2.arc_circles)
            idx_2 = arcidx(s2)
            touched = sorted({idx_s[a] for a in d.crossings[i].arcs})
            # Where every source circle lands in the target resolution;
            # free-loop slots keep their relative position.
            target_of = [idx_2[min(c)] for c in circ_s.arc_circles]
            target_of += [n_arc_2 + f for f in range(circ_s.free_count)]
            sign = -1 if (s & ((1 << i) - 1)).bit_count() % 2 else 1
            if len(touched) == 2:
                p, q = touched
                merged = target_of[p]
                moves = [
                    (c, target_of[c]) for c in range(circ_s.count) if c not in (p, q)
                ]
                pbit, qbit = 1 << p, 1 << q
                def targets(m, pbit=pbit, qbit=qbit, merged=merged, moves=moves):
                    op, oq = m & pbit, m & qbit
                    if op and oq:
                        return ()
                    base = (1 << merged) if (op or oq) else 0
                    for c, t in moves:
                        if (m >> c) & 1:
                            base |= 1 << t
                    return (base,)
            else:
                (p,) = touched
                r1, r2 = sorted({idx_2[a] for a in circ_s.arc_circles[p]})
                moves = [(c, target_of[c]) for c in range(circ_s.count) if c != p]
                pbit = 1 << p
                def targets(m, pbit=pbit, r1=r1, r2=r2, moves=moves):
                    base = 0
                    for c, t in moves:
                        if (m >> c) & 1:
                            base |= 1 << t
                    if m & pbit:
                        return (base | (1 << r1) | (1 << r2),)
                    return (base | (1 << r1), base | (1 << r2))
            for m in range(1 << circ_s.count):
                images = targets(m)
                if not images:
                    continue
                tau = 2 * m.bit_count() - circ_s.count
                k = sigma + 2 * tau
                col = index[(sigma, k)][(s, m)]
                tgt_index = index[(sigma - 2, k)]
                bucket_entries = entries.setdefault((sigma, k), [])
                for m2 in images:
                    row = tgt_index[(s2, m2)]
                    bucket_entries.append((row, col, sign))

    diffs = {}
    for (j, k), triple in entries.items():
        diffs[(j, k)] = SparseIntMatrix.from_triplets(
            len(buckets.get((j - 2, k), ())), len(buckets[(j, k)]), triple
        )
    complex_ = ChainComplex(d, buckets, diffs)
    if check:
        complex_.verify()
    return complex_
