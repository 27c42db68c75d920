"""Constructors for families of diagrams: twist chains, braid and plat
closures, two-bridge (rational) knots from continued fractions, and pretzels.

The two-bridge census enumerates every rational knot class up to mirror image
by its fraction p/q and realizes the canonical all-positive continued
fraction as an alternating 4-plat.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .diagram import Crossing, Diagram
from .errors import MalformedRecord


class _Builder:
    """Assemble a diagram from provisional arc ids and crossing tuples."""

    def __init__(self):
        self.crossings: list[list[int]] = []
        self.parent: dict[int, int] = {}
        self._next = 0

    def new_arc(self) -> int:
        i = self._next
        self._next += 1
        self.parent[i] = i
        return i

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry

    def add_crossing(self, a: int, b: int, c: int, d: int) -> None:
        self.crossings.append([a, b, c, d])

    def finalize(self, name: str | None = None) -> Diagram:
        slots: dict[int, int] = {}
        order: list[int] = []
        for cr in self.crossings:
            for a in cr:
                root = self.find(a)
                if root not in slots:
                    slots[root] = 0
                    order.append(root)
                slots[root] += 1
        free_roots = set()
        for a in list(self.parent):
            root = self.find(a)
            if root not in slots:
                free_roots.add(root)
        free = len(free_roots)
        labels: dict[int, int] = {}
        next_label = 1
        for root in order:
            if slots[root] != 2:
                raise MalformedRecord(f"arc class used {slots[root]} times, expected 2")
            labels[root] = next_label
            next_label += 1
        crossings = tuple(
            Crossing(tuple(labels[self.find(a)] for a in cr), i)
            for i, cr in enumerate(self.crossings)
        )
        return Diagram(crossings, free_loops=free, name=name)


def _apply_letter(b: _Builder, cur: list[int], g: int, positive: bool) -> None:
    """One braid letter between strand positions g-1 and g (braid running down).

    For a positive letter the strand entering at the upper left passes under;
    tuples are counterclockwise from the incoming under-strand.
    """
    left, right = cur[g - 1], cur[g]
    new_l, new_r = b.new_arc(), b.new_arc()
    if positive:
        b.add_crossing(left, new_l, new_r, right)
    else:
        b.add_crossing(right, left, new_l, new_r)
    cur[g - 1], cur[g] = new_l, new_r


def braid_closure(word: list[int], strands: int, name: str | None = None) -> Diagram:
    """Close a braid word; letter ``+g``/``-g`` crosses positions g-1 and g."""
    if strands < 1:
        raise ValueError("need at least one strand")
    b = _Builder()
    start = [b.new_arc() for _ in range(strands)]
    cur = list(start)
    for letter in word:
        g = abs(letter)
        if not 1 <= g < strands:
            raise ValueError(f"letter {letter} out of range for {strands} strands")
        _apply_letter(b, cur, g, letter > 0)
    for s, c in zip(start, cur):
        b.union(s, c)
    return b.finalize(name)


def plat_closure(
    word: list[int],
    name: str | None = None,
    bottom_nested: bool = False,
) -> Diagram:
    """Close a 4-strand braid word as a plat.

    The top caps join strands 0-1 and 2-3.  The bottom caps do the same by
    default; with ``bottom_nested`` they join 1-2 and 0-3 instead (two nested
    arcs, still planar).
    """
    b = _Builder()
    start = [b.new_arc() for _ in range(4)]
    cur = list(start)
    for letter in word:
        g = abs(letter)
        if not 1 <= g <= 3:
            raise ValueError(f"letter {letter} out of range for 4 strands")
        _apply_letter(b, cur, g, letter > 0)
    b.union(start[0], start[1])
    b.union(start[2], start[3])
    if bottom_nested:
        b.union(cur[1], cur[2])
        b.union(cur[0], cur[3])
    else:
        b.union(cur[0], cur[1])
        b.union(cur[2], cur[3])
    return b.finalize(name)


def twist_chain(k: int, name: str | None = None) -> Diagram:
    """The (2, k) chain of bigons, in the chirality whose all-0 state has k circles."""
    if k < 1:
        raise ValueError("need at least one crossing")

    def u(i: int) -> int:
        x = 2 * (i % k) + 3
        return x if x <= 2 * k else x - 2 * k

    def v(i: int) -> int:
        return 2 * (i % k) + 2

    crossings = tuple(
        Crossing((u(i - 1), v(i - 1), v(i), u(i)), i) for i in range(k)
    )
    return Diagram(crossings, name=name or f"t2_{k}")


def kink() -> Diagram:
    """The 1-crossing unknot diagram (one nugatory crossing)."""
    return twist_chain(1, name="kink")


def hopf() -> Diagram:
    return twist_chain(2, name="hopf")


def positive_continued_fraction(p: int, q: int) -> list[int]:
    """Greedy all-positive continued fraction of p/q (last term >= 2 unless p/q is an integer)."""
    if not 0 < q < p:
        raise ValueError("need 0 < q < p")
    terms = []
    while q:
        terms.append(p // q)
        p, q = q, p - (p // q) * q
    return terms


def continued_fraction_value(terms: list[int]) -> tuple[int, int]:
    """(p, q) with p/q = terms[0] + 1/(terms[1] + 1/(...))."""
    p, q = terms[-1], 1
    for a in reversed(terms[:-1]):
        p, q = a * p + q, p
    return p, q


def _fraction_class(p: int, q: int) -> set[int]:
    """Representatives of b(p, q) up to unoriented equivalence and mirror."""
    inv = pow(q, -1, p)
    return {q, inv, p - q, (p - inv) % p}


def two_bridge(p: int, q: int, name: str | None = None) -> Diagram:
    """Alternating 4-plat diagram of the rational knot or link b(p, q)."""
    cf = positive_continued_fraction(p, q)
    return two_bridge_from_cf(cf, name=name or f"twobridge_{p}_{q}")


def two_bridge_from_cf(cf: list[int], name: str | None = None) -> Diagram:
    """Alternating plat realization of an all-positive continued fraction.

    Blocks alternate between twisting the middle pair of strands and the
    bottom pair, with alternating handedness.
    """
    if not cf or any(a < 1 for a in cf):
        raise ValueError("continued fraction terms must be positive")
    word: list[int] = []
    for block, a in enumerate(cf):
        letter = 2 if block % 2 == 0 else 1
        sign = 1 if block % 2 == 0 else -1
        word.extend([sign * letter] * a)
    return plat_closure(word, name=name, bottom_nested=len(cf) % 2 == 0)


@dataclass(frozen=True)
class TwoBridgeEntry:
    p: int
    q: int  # canonical class representative (smallest)
    crossing_number: int
    cf: tuple[int, ...]

    @property
    def amphichiral(self) -> bool:
        return (self.q * self.q) % self.p == self.p - 1


def two_bridge_census(max_crossings: int = 9) -> list[TwoBridgeEntry]:
    """Every rational knot with at most ``max_crossings`` crossings, one entry
    per unoriented-knot-up-to-mirror class, keyed by its canonical fraction."""
    entries = []
    seen: set[tuple[int, int]] = set()
    limit = 2  # max p realizable grows like a Fibonacci number of the crossing bound
    fib_a, fib_b = 1, 1
    for _ in range(max_crossings + 1):
        fib_a, fib_b = fib_b, fib_a + fib_b
    limit = fib_b
    for p in range(3, limit + 1, 2):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            cls = _fraction_class(p, q)
            canonical = min(cls)
            if (p, canonical) in seen:
                continue
            seen.add((p, canonical))
            sums = {sum(positive_continued_fraction(p, r)) for r in cls}
            n = min(sums)
            if len(sums) != 1:  # pragma: no cover - greedy sums agree on a class
                raise ArithmeticError(f"ambiguous crossing number for {p}/{q}")
            if n <= max_crossings:
                cf = tuple(positive_continued_fraction(p, canonical))
                entries.append(TwoBridgeEntry(p, canonical, n, cf))
    entries.sort(key=lambda e: (e.crossing_number, e.p, e.q))
    return entries


ROLFSEN_BY_DET = {
    (3, 3): "3_1",
    (4, 5): "4_1",
    (5, 5): "5_1",
    (5, 7): "5_2",
    (6, 9): "6_1",
    (6, 11): "6_2",
    (6, 13): "6_3",
    (7, 7): "7_1",
    (7, 11): "7_2",
    (7, 13): "7_3",
    (7, 15): "7_4",
    (7, 17): "7_5",
    (7, 19): "7_6",
    (7, 21): "7_7",
}


def rolfsen_name(crossing_number: int, determinant: int) -> str | None:
    """Table name for rational knots of at most 7 crossings, where the pair
    (crossing number, determinant) identifies the knot."""
    return ROLFSEN_BY_DET.get((crossing_number, determinant))


def trefoil() -> Diagram:
    """Standard 3-crossing trefoil used throughout the tests (the chirality
    whose positive smoothing at the second crossing is a Hopf-type diagram)."""
    from .diagram import mirror

    return mirror(twist_chain(3)).with_name("trefoil")


def figure_eight() -> Diagram:
    return two_bridge(5, 2, name="figure_eight")


def pretzel(*twists: int, name: str | None = None) -> Diagram:
    """Alternating pretzel with the given (all >= 1) vertical twist counts."""
    if len(twists) < 2 or any(t < 1 for t in twists):
        raise ValueError("need at least two regions with positive twist counts")
    b = _Builder()
    tops, bottoms = [], []
    for t in twists:
        start = [b.new_arc(), b.new_arc()]
        cur = list(start)
        for _ in range(t):
            _apply_letter(b, cur, 1, True)
        tops.append(start)
        bottoms.append(cur)
    m = len(twists)
    for i in range(m):
        b.union(tops[i][1], tops[(i + 1) % m][0])
        b.union(bottoms[i][1], bottoms[(i + 1) % m][0])
    return b.finalize(name or "pretzel_" + "_".join(map(str, twists)))
