"""Planar knot/link diagrams as PD codes with an explicit rotation system.

A crossing is a 4-tuple of arc labels listed counterclockwise starting at the
incoming under-strand, so tuple positions 0 and 2 carry the under-strand and
positions 1 and 3 the over-strand.  A diagram with no crossings stands for a
disjoint union of ``free_loops`` crossingless circles; the 0-crossing unknot
is ``Diagram((), free_loops=1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .errors import BadArcMultiplicity, MalformedRecord, NonPlanar

Dart = tuple[int, int]  # (crossing index, tuple position)


@dataclass(frozen=True)
class Crossing:
    """One crossing: arc labels counterclockwise starting on the under-strand.

    Diagrams are unoriented, so the tuple is only determined up to rotation by
    two positions; construction normalizes to the lexicographically smaller of
    the two readings.
    """

    arcs: tuple[int, int, int, int]
    index: int

    def __post_init__(self):
        a = self.arcs
        if a[2:] + a[:2] < a:
            object.__setattr__(self, "arcs", a[2:] + a[:2])

    @property
    def under_arcs(self) -> tuple[int, int]:
        return (self.arcs[0], self.arcs[2])

    @property
    def over_arcs(self) -> tuple[int, int]:
        return (self.arcs[1], self.arcs[3])


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...]
    free_loops: int = 0
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        _validate(self)

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def arc_count(self) -> int:
        return 2 * len(self.crossings)

    def arcs(self) -> range:
        return range(1, self.arc_count + 1)

    def endpoints(self) -> dict[int, tuple[Dart, Dart]]:
        """Map each arc label to its two (crossing, position) endpoints."""
        ends: dict[int, list[Dart]] = {}
        for c in self.crossings:
            for p, a in enumerate(c.arcs):
                ends.setdefault(a, []).append((c.index, p))
        return {a: (ds[0], ds[1]) for a, ds in ends.items()}

    def crossing_components(self) -> list[set[int]]:
        """Connected components of the 4-valent graph, as sets of crossing indices."""
        n = self.n
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (c1, _), (c2, _) in self.endpoints().values():
            r1, r2 = find(c1), find(c2)
            if r1 != r2:
                parent[r1] = r2
        comps: dict[int, set[int]] = {}
        for i in range(n):
            comps.setdefault(find(i), set()).add(i)
        return list(comps.values())

    @property
    def component_count(self) -> int:
        """Number of connected pieces of the underlying planar object."""
        return len(self.crossing_components()) + self.free_loops

    @property
    def connected(self) -> bool:
        return self.component_count == 1

    def strand_components(self) -> int:
        """Number of link components (strands), counting free loops."""
        parent: dict[int, int] = {a: a for a in self.arcs()}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        for c in self.crossings:
            union(c.arcs[0], c.arcs[2])
            union(c.arcs[1], c.arcs[3])
        strands = len({find(a) for a in self.arcs()})
        return strands + self.free_loops

    @property
    def is_knot(self) -> bool:
        return self.strand_components() == 1

    def with_name(self, name: str | None) -> "Diagram":
        return replace(self, name=name)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Diagram{label}: {self.n} crossings, {self.free_loops} free loops>"


@dataclass(frozen=True)
class Face:
    """A face of the diagram, as a cyclic sequence of (crossing, quadrant) corners.

    Quadrant ``q`` at a crossing is the region between tuple positions ``q``
    and ``q + 1 (mod 4)``.
    """

    corners: tuple[tuple[int, int], ...]

    def __len__(self):
        return len(self.corners)

    def __contains__(self, corner: tuple[int, int]) -> bool:
        return corner in self.corners


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[Face, ...]

    def __len__(self):
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    def face_of(self) -> dict[tuple[int, int], int]:
        """Map every (crossing, quadrant) corner to the index of its face."""
        table = {}
        for i, f in enumerate(self.faces):
            for corner in f.corners:
                table[corner] = i
        return table


@dataclass(frozen=True)
class TwistClasses:
    """Partition of the crossings under the bigon-connection relation."""

    classes: tuple[frozenset[int], ...]

    @property
    def twist_number(self) -> int:
        return len(self.classes)

    def class_of(self, crossing: int) -> frozenset[int]:
        for cls in self.classes:
            if crossing in cls:
                return cls
        raise KeyError(crossing)


def _validate(d: Diagram) -> None:
    n = len(d.crossings)
    if d.free_loops < 0:
        raise BadArcMultiplicity("free loop count must be nonnegative")
    counts: dict[int, int] = {}
    for i, c in enumerate(d.crossings):
        if c.index != i:
            raise MalformedRecord(f"crossing at position {i} carries index {c.index}")
        if len(c.arcs) != 4:
            raise MalformedRecord(f"crossing {i} does not have 4 arcs")
        for a in c.arcs:
            counts[a] = counts.get(a, 0) + 1
    expected = set(range(1, 2 * n + 1))
    if set(counts) != expected or any(v != 2 for v in counts.values()):
        bad = sorted(set(counts) - expected) or sorted(a for a, v in counts.items() if v != 2)
        raise BadArcMultiplicity(f"arc labels must be 1..{2 * n}, each used exactly twice (offending: {bad})")
    # Sphere embedding, one Euler check per connected component.
    if n:
        fs = faces(d)
        comp_of = {}
        for k, comp in enumerate(d.crossing_components()):
            for ci in comp:
                comp_of[ci] = k
        face_comps: dict[int, int] = {}
        sizes: dict[int, int] = {}
        for f in fs.faces:
            k = comp_of[f.corners[0][0]]
            face_comps[k] = face_comps.get(k, 0) + 1
        for ci, k in comp_of.items():
            sizes[k] = sizes.get(k, 0) + 1
        for k, nk in sizes.items():
            if face_comps.get(k, 0) != nk + 2:
                raise NonPlanar(
                    f"component with {nk} crossings traces {face_comps.get(k, 0)} faces, expected {nk + 2}"
                )


def parse_pd(text: str, name: str | None = None) -> Diagram:
    """Parse PD-code text: one ``X a b c d`` record per crossing.

    Records may be separated by newlines or semicolons; ``#`` starts a
    comment; blank lines are ignored.  Empty input denotes the 0-crossing
    unknot (a single crossingless circle).
    """
    records = []
    for raw in text.replace(";", "\n").splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 5 or tokens[0].upper() != "X":
            raise MalformedRecord(f"expected 'X a b c d', got {line!r}")
        try:
            arcs = tuple(int(t) for t in tokens[1:])
        except ValueError:
            raise MalformedRecord(f"non-integer arc label in {line!r}") from None
        if any(a <= 0 for a in arcs):
            raise MalformedRecord(f"arc labels must be positive in {line!r}")
        records.append(arcs)
    if not records:
        return Diagram((), free_loops=1, name=name)
    crossings = tuple(Crossing(arcs, i) for i, arcs in enumerate(records))
    return Diagram(crossings, name=name)


def to_pd_text(d: Diagram) -> str:
    lines = [f"X {c.arcs[0]} {c.arcs[1]} {c.arcs[2]} {c.arcs[3]}" for c in d.crossings]
    return "\n".join(lines)


def parse_corpus(text: str) -> list[Diagram]:
    """Parse a corpus file: stanzas of ``name: <label>`` followed by records."""
    diagrams = []
    current_name: str | None = None
    current_lines: list[str] = []

    def flush():
        if current_name is not None:
            diagrams.append(parse_pd("\n".join(current_lines), name=current_name))

    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("name:"):
            flush()
            current_name = line[len("name:"):].strip()
            current_lines = []
        else:
            if current_name is None:
                raise MalformedRecord("corpus record appears before any 'name:' line")
            current_lines.append(line)
    flush()
    return diagrams


def faces(d: Diagram) -> FaceSet:
    """Trace the faces of the rotation system.

    From an arc-end (c, p), cross the arc to its other end (c', p'), sweep the
    corner at quadrant p' of c', and continue from (c', p' + 1).
    """
    ends = d.endpoints()

    def other(dart: Dart, arc: int) -> Dart:
        e1, e2 = ends[arc]
        return e2 if dart == e1 else e1

    seen: set[Dart] = set()
    out: list[Face] = []
    for c in d.crossings:
        for p in range(4):
            start = (c.index, p)
            if start in seen:
                continue
            corners = []
            dart = start
            while True:
                seen.add(dart)
                arc = d.crossings[dart[0]].arcs[dart[1]]
                c2, p2 = other(dart, arc)
                corners.append((c2, p2))
                dart = (c2, (p2 + 1) % 4)
                if dart == start:
                    break
            out.append(Face(tuple(corners)))
    out.sort(key=lambda f: min(f.corners))
    return FaceSet(tuple(out))


def is_alternating(d: Diagram) -> bool:
    """True iff every arc joins an under-position (0 or 2) to an over-position (1 or 3)."""
    for (c1, p1), (c2, p2) in d.endpoints().values():
        if p1 % 2 == p2 % 2:
            return False
    return True


def is_reduced(d: Diagram) -> bool:
    """True iff no crossing is nugatory (two opposite quadrants on one face)."""
    face_of = faces(d).face_of()
    for c in d.crossings:
        if face_of[(c.index, 0)] == face_of[(c.index, 2)]:
            return False
        if face_of[(c.index, 1)] == face_of[(c.index, 3)]:
            return False
    return True


def is_prime_diagram(d: Diagram) -> bool:
    """True iff no pair of arcs disconnects the (connected) crossing graph.

    A connected sum presentation always exhibits such a 2-arc cut.
    """
    n = d.n
    if n <= 1:
        return True
    ends = d.endpoints()
    arcs = list(d.arcs())
    adj: dict[int, list[tuple[int, int]]] = {i: [] for i in range(n)}
    for a, ((c1, _), (c2, _)) in ends.items():
        adj[c1].append((c2, a))
        adj[c2].append((c1, a))

    def connected_without(cut: set[int]) -> bool:
        stack = [0]
        seen = {0}
        while stack:
            v = stack.pop()
            for w, a in adj[v]:
                if a in cut or w in seen:
                    continue
                seen.add(w)
                stack.append(w)
        return len(seen) == n

    for i, a in enumerate(arcs):
        for b in arcs[i + 1:]:
            ea, eb = ends[a], ends[b]
            if ea[0][0] == ea[1][0] or eb[0][0] == eb[1][0]:
                continue  # an arc looping one crossing never separates
            if not connected_without({a, b}):
                return False
    return True


def smoothing_pairs(c: Crossing, sign: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Arc pairs joined by smoothing a crossing.

    ``sign=0`` is the positive (A) smoothing, joining the quadrants adjacent
    counterclockwise from the under-strand; ``sign=1`` is the negative (B)
    smoothing.
    """
    a = c.arcs
    if sign == 0:
        return (a[0], a[1]), (a[2], a[3])
    return (a[1], a[2]), (a[3], a[0])


ArcImage = tuple[str, int]  # ("arc", new label) or ("free", free-loop slot)


def smooth_with_map(d: Diagram, c: int, sign: int) -> tuple[Diagram, dict[int, ArcImage]]:
    """Smooth one crossing, returning the new diagram and the arc relabeling.

    Arcs merged by the smoothing share an image.  Arc classes that no longer
    meet any crossing become free loops; their slots come after the free loops
    already present, ordered by smallest member arc.
    """
    cr = d.crossings[c]
    pair1, pair2 = smoothing_pairs(cr, sign)
    parent = {a: a for a in d.arcs()}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y in (pair1, pair2):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    classes: dict[int, list[int]] = {}
    for a in d.arcs():
        classes.setdefault(find(a), []).append(a)

    others = [x for x in d.crossings if x.index != c]
    used = {a for x in others for a in x.arcs}
    kept, freed = [], []
    for members in classes.values():
        (freed, kept)[any(a in used for a in members)].append(members)
    kept.sort(key=min)
    freed.sort(key=min)

    arc_map: dict[int, ArcImage] = {}
    for new_label, members in enumerate(kept, start=1):
        for a in members:
            arc_map[a] = ("arc", new_label)
    for slot, members in enumerate(freed, start=d.free_loops):
        for a in members:
            arc_map[a] = ("free", slot)

    new_crossings = tuple(
        Crossing(tuple(arc_map[a][1] for a in x.arcs), i) for i, x in enumerate(others)
    )
    result = Diagram(new_crossings, free_loops=d.free_loops + len(freed))
    if result.arc_count != d.arc_count - 2:
        raise NonPlanar("smoothing did not reduce the arc count by 2")  # pragma: no cover
    return result, arc_map


def smooth(d: Diagram, c: int, sign: int) -> Diagram:
    """Replace crossing ``c`` by its positive (``sign=0``) or negative (``sign=1``) smoothing.

    The result may be disconnected; query ``component_count`` on it.
    """
    return smooth_with_map(d, c, sign)[0]


def mirror(d: Diagram) -> Diagram:
    """Mirror image: switch every crossing (rotate each tuple by one position)."""
    new = tuple(
        Crossing((c.arcs[1], c.arcs[2], c.arcs[3], c.arcs[0]), c.index) for c in d.crossings
    )
    return Diagram(new, free_loops=d.free_loops, name=d.name)


def reorder(d: Diagram, order: Sequence[int]) -> Diagram:
    """Permute the crossing ordering; ``order[i]`` is the old index placed at i."""
    if sorted(order) != list(range(d.n)):
        raise ValueError("order must be a permutation of the crossing indices")
    new = tuple(Crossing(d.crossings[o].arcs, i) for i, o in enumerate(order))
    return Diagram(new, free_loops=d.free_loops, name=d.name)


def writhe(d: Diagram) -> int:
    """Writhe of a knot diagram (orientation-independent for one component).

    Walking the strand fixes a direction through every crossing; a crossing
    is positive when the over-strand enters one quadrant counterclockwise
    from the under-strand's entry.
    """
    from .errors import NotAKnot

    if not d.is_knot:
        raise NotAKnot("writhe needs a single-component diagram")
    if d.n == 0:
        return 0
    ends = d.endpoints()
    entry: dict[tuple[int, int], bool] = {}  # dart -> strand enters here
    start = (0, 0)
    dart = start
    while True:
        entry[dart] = True
        c, p = dart
        exit_dart = (c, (p + 2) % 4)
        arc = d.crossings[c].arcs[(p + 2) % 4]
        e1, e2 = ends[arc]
        dart = e2 if exit_dart == e1 else e1
        if dart == start:
            break
    total = 0
    for c in d.crossings:
        u = 0 if entry.get((c.index, 0)) else 2
        o = 1 if entry.get((c.index, 1)) else 3
        total += 1 if (o - u) % 4 == 3 else -1
    return total


def twist_classes(d: Diagram) -> TwistClasses:
    """Group crossings connected by chains of bigon faces."""
    parent = list(range(d.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in faces(d).faces:
        if len(f.corners) == 2:
            (c1, _), (c2, _) = f.corners
            r1, r2 = find(c1), find(c2)
            if r1 != r2:
                parent[r1] = r2
    groups: dict[int, set[int]] = {}
    for i in range(d.n):
        groups.setdefault(find(i), set()).add(i)
    classes = tuple(sorted((frozenset(g) for g in groups.values()), key=min))
    return TwistClasses(classes)
