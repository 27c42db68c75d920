"""Checkerboard coloring, the graphs G and G*, and the cycle rank psi.

Black regions are fixed by the over-strand convention: at every crossing the
two quadrants swept when the over-strand rotates counterclockwise (tuple
quadrants 1 and 3) are black.  For alternating diagrams this is consistent
across crossings; otherwise a proper 2-coloring is still returned, flagged
as not following the convention.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, FaceSet, faces
from .errors import DisconnectedGraph

BLACK = "black"
WHITE = "white"


@dataclass(frozen=True)
class Coloring:
    face_set: FaceSet
    face_colors: tuple[str, ...]
    convention_consistent: bool

    def color(self, face_index: int) -> str:
        return self.face_colors[face_index]

    def faces_of_color(self, color: str) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.face_colors) if c == color)


@dataclass(frozen=True)
class TaitGraph:
    """Multigraph on the faces of one color, one edge per crossing."""

    color: str
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]  # (face u, face v, crossing)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_list_text(self) -> str:
        lines = [f"{u} {v}  # crossing {c}" for u, v, c in self.edges]
        return "\n".join(lines)

    def to_dot(self, name: str = "G") -> str:
        body = [f'  "{v}";' for v in self.vertices]
        body += [f'  "{u}" -- "{v}" [label="{c}"];' for u, v, c in self.edges]
        return "graph %s {\n%s\n}" % (name, "\n".join(body))


@dataclass(frozen=True)
class ReducedTaitGraph:
    """Tait graph with parallel edges collapsed to classes."""

    color: str
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, frozenset[int]], ...]  # (u, v, crossings of the class)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def checkerboard(d: Diagram) -> Coloring:
    fs = faces(d)
    colors: list[str | None] = [None] * len(fs.faces)
    consistent = True
    for i, f in enumerate(fs.faces):
        votes = {BLACK if q % 2 else WHITE for _, q in f.corners}
        if len(votes) == 1:
            colors[i] = votes.pop()
        else:
            consistent = False
    if not consistent:
        colors = _proper_two_coloring(d, fs)
    return Coloring(fs, tuple(colors), consistent)


def _proper_two_coloring(d: Diagram, fs: FaceSet) -> list[str]:
    """Fallback: BFS 2-coloring of the face-adjacency graph (faces sharing an arc)."""
    face_of = fs.face_of()
    adj: dict[int, set[int]] = {i: set() for i in range(len(fs.faces))}
    for (c1, p1), (c2, p2) in d.endpoints().values():
        # an arc borders the quadrants on its two sides at each endpoint
        f_left = face_of[(c1, p1)]
        f_right = face_of[(c1, (p1 - 1) % 4)]
        adj[f_left].add(f_right)
        adj[f_right].add(f_left)
        f_left = face_of[(c2, p2)]
        f_right = face_of[(c2, (p2 - 1) % 4)]
        adj[f_left].add(f_right)
        adj[f_right].add(f_left)
    colors: list[str | None] = [None] * len(fs.faces)
    for start in range(len(fs.faces)):
        if colors[start] is not None:
            continue
        colors[start] = BLACK
        queue = [start]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if colors[w] is None:
                    colors[w] = WHITE if colors[v] == BLACK else BLACK
                    queue.append(w)
    return colors  # type: ignore[return-value]


def tait_graphs(d: Diagram, coloring: Coloring | None = None) -> tuple[TaitGraph, TaitGraph]:
    """The graph G on black faces and its dual G* on white faces.

    Every crossing contributes the edge between its two black quadrant faces
    to G and the edge between its two white quadrant faces to G*.
    """
    if d.n == 0:
        return (TaitGraph(BLACK, (0,), ()), TaitGraph(WHITE, (1,), ()))
    coloring = coloring or checkerboard(d)
    face_of = coloring.face_set.face_of()
    black_edges, white_edges = [], []
    for c in d.crossings:
        quads = [face_of[(c.index, q)] for q in range(4)]
        pair_odd = tuple(sorted((quads[1], quads[3]))) + (c.index,)
        pair_even = tuple(sorted((quads[0], quads[2]))) + (c.index,)
        if coloring.color(quads[1]) == BLACK:
            black_edges.append(pair_odd)
            white_edges.append(pair_even)
        else:
            black_edges.append(pair_even)
            white_edges.append(pair_odd)
    g = TaitGraph(BLACK, coloring.faces_of_color(BLACK), tuple(black_edges))
    g_star = TaitGraph(WHITE, coloring.faces_of_color(WHITE), tuple(white_edges))
    return g, g_star


def reduce_graph(g: TaitGraph) -> ReducedTaitGraph:
    """Collapse parallel edges (same endpoints) into single class edges."""
    classes: dict[tuple[int, int], set[int]] = {}
    for u, v, c in g.edges:
        classes.setdefault((u, v), set()).add(c)
    edges = tuple((u, v, frozenset(cs)) for (u, v), cs in sorted(classes.items()))
    return ReducedTaitGraph(g.color, g.vertices, edges)


def psi(g: TaitGraph | ReducedTaitGraph) -> int:
    """Cycle rank |E| - |V| + 1 of a connected graph."""
    comps = _component_count(g)
    if comps > 1:
        raise DisconnectedGraph(comps)
    return g.edge_count - g.vertex_count + 1


def psi_per_component(g: TaitGraph | ReducedTaitGraph) -> list[int]:
    """Cycle rank of each connected component (|E| - |V| + 1 per component)."""
    rep: dict[int, int] = {}
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    counts: dict[int, list[int]] = {}
    for v in g.vertices:
        counts.setdefault(find(v), [0, 0])[0] += 1
    for u, v, _ in g.edges:
        counts[find(u)][1] += 1
    return [e - n + 1 for n, e in sorted(counts.values())]


def _component_count(g: TaitGraph | ReducedTaitGraph) -> int:
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return len({find(v) for v in g.vertices})


def spanning_tree_count(g: TaitGraph | ReducedTaitGraph) -> int:
    """Number of spanning trees, via the integer Kirchhoff determinant.

    For a reduced alternating diagram this equals the knot determinant, which
    the corpus generator uses as an end-to-end consistency check.
    """
    from .linalg import SparseIntMatrix, determinant

    verts = list(g.vertices)
    if not verts:
        return 0
    pos = {v: i for i, v in enumerate(verts)}
    size = len(verts)
    lap = [[0] * size for _ in range(size)]
    for u, v, _ in g.edges:
        if u == v:
            continue
        iu, iv = pos[u], pos[v]
        lap[iu][iu] += 1
        lap[iv][iv] += 1
        lap[iu][iv] -= 1
        lap[iv][iu] -= 1
    if size == 1:
        return 1
    minor = [row[1:] for row in lap[1:]]
    return abs(determinant(SparseIntMatrix.from_dense(minor)))
