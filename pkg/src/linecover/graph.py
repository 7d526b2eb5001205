"""Simple graphs, exact connectivity tests, and combinatorial embeddings.

Embeddings are rotation systems: a counterclockwise cyclic neighbor order at
every vertex. Faces are traced with the previous-neighbor rule, so in an
embedding read off a straight-line drawing the bounded face walks come out
counterclockwise and the outer walk clockwise (negative signed area).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .geom import Point


class GraphError(Exception):
    pass


class EmbeddingError(Exception):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if u > v:
                raise GraphError(f"edge ({u}, {v}) must be stored sorted")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_set

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)


def graph_from_edges(n: int, edges) -> Graph:
    normalized = sorted({(min(u, v), max(u, v)) for u, v in edges})
    return Graph(n, tuple(normalized))


def cycle_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, itertools.combinations(range(n), 2))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def bipartition(g: Graph) -> tuple[tuple[int, ...] | None, tuple[int, ...] | None]:
    """(coloring, None) for bipartite graphs, else (None, odd_cycle)."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop(0)
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    # Walk both endpoints up to a common ancestor.
                    pu: list[int] = [u]
                    pw: list[int] = [w]
                    while pu[-1] != -1:
                        pu.append(parent[pu[-1]])
                    ancestors = set(pu)
                    while pw[-1] not in ancestors:
                        pw.append(parent[pw[-1]])
                    join = pw[-1]
                    cycle = pu[: pu.index(join) + 1] + pw[-2::-1]
                    return None, tuple(cycle)
    return tuple(color), None


@dataclass(frozen=True)
class PropertyReport:
    connected: bool
    cubic: bool
    subcubic: bool
    bipartite: bool
    coloring: tuple[int, ...] | None
    odd_cycle: tuple[int, ...] | None


def check_properties(g: Graph) -> PropertyReport:
    degrees = [g.degree(v) for v in range(g.n)]
    coloring, odd_cycle = bipartition(g)
    return PropertyReport(
        connected=is_connected(g),
        cubic=all(d == 3 for d in degrees),
        subcubic=all(d <= 3 for d in degrees),
        bipartite=coloring is not None,
        coloring=coloring,
        odd_cycle=odd_cycle,
    )


def _connected_without(g: Graph, removed: frozenset[int]) -> bool:
    keep = [v for v in range(g.n) if v not in removed]
    if not keep:
        return True
    seen = {keep[0]}
    stack = [keep[0]]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(keep)


def _has_articulation(g: Graph, removed: frozenset[int]) -> bool:
    """Articulation test on the induced subgraph, iterative lowpoint DFS."""
    keep = [v for v in range(g.n) if v not in removed]
    if not keep:
        return False
    index = {}
    low = {}
    parent: dict[int, int] = {}
    counter = 0
    root = keep[0]
    root_children = 0
    stack: list[tuple[int, iter]] = []
    index[root] = low[root] = counter
    counter += 1
    stack.append((root, iter(g.adjacency[root])))
    while stack:
        u, it = stack[-1]
        advanced = False
        for w in it:
            if w in removed:
                continue
            if w not in index:
                parent[w] = u
                if u == root:
                    root_children += 1
                index[w] = low[w] = counter
                counter += 1
                stack.append((w, iter(g.adjacency[w])))
                advanced = True
                break
            elif w != parent.get(u):
                low[u] = min(low[u], index[w])
        if not advanced:
            stack.pop()
            p = parent.get(u)
            if p is not None:
                low[p] = min(low[p], low[u])
                if p != root and low[u] >= index[p]:
                    return True
    if root_children > 1:
        return True
    return False


def is_k_connected(g: Graph, k: int) -> bool:
    """Exact k-vertex-connectivity for k in {1, 2, 3}; requires n > k."""
    if k not in (1, 2, 3):
        raise ValueError("only k in {1, 2, 3} is supported")
    if g.n <= k:
        raise ValueError(f"k-connectivity needs more than k={k} vertices, got n={g.n}")
    if not is_connected(g):
        return False
    if k == 1:
        return True
    if _has_articulation(g, frozenset()):
        return False
    if k == 2:
        return True
    for v in range(g.n):
        removed = frozenset([v])
        if not _connected_without(g, removed) or _has_articulation(g, removed):
            return False
    return True


DirectedEdge = tuple[int, int]
Face = tuple[DirectedEdge, ...]


def canonical_face(walk: list[DirectedEdge]) -> Face:
    i = walk.index(min(walk))
    return tuple(walk[i:] + walk[:i])


@dataclass(frozen=True)
class Embedding:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    outer_face: Face | None = None

    def validate(self) -> None:
        g = self.graph
        if len(self.rotation) != g.n:
            raise EmbeddingError("rotation system has the wrong number of vertices")
        for v in range(g.n):
            if tuple(sorted(self.rotation[v])) != g.adjacency[v]:
                raise EmbeddingError(f"rotation at vertex {v} does not list its neighbors exactly once")
        if self.outer_face is not None and self.outer_face not in faces(self):
            raise EmbeddingError("designated outer face is not a face of the embedding")

    @cached_property
    def _position(self) -> tuple[dict[int, int], ...]:
        return tuple({u: i for i, u in enumerate(rot)} for rot in self.rotation)

    def next_in_face(self, u: int, v: int) -> DirectedEdge:
        rot = self.rotation[v]
        i = self._position[v][u]
        return (v, rot[i - 1])


def faces(emb: Embedding) -> tuple[Face, ...]:
    """All face walks of the rotation system, canonicalized."""
    g = emb.graph
    for v in range(g.n):
        if tuple(sorted(emb.rotation[v])) != g.adjacency[v]:
            raise EmbeddingError(f"rotation at vertex {v} does not list its neighbors exactly once")
    remaining: set[DirectedEdge] = set()
    for u, v in g.edges:
        remaining.add((u, v))
        remaining.add((v, u))
    out: list[Face] = []
    while remaining:
        start = min(remaining)
        walk = [start]
        remaining.discard(start)
        cur = emb.next_in_face(*start)
        while cur != start:
            walk.append(cur)
            remaining.discard(cur)
            cur = emb.next_in_face(*cur)
        out.append(canonical_face(walk))
    return tuple(sorted(out))


def euler_consistent(emb: Embedding) -> bool:
    g = emb.graph
    return is_connected(g) and len(faces(emb)) == 2 - g.n + g.m


@dataclass(frozen=True)
class FaceSides:
    inside: tuple[Face, ...]
    outside: tuple[Face, ...]


def _cycle_edges(cycle: tuple[int, ...]) -> set[tuple[int, int]]:
    out = set()
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        out.add((min(u, v), max(u, v)))
    return out


def face_inside_relation(emb: Embedding, cycle: tuple[int, ...]) -> FaceSides:
    """Partition the faces into the two sides of a simple cycle.

    Cuts the dual graph along the cycle's edges; the side holding the
    designated outer face is "outside". Requires the embedding to carry an
    outer face and the cycle to be a simple cycle of the graph.
    """
    if emb.outer_face is None:
        raise EmbeddingError("face_inside_relation needs a designated outer face")
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise GraphError(f"{cycle} is not a simple cycle")
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        if not emb.graph.has_edge(u, v):
            raise GraphError(f"cycle edge ({u}, {v}) is not in the graph")

    all_faces = faces(emb)
    if emb.outer_face not in all_faces:
        raise EmbeddingError("designated outer face is not a face of the embedding")
    face_of: dict[DirectedEdge, int] = {}
    for fi, f in enumerate(all_faces):
        for de in f:
            face_of[de] = fi

    cut = _cycle_edges(cycle)
    adj: list[set[int]] = [set() for _ in all_faces]
    for u, v in emb.graph.edges:
        if (u, v) in cut:
            continue
        f1, f2 = face_of[(u, v)], face_of[(v, u)]
        adj[f1].add(f2)
        adj[f2].add(f1)

    start = all_faces.index(emb.outer_face)
    outside = {start}
    stack = [start]
    while stack:
        f = stack.pop()
        for h in adj[f]:
            if h not in outside:
                outside.add(h)
                stack.append(h)
    inside = [f for i, f in enumerate(all_faces) if i not in outside]
    if not inside:
        raise GraphError(f"cycle {cycle} does not separate the embedding")
    for i in range(len(all_faces)):
        if i in outside:
            continue
        # Every inside face must be dual-reachable from any other inside face.
    return FaceSides(tuple(inside), tuple(f for i, f in enumerate(all_faces) if i in outside))


def vertices_strictly_inside(emb: Embedding, cycle: tuple[int, ...], sides: FaceSides | None = None) -> frozenset[int]:
    """Vertices incident only to inside faces (so not on the cycle itself)."""
    if sides is None:
        sides = face_inside_relation(emb, cycle)
    inside_vertices: set[int] = set()
    for f in sides.inside:
        for u, _ in f:
            inside_vertices.add(u)
    for f in sides.outside:
        for u, _ in f:
            inside_vertices.discard(u)
    return frozenset(inside_vertices - set(cycle))


@dataclass(frozen=True)
class Drawing:
    graph: Graph
    positions: tuple[Point, ...]

    def __post_init__(self):
        if len(self.positions) != self.graph.n:
            raise GraphError("drawing must position every vertex")


def _ccw_key(origin: Point):
    import functools

    def cmp(a: int, b: int, pts):
        ax, ay = pts[a].x - origin.x, pts[a].y - origin.y
        bx, by = pts[b].x - origin.x, pts[b].y - origin.y
        ha = 0 if (ay > 0 or (ay == 0 and ax > 0)) else 1
        hb = 0 if (by > 0 or (by == 0 and bx > 0)) else 1
        if ha != hb:
            return -1 if ha < hb else 1
        cross = ax * by - ay * bx
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    return functools.cmp_to_key, cmp


def embedding_from_drawing(drawing: Drawing) -> Embedding:
    """Rotation system read off a planar straight-line drawing.

    Neighbors are sorted counterclockwise around each vertex, starting from
    the positive x direction; the outer face is the unique walk with negative
    signed area. The drawing is trusted to be planar; run the drawing
    verifier first when that is in doubt.
    """
    import functools

    g = drawing.graph
    pts = drawing.positions
    if len(set(pts)) != len(pts):
        raise GraphError("drawing has coincident vertices")
    rotation = []
    for v in range(g.n):
        origin = pts[v]

        def cmp(a: int, b: int) -> int:
            ax, ay = pts[a].x - origin.x, pts[a].y - origin.y
            bx, by = pts[b].x - origin.x, pts[b].y - origin.y
            ha = 0 if (ay > 0 or (ay == 0 and ax > 0)) else 1
            hb = 0 if (by > 0 or (by == 0 and bx > 0)) else 1
            if ha != hb:
                return -1 if ha < hb else 1
            cross = ax * by - ay * bx
            if cross > 0:
                return -1
            if cross < 0:
                return 1
            return 0

        rotation.append(tuple(sorted(g.adjacency[v], key=functools.cmp_to_key(cmp))))
    emb = Embedding(g, tuple(rotation))
    outer = None
    for f in faces(emb):
        area2 = Fraction(0)
        for u, v in f:
            area2 += pts[u].x * pts[v].y - pts[v].x * pts[u].y
        if area2 < 0:
            if outer is not None:
                raise EmbeddingError("drawing yields more than one negative-area walk; it is not planar")
            outer = f
    if outer is None:
        raise EmbeddingError("drawing yields no outer walk; it is not planar")
    return Embedding(g, tuple(rotation), outer)


def canonical_rotation(emb: Embedding) -> tuple[tuple[int, ...], ...]:
    """Rotation system with each cyclic order rotated to start at its minimum."""
    out = []
    for rot in emb.rotation:
        if not rot:
            out.append(rot)
            continue
        i = rot.index(min(rot))
        out.append(rot[i:] + rot[:i])
    return tuple(out)
