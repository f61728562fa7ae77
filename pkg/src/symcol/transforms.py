"""Subdivision, central, middle, endline, and line graph transformations.

Label layout is fixed so colorings built on the transformed graphs are
reproducible: original vertices keep labels 0..n-1 (part1), added vertices
follow at n.. (part2).  Subdivided vertices appear in the column-major order
of their source edges; the endline pendant of vertex v is n+v.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, encode_graph6

__all__ = [
    "TaggedGraph",
    "subdivision",
    "central",
    "middle",
    "endline",
    "line_graph",
    "middle_to_line_of_endline",
]


@dataclass
class TaggedGraph:
    """A transformed graph plus the bookkeeping the colorings need.

    `origin` maps each added vertex to the base edge (u, v) it subdivides, or
    to the base vertex it hangs off (endline pendants).
    """

    graph: Graph
    base: Graph
    part1: tuple[int, ...]
    part2: tuple[int, ...]
    origin: dict[int, tuple[int, int] | int]

    def subdivided(self, u: int, v: int) -> int:
        """The added vertex sitting on base edge {u, v}."""
        key = (u, v) if u < v else (v, u)
        w = self._edge_to_added().get(key)
        if w is None:
            raise KeyError(f"{key} is not a subdivided base edge")
        return w

    def _edge_to_added(self) -> dict[tuple[int, int], int]:
        cached = getattr(self, "_edge_map", None)
        if cached is None:
            cached = {e: w for w, e in self.origin.items() if isinstance(e, tuple)}
            self._edge_map = cached
        return cached

    def to_json(self) -> dict:
        return {
            "graph6": encode_graph6(self.graph),
            "part1": list(self.part1),
            "origin": {str(w): list(e) if isinstance(e, tuple) else e for w, e in self.origin.items()},
        }


def _subdivision_parts(g: Graph) -> tuple[list[tuple[int, int]], dict[int, tuple[int, int] | int]]:
    edges = g.edges()
    origin: dict[int, tuple[int, int] | int] = {g.n + k: e for k, e in enumerate(edges)}
    sub_edges = []
    for k, (u, v) in enumerate(edges):
        w = g.n + k
        sub_edges.append((u, w))
        sub_edges.append((v, w))
    return sub_edges, origin


def subdivision(g: Graph) -> TaggedGraph:
    """Replace every edge {u, v} by a path u - w_{u,v} - v."""
    sub_edges, origin = _subdivision_parts(g)
    graph = Graph.from_edges(g.n + g.edge_count(), sub_edges)
    return TaggedGraph(graph, g, tuple(range(g.n)), tuple(sorted(origin)), origin)


def central(g: Graph) -> TaggedGraph:
    """Subdivide every edge, then join every non-adjacent original pair."""
    sub_edges, origin = _subdivision_parts(g)
    comp = [(i, j) for j in range(g.n) for i in range(j) if not g.has_edge(i, j)]
    graph = Graph.from_edges(g.n + g.edge_count(), sub_edges + comp)
    return TaggedGraph(graph, g, tuple(range(g.n)), tuple(sorted(origin)), origin)


def middle(g: Graph) -> TaggedGraph:
    """Subdivide every edge, then join subdivided vertices of adjacent edges."""
    sub_edges, origin = _subdivision_parts(g)
    edges = g.edges()
    extra = []
    for b in range(len(edges)):
        for a in range(b):
            if set(edges[a]) & set(edges[b]):
                extra.append((g.n + a, g.n + b))
    graph = Graph.from_edges(g.n + len(edges), sub_edges + extra)
    return TaggedGraph(graph, g, tuple(range(g.n)), tuple(sorted(origin)), origin)


def endline(g: Graph) -> TaggedGraph:
    """Attach one new pendant vertex to every original vertex."""
    pend = [(v, g.n + v) for v in range(g.n)]
    graph = Graph.from_edges(2 * g.n, g.edges() + pend)
    origin: dict[int, tuple[int, int] | int] = {g.n + v: v for v in range(g.n)}
    return TaggedGraph(graph, g, tuple(range(g.n)), tuple(range(g.n, 2 * g.n)), origin)


def line_graph(g: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Line graph plus the vertex labeling map.

    Vertex k of the result stands for edge labels[k] of the input; two
    vertices are adjacent iff their edges share an endpoint.
    """
    edges = g.edges()
    pairs = []
    for b in range(len(edges)):
        for a in range(b):
            if set(edges[a]) & set(edges[b]):
                pairs.append((a, b))
    return Graph.from_edges(len(edges), pairs), tuple(edges)


def middle_to_line_of_endline(g: Graph) -> tuple[int, ...]:
    """The canonical isomorphism from middle(g) onto line_graph(endline(g)).

    Original vertex v corresponds to the pendant edge {v, n+v}; the subdivided
    vertex of base edge e corresponds to e itself (an edge of the endline
    graph with the same endpoints).  Returns the image array indexed by
    middle-graph vertex.
    """
    plus = endline(g)
    _, labels = line_graph(plus.graph)
    position = {e: k for k, e in enumerate(labels)}
    image = [position[(v, g.n + v)] for v in range(g.n)]
    for e in g.edges():
        image.append(position[e])
    return tuple(image)
