"""Coloring and partition constructions, each returning its promised bound.

Every public operation re-checks its own output with the matching verifier
(properness, AVD, total domination, or distinguishing against the full
automorphism group of the transformed graph) before returning.  A verifier
rejection raises ConstructionDefectError instead of returning a bad object.

All tie-breaking is deterministic: "any color" picks the minimum available,
pair codes are assigned in lexicographic order by child label, and roots or
special vertices are the smallest labels satisfying their defining property.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .autos import AutCaps, automorphisms, vertex_orbits
from .colorings import (
    TDCPartition,
    TotalColoring,
    is_avd_total,
    is_distinguishing,
    is_proper,
    is_tdc,
)
from .errors import ConstructionDefectError, NotApplicableError
from .graphs import Graph, iter_bits
from .latin import LatinSquare, icls
from .oracles import exact_parameter
from .transforms import (
    TaggedGraph,
    central,
    endline,
    line_graph,
    middle,
    middle_to_line_of_endline,
    subdivision,
)

__all__ = [
    "ConstructionResult",
    "EndlineColoring",
    "BfsFrame",
    "VERIFY_CAPS",
    "join_graph",
    "bipartite_edge_coloring",
    "list_edge_coloring_bipartite",
    "dist_edge_coloring_central",
    "dist_vertex_coloring_central",
    "dist_edge_coloring_endline",
    "dist_vertex_coloring_middle",
    "total_coloring_central_regular_odd",
    "total_dist_coloring_central_regular",
    "total_dist_coloring_subdivision",
    "avd_coloring_central_regular",
    "avd_coloring_subdivision",
    "avd_coloring_central_join",
    "tdc_central",
    "tdc_central_tree",
    "tdc_to_complement",
]

# The transformed graphs blow up quadratically (C(G) of an order-7 graph has
# up to 28 vertices), so verification defaults to roomier caps than raw group
# enumeration does.
VERIFY_CAPS = AutCaps(max_vertices=64, max_group_order=10**8)


@dataclass(frozen=True)
class ConstructionResult:
    """A coloring, the size of the palette it used, and the promised bound.

    ``tag`` is the stable identifier also accepted by the command line's
    construct subcommand.  ``graph`` is the (transformed) graph the coloring
    lives on.
    """

    graph: Graph
    coloring: TotalColoring
    palette_size: int
    promised_bound: int
    tag: str
    notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.palette_size > self.promised_bound:
            raise ConstructionDefectError(
                f"palette of {self.palette_size} colors exceeds the promised "
                f"bound {self.promised_bound}"
            )

    def to_json(self) -> dict:
        from .colorings import coloring_to_json

        doc = coloring_to_json(self.graph, self.coloring)
        doc.update(
            {
                "palette_size": self.palette_size,
                "promised_bound": self.promised_bound,
                "tag": self.tag,
                "notes": list(self.notes),
            }
        )
        return doc


@dataclass(frozen=True)
class EndlineColoring:
    """Edge coloring of an endline graph extended from a base coloring."""

    plus: TaggedGraph
    coloring: TotalColoring
    distinguishing: bool


def join_graph(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of g1 and g2 plus every cross edge.

    Vertices of g1 keep their labels; vertices of g2 are shifted by g1.n.
    """
    shift = g1.n
    edges = list(g1.edges())
    edges += [(shift + a, shift + b) for a, b in g2.edges()]
    edges += [(a, shift + b) for a in range(g1.n) for b in range(g2.n)]
    return Graph.from_edges(g1.n + g2.n, edges)


# --- bipartite edge colorings ------------------------------------------------


def _require_bipartite(g: Graph) -> tuple[int, int]:
    sides = g.is_bipartite()
    if sides is None:
        raise NotApplicableError("graph is not bipartite")
    return sides


def bipartite_edge_coloring(g: Graph) -> TotalColoring:
    """Proper edge coloring of a bipartite graph with exactly max-degree colors.

    Classic augmenting construction: each edge takes a color free at both
    ends, otherwise the two-color alternating path from one end is flipped to
    make one.
    """
    _require_bipartite(g)
    delta = g.max_degree()
    at: list[dict[int, int]] = [{} for _ in range(g.n)]  # vertex -> color -> neighbor
    out: dict[tuple[int, int], int] = {}

    def free(v: int) -> int:
        for c in range(1, delta + 1):
            if c not in at[v]:
                return c
        raise ConstructionDefectError(f"no free color at vertex {v}")

    for u, v in g.edges():
        a, b = free(u), free(v)
        if a != b and a in at[v]:
            # Flip colors a and b along the alternating path starting at v.
            # The path cannot reach u: u has no a-edge, and parity puts u on
            # the wrong side for every b-edge arrival.
            path = [v]
            want = a
            while want in at[path[-1]]:
                path.append(at[path[-1]][want])
                want = b if want == a else a
            steps = list(zip(path, path[1:]))
            for i, (x, y) in enumerate(steps):
                old = a if i % 2 == 0 else b
                del at[x][old]
                del at[y][old]
            for i, (x, y) in enumerate(steps):
                new = b if i % 2 == 0 else a
                at[x][new] = y
                at[y][new] = x
                out[(x, y) if x < y else (y, x)] = new
        at[u][a] = v
        at[v][a] = u
        out[(u, v)] = a

    f = TotalColoring(None, out)
    if g.edge_count() and (not is_proper(g, f, "edge") or len(f.palette()) != delta):
        raise ConstructionDefectError("edge coloring failed its own properness check")
    return f


def _normalize_lists(
    g: Graph, lists: Mapping[tuple[int, int], Iterable[int]]
) -> dict[tuple[int, int], set[int]]:
    out = {}
    for e in g.edges():
        key = e if e in lists else (e[1], e[0])
        if key not in lists:
            raise ValueError(f"no color list supplied for edge {e}")
        out[e] = set(lists[key])
    return out


def list_edge_coloring_bipartite(
    g: Graph, lists: Mapping[tuple[int, int], Iterable[int]]
) -> TotalColoring:
    """Proper edge coloring choosing each color from that edge's list.

    Kernel method: a reference max-degree coloring orients every conflict, and
    for each candidate color a stable matching of the edges still wanting it
    is colored.  Stability is exactly the property that every passed-over edge
    loses the color to a dominating neighbor, so lists of size at least the
    maximum degree never run dry.
    """
    _require_bipartite(g)
    delta = g.max_degree()
    lmap = _normalize_lists(g, lists)
    for e, colors in lmap.items():
        if len(colors) < delta:
            raise ValueError(
                f"list for edge {e} has {len(colors)} colors, below the degree bound {delta}"
            )
    if not lmap:
        return TotalColoring(None, {})
    side_a, _ = _require_bipartite(g)
    phi = bipartite_edge_coloring(g).edge_colors
    assert phi is not None

    remaining = set(lmap)
    out: dict[tuple[int, int], int] = {}
    while remaining:
        palette = set().union(*(lmap[e] for e in remaining))
        if not palette:
            raise ConstructionDefectError("an uncolored edge ran out of list colors")
        c = min(palette)
        field_edges = [e for e in remaining if c in lmap[e]]
        kernel = _stable_edge_matching(field_edges, phi, side_a)
        touched = {v for e in kernel for v in e}
        for e in kernel:
            out[e] = c
            remaining.discard(e)
        for e in remaining:
            if e[0] in touched or e[1] in touched:
                lmap[e].discard(c)

    f = TotalColoring(None, out)
    if not is_proper(g, f, "edge"):
        raise ConstructionDefectError("list edge coloring failed its properness check")
    return f


def _stable_edge_matching(
    edges: list[tuple[int, int]],
    phi: Mapping[tuple[int, int], int],
    side_a: int,
) -> list[tuple[int, int]]:
    """Stable matching of edges: one side prefers high reference colors, the
    other low, so every unmatched edge is beaten at a shared endpoint."""
    a_of = {}
    for e in edges:
        u, v = e
        a_of[e] = u if side_a >> u & 1 else v
    alive = set(edges)
    while True:
        proposals: dict[int, tuple[int, int]] = {}
        by_a: dict[int, list[tuple[int, int]]] = {}
        for e in alive:
            by_a.setdefault(a_of[e], []).append(e)
        for a, cand in by_a.items():
            e = max(cand, key=lambda x: phi[x])
            b = e[0] if e[1] == a else e[1]
            prev = proposals.get(b)
            if prev is None or phi[e] < phi[prev]:
                proposals[b] = e
        chosen = set(proposals.values())
        rejected = {
            e
            for a, cand in by_a.items()
            for e in [max(cand, key=lambda x: phi[x])]
            if e not in chosen
        }
        if not rejected:
            return sorted(chosen)
        alive -= rejected


# --- distinguishing edge colorings of central graphs -------------------------


@dataclass(frozen=True)
class BfsFrame:
    """Layered spanning-tree skeleton used by the central edge colorings."""

    root: int
    layers: tuple[tuple[int, ...], ...]
    parent: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    tree_edges: frozenset[tuple[int, int]]

    def pair_edges(
        self, cent: TaggedGraph, v: int, u: int
    ) -> tuple[tuple[int, int], tuple[int, int]]:
        """The two subdivision edges of tree edge {v, u}, v-side first."""
        key = (v, u) if v < u else (u, v)
        if key not in self.tree_edges:
            raise ValueError(f"{key} is not a tree edge")
        w = cent.subdivided(v, u)
        return (min(v, w), max(v, w)), (min(u, w), max(u, w))


def _bfs_frame(g: Graph, root: int) -> BfsFrame:
    dist, parent = g.bfs(root)
    depth = max(dist)
    layers = tuple(
        tuple(v for v in range(g.n) if dist[v] == k) for k in range(depth + 1)
    )
    children: list[list[int]] = [[] for _ in range(g.n)]
    tree = set()
    for v in range(g.n):
        p = parent[v]
        if p >= 0:
            children[p].append(v)
            tree.add((v, p) if v < p else (p, v))
    return BfsFrame(
        root,
        layers,
        tuple(parent),
        tuple(tuple(c) for c in children),
        frozenset(tree),
    )


def _cycle_vertices(g: Graph) -> list[int]:
    """Vertices lying on at least one cycle: two of their neighbors stay
    connected when the vertex itself is removed."""
    out = []
    for v in range(g.n):
        nbrs = g.neighbors(v)
        if len(nbrs) < 2:
            continue
        comp = [-1] * g.n
        comp[v] = -2
        label = 0
        for s in range(g.n):
            if comp[s] != -1:
                continue
            stack = [s]
            comp[s] = label
            while stack:
                x = stack.pop()
                for y in iter_bits(g.adj[x]):
                    if comp[y] == -1:
                        comp[y] = label
                        stack.append(y)
            label += 1
        seen = set()
        for u in nbrs:
            if comp[u] in seen:
                out.append(v)
                break
            seen.add(comp[u])
    return out


def _sqrt_ceil(x: int) -> int:
    return max(1, math.isqrt(max(x - 1, 0)) + 1) if x > 1 else 1


def _pair_pool(k: int, allow_11: bool, allow_22: bool) -> list[tuple[int, int]]:
    """Ordered color pairs: lexicographic, with (2,2) demoted to last when it
    is allowed at all (it doubles as the marker of non-tree edges)."""
    pool = [
        (a, b)
        for a in range(1, k + 1)
        for b in range(1, k + 1)
        if (allow_11 or (a, b) != (1, 1)) and (a, b) != (2, 2)
    ]
    if allow_22 and k >= 2:
        pool.append((2, 2))
    return pool


def _write_pair(
    ec: dict[tuple[int, int], int],
    cent: TaggedGraph,
    v: int,
    u: int,
    pair: tuple[int, int],
) -> None:
    w = cent.subdivided(v, u)
    ec[(min(v, w), max(v, w))] = pair[0]
    ec[(min(u, w), max(u, w))] = pair[1]


def _central_edges_cyclic(g: Graph, cent: TaggedGraph, k: int) -> dict[tuple[int, int], int]:
    """Case of a connected graph with a cycle, neither complete nor a cycle.

    A doubled (1,1) pair marks the root, complement edges from the root
    separate its two marked neighbors, and distinct pairs fix each layer of
    the spanning tree; everything else is colored 2 so non-tree pairs read
    (2,2).
    """
    candidates = [v for v in _cycle_vertices(g) if g.adj[v].bit_count() < g.n - 1]
    if not candidates:
        raise ConstructionDefectError(
            "no root lies on a cycle with a nonempty second sphere"
        )
    root = candidates[0]
    frame = _bfs_frame(g, root)
    s1 = frame.layers[1]
    with_child = [v for v in s1 if frame.children[v]]
    if not with_child:
        raise ConstructionDefectError("no first-sphere vertex has a deeper child")
    v1 = with_child[0]
    v2 = min(v for v in s1 if v != v1)

    has_nontree = [
        any(
            ((v, u) if v < u else (u, v)) not in frame.tree_edges
            for u in g.neighbors(v)
        )
        for v in range(g.n)
    ]
    ec: dict[tuple[int, int], int] = {}
    for layer in frame.layers:
        for v in layer:
            kids = list(frame.children[v])
            if v == root:
                _write_pair(ec, cent, v, v1, (1, 1))
                _write_pair(ec, cent, v, v2, (1, 1))
                kids = [u for u in kids if u not in (v1, v2)]
            pool = _pair_pool(k, allow_11=False, allow_22=not has_nontree[v])
            if len(kids) > len(pool):
                raise ConstructionDefectError(
                    f"vertex {v} has {len(kids)} tree children but only "
                    f"{len(pool)} admissible pairs"
                )
            for u, pair in zip(kids, pool):
                _write_pair(ec, cent, v, u, pair)

    # Complement edges from the root to the first marked neighbor's children
    # get 1; every other still-uncolored edge (complement edges and the
    # subdivision edges of non-tree base edges) gets 2.
    for u in frame.children[v1]:
        key = (min(root, u), max(root, u))
        ec[key] = 1
    for e in cent.graph.edges():
        ec.setdefault(e, 2)

    marks = _root_mark_counts(g, cent, ec)
    if not (marks[root] == 2 and all(c < 2 for v, c in enumerate(marks) if v != root)):
        raise ConstructionDefectError("the doubled root pair is not unique")
    return ec


def _root_mark_counts(
    g: Graph, cent: TaggedGraph, ec: dict[tuple[int, int], int]
) -> list[int]:
    """How many incident subdivision pairs of each vertex read (1,1)."""
    counts = [0] * g.n
    for x, y in g.edges():
        w = cent.subdivided(x, y)
        a = ec[(min(x, w), max(x, w))]
        b = ec[(min(y, w), max(y, w))]
        if a == 1 and b == 1:
            counts[x] += 1
        if b == 1 and a == 1:
            counts[y] += 1
    return counts


def _tree_centers(g: Graph) -> list[int]:
    best = None
    centers: list[int] = []
    for v in range(g.n):
        ecc = max(g.bfs(v)[0])
        if best is None or ecc < best:
            best, centers = ecc, [v]
        elif ecc == best:
            centers.append(v)
    return centers


def _central_edges_tree(g: Graph, cent: TaggedGraph, k: int) -> dict[tuple[int, int], int]:
    """Case of a tree: every automorphism fixes the center vertex or center
    edge, and distinct pairs per layer propagate that fixing outward."""
    centers = _tree_centers(g)
    ec: dict[tuple[int, int], int] = {}
    pool = _pair_pool(k, allow_11=True, allow_22=True)
    if len(centers) == 1:
        frame = _bfs_frame(g, centers[0])
        skip: dict[int, int] = {}
    else:
        x, y = sorted(centers)
        frame = _bfs_frame(g, x)
        _write_pair(ec, cent, x, y, (1, 2))
        skip = {x: y}
    for layer in frame.layers:
        for v in layer:
            kids = [u for u in frame.children[v] if skip.get(v) != u]
            if len(kids) > len(pool):
                raise ConstructionDefectError(
                    f"vertex {v} has {len(kids)} children but only {len(pool)} pairs"
                )
            for u, pair in zip(kids, pool):
                _write_pair(ec, cent, v, u, pair)
    for e in cent.graph.edges():
        ec.setdefault(e, 1)
    return ec


def dist_edge_coloring_central(
    g: Graph, aut_caps: AutCaps = VERIFY_CAPS
) -> ConstructionResult:
    """Distinguishing edge coloring of the central graph, within ceil(sqrt(max degree)) colors."""
    if g.n < 4 or not g.is_connected():
        raise NotApplicableError("requires a connected graph of order at least 4")
    cent = central(g)
    k = max(2, _sqrt_ceil(g.max_degree()))
    if g.is_complete() or g.is_cycle():
        res = exact_parameter(cent.graph, "Dp", cap=2, aut_caps=aut_caps)
        if res.value is None or res.witness is None or res.witness.edge_colors is None:
            raise ConstructionDefectError(
                "no 2-color distinguishing edge coloring found for the "
                "complete/cycle case"
            )
        ec = dict(res.witness.edge_colors)
        note = "complete-or-cycle case settled by bounded search"
    elif g.is_tree():
        ec = _central_edges_tree(g, cent, k)
        note = "tree case rooted at the center"
    else:
        ec = _central_edges_cyclic(g, cent, k)
        note = "cyclic case with a doubled root pair"
    coloring = TotalColoring(None, ec)
    if not is_distinguishing(cent.graph, coloring, "edge", aut_caps):
        raise ConstructionDefectError(
            "central edge coloring is preserved by a nontrivial automorphism"
        )
    return ConstructionResult(
        cent.graph, coloring, len(coloring.palette()), k, "3.2", (note,)
    )


def dist_vertex_coloring_central(
    g: Graph, aut_caps: AutCaps = VERIFY_CAPS
) -> ConstructionResult:
    """Distinguishing vertex coloring of the central graph, lifted from a
    total distinguishing coloring of the base graph."""
    if g.n < 4 or not g.is_connected():
        raise NotApplicableError("requires a connected graph of order at least 4")
    k = max(1, _sqrt_ceil(g.max_degree()))
    res = exact_parameter(g, "Dpp", cap=k)
    if res.value is None or res.witness is None:
        raise ConstructionDefectError(
            f"no total distinguishing coloring of the base graph with {k} colors"
        )
    f = res.witness
    assert f.vertex_colors is not None and f.edge_colors is not None
    vc = list(f.vertex_colors)
    for e in g.edges():
        vc.append(f.edge_colors[e])
    cent = central(g)
    coloring = TotalColoring(tuple(vc), None)
    if not is_distinguishing(cent.graph, coloring, "vertex", aut_caps):
        raise ConstructionDefectError(
            "lifted vertex coloring is preserved by a nontrivial automorphism"
        )
    return ConstructionResult(
        cent.graph, coloring, len(coloring.palette()), k, "3.4",
        ("lift of an oracle total distinguishing coloring",),
    )


# --- endline and middle graphs ------------------------------------------------


def dist_edge_coloring_endline(
    g: Graph, coloring: TotalColoring, aut_caps: AutCaps = VERIFY_CAPS
) -> EndlineColoring:
    """Extend a distinguishing edge coloring to the endline graph by coloring
    every pendant edge 1."""
    if g.edge_count() and not is_distinguishing(g, coloring, "edge", aut_caps):
        raise ValueError("input edge coloring is not distinguishing for the base graph")
    if not g.edge_count() and automorphisms(g, aut_caps).order > 1:
        raise ValueError("input edge coloring is not distinguishing for the base graph")
    plus = endline(g)
    ec = dict(coloring.edge_colors or {})
    for v in range(g.n):
        ec[(v, g.n + v)] = 1
    extended = TotalColoring(None, ec)
    ok = is_distinguishing(plus.graph, extended, "edge", aut_caps)
    return EndlineColoring(plus, extended, ok)


def dist_vertex_coloring_middle(
    g: Graph, aut_caps: AutCaps = VERIFY_CAPS
) -> ConstructionResult:
    """Distinguishing vertex coloring of the middle graph within max-degree
    colors, transported from an edge coloring of the endline graph."""
    if g.n < 3 or not g.is_connected():
        raise NotApplicableError("requires a connected graph of order at least 3")
    delta = g.max_degree()
    plus = endline(g)
    if g.is_cycle():
        res = exact_parameter(plus.graph, "Dp", cap=2, aut_caps=aut_caps)
        if res.value is None or res.witness is None:
            raise ConstructionDefectError(
                "no 2-color distinguishing edge coloring of the cycle's endline graph"
            )
        assert res.witness.edge_colors is not None
        plus_ec = res.witness.edge_colors
        note = "cycle case settled on the endline graph directly"
    else:
        res = exact_parameter(g, "Dp", cap=delta, aut_caps=aut_caps)
        if res.value is None or res.witness is None:
            raise ConstructionDefectError(
                f"no distinguishing edge coloring of the base graph with {delta} colors"
            )
        ext = dist_edge_coloring_endline(g, res.witness, aut_caps)
        if not ext.distinguishing:
            raise ConstructionDefectError(
                "endline extension lost the distinguishing property"
            )
        assert ext.coloring.edge_colors is not None
        plus_ec = ext.coloring.edge_colors
        note = "transported from an endline edge coloring"
    mid = middle(g)
    image = middle_to_line_of_endline(g)
    _, labels = line_graph(plus.graph)
    vc = tuple(plus_ec[labels[image[v]]] for v in range(mid.graph.n))
    coloring = TotalColoring(vc, None)
    if not is_distinguishing(mid.graph, coloring, "vertex", aut_caps):
        raise ConstructionDefectError(
            "middle-graph vertex coloring is preserved by a nontrivial automorphism"
        )
    return ConstructionResult(
        mid.graph, coloring, len(coloring.palette()), delta, "3.6", (note,)
    )


# --- square-driven total colorings of central graphs -------------------------


def _subdivision_graph_of(cent: TaggedGraph) -> Graph:
    edges = []
    for w, origin in cent.origin.items():
        assert isinstance(origin, tuple)
        u, v = origin
        edges.append((u, w))
        edges.append((v, w))
    return Graph.from_edges(cent.graph.n, edges)


def _square_total_central(
    g: Graph, square_order: int
) -> tuple[TaggedGraph, tuple[int, ...], dict[tuple[int, int], int], LatinSquare]:
    """Total coloring of the central graph driven by an idempotent commutative
    Latin square: the diagonal colors the original vertices, off-diagonal
    entries color the complement edges, and the subdivision edges are list
    colored from what is left of each row."""
    n = g.n
    if square_order < n or square_order % 2 == 0:
        raise ValueError("square order must be odd and at least the graph order")
    square = icls((square_order + 1) // 2)
    cent = central(g)
    comp = g.complement()
    vc = [0] * cent.graph.n
    ec: dict[tuple[int, int], int] = {}
    for i in range(n):
        vc[i] = square.entry(i + 1, i + 1)
    for i, j in comp.edges():
        ec[(i, j)] = square.entry(i + 1, j + 1)
    bip = _subdivision_graph_of(cent)
    lists: dict[tuple[int, int], set[int]] = {}
    for i in range(n):
        row = {square.entry(i + 1, j + 1) for j in range(n)}
        used = {vc[i]} | {square.entry(i + 1, j + 1) for j in comp.neighbors(i)}
        leftover = row - used
        for w in bip.neighbors(i):
            lists[(i, w)] = set(leftover)
    selected = list_edge_coloring_bipartite(bip, lists)
    assert selected.edge_colors is not None
    ec.update(selected.edge_colors)
    for w in range(n, cent.graph.n):
        a, b = cent.origin[w]  # type: ignore[misc]
        blocked = {
            ec[(min(a, w), max(a, w))],
            ec[(min(b, w), max(b, w))],
            vc[a],
            vc[b],
        }
        vc[w] = min(c for c in range(1, square_order + 1) if c not in blocked)
    for i in range(n):
        row = {square.entry(i + 1, j + 1) for j in range(n)}
        incident = [vc[i]]
        incident += [ec[(min(i, x), max(i, x))] for x in iter_bits(cent.graph.adj[i])]
        if len(set(incident)) != len(incident) or not set(incident) <= row:
            raise ConstructionDefectError(
                f"colors at original vertex {i} are not distinct entries of row {i + 1}"
            )
    return cent, tuple(vc), ec, square


def total_coloring_central_regular_odd(g: Graph) -> ConstructionResult:
    """Proper total coloring of the central graph of a connected regular
    graph of odd order, using exactly one more color than its max degree."""
    if not (g.is_connected() and g.is_regular() and g.n % 2 == 1 and g.n >= 5):
        raise NotApplicableError(
            "requires a connected regular graph of odd order at least 5"
        )
    cent, vc, ec, _ = _square_total_central(g, g.n)
    coloring = TotalColoring(vc, ec)
    if not is_proper(cent.graph, coloring, "total"):
        raise ConstructionDefectError("square-driven total coloring is not proper")
    bound = cent.graph.max_degree() + 1
    return ConstructionResult(
        cent.graph, coloring, len(coloring.palette()), bound, "4.5",
        ("square-driven total coloring",),
    )


def total_dist_coloring_central_regular(
    g: Graph, aut_caps: AutCaps = VERIFY_CAPS
) -> ConstructionResult:
    """Total distinguishing chromatic coloring of the central graph of a
    connected regular graph, one more color than the central max degree.

    Odd orders reuse the square-driven construction, whose idempotent
    diagonal makes all original vertices differently colored.  Even orders
    (non-complete) start from a total distinguishing coloring of the
    complement found by the oracle, add fresh colors on the subdivision
    edges, and fold any overflow color back into the complement's range.
    """
    if not (g.is_connected() and g.is_regular() and g.n >= 5):
        raise NotApplicableError(
            "requires a connected regular graph of order at least 5"
        )
    n = g.n
    cent_bound = n  # central max degree n-1, plus one
    if n % 2 == 1:
        base = total_coloring_central_regular_odd(g)
        coloring = base.coloring
        cent_graph = base.graph
        notes = base.notes + ("distinct diagonal pins every original vertex",)
    else:
        if g.is_complete():
            raise NotApplicableError("even-order complete graphs are excluded")
        comp = g.complement()
        comp_delta = comp.max_degree()
        res = exact_parameter(comp, "chi2D", cap=comp_delta + 2)
        if res.value is None or res.witness is None:
            raise NotApplicableError(
                "the complement has no total distinguishing coloring within "
                "two colors above its max degree, so this path does not apply"
            )
        f1 = res.witness
        assert f1.vertex_colors is not None and f1.edge_colors is not None
        cent = central(g)
        cent_graph = cent.graph
        bip = _subdivision_graph_of(cent)
        shifted = bipartite_edge_coloring(bip)
        assert shifted.edge_colors is not None
        ec = {(i, j): f1.edge_colors[(i, j)] for i, j in comp.edges()}
        for e, c in shifted.edge_colors.items():
            ec[e] = c + res.value
        vc = [0] * cent_graph.n
        for i in range(n):
            vc[i] = f1.vertex_colors[i]
        if res.value == comp_delta + 2:
            # The shifted palette peaks one past the target; every edge
            # wearing the overflow color moves into the complement's range.
            overflow = res.value + bip.max_degree()
            for e in sorted(e for e, c in ec.items() if c == overflow):
                u = min(e)
                blocked = {vc[u]} | {
                    f1.edge_colors[(min(u, x), max(u, x))] for x in comp.neighbors(u)
                }
                ec[e] = min(
                    c for c in range(1, comp_delta + 3) if c not in blocked
                )
        for w in range(n, cent_graph.n):
            a, b = cent.origin[w]  # type: ignore[misc]
            blocked = {
                ec[(min(a, w), max(a, w))],
                ec[(min(b, w), max(b, w))],
                vc[a],
                vc[b],
            }
            vc[w] = min(c for c in range(1, cent_bound + 1) if c not in blocked)
        coloring = TotalColoring(tuple(vc), ec)
        notes = ("complement coloring from the oracle, fresh subdivision colors",)
    if not is_proper(cent_graph, coloring, "total"):
        raise ConstructionDefectError("total coloring is not proper")
    if not is_distinguishing(cent_graph, coloring, "total", aut_caps):
        raise ConstructionDefectError(
            "total coloring is preserved by a nontrivial automorphism"
        )
    return ConstructionResult(
        cent_graph, coloring, len(coloring.palette()), cent_bound, "4.5", notes
    )


# --- total distinguishing colorings of subdivision graphs --------------------


def _path_pattern_total(s: Graph) -> TotalColoring:
    """Proper total 3-coloring of a path: walk the path and repeat 1,2,3 over
    the alternating vertex/edge sequence."""
    ends = [v for v in range(s.n) if s.degree(v) == 1]
    start = min(ends) if ends else 0
    order = [start]
    prev = -1
    while len(order) < s.n:
        nxt = [u for u in s.neighbors(order[-1]) if u != prev]
        prev = order[-1]
        order.append(nxt[0])
    vc = [0] * s.n
    ec: dict[tuple[int, int], int] = {}
    tick = 0
    for idx, v in enumerate(order):
        vc[v] = tick % 3 + 1
        tick += 1
        if idx + 1 < len(order):
            u = order[idx + 1]
            ec[(min(v, u), max(v, u))] = tick % 3 + 1
            tick += 1
    return TotalColoring(tuple(vc), ec)


def _complete_vertex_lists(
    s: Graph, ec: Mapping[tuple[int, int], int], palette: int
) -> tuple[int, ...] | None:
    """Lexicographically least proper completion of the vertex colors, or
    None when the fixed edge coloring admits no completion in the palette."""
    lists = []
    for v in range(s.n):
        banned = {ec[(min(v, u), max(v, u))] for u in s.neighbors(v)}
        lists.append([c for c in range(1, palette + 1) if c not in banned])
    vc = [0] * s.n

    def place(v: int) -> bool:
        if v == s.n:
            return True
        for c in lists[v]:
            if all(vc[u] != c for u in s.neighbors(v) if u < v):
                vc[v] = c
                if place(v + 1):
                    return True
        vc[v] = 0
        return False

    return tuple(vc) if place(0) else None


def total_dist_coloring_subdivision(
    g: Graph, aut_caps: AutCaps = VERIFY_CAPS
) -> ConstructionResult:
    """Total distinguishing chromatic coloring of the subdivision graph.

    When some vertex of the base graph is fixed by its whole automorphism
    group, one color past the subdivision max degree suffices; otherwise the
    smallest original vertex is recolored with a fresh color, which pins it
    and then the proper edge coloring pins everything else.
    """
    if g.n < 5 or not g.is_connected():
        raise NotApplicableError("requires a connected graph of order at least 5")
    sub = subdivision(g)
    s = sub.graph
    delta = s.max_degree()
    orbits = vertex_orbits(automorphisms(g), g.n)
    fixed = any(orbits.count(o) == 1 for o in set(orbits))
    if g.is_cycle():
        res = exact_parameter(s, "chi2D", cap=delta + 2, aut_caps=aut_caps)
        if res.value is None or res.witness is None:
            raise ConstructionDefectError(
                "no total distinguishing coloring of the subdivided cycle "
                "within two colors past its max degree"
            )
        coloring = res.witness
        bound = delta + 2
        notes = ("cycle case settled by bounded search",)
    else:
        if g.max_degree() == 2:
            # A non-cycle with max degree 2 is a path; the alternating edge
            # coloring admits no vertex completion there, so the path gets
            # its own explicit pattern.
            coloring = _path_pattern_total(s)
        else:
            edge_part = bipartite_edge_coloring(s)
            assert edge_part.edge_colors is not None
            vc = _complete_vertex_lists(s, edge_part.edge_colors, delta + 1)
            if vc is None:
                res = exact_parameter(s, "chi2", cap=delta + 1, aut_caps=aut_caps)
                if res.value is None or res.witness is None:
                    raise ConstructionDefectError(
                        "no proper total coloring within one color past the "
                        "subdivision max degree"
                    )
                coloring = res.witness
            else:
                coloring = TotalColoring(vc, dict(edge_part.edge_colors))
        if fixed:
            bound = delta + 1
            notes = ("a fixed base vertex makes any proper coloring distinguishing",)
        else:
            assert coloring.vertex_colors is not None
            vc2 = list(coloring.vertex_colors)
            vc2[0] = delta + 2
            coloring = TotalColoring(tuple(vc2), dict(coloring.edge_colors or {}))
            bound = delta + 2
            notes = ("vertex 0 recolored with a fresh color to break symmetry",)
    if not is_proper(s, coloring, "total"):
        raise ConstructionDefectError("subdivision total coloring is not proper")
    if not is_distinguishing(s, coloring, "total", aut_caps):
        raise ConstructionDefectError(
            "subdivision total coloring is preserved by a nontrivial automorphism"
        )
    return ConstructionResult(
        s, coloring, len(coloring.palette()), bound, "4.9", notes
    )


# --- AVD colorings ------------------------------------------------------------


def avd_coloring_central_regular(g: Graph) -> ConstructionResult:
    """AVD total coloring of the central graph of a connected regular graph:
    two extra colors past the central max degree for even orders, three for
    odd, driven by a larger square whose unused columns separate profiles."""
    if not (g.is_connected() and g.is_regular() and g.n >= 5):
        raise NotApplicableError(
            "requires a connected regular graph of order at least 5"
        )
    square_order = g.n + 1 if g.n % 2 == 0 else g.n + 2
    cent, vc, ec, _ = _square_total_central(g, square_order)
    coloring = TotalColoring(vc, ec)
    if not is_avd_total(cent.graph, coloring):
        raise ConstructionDefectError("square-driven coloring is not AVD")
    bound = cent.graph.max_degree() + (2 if g.n % 2 == 0 else 3)
    return ConstructionResult(
        cent.graph, coloring, len(coloring.palette()), bound, "5.1",
        ("unused square columns separate adjacent profiles",),
    )


def avd_coloring_subdivision(g: Graph) -> ConstructionResult:
    """AVD total coloring of the subdivision graph with one color past the
    base max degree, for base max degree at least 5."""
    delta = g.max_degree()
    if not g.is_connected():
        raise NotApplicableError("requires a connected graph")
    if delta < 5:
        raise NotApplicableError(
            "requires max degree at least 5; below that only the general "
            "two-extra-colors bound is available and no construction is provided"
        )
    sub = subdivision(g)
    s = sub.graph
    edge_part = bipartite_edge_coloring(s)
    ec = dict(edge_part.edge_colors or {})
    vc = [0] * s.n
    for v in range(g.n):
        vc[v] = delta + 1
    for w in range(g.n, s.n):
        a, b = sub.origin[w]  # type: ignore[misc]
        blocked = {delta + 1, ec[(min(a, w), max(a, w))], ec[(min(b, w), max(b, w))]}
        for end in (a, b):
            if g.degree(end) == 2:
                other = next(x for x in g.neighbors(end) if {end, x} != {a, b})
                w2 = sub.subdivided(end, other)
                blocked.add(ec[(min(end, w2), max(end, w2))])
        room = [c for c in range(1, delta + 2) if c not in blocked]
        if not room:
            raise ConstructionDefectError(
                f"no admissible color at subdivision vertex {w}"
            )
        vc[w] = room[0]
    coloring = TotalColoring(tuple(vc), ec)
    if not is_avd_total(s, coloring):
        raise ConstructionDefectError("subdivision coloring is not AVD")
    return ConstructionResult(
        s, coloring, len(coloring.palette()), delta + 1, "5.3",
        ("degree-two endpoints exclude their other subdivision edge",),
    )


def _canonical_palette(f: TotalColoring, shift: int = 0) -> TotalColoring:
    """Remap the palette onto 1..p order-preservingly, then shift."""
    colors = sorted(f.palette())
    remap = {c: i + 1 + shift for i, c in enumerate(colors)}
    vc = tuple(remap[c] for c in f.vertex_colors) if f.vertex_colors is not None else None
    ec = (
        {e: remap[c] for e, c in f.edge_colors.items()}
        if f.edge_colors is not None
        else None
    )
    return TotalColoring(vc, ec)


def _transfer_central_part(
    part: Graph,
    f: TotalColoring,
    vmap: Sequence[int],
    cent_join: TaggedGraph,
    vc: list[int],
    ec: dict[tuple[int, int], int],
) -> None:
    """Copy a total coloring of one part's central graph into the join's
    central graph through the vertex relabeling ``vmap``."""
    cpart = central(part)
    assert f.vertex_colors is not None and f.edge_colors is not None
    wmap: dict[int, int] = {}
    for w in range(part.n, cpart.graph.n):
        a, b = cpart.origin[w]  # type: ignore[misc]
        wmap[w] = cent_join.subdivided(vmap[a], vmap[b])
    for v in range(part.n):
        vc[vmap[v]] = f.vertex_colors[v]
    for w, target in wmap.items():
        vc[target] = f.vertex_colors[w]
    full = {v: vmap[v] for v in range(part.n)} | wmap
    for (x, y), c in f.edge_colors.items():
        a, b = full[x], full[y]
        ec[(min(a, b), max(a, b))] = c


def avd_coloring_central_join(
    g1: Graph, g2: Graph, c1: TotalColoring, c2: TotalColoring
) -> ConstructionResult:
    """AVD total coloring of the central graph of a join, melded from
    colorings of the two parts' central graphs.

    Distinct part orders take AVD colorings of both parts; equal orders only
    need proper total colorings, with two special diagonal rows of cross-edge
    colors doing the separating.
    """
    n1, n2 = g1.n, g2.n
    if n1 < 2 or n2 < 2:
        raise NotApplicableError("both parts must have at least 2 vertices")
    joined = join_graph(g1, g2)
    cent = central(joined)
    budget = n1 + n2 + 2
    cent1, cent2 = central(g1).graph, central(g2).graph
    if n1 == n2:
        n = n1
        for label, part, f in (("first", cent1, c1), ("second", cent2, c2)):
            if not is_proper(part, f, "total"):
                raise ValueError(f"{label} input is not a proper total coloring")
            if len(f.palette()) > n + 1:
                raise ValueError(
                    f"{label} input exceeds its palette budget of {n + 1} colors"
                )
        f1 = _canonical_palette(c2)
        f2 = _canonical_palette(c1, shift=n + 1)
    else:
        for label, part, f, cap in (
            ("first", cent1, c1, n1 + 2),
            ("second", cent2, c2, n2 + 2),
        ):
            if not is_avd_total(part, f):
                raise ValueError(f"{label} input is not an AVD total coloring")
            if len(f.palette()) > cap:
                raise ValueError(
                    f"{label} input exceeds its palette budget of {cap} colors"
                )
        f1 = _canonical_palette(c2)
        f2 = _canonical_palette(c1, shift=n2)
    vc = [0] * cent.graph.n
    ec: dict[tuple[int, int], int] = {}
    _transfer_central_part(g2, f1, [n1 + j for j in range(n2)], cent, vc, ec)
    _transfer_central_part(g1, f2, list(range(n1)), cent, vc, ec)
    for q in range(n1):
        for i in range(n2):
            u = n1 + i
            w = cent.subdivided(q, u)
            if n1 == n2:
                u_color = 2 * n1 + 2 if q == i else n1 + 1 + (q + 1)
                v_color = n1 + 1 if q == i else i + 1
            else:
                u_color = n2 + 2 + (q + 1)
                v_color = i + 1
            ec[(min(u, w), max(u, w))] = u_color
            ec[(min(q, w), max(q, w))] = v_color
    for q in range(n1):
        for i in range(n2):
            u = n1 + i
            w = cent.subdivided(q, u)
            blocked = {
                ec[(min(u, w), max(u, w))],
                ec[(min(q, w), max(q, w))],
                vc[u],
                vc[q],
            }
            vc[w] = min(c for c in range(1, budget + 1) if c not in blocked)
    coloring = TotalColoring(tuple(vc), ec)
    if n1 != n2:
        u_sets = {
            frozenset(
                ec[(min(n1 + i, cent.subdivided(q, n1 + i)), max(n1 + i, cent.subdivided(q, n1 + i)))]
                for q in range(n1)
            )
            for i in range(n2)
        }
        v_sets = {
            frozenset(
                ec[(min(q, cent.subdivided(q, n1 + i)), max(q, cent.subdivided(q, n1 + i)))]
                for i in range(n2)
            )
            for q in range(n1)
        }
        if len(u_sets) != 1 or len(v_sets) != 1:
            raise ConstructionDefectError(
                "cross-edge color sets differ between same-part vertices"
            )
    if not is_avd_total(cent.graph, coloring):
        raise ConstructionDefectError("join coloring is not AVD")
    return ConstructionResult(
        cent.graph, coloring, len(coloring.palette()), budget, "5.5",
        ("parts keep disjoint palettes; cross edges carry the index rows",),
    )


# --- total dominator colorings ------------------------------------------------


def tdc_central(g: Graph) -> TDCPartition:
    """Total dominator coloring of the central graph with one class per base
    vertex: singletons, one doubled class holding the last vertex with its
    smallest neighbor, and all subdivision vertices together."""
    n = g.n
    if n < 5 or not g.is_connected():
        raise NotApplicableError("requires a connected graph of order at least 5")
    if g.max_degree() > n - 3:
        raise NotApplicableError(
            "requires max degree at most order minus 3; high-degree trees "
            "have their own construction"
        )
    cent = central(g)
    k = min(g.neighbors(n - 1))
    classes = []
    for v in range(n - 1):
        classes.append(frozenset({v, n - 1}) if v == k else frozenset({v}))
    classes.append(frozenset(range(n, cent.graph.n)))
    partition = TDCPartition(tuple(classes))
    if not is_tdc(cent.graph, partition):
        raise ConstructionDefectError("central partition is not total dominating")
    return partition


def tdc_central_tree(t: Graph) -> TDCPartition:
    """Total dominator coloring of a tree's central graph within one class
    per vertex, with explicit layouts for stars and near-stars."""
    if not t.is_tree():
        raise NotApplicableError("requires a tree")
    n = t.n
    if n < 5:
        raise NotApplicableError("requires order at least 5")
    delta = t.max_degree()
    if delta <= n - 3:
        return tdc_central(t)
    cent = central(t)
    hub = max(range(n), key=t.degree)
    if delta == n - 1:
        # Star: the hub pairs with one leaf whose subdivision vertex then has
        # the pair as its exact neighborhood; the all-subdivision class
        # dominates the hub.
        leaves = [v for v in range(n) if v != hub]
        mate = max(leaves)
        classes = [frozenset({hub, mate})]
        classes += [frozenset({v}) for v in leaves if v != mate]
        classes.append(frozenset(range(n, cent.graph.n)))
    else:
        # Star plus one pendant hanging off a leaf.  The far pendant joins
        # the hub's subdivision vertices, its own subdivision vertex joins the
        # smallest plain leaf, and the carrying leaf keeps a singleton that
        # dominates both of them.
        dist, _ = t.bfs(hub)
        far = dist.index(2)
        carrier = next(iter(u for u in t.neighbors(far)))
        leaves = [v for v in t.neighbors(hub) if v != carrier]
        lead = min(leaves)
        spokes = [cent.subdivided(hub, u) for u in t.neighbors(hub)]
        w_far = cent.subdivided(carrier, far)
        classes = [frozenset({hub})]
        classes.append(frozenset({lead, w_far}))
        classes += [frozenset({v}) for v in sorted(leaves) if v != lead]
        classes.append(frozenset({far, *spokes}))
        classes.append(frozenset({carrier}))
    partition = TDCPartition(tuple(classes))
    if len(partition.classes) > n:
        raise ConstructionDefectError("tree partition exceeds one class per vertex")
    if not is_tdc(cent.graph, partition):
        raise ConstructionDefectError("tree partition is not total dominating")
    return partition


def tdc_to_complement(f: TDCPartition, g: Graph) -> TDCPartition:
    """Push a total dominator coloring of the central graph down to the
    complement by deleting the subdivision vertices, repairing any original
    vertex that was dominated only by all-subdivision classes."""
    n = g.n
    if n < 5 or not g.is_connected():
        raise NotApplicableError("requires a connected graph of order at least 5")
    if g.max_degree() > n - 3:
        raise NotApplicableError("requires max degree at most order minus 3")
    cent = central(g)
    if not is_tdc(cent.graph, f):
        raise ValueError("input is not a total dominator coloring of the central graph")
    comp = g.complement()
    work = [set(cls) & set(range(n)) for cls in f.classes]

    def dominated(v: int) -> bool:
        return any(
            cls and all(comp.adj[v] >> u & 1 for u in cls) for cls in work
        )

    for v in range(n):
        if dominated(v):
            continue
        mate = None
        for u in sorted(iter_bits(comp.adj[v])):
            cls_idx = next(i for i, cls in enumerate(work) if u in cls)
            if len(work[cls_idx]) >= 2:
                mate = (u, cls_idx)
                break
        empty = next((i for i, cls in enumerate(work) if not cls), None)
        if mate is None or empty is None:
            raise ConstructionDefectError(
                f"vertex {v} cannot be re-dominated within the class budget"
            )
        work[empty] = {mate[0]}
        work[mate[1]].discard(mate[0])
    classes = tuple(frozenset(cls) for cls in work if cls)
    if len(classes) > len(f.classes):
        raise ConstructionDefectError("repair increased the class count")
    partition = TDCPartition(classes)
    if not is_tdc(comp, partition):
        raise ConstructionDefectError("complement partition is not total dominating")
    return partition
