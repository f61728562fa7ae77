"""Exact automorphism enumeration, isomorphism search, and lifting maps.

The engine is classic individualization-refinement: vertices start colored by
degree, colors are refined by sorted neighbor-color profiles until stable, and
a smallest non-singleton class is split by trying every target vertex.  Colors
are assigned by ranking profile keys, so they are comparable across the two
graphs of an isomorphism search.  Every complete leaf is adjacency-checked, so
refinement only prunes, it never decides.

Groups are enumerated in full (the distinguishing verifiers quantify over all
automorphisms), deterministically sorted, and memoized per graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import BudgetExceededError
from .graphs import Graph, iter_bits
from .transforms import central, endline, line_graph, middle, subdivision

__all__ = [
    "Permutation",
    "AutCaps",
    "AutGroup",
    "DEFAULT_CAPS",
    "automorphisms",
    "find_isomorphism",
    "is_automorphism",
    "compose",
    "invert",
    "vertex_orbits",
    "lift_to_central",
    "lift_to_endline",
    "AutChainReport",
    "check_aut_chain",
]

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class AutCaps:
    """Resource guards for group enumeration."""

    max_vertices: int = 24
    max_group_order: int = 10_000_000


DEFAULT_CAPS = AutCaps()


@dataclass(frozen=True)
class AutGroup:
    elements: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def nontrivial(self) -> list[Permutation]:
        identity = tuple(range(len(self.elements[0]))) if self.elements else ()
        return [p for p in self.elements if p != identity]


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation applying q first, then p."""
    return tuple(p[q[v]] for v in range(len(p)))


def invert(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for v, image in enumerate(p):
        out[image] = v
    return tuple(out)


def is_automorphism(g: Graph, perm: Permutation) -> bool:
    if sorted(perm) != list(range(g.n)):
        return False
    for v in range(g.n):
        for u in iter_bits(g.adj[v]):
            if not g.adj[perm[v]] >> perm[u] & 1:
                return False
    return True


def _refine(
    nbrs_g: list[list[int]],
    nbrs_h: list[list[int]],
    cg: list[int],
    ch: list[int],
) -> tuple[list[int], list[int]] | None:
    """Refine both colorings to a joint stable partition.

    Returns None as soon as the color multisets diverge (no isomorphism can
    respect the current partition).
    """
    while True:
        keys_g = [(cg[v], *sorted(cg[u] for u in nbrs_g[v])) for v in range(len(cg))]
        keys_h = [(ch[v], *sorted(ch[u] for u in nbrs_h[v])) for v in range(len(ch))]
        rank = {key: i for i, key in enumerate(sorted(set(keys_g) | set(keys_h)))}
        ng = [rank[k] for k in keys_g]
        nh = [rank[k] for k in keys_h]
        if sorted(ng) != sorted(nh):
            return None
        if ng == cg and nh == ch:
            return cg, ch
        cg, ch = ng, nh


def _isomorphisms(g: Graph, h: Graph) -> Iterator[Permutation]:
    """All isomorphisms g -> h, in deterministic search order."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return
    if g.n == 0:
        yield ()
        return
    n = g.n
    nbrs_g = [list(iter_bits(m)) for m in g.adj]
    nbrs_h = [list(iter_bits(m)) for m in h.adj]

    def walk(cg: list[int], ch: list[int]) -> Iterator[Permutation]:
        refined = _refine(nbrs_g, nbrs_h, cg, ch)
        if refined is None:
            return
        cg, ch = refined
        # Find the smallest class with more than one g-vertex.
        size: dict[int, int] = {}
        for c in cg:
            size[c] = size.get(c, 0) + 1
        split = min(
            ((sz, c) for c, sz in size.items() if sz > 1),
            default=None,
        )
        if split is None:
            # Everything is singleton on both sides: read off the bijection.
            where_h = {c: v for v, c in enumerate(ch)}
            perm = tuple(where_h[c] for c in cg)
            for v in range(n):
                for u in nbrs_g[v]:
                    if not h.adj[perm[v]] >> perm[u] & 1:
                        return
            yield perm
            return
        c = split[1]
        v = cg.index(c)
        for u in (x for x in range(n) if ch[x] == c):
            cg2 = cg.copy()
            ch2 = ch.copy()
            cg2[v] = n
            ch2[u] = n
            yield from walk(cg2, ch2)

    yield from walk([0] * n, [0] * n)


_aut_cache: dict[Graph, AutGroup] = {}


def automorphisms(g: Graph, caps: AutCaps = DEFAULT_CAPS) -> AutGroup:
    """The full automorphism group, sorted lexicographically by image array."""
    if g.n > caps.max_vertices:
        raise BudgetExceededError(
            f"graph order {g.n} exceeds the {caps.max_vertices}-vertex enumeration cap"
        )
    cached = _aut_cache.get(g)
    if cached is None:
        elements = []
        for perm in _isomorphisms(g, g):
            elements.append(perm)
            if len(elements) > caps.max_group_order:
                raise BudgetExceededError(
                    f"group order exceeds the cap of {caps.max_group_order}"
                )
        cached = AutGroup(tuple(sorted(elements)))
        _aut_cache[g] = cached
    if cached.order > caps.max_group_order:
        raise BudgetExceededError(f"group order exceeds the cap of {caps.max_group_order}")
    return cached


def find_isomorphism(g: Graph, h: Graph, caps: AutCaps = DEFAULT_CAPS) -> Permutation | None:
    if max(g.n, h.n) > caps.max_vertices:
        raise BudgetExceededError(
            f"graph order {max(g.n, h.n)} exceeds the {caps.max_vertices}-vertex enumeration cap"
        )
    for perm in _isomorphisms(g, h):
        return perm
    return None


def vertex_orbits(group: AutGroup, n: int) -> list[int]:
    """Orbit id per vertex (ids are the minimum vertex of each orbit)."""
    root = list(range(n))

    def find(x: int) -> int:
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for perm in group:
        for v in range(n):
            a, b = find(v), find(perm[v])
            if a != b:
                root[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


# --- lifting maps -----------------------------------------------------------


def lift_to_central(alpha: Permutation, g: Graph) -> Permutation:
    """Extend alpha in Aut(G) to the central graph: w_{x,y} maps to w_{ax,ay}."""
    return _lift_subdividing(alpha, g)


def _lift_subdividing(alpha: Permutation, g: Graph) -> Permutation:
    if not is_automorphism(g, alpha):
        raise ValueError("alpha is not an automorphism of the base graph")
    index = g.edge_index()
    image = list(alpha)
    for u, v in g.edges():
        a, b = alpha[u], alpha[v]
        if a > b:
            a, b = b, a
        image.append(g.n + index[(a, b)])
    return tuple(image)


def lift_to_endline(alpha: Permutation, g: Graph) -> Permutation:
    """Extend alpha in Aut(G) to the endline graph: pendant of v follows v."""
    if not is_automorphism(g, alpha):
        raise ValueError("alpha is not an automorphism of the base graph")
    return tuple(alpha) + tuple(g.n + alpha[v] for v in range(g.n))


# --- the group-order chain --------------------------------------------------


@dataclass
class AutChainReport:
    graph6: str
    applicable: bool
    reason: str | None
    base_order: int | None = None
    line_order: int | None = None
    subdivision_order: int | None = None
    central_order: int | None = None
    middle_order: int | None = None
    endline_order: int | None = None
    all_equal: bool = False
    lifts_exhaust: bool = False

    @property
    def passed(self) -> bool:
        return self.applicable and self.all_equal and self.lifts_exhaust

    def to_json(self) -> dict:
        return {
            "graph6": self.graph6,
            "applicable": self.applicable,
            "reason": self.reason,
            "orders": {
                "base": self.base_order,
                "line": self.line_order,
                "subdivision": self.subdivision_order,
                "central": self.central_order,
                "middle": self.middle_order,
                "endline": self.endline_order,
            },
            "all_equal": self.all_equal,
            "lifts_exhaust": self.lifts_exhaust,
            "passed": self.passed,
        }


def check_aut_chain(g: Graph, caps: AutCaps = DEFAULT_CAPS) -> AutChainReport:
    """Compare the group orders of G, L(G), S(G), C(G), M(G), and G+.

    Applicable to connected non-cycle graphs of order at least 5; for those
    the six orders must agree and the two lift maps must exhaust the groups
    they land in.
    """
    from .graphs import encode_graph6

    g6 = encode_graph6(g) if 1 <= g.n <= 62 else f"<order {g.n}>"
    if not g.is_connected():
        return AutChainReport(g6, False, "graph is disconnected")
    if g.n < 5:
        return AutChainReport(g6, False, "order below 5")
    if g.is_cycle():
        return AutChainReport(g6, False, "cycles are excluded")

    base = automorphisms(g, caps)
    line, _ = line_graph(g)
    cent = central(g)
    plus = endline(g)
    report = AutChainReport(
        g6,
        True,
        None,
        base_order=base.order,
        line_order=automorphisms(line, caps).order,
        subdivision_order=automorphisms(subdivision(g).graph, caps).order,
        central_order=automorphisms(cent.graph, caps).order,
        middle_order=automorphisms(middle(g).graph, caps).order,
        endline_order=automorphisms(plus.graph, caps).order,
    )
    orders = {
        report.line_order,
        report.subdivision_order,
        report.central_order,
        report.middle_order,
        report.endline_order,
    }
    report.all_equal = orders == {report.base_order}

    central_lifts = {lift_to_central(a, g) for a in base}
    endline_lifts = {lift_to_endline(a, g) for a in base}
    report.lifts_exhaust = (
        len(central_lifts) == base.order == report.central_order
        and all(is_automorphism(cent.graph, p) for p in central_lifts)
        and len(endline_lifts) == base.order == report.endline_order
        and all(is_automorphism(plus.graph, p) for p in endline_lifts)
    )
    return report
