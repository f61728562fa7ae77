"""Exhaustive search oracles for the coloring parameters.

Ground truth at desk scale. Each parameter is computed by canonical
backtracking over colorings: a new color may appear only after all smaller
colors have appeared, which collapses color permutations without affecting
minima. Witnesses are the first solutions in a fixed deterministic branch
order (lowest color first for the proper kinds, newest color first for the
unconstrained distinguishing kinds), so they are reproducible run to run.
Searches accept a node budget and an optional worker count; neither the
computed value nor the witness depends on the worker count.

Parameter kinds:

====== ==========================================================
D      distinguishing number (vertex colorings, not proper)
Dp     distinguishing index (edge colorings, not proper)
Dpp    total distinguishing number (total colorings, not proper)
chi2   total chromatic number
chi2D  total distinguishing chromatic number (proper + distinguishing)
chi2a  adjacent-vertex-distinguishing total chromatic number
chitd  total dominator chromatic number (proper vertex coloring where
       every vertex is adjacent to all of some color class)
====== ==========================================================
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .autos import DEFAULT_CAPS, AutCaps, automorphisms
from .colorings import TDCPartition, TotalColoring, coloring_to_json
from .errors import BudgetExceededError, NotApplicableError
from .graphs import Graph

__all__ = [
    "PARAM_KINDS",
    "DEFAULT_BUDGET",
    "OracleResult",
    "exact_parameter",
    "lower_bound_certificate",
    "upper_bound_witness",
]

PARAM_KINDS = ("D", "Dp", "Dpp", "chi2", "chi2D", "chi2a", "chitd")
DEFAULT_BUDGET = 10**9
_PREFIX_TARGET = 256
_MAX_PREFIX_DEPTH = 12

_DISTINGUISHING = frozenset({"D", "Dp", "Dpp", "chi2D"})
_SAT = "sat"
_UNSAT = "unsat"
_BUDGET = "budget"
_COLLECT = "collect"


class _BudgetHit(Exception):
    pass


@dataclass(frozen=True)
class OracleResult:
    """Outcome of an exact parameter search.

    ``value`` is None when every level up to the cap was refuted. The
    witness uses exactly ``value`` colors and passes the matching verifier;
    every smaller level was refuted by exhausted search.
    """

    kind: str
    value: int | None
    witness: TotalColoring | TDCPartition | None
    nodes: int
    seconds: float

    def to_json(self, g: Graph) -> dict:
        if self.witness is None:
            wit = None
        elif isinstance(self.witness, TDCPartition):
            wit = self.witness.to_json()
        else:
            wit = coloring_to_json(g, self.witness)
        return {
            "kind": self.kind,
            "value": self.value,
            "witness": wit,
            "nodes": self.nodes,
            "seconds": round(self.seconds, 3),
        }


def _resolve_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    return int(os.environ.get("SYMCOL_BUDGET", DEFAULT_BUDGET))


class _Search:
    """One (graph, kind, level) satisfiability problem."""

    def __init__(self, g: Graph, kind: str, level: int, aut_caps: AutCaps = DEFAULT_CAPS):
        self.g = g
        self.kind = kind
        self.level = level
        n = g.n
        edges = g.edges()
        m = len(edges)
        self.n, self.m = n, m
        self.edges_list = edges

        if kind in ("D", "chitd", "chi"):
            universe = list(range(n))
        elif kind == "Dp":
            universe = list(range(n, n + m))
        else:
            universe = list(range(n + m))
        self.universe = universe

        # Conflict lists over global element ids (vertex v is id v, edge k
        # is id n+k); only proper kinds consult them.
        conflicts: list[tuple[int, ...]] = [()] * (n + m)
        if kind in ("chi", "chitd"):
            for v in range(n):
                conflicts[v] = tuple(g.neighbors(v))
        elif kind in ("chi2", "chi2D", "chi2a"):
            incident: list[list[int]] = [[] for _ in range(n)]
            for k, (u, v) in enumerate(edges):
                incident[u].append(n + k)
                incident[v].append(n + k)
            for v in range(n):
                conflicts[v] = tuple(g.neighbors(v)) + tuple(incident[v])
            for k, (u, v) in enumerate(edges):
                around = [e for e in incident[u] + incident[v] if e != n + k]
                conflicts[n + k] = (u, v) + tuple(around)
            self.incident = [tuple(incident[v]) for v in range(n)]
        self.conflicts = conflicts

        self.perm_pairs: list[tuple[tuple[int, ...], tuple[int, ...]]] | None = None
        if kind in _DISTINGUISHING:
            group = automorphisms(g, aut_caps)
            eidx = g.edge_index()
            pairs = []
            for phi in group:
                if all(phi[v] == v for v in range(n)):
                    continue
                elem = list(range(n + m))
                for v in range(n):
                    elem[v] = phi[v]
                for k, (u, v) in enumerate(edges):
                    a, b = phi[u], phi[v]
                    if a > b:
                        a, b = b, a
                    elem[n + k] = n + eidx[(a, b)]
                inv = [0] * (n + m)
                for i, j in enumerate(elem):
                    inv[j] = i
                pairs.append((tuple(elem), tuple(inv)))
            for elem, _ in pairs:
                if all(elem[e] == e for e in universe):
                    raise NotApplicableError(
                        f"{kind}: a nontrivial symmetry fixes every colorable "
                        "element, so no coloring can break it"
                    )
            self.perm_pairs = pairs

        # For the unconstrained distinguishing kinds every color is always
        # legal, so a lowest-color-first descent walks an all-1s path that
        # breaks no symmetry and the search drowns in monochromatic subtrees
        # when the universe is large.  Branching on the newest color first
        # makes the leftmost path color-diverse, which empties the live list
        # almost immediately on satisfiable levels.
        self.newest_first = kind in ("D", "Dp", "Dpp")

        if kind in ("D", "Dp", "Dpp"):
            order = self._orbit_order()
        elif kind == "chi2a":
            order = self._avd_order()
        elif kind in ("chi2", "chi2D"):
            order = self._conflict_order()
        else:
            order = sorted(universe, key=lambda v: (-g.degree(v), v))
        self.order = order
        self.N = len(order)

        if kind == "chi2a":
            pos = {e: p for p, e in enumerate(order)}
            self.close_pos = [0] * n
            self.closing: list[list[int]] = [[] for _ in range(self.N)]
            for v in range(n):
                self.close_pos[v] = max(pos[e] for e in (v, *self.incident[v]))
                self.closing[self.close_pos[v]].append(v)
            self.same_deg_nbrs = [
                tuple(u for u in g.neighbors(v) if g.degree(u) == g.degree(v))
                for v in range(n)
            ]

        if kind == "chitd":
            if any(g.degree(v) == 0 for v in range(n)):
                raise NotApplicableError(
                    "total domination is impossible with an isolated vertex"
                )
            self.non_nbrs = [
                tuple(u for u in range(n) if not g.has_edge(v, u)) for v in range(n)
            ]

    def _orbit_order(self) -> list[int]:
        size = self.n + self.m
        parent = list(range(size))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for elem, _ in self.perm_pairs or ():
            for e in self.universe:
                ra, rb = find(e), find(elem[e])
                if ra != rb:
                    parent[rb] = ra
        counts: dict[int, int] = {}
        for e in self.universe:
            counts[find(e)] = counts.get(find(e), 0) + 1
        return sorted(self.universe, key=lambda e: (-counts[find(e)], e))

    def _conflict_order(self) -> list[int]:
        return sorted(self.universe, key=lambda e: (-len(self.conflicts[e]), e))

    def _avd_order(self) -> list[int]:
        # Seed with an adjacent same-degree pair of highest degree: their
        # profiles close earliest, which is where AVD refutations live.
        g = self.g
        best = None
        for u, v in self.edges_list:
            if g.degree(u) == g.degree(v):
                key = (g.degree(u), -u, -v)
                if best is None or key > best[0]:
                    best = (key, u, v)
        base = self._conflict_order()
        if best is None:
            return base
        _, u, v = best
        head = [u, v]
        for e in self.universe:
            if e >= self.n:
                a, b = self.edges_list[e - self.n]
                if a in (u, v) or b in (u, v):
                    head.append(e)
        seen = set(head)
        return head + [e for e in base if e not in seen]

    # -- the DFS -----------------------------------------------------------

    def run(
        self, budget: int, prefix: tuple[int, ...] = (), stop_depth: int | None = None
    ) -> tuple[str, object, int]:
        """Search this level.

        Returns (status, data, nodes): data is the full assignment tuple on
        SAT, the list of depth-``stop_depth`` prefixes in collection mode,
        and None otherwise.
        """
        self.f = [0] * (self.n + self.m)
        self.maxused = 0
        self.nodes = 0
        self.budget = budget
        self.prefix = tuple(prefix)
        self.stop_depth = stop_depth
        self.collected: list[tuple[int, ...]] | None = (
            [] if stop_depth is not None else None
        )
        if self.kind == "chitd":
            self.poison = [0] * self.n
        live = list(self.perm_pairs) if self.perm_pairs is not None else []
        try:
            sat = self._dfs(0, live)
        except _BudgetHit:
            return (_BUDGET, None, self.nodes)
        if sat:
            return (_SAT, tuple(self.f), self.nodes)
        if self.collected is not None:
            return (_COLLECT, self.collected, self.nodes)
        return (_UNSAT, None, self.nodes)

    def _dfs(self, p: int, live: list) -> bool:
        if p == self.stop_depth:
            assert self.collected is not None
            self.collected.append(tuple(self.f[self.order[q]] for q in range(p)))
            return False
        if p == self.N:
            return self._leaf_ok(live)
        e = self.order[p]
        forced = self.prefix[p] if p < len(self.prefix) else 0
        limit = min(self.level, self.maxused + 1)
        banned = 0
        for h in self.conflicts[e]:
            c = self.f[h]
            if c:
                banned |= 1 << c
        colors = range(limit, 0, -1) if self.newest_first else range(1, limit + 1)
        for c in colors:
            if forced and c != forced:
                continue
            if banned >> c & 1:
                continue
            self.nodes += 1
            if self.nodes > self.budget:
                raise _BudgetHit()
            prev_max = self.maxused
            self.f[e] = c
            if c > prev_max:
                self.maxused = c
            ok = True
            trail: list[tuple[int, int]] = []
            if self.kind == "chitd":
                ok = self._poison_place(e, c, trail)
            elif self.kind == "chi2a":
                ok = self._closure_ok(p)
            new_live = live
            if ok and self.perm_pairs is not None:
                new_live = []
                for pair in live:
                    cj = self.f[pair[0][e]]
                    if cj and cj != c:
                        continue
                    ck = self.f[pair[1][e]]
                    if ck and ck != c:
                        continue
                    new_live.append(pair)
                if not new_live and self.kind in ("D", "Dp", "Dpp"):
                    # No symmetry survives, so every completion succeeds.
                    # Take the one the branch order would reach first: any
                    # still-forced positions keep their assigned color, the
                    # rest greedily take the newest color available.
                    if self.stop_depth is None:
                        for q in range(p + 1, self.N):
                            if q < len(self.prefix):
                                fq = self.prefix[q]
                            else:
                                fq = min(self.level, self.maxused + 1)
                            self.f[self.order[q]] = fq
                            if fq > self.maxused:
                                self.maxused = fq
                        return True
            if ok and self._dfs(p + 1, new_live):
                return True
            for v, bit in trail:
                self.poison[v] ^= bit
            self.f[e] = 0
            self.maxused = prev_max
        return False

    def _poison_place(self, v: int, c: int, trail: list[tuple[int, int]]) -> bool:
        bit = 1 << (c - 1)
        full = (1 << self.level) - 1
        alive = True
        for u in self.non_nbrs[v]:
            if not self.poison[u] & bit:
                self.poison[u] |= bit
                trail.append((u, bit))
                if self.poison[u] == full:
                    alive = False
        return alive

    def _closure_ok(self, p: int) -> bool:
        for v in self.closing[p]:
            prof = self._profile(v)
            for u in self.same_deg_nbrs[v]:
                if self.close_pos[u] <= p and self._profile(u) == prof:
                    return False
        return True

    def _profile(self, v: int) -> int:
        s = 1 << self.f[v]
        for e in self.incident[v]:
            s |= 1 << self.f[e]
        return s

    def _leaf_ok(self, live: list) -> bool:
        if self.kind == "chitd":
            used = (1 << self.maxused) - 1
            return all(used & ~self.poison[v] for v in range(self.n))
        if self.perm_pairs is not None:
            return not live
        return True


def _witness_from(g: Graph, kind: str, assignment: tuple[int, ...]):
    n = g.n
    edges = g.edges()
    if kind == "chitd":
        classes: dict[int, set[int]] = {}
        for v in range(n):
            classes.setdefault(assignment[v], set()).add(v)
        return TDCPartition(
            tuple(frozenset(classes[c]) for c in sorted(classes))
        )
    vertex_part = tuple(assignment[:n])
    edge_part = {edges[k]: assignment[n + k] for k in range(len(edges))}
    if kind == "D":
        return TotalColoring(vertex_part, None)
    if kind == "Dp":
        return TotalColoring(None, edge_part)
    return TotalColoring(vertex_part, edge_part)


def _worker_run(args):
    n, adj, kind, level, prefix, budget, caps = args
    search = _Search(Graph(n, adj), kind, level, caps)
    return search.run(budget, prefix=prefix)


def _run_level(
    g: Graph,
    kind: str,
    level: int,
    caps: AutCaps,
    budget: int,
    pool: ProcessPoolExecutor | None,
) -> tuple[str, object, int]:
    search = _Search(g, kind, level, caps)
    if pool is None or search.N <= 1:
        return search.run(budget)

    # Slice the canonical tree into prefixes and fan them out. The slices
    # partition the sequential tree, so the first satisfiable slice holds
    # the same witness the sequential search would return.
    nodes = 0
    prefixes: list[tuple[int, ...]] = [()]
    depth = 0
    while depth + 1 < search.N and depth < _MAX_PREFIX_DEPTH:
        depth += 1
        status, data, used = search.run(budget, stop_depth=depth)
        nodes += used
        if status == _SAT:
            return (_SAT, data, nodes)
        if status == _BUDGET:
            return (_BUDGET, None, nodes)
        assert status == _COLLECT
        prefixes = data  # type: ignore[assignment]
        if not prefixes or len(prefixes) >= _PREFIX_TARGET:
            break
    if not prefixes:
        return (_UNSAT, None, nodes)

    per_budget = max(budget // len(prefixes), 1000)
    futures = [
        pool.submit(_worker_run, (g.n, g.adj, kind, level, pfx, per_budget, caps))
        for pfx in prefixes
    ]
    sat_data = None
    budget_hit = False
    try:
        for fut in futures:
            status, data, used = fut.result()
            nodes += used
            if status == _BUDGET:
                budget_hit = True
            elif status == _SAT:
                sat_data = data
                break
    finally:
        for fut in futures:
            fut.cancel()
    if budget_hit:
        # Either no witness was found, or a slice before the witness was cut
        # short, which would make the reported witness unreproducible.
        return (_BUDGET, None, nodes)
    if sat_data is not None:
        return (_SAT, sat_data, nodes)
    return (_UNSAT, None, nodes)


def _chromatic_number(g: Graph, budget: int) -> int:
    for level in range(1, g.n + 1):
        status, _, _ = _Search(g, "chi", level).run(budget)
        if status == _SAT:
            return level
        if status == _BUDGET:
            raise BudgetExceededError(
                f"node budget exhausted computing the chromatic number at {level} colors",
                nodes=budget,
            )
    return g.n


def _lower_bound(g: Graph, kind: str, budget: int) -> int:
    if kind in ("chi2", "chi2D", "chi2a"):
        return g.max_degree() + 1
    if kind == "chitd":
        return max(2, _chromatic_number(g, budget))
    return 1


def _default_cap(g: Graph, kind: str) -> int:
    if kind in ("D", "chitd"):
        return g.n
    if kind == "Dp":
        return max(g.edge_count(), 1)
    return g.n + g.edge_count()


def exact_parameter(
    g: Graph,
    kind: str,
    cap: int | None = None,
    *,
    budget: int | None = None,
    workers: int = 1,
    aut_caps: AutCaps = DEFAULT_CAPS,
) -> OracleResult:
    """Compute a coloring parameter exactly, with a witness.

    Tries each level from a sound lower bound up to ``cap`` (default: the
    trivial all-distinct bound) and returns at the first satisfiable one.
    ``value`` is None if every level up to the cap was refuted. Raises
    BudgetExceededError when the node budget runs out first.
    """
    if kind not in PARAM_KINDS:
        raise ValueError(f"unknown parameter kind {kind!r}")
    start = time.perf_counter()
    remaining = _resolve_budget(budget)
    if cap is None:
        cap = _default_cap(g, kind)
    total_nodes = 0
    lb = _lower_bound(g, kind, remaining)
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for level in range(lb, cap + 1):
            status, data, nodes = _run_level(g, kind, level, aut_caps, remaining, pool)
            total_nodes += nodes
            remaining -= nodes
            if status == _SAT:
                witness = _witness_from(g, kind, data)
                return OracleResult(
                    kind, level, witness, total_nodes, time.perf_counter() - start
                )
            if status == _BUDGET:
                raise BudgetExceededError(
                    f"node budget exhausted searching {kind} at {level} colors; "
                    f"all levels below {level} are refuted",
                    nodes=total_nodes,
                )
    finally:
        if pool is not None:
            pool.shutdown(wait=True, cancel_futures=True)
    return OracleResult(kind, None, None, total_nodes, time.perf_counter() - start)


def lower_bound_certificate(
    g: Graph,
    kind: str,
    value: int,
    *,
    budget: int | None = None,
    workers: int = 1,
    aut_caps: AutCaps = DEFAULT_CAPS,
) -> bool:
    """True iff exhaustive search refutes every coloring with value-1 colors."""
    if kind not in PARAM_KINDS:
        raise ValueError(f"unknown parameter kind {kind!r}")
    level = value - 1
    if level < 1:
        return True
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        status, _, nodes = _run_level(
            g, kind, level, aut_caps, _resolve_budget(budget), pool
        )
    finally:
        if pool is not None:
            pool.shutdown(wait=True, cancel_futures=True)
    if status == _BUDGET:
        raise BudgetExceededError(
            f"node budget exhausted refuting {kind} at {level} colors", nodes=nodes
        )
    return status == _UNSAT


def upper_bound_witness(
    g: Graph,
    kind: str,
    value: int,
    *,
    budget: int | None = None,
    workers: int = 1,
    aut_caps: AutCaps = DEFAULT_CAPS,
):
    """A witness coloring with at most ``value`` colors, or None.

    Satisfiability check at one level, for bound verification without the
    cost of refuting smaller levels first.
    """
    if kind not in PARAM_KINDS:
        raise ValueError(f"unknown parameter kind {kind!r}")
    if value < 1:
        return None
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        status, data, nodes = _run_level(
            g, kind, value, aut_caps, _resolve_budget(budget), pool
        )
    finally:
        if pool is not None:
            pool.shutdown(wait=True, cancel_futures=True)
    if status == _BUDGET:
        raise BudgetExceededError(
            f"node budget exhausted searching {kind} at {value} colors", nodes=nodes
        )
    if status == _SAT:
        return _witness_from(g, kind, data)
    return None
