"""Constructions: promised bounds, internal verification, and precondition sweeps."""

from __future__ import annotations

import pytest

from symcol.autos import automorphisms
from symcol.colorings import TotalColoring, is_avd_total, is_proper, is_tdc
from symcol.constructive import (
    BfsFrame,
    ConstructionResult,
    avd_coloring_central_join,
    avd_coloring_central_regular,
    avd_coloring_subdivision,
    bipartite_edge_coloring,
    dist_edge_coloring_central,
    dist_edge_coloring_endline,
    dist_vertex_coloring_central,
    dist_vertex_coloring_middle,
    join_graph,
    list_edge_coloring_bipartite,
    tdc_central,
    tdc_central_tree,
    tdc_to_complement,
    total_coloring_central_regular_odd,
    total_dist_coloring_central_regular,
    total_dist_coloring_subdivision,
)
from symcol.errors import ConstructionDefectError, NotApplicableError
from symcol.families import all_trees, connected_graphs, regular_graphs
from symcol.graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    star_graph,
)
from symcol.oracles import exact_parameter
from symcol.transforms import central, subdivision


@pytest.fixture(scope="module")
def connected8() -> list[Graph]:
    return list(connected_graphs(8))


def _broom(total: int, hub_degree: int) -> Graph:
    """Star with ``hub_degree`` leaves, one leaf extended into a path."""
    edges = [(0, i) for i in range(1, hub_degree + 1)]
    edges += [(i, i + 1) for i in range(hub_degree, total - 1)]
    return Graph.from_edges(total, edges)


def test_bipartite_edge_coloring_uses_exactly_max_degree():
    cases = [
        (complete_bipartite(3, 3), 3),
        (path_graph(4), 2),
        (subdivision(complete_graph(4)).graph, 3),
    ]
    for g, k in cases:
        f = bipartite_edge_coloring(g)
        assert is_proper(g, f, "edge")
        assert len(f.palette()) == k == g.max_degree()
    for t in all_trees(6) + all_trees(7):
        f = bipartite_edge_coloring(t)
        assert is_proper(t, f, "edge")
        assert len(f.palette()) == t.max_degree()
    with pytest.raises(NotApplicableError):
        bipartite_edge_coloring(complete_graph(3))


def test_list_edge_coloring_respects_lists():
    g = cycle_graph(4)
    lists = {(0, 1): {1, 2}, (1, 2): {2, 3}, (2, 3): {3, 4}, (0, 3): {4, 1}}
    f = list_edge_coloring_bipartite(g, lists)
    assert is_proper(g, f, "edge")
    for e, allowed in lists.items():
        assert f.edge(*e) in allowed
    # Identical lists reduce to a plain proper coloring within max degree.
    h = complete_bipartite(3, 4)
    same = {e: set(range(1, 5)) for e in h.edges()}
    f2 = list_edge_coloring_bipartite(h, same)
    assert is_proper(h, f2, "edge")
    assert f2.palette() <= set(range(1, 5))
    with pytest.raises(ValueError):
        list_edge_coloring_bipartite(g, {e: {1} for e in g.edges()})
    with pytest.raises(NotApplicableError):
        list_edge_coloring_bipartite(complete_graph(3), {})


def test_central_edge_coloring_golden_witnesses():
    # The complete/cycle case is settled by bounded search; the found
    # colorings are deterministic, so they are frozen here.
    goldens = {
        complete_graph(4): {
            (0, 4): 1, (0, 5): 2, (0, 7): 2, (1, 4): 2, (1, 6): 2, (1, 8): 2,
            (2, 5): 2, (2, 6): 2, (2, 9): 2, (3, 7): 2, (3, 8): 1, (3, 9): 1,
        },
        cycle_graph(4): {
            (0, 2): 2, (0, 4): 1, (0, 6): 2, (1, 3): 2, (1, 4): 2,
            (1, 5): 2, (2, 5): 2, (2, 7): 2, (3, 6): 2, (3, 7): 2,
        },
        cycle_graph(5): {
            (0, 2): 2, (0, 3): 2, (0, 5): 1, (0, 8): 2, (1, 3): 2,
            (1, 4): 2, (1, 5): 2, (1, 6): 2, (2, 4): 2, (2, 6): 2,
            (2, 7): 2, (3, 7): 2, (3, 9): 2, (4, 8): 2, (4, 9): 2,
        },
    }
    for g, expected in goldens.items():
        r = dist_edge_coloring_central(g)
        assert r.coloring.edge_colors == expected
        assert r.palette_size == 2
    k5 = dist_edge_coloring_central(complete_graph(5))
    assert k5.palette_size == 2 and k5.promised_bound == 2


def test_central_edge_coloring_examples():
    r = dist_edge_coloring_central(star_graph(6))
    assert r.promised_bound == 3 and r.palette_size <= 3
    r = dist_edge_coloring_central(path_graph(5))
    assert r.palette_size <= 2
    with pytest.raises(NotApplicableError):
        dist_edge_coloring_central(path_graph(3))
    with pytest.raises(NotApplicableError):
        dist_edge_coloring_central(Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)]))


def test_central_edge_coloring_sweep_orders_4_to_7():
    for n in range(4, 8):
        for g in connected_graphs(n):
            r = dist_edge_coloring_central(g)
            assert r.palette_size <= r.promised_bound


def test_central_vertex_coloring_examples():
    r = dist_vertex_coloring_central(star_graph(5))
    assert r.palette_size == 2 and r.promised_bound == 2
    r = dist_vertex_coloring_central(complete_graph(4))
    assert r.palette_size <= 2
    # A rigid tree lifts its one-color coloring; the group being trivial
    # makes that coloring distinguishing.
    rigid = Graph.from_edges(7, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)])
    assert automorphisms(rigid).order == 1
    r = dist_vertex_coloring_central(rigid)
    assert r.palette_size == 1


def test_central_vertex_coloring_sweep_orders_4_to_7():
    for n in range(4, 8):
        for g in connected_graphs(n):
            r = dist_vertex_coloring_central(g)
            assert r.palette_size <= r.promised_bound


def test_endline_extension():
    p3 = path_graph(3)
    g = TotalColoring(None, {(0, 1): 1, (1, 2): 2})
    ext = dist_edge_coloring_endline(p3, g)
    assert ext.distinguishing
    assert ext.coloring.edge_colors[(0, 3)] == 1
    assert ext.coloring.edge_colors[(2, 5)] == 1
    # A single vertex has a one-edge endline graph whose ends swap freely.
    ext = dist_edge_coloring_endline(Graph(1, (0,)), TotalColoring(None, {}))
    assert not ext.distinguishing
    # No 2-color distinguishing edge coloring of K4 exists (checked by
    # exhaustive search), so the smallest usable witness has 3 colors.
    k4 = complete_graph(4)
    assert exact_parameter(k4, "Dp", cap=2).value is None
    w = exact_parameter(k4, "Dp", cap=3).witness
    ext = dist_edge_coloring_endline(k4, w)
    assert ext.distinguishing and len(ext.coloring.palette()) <= 3
    with pytest.raises(ValueError):
        dist_edge_coloring_endline(p3, TotalColoring(None, {(0, 1): 1, (1, 2): 1}))


def test_middle_vertex_coloring_examples():
    r = dist_vertex_coloring_middle(cycle_graph(5))
    assert r.palette_size == 2 and r.promised_bound == 2
    r = dist_vertex_coloring_middle(star_graph(4))
    assert r.palette_size <= 3
    r = dist_vertex_coloring_middle(path_graph(4))
    assert r.palette_size <= 2


def test_middle_vertex_coloring_sweep_orders_3_to_7():
    for n in range(3, 8):
        for g in connected_graphs(n):
            r = dist_vertex_coloring_middle(g)
            assert r.palette_size <= g.max_degree()


def test_total_coloring_central_regular_odd():
    for g in [cycle_graph(5), complete_graph(5), cycle_graph(7)]:
        r = total_coloring_central_regular_odd(g)
        assert r.palette_size == g.n == r.promised_bound
        assert is_proper(r.graph, r.coloring, "total")
    with pytest.raises(NotApplicableError):
        total_coloring_central_regular_odd(cycle_graph(6))
    with pytest.raises(NotApplicableError):
        total_coloring_central_regular_odd(path_graph(5))


def test_total_dist_central_regular_odd_orders():
    for g in [cycle_graph(5), complete_graph(5), cycle_graph(7), complete_graph(7)]:
        r = total_dist_coloring_central_regular(g)
        assert r.palette_size == g.n
        # The square diagonal is idempotent, so the original vertices all
        # wear different colors.
        assert len(set(r.coloring.vertex_colors[: g.n])) == g.n


def test_total_dist_central_regular_even_orders():
    seen_gated = 0
    for n in (6, 8):
        for d in range(2, n - 1):
            for g in regular_graphs(d, n):
                try:
                    r = total_dist_coloring_central_regular(g)
                except NotApplicableError:
                    seen_gated += 1
                    continue
                assert r.palette_size <= g.n
    # Only the order-8 cocktail-party complement (a perfect matching) lacks
    # a small distinguishing coloring of its complement.
    assert seen_gated == 1
    with pytest.raises(NotApplicableError):
        total_dist_coloring_central_regular(complete_graph(6))


def test_subdivision_total_dist_examples():
    r = total_dist_coloring_subdivision(star_graph(5))
    assert r.palette_size == 5 and r.promised_bound == 5
    r = total_dist_coloring_subdivision(path_graph(5))
    assert r.promised_bound == 3
    r = total_dist_coloring_subdivision(complete_graph(5))
    assert r.palette_size == 6 and r.promised_bound == 6
    with pytest.raises(NotApplicableError):
        total_dist_coloring_subdivision(path_graph(4))


def test_subdivision_total_dist_sweep_orders_5_to_7():
    for n in range(5, 8):
        for g in connected_graphs(n):
            r = total_dist_coloring_subdivision(g)
            s_delta = subdivision(g).graph.max_degree()
            assert r.promised_bound in (s_delta + 1, s_delta + 2)


def test_avd_central_regular_examples():
    r = avd_coloring_central_regular(cycle_graph(6))
    assert r.palette_size == 7 == r.promised_bound
    r = avd_coloring_central_regular(complete_graph(6))
    assert r.palette_size == 7
    r = avd_coloring_central_regular(cycle_graph(5))
    assert r.palette_size <= 7
    with pytest.raises(NotApplicableError):
        avd_coloring_central_regular(path_graph(6))


def test_avd_central_regular_sweep_orders_5_to_8():
    for n in range(5, 9):
        for d in range(2, n):
            for g in regular_graphs(d, n):
                r = avd_coloring_central_regular(g)
                extra = 2 if n % 2 == 0 else 3
                assert r.promised_bound == r.graph.max_degree() + extra
                assert is_avd_total(r.graph, r.coloring)


def test_avd_subdivision_examples():
    r = avd_coloring_subdivision(star_graph(6))
    assert r.palette_size == 6 == r.promised_bound
    r = avd_coloring_subdivision(complete_graph(6))
    assert r.palette_size == 6
    # A broom long enough to contain two adjacent degree-2 vertices.
    broom = _broom(8, 5)
    assert any(
        broom.degree(u) == 2 and broom.degree(v) == 2 for u, v in broom.edges()
    )
    r = avd_coloring_subdivision(broom)
    assert r.palette_size == 6
    with pytest.raises(NotApplicableError):
        avd_coloring_subdivision(star_graph(5))


def test_avd_subdivision_sweep_orders_6_to_8(connected8):
    pools = [connected_graphs(6), connected_graphs(7), connected8]
    for pool in pools:
        for g in pool:
            if g.max_degree() < 5:
                continue
            r = avd_coloring_subdivision(g)
            assert r.palette_size <= g.max_degree() + 1


def _oracle_witness(g: Graph, kind: str, cap: int) -> TotalColoring:
    res = exact_parameter(g, kind, cap=cap)
    assert res.value is not None
    return res.witness


def test_avd_join_covers_bipartite_and_self_joins():
    e2, e3 = empty_graph(2), empty_graph(3)
    p3, k3 = path_graph(3), complete_graph(3)
    # Unequal part sizes take AVD inputs.
    c1 = _oracle_witness(central(e2).graph, "chi2a", 4)
    c2 = _oracle_witness(central(e3).graph, "chi2a", 5)
    r = avd_coloring_central_join(e2, e3, c1, c2)
    assert r.palette_size <= 7 == r.promised_bound
    assert r.graph == central(complete_bipartite(2, 3)).graph
    # Equal part sizes take plain proper total inputs.
    for part in (e2, e3, p3, k3):
        f = _oracle_witness(central(part).graph, "chi2", part.n + 1)
        r = avd_coloring_central_join(part, part, f, f)
        assert r.promised_bound == 2 * part.n + 2
        assert is_avd_total(r.graph, r.coloring)
    bad = TotalColoring(
        tuple(1 for _ in range(central(e2).graph.n)), {(0, 1): 2}
    )
    with pytest.raises(ValueError):
        avd_coloring_central_join(e2, e2, bad, bad)


def test_join_graph_shape():
    j = join_graph(empty_graph(2), empty_graph(3))
    assert j == complete_bipartite(2, 3)
    j = join_graph(complete_graph(2), complete_graph(3))
    assert j.is_complete()


def test_tdc_central_examples():
    p = tdc_central(cycle_graph(5))
    assert len(p.classes) == 5
    assert is_tdc(central(cycle_graph(5)).graph, p)
    p = tdc_central(path_graph(6))
    assert len(p.classes) == 6
    with pytest.raises(NotApplicableError):
        tdc_central(star_graph(6))
    with pytest.raises(NotApplicableError):
        tdc_central(path_graph(4))


def test_tdc_central_sweep_orders_5_to_8(connected8):
    pools = [connected_graphs(5), connected_graphs(6), connected_graphs(7), connected8]
    for pool, n in zip(pools, range(5, 9)):
        for g in pool:
            if g.max_degree() > n - 3:
                continue
            p = tdc_central(g)
            assert len(p.classes) == n
            q = tdc_to_complement(p, g)
            assert len(q.classes) <= n
            assert is_tdc(g.complement(), q)


def test_tdc_central_tree_cases():
    star = tdc_central_tree(star_graph(5))
    assert len(star.classes) == 5
    broom = tdc_central_tree(_broom(6, 4))
    assert len(broom.classes) == 6
    p6 = tdc_central_tree(path_graph(6))
    assert p6 == tdc_central(path_graph(6))
    for n in range(5, 9):
        for t in all_trees(n):
            p = tdc_central_tree(t)
            assert len(p.classes) <= n
            assert is_tdc(central(t).graph, p)
    with pytest.raises(NotApplicableError):
        tdc_central_tree(cycle_graph(5))
    with pytest.raises(NotApplicableError):
        tdc_central_tree(path_graph(4))


def test_tdc_to_complement_repairs_oracle_partitions():
    # Oracle partitions mix subdivision vertices into classes arbitrarily,
    # exercising the repair path that rebuilds lost domination.
    for n in (5, 6):
        for g in connected_graphs(n):
            if g.max_degree() > n - 3:
                continue
            cent = central(g).graph
            res = exact_parameter(cent, "chitd", cap=n)
            if res.value is None:
                continue
            q = tdc_to_complement(res.witness, g)
            assert len(q.classes) <= len(res.witness.classes)
            assert is_tdc(g.complement(), q)
    from symcol.colorings import TDCPartition

    # Both neighbors of subdivision vertex 5 sit in mixed classes, so no
    # class lands inside its neighborhood and the partition is not a TDC.
    not_tdc = TDCPartition(
        (
            frozenset({0, 7}),
            frozenset({1, 8}),
            frozenset({2}),
            frozenset({3}),
            frozenset({4}),
            frozenset({5}),
            frozenset({6}),
            frozenset({9}),
        )
    )
    with pytest.raises(ValueError):
        tdc_to_complement(not_tdc, cycle_graph(5))


def test_construction_result_enforces_bound():
    r = dist_edge_coloring_central(path_graph(4))
    with pytest.raises(ConstructionDefectError):
        ConstructionResult(r.graph, r.coloring, 5, 4, "3.2")
    doc = r.to_json()
    assert doc["tag"] == "3.2" and doc["palette_size"] <= doc["promised_bound"]


def test_bfs_frame_layers_partition():
    from symcol.constructive import _bfs_frame

    g = _broom(6, 3)
    frame = _bfs_frame(g, 0)
    assert frame.layers[0] == (0,)
    seen = [v for layer in frame.layers for v in layer]
    assert sorted(seen) == list(range(g.n))
    cent = central(g)
    e1, e2 = frame.pair_edges(cent, 0, 1)
    w = cent.subdivided(0, 1)
    assert e1 == (0, w) and e2 == (1, w)
    with pytest.raises(ValueError):
        frame.pair_edges(cent, 0, 5)
