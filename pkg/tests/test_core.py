import random

import pytest

from uncrossed.core import (
    PreconditionError,
    WeightedMultigraph,
    WitnessStructureError,
    expand_weights,
    graph_from_edges,
    make_drawing,
    planarize,
    subdivide,
)
from uncrossed.instances import complete, k5_with_two_light_edges
from uncrossed.planarity import graph_planar

from conftest import edge_id_map


def test_graph_validation():
    with pytest.raises(PreconditionError):
        WeightedMultigraph(2, ((0, 0, 1),))  # loop
    with pytest.raises(PreconditionError):
        WeightedMultigraph(2, ((0, 1, 0),))  # weight < 1
    with pytest.raises(PreconditionError):
        WeightedMultigraph(2, ((0, 2, 1),))  # endpoint out of range


def test_parallel_edges_are_distinct():
    g = WeightedMultigraph(2, ((0, 1, 1), (0, 1, 1)))
    assert g.m == 2
    assert not g.independent(0, 1)


def test_subdivide_single_edge():
    g = graph_from_edges(2, [(0, 1)])
    s = subdivide(g, 1)
    assert s.n == 3 and s.m == 2
    assert set(s.edges) == {(0, 2, 1), (2, 1, 1)}


def test_subdivide_zero_is_identity():
    g = complete(4)
    assert subdivide(g, 0) is g


def test_subdivide_k3_twice():
    g = graph_from_edges(3, [(0, 1), (1, 2), (0, 2)])
    s = subdivide(g, 2)
    assert s.n == 9 and s.m == 9
    deg = [0] * s.n
    for u, v, _ in s.edges:
        deg[u] += 1
        deg[v] += 1
    assert all(deg[v] == 2 for v in range(3, 9))


def test_subdivide_counts_property():
    random.seed(0)
    for _ in range(25):
        n = random.randint(2, 6)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        m = random.randint(0, len(pairs))
        g = graph_from_edges(n, random.sample(pairs, m))
        s = random.randint(0, 3)
        h = subdivide(g, s)
        assert h.n == g.n + s * g.m
        assert h.m == (s + 1) * g.m


def test_subdivide_preserves_weights():
    g = k5_with_two_light_edges(3)
    h = subdivide(g, 2)
    assert sorted({w for _, _, w in h.edges}) == [1, 3]
    assert h.total_weight() == 3 * g.total_weight()


def test_expand_weights_identity_for_unit():
    g = complete(4)
    h, origin = expand_weights(g)
    assert h.edges == g.edges
    assert origin == tuple(range(g.m))


def test_expand_weights_triple():
    g = WeightedMultigraph(2, ((0, 1, 3),))
    h, origin = expand_weights(g)
    assert h.m == 3
    assert all(e == (0, 1, 1) for e in h.edges)
    assert origin == (0, 0, 0)


def test_expand_weights_heavy_k5_count():
    g = k5_with_two_light_edges(3)
    h, origin = expand_weights(g)
    assert h.m == 2 + 8 * 3 == 26
    assert all(w == 1 for _, _, w in h.edges)


def test_expand_weights_preserves_total_weight():
    random.seed(1)
    for _ in range(20):
        n = random.randint(2, 5)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        m = random.randint(1, len(pairs))
        weights = [random.randint(1, 4) for _ in range(m)]
        g = graph_from_edges(n, random.sample(pairs, m), weights)
        h, _ = expand_weights(g)
        assert h.m == g.total_weight()


def test_planarize_empty_drawing_is_identity():
    g = complete(4)
    d = make_drawing(g, [])
    p = planarize(g, d)
    assert p.edges == g.edges


def test_planarize_one_event_on_k5(k5):
    ids = edge_id_map(k5)
    d = make_drawing(k5, [(ids[(0, 1)], ids[(2, 3)])])
    p = planarize(k5, d)
    assert p.n == 6 and p.m == 12
    assert graph_planar(p)


def test_planarize_counts_property(k5):
    ids = edge_id_map(k5)
    events = [(ids[(0, 1)], ids[(2, 3)]), (ids[(0, 2)], ids[(1, 3)]),
              (ids[(0, 1)], ids[(2, 4)])]
    d = make_drawing(k5, events)
    p = planarize(k5, d)
    assert p.n == k5.n + 3
    assert p.m == k5.m + 2 * 3


def test_planarize_order_changes_result(k5):
    ids = edge_id_map(k5)
    e, f1, f2 = ids[(0, 1)], ids[(2, 3)], ids[(2, 4)]
    d_ab = make_drawing(k5, [(e, f1), (e, f2)], orders={e: [(e, f1), (e, f2)]})
    d_ba = make_drawing(k5, [(e, f1), (e, f2)], orders={e: [(e, f2), (e, f1)]})
    assert planarize(k5, d_ab).edges != planarize(k5, d_ba).edges


def test_planarize_rejects_bad_structure(k5):
    ids = edge_id_map(k5)
    # events for adjacent edges are not allowed
    with pytest.raises(WitnessStructureError):
        make_drawing(k5, [(ids[(0, 1)], ids[(0, 2)])])
        d = make_drawing(k5, [(ids[(0, 1)], ids[(0, 2)])])
        planarize(k5, d)
    # inconsistent orders: event missing from the edge's sequence
    from uncrossed.core import CrossingEvent, DrawingWitness

    d = DrawingWitness(
        crossings=(CrossingEvent(ids[(0, 1)], ids[(2, 3)]),
                   CrossingEvent(ids[(0, 1)], ids[(2, 4)])),
        edge_orders=((ids[(0, 1)], (0,)),),
    )
    with pytest.raises(WitnessStructureError):
        planarize(k5, d)


def test_drawing_cost_uses_weight_products():
    g = k5_with_two_light_edges(3)
    ids = edge_id_map(g)
    d = make_drawing(g, [(ids[(0, 1)], ids[(2, 3)])])
    assert d.cost(g) == 1
    d = make_drawing(g, [(ids[(0, 2)], ids[(1, 3)])])
    assert d.cost(g) == 9
    assert len(d.uncrossed_edges(g)) == g.m - 2
