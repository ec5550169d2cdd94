import pytest

from uncrossed.core import ResourceExceededError, WeightedMultigraph, graph_from_edges
from uncrossed.instances import complete, complete_bipartite, hex_grid
from uncrossed.planarity import (
    enumerate_embeddings,
    faces,
    graph_planar,
    is_outerplanar,
    is_planar,
    kuratowski_is_valid,
)

from conftest import atlas_graphs, brute_planar, cycle


def test_k4_planar(k4):
    assert is_planar(k4).planar


def test_k5_nonplanar_with_full_witness(k5):
    res = is_planar(k5)
    assert not res.planar
    assert res.kuratowski == frozenset(range(10))
    assert kuratowski_is_valid(k5, res.kuratowski)


def test_hex_grid_planar():
    g, _ = hex_grid(3)
    assert is_planar(g).planar


def test_kuratowski_witness_minimal_and_nonplanar(k33, k6):
    for g in (k33, k6):
        res = is_planar(g)
        assert not res.planar
        assert kuratowski_is_valid(g, res.kuratowski)


def test_agrees_with_brute_force_on_small_graphs():
    for g in atlas_graphs(6):
        assert graph_planar(g) == brute_planar(g), g.edges


def test_multigraph_planarity():
    g = WeightedMultigraph(3, ((0, 1, 1), (0, 1, 1), (1, 2, 1), (0, 2, 1)))
    assert is_planar(g).planar
    # parallel edges do not create Kuratowski subgraphs
    doubled_k5 = WeightedMultigraph(
        5, tuple((i, j, 1) for i in range(5) for j in range(i + 1, 5)) * 2
    )
    res = is_planar(doubled_k5)
    assert not res.planar
    assert kuratowski_is_valid(doubled_k5, res.kuratowski)


def test_embedding_euler_formula():
    for g in atlas_graphs(5):
        if not graph_planar(g):
            continue
        res = is_planar(g)
        emb = res.embedding
        comps = len(emb.components)
        assert g.n - g.m + len(emb.faces) == 1 + comps


def test_faces_triangle(triangle):
    emb = is_planar(triangle).embedding
    fs = faces(emb)
    assert len(fs) == 2
    assert all(f.vertices == frozenset({0, 1, 2}) for f in fs)


def test_faces_k4(k4):
    emb = is_planar(k4).embedding
    fs = faces(emb)
    assert len(fs) == 4
    assert all(len(f.vertices) == 3 for f in fs)


def test_faces_hex_grid_2():
    g, _ = hex_grid(2)
    emb = is_planar(g).embedding
    lengths = sorted(sum(len(w) for w in f.walks) for f in emb.faces)
    assert lengths == [6] * 7 + [18]


def test_rotation_lists_cover_incident_darts(k4):
    emb = is_planar(k4).embedding
    seen = sorted(d for cycle_ in emb.rotation for d in cycle_)
    assert seen == list(range(2 * k4.m))


def test_outerplanar_examples(k4):
    assert is_outerplanar(cycle(5))
    assert not is_outerplanar(k4)
    assert not is_outerplanar(complete_bipartite(2, 3))


def test_outerplanar_iff_apex_planar():
    for g in atlas_graphs(5):
        apex = g.n
        edges = list(g.edges) + [(v, apex, 1) for v in range(g.n)]
        apexed = WeightedMultigraph(g.n + 1, tuple(edges))
        assert is_outerplanar(g) == graph_planar(apexed)


def test_enumerate_embeddings_counts(triangle):
    assert len(list(enumerate_embeddings(triangle))) == 1
    single_edge = graph_from_edges(2, [(0, 1)])
    assert len(list(enumerate_embeddings(single_edge))) == 1
    # locked regression values for the canonical form used here
    two_triangles = graph_from_edges(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    )
    assert len(list(enumerate_embeddings(two_triangles))) == 6
    assert len(list(enumerate_embeddings(complete(4)))) == 4


def test_enumerate_embeddings_deterministic(k4):
    a = [e.rotation for e in enumerate_embeddings(k4)]
    b = [e.rotation for e in enumerate_embeddings(k4)]
    assert a == b


def test_enumerate_embeddings_faces_satisfy_euler():
    g = graph_from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)])
    count = 0
    for emb in enumerate_embeddings(g):
        count += 1
        comps = len(emb.components)
        assert g.n - g.m + len(emb.faces) == 1 + comps
        lookup = emb.face_of_dart()
        assert sorted(lookup) == list(range(2 * g.m))
    assert count > 0


def test_enumerate_embeddings_cap():
    g = complete(6)  # nonplanar: precondition error
    with pytest.raises(Exception):
        next(enumerate_embeddings(g))
    big, _ = hex_grid(2)  # 30 edges > default cap
    with pytest.raises(ResourceExceededError):
        next(enumerate_embeddings(big))


def test_nonplanar_rotation_rejected(k4):
    from uncrossed.planarity import build_embedding
    from uncrossed.core import PreconditionError

    emb = is_planar(k4).embedding
    rot = list(emb.rotation)
    # swapping two darts at a degree-3 vertex flips the genus
    rot[0] = (rot[0][0], rot[0][2], rot[0][1])
    changed = tuple(rot)
    if changed != emb.rotation:
        with pytest.raises(PreconditionError):
            build_embedding(k4, changed)
