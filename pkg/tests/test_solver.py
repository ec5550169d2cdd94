import itertools
import random

import pytest

from uncrossed.core import (
    CollectionWitness,
    DrawingWitness,
    PreconditionError,
    WeightedMultigraph,
    expand_weights,
    graph_from_edges,
    make_drawing,
)
from uncrossed.covers import certificate_is_valid
from uncrossed.instances import (
    complete,
    complete_bipartite,
    heavy_cycle_with_diameters,
    k5_with_two_light_edges,
)
from uncrossed.solver import (
    SearchBudget,
    crossing_number,
    decide_uncrossed_cost,
    reference_oracle,
    uncrossed_crossing_number,
    uncrossed_number,
    verify_collection,
)

from conftest import atlas_graphs, edge_id_map


# -- crossing number ---------------------------------------------------------


def test_cr_examples(k4, k5):
    assert crossing_number(k4).value == 0
    assert crossing_number(k5).value == 1
    assert crossing_number(k5_with_two_light_edges(3)).value == 1
    assert crossing_number(k5_with_two_light_edges(4)).value == 1


def test_cr_k33_and_k6(k33, k6):
    assert crossing_number(k33).value == 1
    assert crossing_number(k6).value == 3


def test_cr_witness_planarizes(k5, k6):
    from uncrossed.core import planarize
    from uncrossed.planarity import graph_planar

    for g in (k5, k6):
        res = crossing_number(g)
        assert graph_planar(planarize(g, res.witness))
        assert res.witness.cost(g) == res.value


def test_cr_monotone_under_edge_addition():
    random.seed(3)
    pairs = [(i, j) for i in range(6) for j in range(i + 1, 6)]
    for _ in range(6):
        subset = random.sample(pairs, 11)
        g_small = graph_from_edges(6, subset[:-1])
        g_big = graph_from_edges(6, subset)
        assert crossing_number(g_small).value <= crossing_number(g_big).value


def test_cr_budget_unknown(k6):
    res = crossing_number(k6, SearchBudget(max_nodes=5))
    assert res.status == "unknown"
    assert res.value is None
    assert res.lower_bound >= 1


# -- decide ------------------------------------------------------------------


def test_decide_planar_trivial(k4):
    dec = decide_uncrossed_cost(k4, 1, 0)
    assert dec.verdict == "yes"
    assert dec.witness.declared_cost == 0
    assert verify_collection(k4, dec.witness).accepted


def test_decide_k5_table(k5):
    assert decide_uncrossed_cost(k5, 1, 50).verdict == "no"
    assert decide_uncrossed_cost(k5, 2, 2).verdict == "yes"
    assert decide_uncrossed_cost(k5, 2, 1).verdict == "no"


def test_decide_monotone_in_c_and_k(k5, k33):
    for g in (k5, k33):
        table = {}
        for c in (1, 2, 3):
            for k in (0, 1, 2, 3):
                table[c, k] = decide_uncrossed_cost(g, c, k).verdict == "yes"
        for c in (1, 2, 3):
            for k in (0, 1, 2, 3):
                if table[c, k]:
                    for c2 in range(c, 4):
                        for k2 in range(k, 4):
                            assert table[c2, k2]


def test_decide_witness_canonical_and_verified(k5):
    a = decide_uncrossed_cost(k5, 2, 2)
    b = decide_uncrossed_cost(k5, 2, 2)
    assert a.witness == b.witness
    assert verify_collection(k5, a.witness).accepted
    assert a.witness.declared_cost == 2


def test_decide_heavy_cycle(k5):
    g = heavy_cycle_with_diameters(3)
    assert decide_uncrossed_cost(g, 2, 3).verdict == "no"
    assert decide_uncrossed_cost(g, 3, 3).verdict == "yes"
    assert decide_uncrossed_cost(g, 3, 2).verdict == "no"


def test_decide_preconditions(k5):
    with pytest.raises(PreconditionError):
        decide_uncrossed_cost(k5, 0, 1)
    with pytest.raises(PreconditionError):
        decide_uncrossed_cost(k5, 1, -1)


# -- ucr / ounc --------------------------------------------------------------


def test_ucr_planar(k4):
    res = uncrossed_crossing_number(k4)
    assert (res.ucr, res.ounc) == (0, 1)


def test_ucr_k5(k5):
    res = uncrossed_crossing_number(k5)
    assert (res.ucr, res.ounc) == (2, 2)
    assert verify_collection(k5, res.witness).accepted


def test_ucr_heavy_cycle():
    g = heavy_cycle_with_diameters(3)
    res = uncrossed_crossing_number(g)
    assert res.ucr == 3
    assert res.ounc == 3
    assert verify_collection(g, res.witness).accepted
    # the heavy rim stays uncrossed in every drawing of the witness
    rim = set(range(6))
    for d in res.witness.drawings:
        assert rim <= d.uncrossed_edges(g)


def test_ucr_two_light_family():
    for m in (3, 4):
        g = k5_with_two_light_edges(m)
        res = uncrossed_crossing_number(g)
        assert res.ucr == 2 * m
        assert res.ounc == 2
        assert verify_collection(g, res.witness).accepted


def test_ucr_at_least_ounc_times_cr():
    for g in (complete(5), complete_bipartite(3, 3), heavy_cycle_with_diameters(3)):
        res = uncrossed_crossing_number(g)
        cr = crossing_number(g).value
        assert res.ucr >= res.ounc * cr


def test_weight_expansion_consistency():
    # the m=2 variant of the two-light-edges family, built inline because
    # the generator requires m >= 3
    light = {(0, 1), (2, 3)}
    edges = tuple(
        (i, j, 1 if (i, j) in light else 2)
        for i in range(5)
        for j in range(i + 1, 5)
    )
    weighted = WeightedMultigraph(5, edges)
    expanded, _ = expand_weights(weighted)
    a = uncrossed_crossing_number(weighted)
    b = uncrossed_crossing_number(expanded)
    assert a.ucr == b.ucr


# -- unc ---------------------------------------------------------------------


def test_unc_planar_is_one(k4):
    assert uncrossed_number(k4).value == 1


def test_unc_k5(k5):
    res = uncrossed_number(k5)
    assert res.value == 2
    assert all(certificate_is_valid(k5, c) for c in res.certificates)
    union = set()
    for c in res.certificates:
        union |= set(c.edge_subset)
    assert union == set(range(k5.m))


def test_unc_k33_and_k6(k33, k6):
    assert uncrossed_number(k33).value == 2
    assert uncrossed_number(k6).value == 2


def test_unc_at_most_ounc(k5, k33):
    for g in (k5, k33, heavy_cycle_with_diameters(3)):
        unc = uncrossed_number(g).value
        res = uncrossed_crossing_number(g)
        assert unc <= res.ounc
        assert res.ounc <= g.m


def test_collection_from_certificates(k5, k6):
    from uncrossed.solver import collection_from_certificates

    for g in (k5, k6, heavy_cycle_with_diameters(3)):
        res = uncrossed_number(g)
        w = collection_from_certificates(g, res.certificates)
        assert len(w.drawings) == res.value
        assert verify_collection(g, w).accepted
        covered = set()
        for part, d in zip(res.certificates, w.drawings):
            covered |= d.uncrossed_edges(g)
        assert covered == set(range(g.m))


def test_collection_from_certificates_small_sweep():
    from uncrossed.solver import collection_from_certificates

    for g in atlas_graphs(5):
        res = uncrossed_number(g)
        w = collection_from_certificates(g, res.certificates)
        assert verify_collection(g, w).accepted


# -- reference oracle --------------------------------------------------------


def test_oracle_planar_and_trivial_cases(k4, k5):
    assert reference_oracle(k4, 1, 0) is True
    assert reference_oracle(k5, 1, 4) is False
    assert reference_oracle(k5, 2, 0) is False


def test_oracle_k5_locked_values(k5):
    assert reference_oracle(k5, 2, 2) is True
    assert reference_oracle(k5, 2, 1) is False


def test_oracle_matches_decide_on_k33(k33):
    for c, k in ((1, 1), (2, 2), (2, 1), (2, 3), (3, 3)):
        assert reference_oracle(k33, c, k) == (
            decide_uncrossed_cost(k33, c, k).verdict == "yes"
        )


def test_oracle_size_cap(k7):
    with pytest.raises(PreconditionError):
        reference_oracle(k7, 2, 2)  # 21 edges is beyond the cap


def test_oracle_weighted_heavy_cycle():
    g = heavy_cycle_with_diameters(3)
    assert reference_oracle(g, 3, 3) is True
    assert reference_oracle(g, 2, 3) is False
    assert reference_oracle(g, 3, 2) is False


def test_oracle_equivalence_six_vertex_nonplanar():
    # every nonplanar 6-vertex graph inside the oracle's size cap, up to
    # k = 4: the oracle searches non-normalized drawings (self-crossings,
    # adjacent crossings, repeats), so agreement here is the empirical
    # backing for the solver's normalized search space
    from uncrossed.planarity import graph_planar

    graphs = [
        g for g in atlas_graphs(6) if g.m <= 12 and not graph_planar(g)
    ]
    assert len(graphs) == 11
    for g in graphs:
        for c, k in ((1, 1), (2, 2), (2, 3), (3, 3), (2, 4), (3, 4), (4, 4)):
            assert reference_oracle(g, c, k) == (
                decide_uncrossed_cost(g, c, k).verdict == "yes"
            ), (g.edges, c, k)


# -- verify ------------------------------------------------------------------


def test_verify_accepts_solver_output(k5):
    dec = decide_uncrossed_cost(k5, 2, 2)
    assert verify_collection(k5, dec.witness).accepted


def test_verify_rejects_uncovered_edge(k5):
    ids = edge_id_map(k5)
    d1 = make_drawing(k5, [(ids[(0, 1)], ids[(2, 3)])])
    w = CollectionWitness(drawings=(d1,), declared_cost=1)
    res = verify_collection(k5, w)
    assert not res.accepted and res.rule == "coverage"


def test_verify_rejects_wrong_cost(k5):
    dec = decide_uncrossed_cost(k5, 2, 2)
    w = CollectionWitness(drawings=dec.witness.drawings, declared_cost=99)
    res = verify_collection(k5, w)
    assert not res.accepted and res.rule == "cost"


def test_verify_rejects_broken_planarization(k6):
    # a multi-crossed edge whose event order is permuted until the
    # planarization stops being planar
    from uncrossed.core import planarize
    from uncrossed.planarity import graph_planar
    from uncrossed.instances import rotating_path_collection

    w = rotating_path_collection(6)
    g = complete(6)
    assert verify_collection(g, w).accepted
    broken = None
    for di, d in enumerate(w.drawings):
        orders = dict(d.edge_orders)
        multi = [e for e, seq in orders.items() if len(seq) >= 2]
        for e in multi:
            for perm in itertools.permutations(orders[e]):
                if list(perm) == list(orders[e]):
                    continue
                new_orders = dict(orders)
                new_orders[e] = tuple(perm)
                cand = DrawingWitness(
                    crossings=d.crossings,
                    edge_orders=tuple(sorted(new_orders.items())),
                )
                if not graph_planar(planarize(g, cand)):
                    drawings = list(w.drawings)
                    drawings[di] = cand
                    broken = CollectionWitness(
                        drawings=tuple(drawings), declared_cost=w.declared_cost
                    )
                    break
            if broken:
                break
        if broken:
            break
    assert broken is not None, "no order permutation broke planarity"
    res = verify_collection(g, broken)
    assert not res.accepted and res.rule == "planarity"


def test_verify_rejects_malformed_structure(k5):
    ids = edge_id_map(k5)
    from uncrossed.core import CrossingEvent

    # event between adjacent edges
    d = DrawingWitness(
        crossings=(CrossingEvent(ids[(0, 1)], ids[(0, 2)]),), edge_orders=()
    )
    w = CollectionWitness(drawings=(d, make_drawing(k5, [])), declared_cost=1)
    res = verify_collection(k5, w)
    assert not res.accepted and res.rule == "structure"


def test_witness_permutation_keeps_uncrossed_property(k5):
    dec = decide_uncrossed_cost(k5, 2, 2)
    for perm in itertools.permutations(dec.witness.drawings):
        w = CollectionWitness(drawings=perm, declared_cost=dec.witness.declared_cost)
        assert verify_collection(k5, w).accepted


# -- budgets -----------------------------------------------------------------


def test_budget_validation():
    with pytest.raises(PreconditionError):
        SearchBudget(max_crossings=-1)
    with pytest.raises(PreconditionError):
        SearchBudget(max_drawings=0)


def test_ucr_budget_unknown(k33):
    res = uncrossed_crossing_number(k33, SearchBudget(max_crossings=1))
    assert res.status == "unknown"
    assert res.ucr is None


def test_unc_budget_unknown(k6):
    res = uncrossed_number(k6, SearchBudget(max_nodes=3))
    assert res.status == "unknown"
    assert res.value is None
