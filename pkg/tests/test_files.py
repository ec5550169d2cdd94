import pytest

from uncrossed.files import (
    ParseError,
    load_graph,
    load_witness,
    parse_graph_text,
    save_graph,
    save_witness,
    serialize_graph,
    serialize_witness,
    witness_from_document,
    witness_to_document,
)
from uncrossed.instances import complete, heavy_cycle_with_diameters
from uncrossed.solver import decide_uncrossed_cost, verify_collection


def test_parse_k5():
    text = "5 10\n" + "\n".join(
        f"{i} {j} 1" for i in range(5) for j in range(i + 1, 5)
    )
    g = parse_graph_text(text)
    assert g == complete(5)


def test_parse_comments_and_blanks():
    text = "# a complete graph\n3 3\n0 1 1\n\n# middle comment\n1 2 1\n0 2 1\n"
    g = parse_graph_text(text)
    assert g.n == 3 and g.m == 3


def test_loop_rejected_with_line_number():
    with pytest.raises(ParseError) as err:
        parse_graph_text("2 1\n0 0 1\n")
    assert err.value.line == 2


def test_bad_weight_and_range():
    with pytest.raises(ParseError):
        parse_graph_text("2 1\n0 1 0\n")
    with pytest.raises(ParseError):
        parse_graph_text("2 1\n0 2 1\n")
    with pytest.raises(ParseError):
        parse_graph_text("2 2\n0 1 1\n")  # wrong edge count


def test_graph_round_trip(tmp_path):
    g = heavy_cycle_with_diameters(3)
    assert parse_graph_text(serialize_graph(g)) == g
    path = tmp_path / "g.txt"
    save_graph(path, g)
    assert load_graph(path) == g


def test_witness_round_trip_inline(tmp_path, k5):
    dec = decide_uncrossed_cost(k5, 2, 2)
    doc = witness_to_document(dec.witness, graph=k5, mode={"mode": "ucrk", "c": 2, "k": 2})
    path = tmp_path / "w.json"
    save_witness(path, doc)
    witness, graph = load_witness(path)
    assert graph == k5
    assert witness == dec.witness
    assert verify_collection(graph, witness).accepted


def test_witness_round_trip_graph_ref(tmp_path, k5):
    dec = decide_uncrossed_cost(k5, 2, 2)
    save_graph(tmp_path / "k5.txt", k5)
    doc = witness_to_document(dec.witness, graph_ref="k5.txt")
    save_witness(tmp_path / "w.json", doc)
    witness, graph = load_witness(tmp_path / "w.json")
    assert graph == k5 and witness == dec.witness


def test_witness_serialization_is_canonical(k5):
    dec = decide_uncrossed_cost(k5, 2, 2)
    doc = witness_to_document(dec.witness, graph=k5, mode={"mode": "ucrk"})
    assert serialize_witness(doc) == serialize_witness(
        witness_to_document(dec.witness, graph=k5, mode={"mode": "ucrk"})
    )


def test_witness_normative_fields(k5):
    dec = decide_uncrossed_cost(k5, 2, 2)
    doc = witness_to_document(dec.witness, graph=k5, mode={})
    assert set(doc) == {"graph", "drawings", "declared_cost", "mode"}
    assert set(doc["graph"]) == {"n", "edges"}
    for dd in doc["drawings"]:
        assert set(dd) == {"crossings", "edge_orders"}
        for c in dd["crossings"]:
            assert set(c) == {"e", "f"}


def test_witness_document_errors(k5):
    with pytest.raises(ParseError):
        witness_from_document({"drawings": [], "declared_cost": 0})
    with pytest.raises(ParseError):
        witness_from_document({"graph": {"n": 2, "edges": []}, "drawings": [
            {"crossings": [], "edge_orders": {}}
        ]})
