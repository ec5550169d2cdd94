import json

from uncrossed.cli import main
from uncrossed.files import load_graph, save_graph
from uncrossed.instances import complete


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, dict(
        line.split("=", 1) for line in out.strip().splitlines() if "=" in line
    )


def test_gen_solve_verify_render_pipeline(tmp_path, capsys):
    k5 = str(tmp_path / "k5.txt")
    code, kv = run(capsys, "gen", "complete", "5", "--out", k5)
    assert code == 0
    assert load_graph(k5) == complete(5)

    code, kv = run(capsys, "solve", "--mode", "cr", "--input", k5)
    assert code == 0 and kv["cr"] == "1"

    w = str(tmp_path / "w.json")
    code, kv = run(capsys, "solve", "--mode", "ucrk", "--c", "2", "--k", "2",
                   "--input", k5, "--witness", w)
    assert code == 0 and kv["verdict"] == "yes" and kv["cost"] == "2"

    code, kv = run(capsys, "verify", "--input", k5, "--witness", w)
    assert code == 0 and kv["verdict"] == "accept"

    out_dir = str(tmp_path / "svg")
    code, kv = run(capsys, "render", "--witness", w, "--out", out_dir)
    assert code == 0 and kv["drawings"] == "2"

    # a corrupted witness gets rejected with the violated rule and exit 1
    doc = json.loads((tmp_path / "w.json").read_text())
    doc["declared_cost"] = 5
    (tmp_path / "bad.json").write_text(json.dumps(doc))
    code, kv = run(capsys, "verify", "--input", k5, "--witness", str(tmp_path / "bad.json"))
    assert code == 1 and kv["rule"] == "cost"


def test_exit_code_matrix(tmp_path, capsys):
    k5 = str(tmp_path / "k5.txt")
    run(capsys, "gen", "complete", "5", "--out", k5)
    # no verdict -> 1
    code, kv = run(capsys, "solve", "--mode", "ucrk", "--c", "1", "--k", "5", "--input", k5)
    assert code == 1 and kv["verdict"] == "no"
    # unknown (budget) -> 2
    code, kv = run(capsys, "solve", "--mode", "ucr", "--input", k5, "--max-nodes", "2")
    assert code == 2 and kv["status"] == "unknown"
    # usage errors -> 3
    assert main(["solve", "--mode", "ucrk", "--input", k5]) == 3
    assert main(["solve", "--mode", "nope", "--input", k5]) == 3
    assert main(["solve", "--mode", "cr", "--input", str(tmp_path / "missing.txt")]) == 3
    # parse errors -> 3
    bad = tmp_path / "bad.txt"
    bad.write_text("2 1\n0 0 1\n")
    assert main(["solve", "--mode", "cr", "--input", str(bad)]) == 3


def test_solve_modes(tmp_path, capsys):
    k5 = str(tmp_path / "k5.txt")
    run(capsys, "gen", "complete", "5", "--out", k5)
    code, kv = run(capsys, "solve", "--mode", "unc", "--input", k5)
    assert code == 0 and kv["unc"] == "2"
    code, kv = run(capsys, "solve", "--mode", "ucr", "--input", k5)
    assert code == 0 and (kv["ucr"], kv["ounc"]) == ("2", "2")
    code, kv = run(capsys, "solve", "--mode", "thickness", "--input", k5)
    assert code == 0 and kv["thickness"] == "2"
    code, kv = run(capsys, "solve", "--mode", "outerthickness", "--input", k5)
    assert code == 0 and kv["outerthickness"] == "2"


def test_gen_families(tmp_path, capsys):
    code, kv = run(capsys, "gen", "heavy-cycle", "3", "--out", str(tmp_path / "g.txt"))
    assert code == 0
    g = load_graph(tmp_path / "g.txt")
    assert g.n == 6 and g.m == 9

    code, kv = run(capsys, "gen", "hex-grid", "2", "--out", str(tmp_path / "h.txt"))
    assert code == 0 and kv["rings"] == "6,18"

    code, kv = run(capsys, "gen", "complete-bipartite", "3", "3",
                   "--out", str(tmp_path / "b.txt"))
    assert code == 0
    assert load_graph(tmp_path / "b.txt").m == 9

    assert main(["gen", "complete"]) == 3  # missing parameter


def test_bounds_command(tmp_path, capsys):
    k15 = str(tmp_path / "k15.txt")
    save_graph(k15, complete(15))
    code, kv = run(capsys, "bounds", "--input", k15)
    assert code == 0
    assert kv["ucr_quartic"] == "414"
    assert kv["drawings_count"] == "3"
    assert "kn_refined_upper" in kv


def test_budget_env_variable(tmp_path, capsys, monkeypatch):
    k6 = str(tmp_path / "k6.txt")
    save_graph(k6, complete(6))
    monkeypatch.setenv("UNCROSSED_BUDGET", "0.000001")
    code, kv = run(capsys, "solve", "--mode", "ucr", "--input", k6)
    assert code == 2 and kv["status"] == "unknown"


def test_unc_witness_pipeline(tmp_path, capsys):
    k5 = str(tmp_path / "k5.txt")
    run(capsys, "gen", "complete", "5", "--out", k5)
    w = str(tmp_path / "cover.json")
    code, kv = run(capsys, "solve", "--mode", "unc", "--input", k5, "--witness", w)
    assert code == 0 and kv["witness"] == w
    code, kv = run(capsys, "verify", "--input", k5, "--witness", w)
    assert code == 0 and kv["verdict"] == "accept"


def test_table_flag(tmp_path, capsys):
    k5 = str(tmp_path / "k5.txt")
    run(capsys, "gen", "complete", "5", "--out", k5)
    code = main(["--table", "solve", "--mode", "cr", "--input", k5])
    out = capsys.readouterr().out
    assert code == 0
    assert "cr:" in out and "=" not in out.splitlines()[-1]
