import json

import pytest

from bhconn.cli import main
from bhconn.topology import build, load_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_dot(capsys):
    code, out, err = run(capsys, "gen", "-n", "2", "--format", "dot")
    assert code == 0
    assert out.count(" -- ") == 32 and out.count("label=") == 16
    assert "16 vertices, 32 edges" in err


def test_gen_json_round_trip(capsys, tmp_path):
    path = tmp_path / "g.json"
    code, out, _ = run(capsys, "gen", "-n", "1", "--format", "json", "-o", str(path))
    assert code == 0 and "4 vertices, 4 edges" in out
    assert load_graph(path).edges() == build(1).edges()


def test_gen_dimension_cap(capsys):
    code, _, err = run(capsys, "gen", "-n", "9")
    assert code == 2 and "dimension" in err


def test_cut_k13_n3(capsys, tmp_path):
    path = tmp_path / "w.json"
    code, out, _ = run(capsys, "cut", "-n", "3", "-H", "K13", "-u", "0,0,0", "-o", str(path))
    assert code == 0 and "|F| = 3, |V(F)| = 12" in out
    data = json.loads(path.read_text())
    assert data["pattern"] == "K13" and data["base_vertex"] == [0, 0, 0]


def test_cut_c4_default_vertex(capsys):
    code, out, err = run(capsys, "cut", "-n", "2", "-H", "C4")
    assert code == 0 and "|F| = 2, |V(F)| = 8" in err
    assert len(json.loads(out)["elements"]) == 2


def test_cut_rejects_n1(capsys):
    code, _, err = run(capsys, "cut", "-n", "1", "-H", "K12")
    assert code == 2 and "n >= 2" in err


def test_bad_vertex(capsys):
    assert run(capsys, "cut", "-n", "2", "-H", "C4", "-u", "0,7")[0] == 2


@pytest.fixture
def files(tmp_path, capsys):
    def make(n, pattern):
        g, w = tmp_path / f"g{n}.json", tmp_path / f"w{n}{pattern}.json"
        main(["gen", "-n", str(n), "-o", str(g)])
        main(["cut", "-n", str(n), "-H", pattern, "-o", str(w)])
        capsys.readouterr()
        return g, w

    return make


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("pattern", ["K1", "K11", "K12", "K13", "C4"])
def test_cut_then_verify(n, pattern, files, capsys):
    g, w = files(n, pattern)
    code, out, _ = run(capsys, "verify", str(g), str(w))
    assert code == 0 and json.loads(out)["is_cut"]


def test_verify_missing_element(files, capsys):
    g, w = files(2, "K12")
    data = json.loads(w.read_text())
    data["elements"].pop()
    w.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", str(g), str(w))
    assert code == 1 and not json.loads(out)["is_cut"]


def test_verify_shape_violation(files, capsys):
    g, w = files(2, "K13")
    data = json.loads(w.read_text())
    data["elements"][1]["vertices"] = [0, 1, 2, 3]
    w.write_text(json.dumps(data))
    code, _, err = run(capsys, "verify", str(g), str(w))
    assert code == 1 and "element 1" in err


def test_kappa_all_n2(capsys):
    code, out, _ = run(capsys, "kappa", "-n", "2", "--all", "--json")
    rows = json.loads(out)
    assert code == 0
    assert [r["value"] for r in rows] == [4, 4, 2, 2, 2]
    assert all(r["match"] for r in rows)


def test_kappa_table_and_p4(capsys):
    code, out, _ = run(capsys, "kappa", "-n", "2", "-H", "C4", "--mode", "substructure", "--include-p4")
    assert code == 0 and "P4 elements admitted" in out and "yes" in out


def test_kappa_budget_exit(capsys):
    code, out, _ = run(capsys, "kappa", "-n", "3", "-H", "K12", "--budget", "1000")
    assert code == 3 and "budget exhausted" in out


def test_kappa_bad_budget():
    with pytest.raises(SystemExit) as info:
        main(["kappa", "-n", "2", "--budget", "0"])
    assert info.value.code == 2


def test_props(capsys):
    code, out, _ = run(capsys, "props", "-n", "2")
    assert code == 0 and all(r["holds"] for r in json.loads(out))


def test_props_negative_controls(capsys):
    code, out, _ = run(capsys, "props", "--negative-controls")
    assert code == 0 and not any(r["holds"] for r in json.loads(out))


def test_export_witness(files, capsys):
    _, w = files(2, "C4")
    code, out, _ = run(capsys, "export", "-n", "2", "--witness", str(w))
    assert code == 0 and out.count("color=red") == 8 and "doublecircle" in out


def test_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["nope"])
    assert info.value.code == 2


@pytest.mark.slow
def test_kappa_n3_k1(capsys):
    code, out, _ = run(capsys, "kappa", "-n", "3", "-H", "K1")
    assert code == 0 and "6" in out
