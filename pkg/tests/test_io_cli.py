import io as stdio
import json
import subprocess
import sys

import pytest

from slicetree import io
from slicetree.cli import main
from slicetree.errors import GraphInputError
from slicetree.generators import curated_corpus, cycle, theta, theta_chain
from slicetree.graph import Graph
from slicetree.pipeline import run_pipeline

THETA_JSON = (
    '{"vertices":["u","v","m1","m2","m3"],'
    '"edges":[["u","m1"],["m1","v"],["u","m2"],["m2","v"],["u","m3"],["m3","v"]]}'
)


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", stdio.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": run(argv, stdin, monkeypatch, capsys)


class TestIngest:
    def test_triangle(self):
        g = io.ingest("0 1\n1 2\n2 0\n")
        assert (g.n, g.m) == (3, 3)

    def test_theta_json(self):
        g = io.ingest(THETA_JSON)
        assert g.labels == ("u", "v", "m1", "m2", "m3")
        assert g == theta(2, 2, 2)

    def test_loop(self):
        with pytest.raises(GraphInputError, match="loop") as info:
            io.ingest("0 0\n")
        assert "line 1" in str(info.value)

    def test_multi_edge_line_number(self):
        with pytest.raises(GraphInputError, match="line 3"):
            io.ingest("a b\n# comment\nb a\n")

    def test_bad_token_count(self):
        with pytest.raises(GraphInputError, match="line 2"):
            io.ingest("a b\na b c\n")

    def test_first_appearance_numbering(self):
        g = io.ingest("x y  # trailing comment\n\ny z\n")
        assert g.labels == ("x", "y", "z") and g.edge_list() == [(0, 1), (1, 2)]

    def test_bad_json(self):
        with pytest.raises(GraphInputError, match="invalid JSON"):
            io.ingest("{nope", "json")
        with pytest.raises(GraphInputError, match="undeclared"):
            io.ingest('{"vertices": ["a"], "edges": [["a", "b"]]}')

    def test_cap_warning(self, caplog):
        io.ingest(io.graph_to_edge_list(cycle(14)), max_n=12)
        assert "above the cap" in caplog.text

    @pytest.mark.parametrize("entry", curated_corpus()[::5], ids=lambda e: e.name)
    def test_json_round_trip(self, entry):
        g = entry.graph
        assert io.ingest(io.dumps(io.graph_to_json(g))) == g


class TestEmit:
    def test_double_theta_dot(self, cli):
        g = theta_chain(2, 2)
        code, out, _ = cli(["tree", "--format", "dot"], io.dumps(io.graph_to_json(g)))
        assert code == 0
        assert out.count("shape=box") == 2 and out.count("shape=ellipse") == 1
        assert out.count(" -- ") == 2
        assert 'label="{u0,u1}"' in out and 'label="[{u0,u1}, {u1,u2}]"' in out

    def test_theta_degenerate(self, cli):
        code, out, _ = cli(["classify"], THETA_JSON)
        report = json.loads(out)
        assert code == 0 and report["verdict"] == "degenerate"
        assert report["family"] == [[0, 1]]
        assert any("single pair" in n for n in report["notes"])

    def test_rigid_tree_null(self, cli):
        _, out, _ = cli(["classify"], "a b\na c\na d\nb c\nb d\nc d\n")
        report = json.loads(out)
        assert report["verdict"] == "rigid" and report["tree"] is None and report["cut_pair_count"] == 0

    def test_key_order_stable(self, cli):
        _, out, _ = cli(["classify"], THETA_JSON)
        keys = list(json.loads(out))
        assert keys[:3] == ["vertices", "n", "m"] and keys[-2:] == ["tree", "block_cut_tree"]


class TestCommands:
    def test_loop_exit_2(self, cli):
        code, out, err = cli(["classify"], "0 0\n")
        assert code == 2 and out == "" and "loop" in err

    def test_cut_pairs(self, cli):
        _, out, _ = cli(["cut-pairs"], THETA_JSON)
        assert json.loads(out)["cut_pairs"] == [[0, 1]]

    def test_slices(self, cli):
        _, out, _ = cli(["slices", "--pair", "u", "v"], THETA_JSON)
        assert [s["closure"] for s in json.loads(out)["slices"]] == [[0, 1, 2], [0, 1, 3], [0, 1, 4]]

    def test_minimal_slice(self, cli):
        _, out, _ = cli(["minimal-slice", "--vertex", "m1"], THETA_JSON)
        assert json.loads(out)["closure"] == [0, 1, 2]

    def test_unknown_vertex(self, cli):
        code, _, err = cli(["minimal-slice", "--vertex", "zz"], THETA_JSON)
        assert code == 2 and "unknown vertex" in err

    def test_block_cut_tree(self, cli):
        code, out, _ = cli(["block-cut-tree"], "a b\nb c\nc a\nc d\nd e\ne c\n")
        data = json.loads(out)
        assert code == 0 and data["cut_vertices"] == [2] and len(data["blocks"]) == 2

    def test_classify_cut_point_dot(self, cli):
        _, out, _ = cli(["classify", "--format", "dot"], "a b\nb c\nc a\nc d\nd e\ne c\n")
        assert out.startswith("graph blockcut") and out.count(" -- ") == 2

    def test_aut(self, cli):
        _, out, _ = cli(["aut"], io.graph_to_edge_list(cycle(6)))
        assert json.loads(out)["order"] == 12

    def test_aut_cap(self, cli):
        code, _, err = cli(["aut", "--max-n", "5"], io.graph_to_edge_list(cycle(6)))
        assert code == 2 and "capped" in err

    def test_gen(self, cli):
        _, out, _ = cli(["gen", "theta-chain", "2", "2"])
        assert io.ingest(out).n == 9
        _, out, _ = cli(["gen", "random", "8", "12", "--seed", "4"])
        _, again, _ = cli(["gen", "random", "8", "12", "--seed", "4"])
        assert out == again

    def test_gen_bad_params(self, cli):
        code, _, err = cli(["gen", "cycle", "2"])
        assert code == 2 and "n >= 3" in err

    def test_family_file(self, cli, tmp_path):
        fam = tmp_path / "fam.txt"
        fam.write_text("u0 u1\nu1 u2\nu2 u3\n")
        g = io.dumps(io.graph_to_json(theta_chain(3, 2)))
        code, out, _ = cli(["tree", "--family", str(fam), "--max-n", "13"], g)
        data = json.loads(out)
        assert code == 0 and data["family_provenance"] == "user" and len(data["tree"]["nodes"]) == 5

    def test_family_missing_file(self, cli):
        code, _, err = cli(["tree", "--family", "/nonexistent/fam"], THETA_JSON)
        assert code == 2 and "--family" in err

    def test_verification_exit_3(self, cli, monkeypatch):
        from slicetree import pipeline
        from slicetree.pairtree import TreeCheck

        monkeypatch.setattr(pipeline, "verify_tree", lambda t: TreeCheck(False, "cycle", (0, 1, 2)))
        code, _, err = cli(["classify"], io.dumps(io.graph_to_json(theta_chain(2, 2))))
        assert code == 3 and "witness" in err

    def test_input_file(self, cli, tmp_path):
        path = tmp_path / "c7.txt"
        path.write_text(io.graph_to_edge_list(cycle(7)))
        _, out, _ = cli(["classify", str(path)])
        assert json.loads(out)["verdict"] == "circle"

    def test_missing_input_file(self, cli):
        code, _, err = cli(["classify", "/nonexistent/graph"])
        assert code == 2 and "cannot read" in err


def test_determinism(cli):
    g = io.dumps(io.graph_to_json(theta_chain(2, 2)))
    first = cli(["classify"], g)[1]
    assert first == cli(["classify"], g)[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "slicetree", "classify"],
        input="0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n",
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["verdict"] == "circle"


def test_disconnected_report():
    res = io.report_to_json(run_pipeline(Graph.from_edges(4, [(0, 1), (2, 3)])).report)
    assert res["verdict"] == "disconnected" and res["tree"] is None
