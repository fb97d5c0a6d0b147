import json
import math

import pytest

from starfree import cli
from starfree.families import make_complete_bipartite
from starfree.graphs import graph6_decode, graph6_encode


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestConstructAndQueries:
    def test_construct_complete_bipartite(self, capsys):
        code, out, _ = run(capsys, "construct", "kb", "2", "9")
        assert code == 0
        assert graph6_decode(out.strip()).n == 11
        assert out.strip() == graph6_encode(make_complete_bipartite(2, 9))

    def test_construct_join_regular(self, capsys):
        code, out, _ = run(capsys, "construct", "joinreg", "10", "3", "3")
        assert code == 0
        assert graph6_decode(out.strip()).n == 10

    def test_rho_of_inline_graph(self, capsys):
        g6 = graph6_encode(make_complete_bipartite(2, 9))
        code, out, _ = run(capsys, "rho", g6)
        assert code == 0
        assert float(out.strip()) == pytest.approx(math.sqrt(18), abs=1e-9)

    def test_graph_from_file(self, capsys, tmp_path):
        path = tmp_path / "g.g6"
        path.write_text(graph6_encode(make_complete_bipartite(1, 3)) + "\n")
        code, out, _ = run(capsys, "rho", str(path))
        assert code == 0
        assert float(out.strip()) == pytest.approx(math.sqrt(3), abs=1e-9)

    def test_free_semantics_on_paths(self, capsys):
        from conftest import path_graph

        # the 4-vertex path cannot host a 2-star plus a 1-star (order 5)
        code, out, _ = run(capsys, "free", graph6_encode(path_graph(4)), "2,1")
        assert code == 0 and out.strip() == "true"
        # the 5-vertex path contains them, so it is not free
        code, out, _ = run(capsys, "free", graph6_encode(path_graph(5)), "2,1")
        assert code == 0 and out.strip() == "false"

    def test_spectrum_json(self, capsys):
        code, out, _ = run(capsys, "--json", "spectrum", graph6_encode(make_complete_bipartite(2, 3)))
        payload = json.loads(out)
        assert payload["method"] == "jacobi"
        assert payload["eigenvalues"][0] == pytest.approx(math.sqrt(6), abs=1e-9)


class TestBoundsAndThresholds:
    def test_bound_t18_attained_by(self, capsys):
        code, out, _ = run(capsys, "--json", "bound", "t18", "11", "3")
        payload = json.loads(out)
        assert code == 0
        assert payload["value"] == pytest.approx(math.sqrt(18), abs=1e-9)
        assert payload["attained_by"] == graph6_encode(make_complete_bipartite(2, 9))

    def test_threshold_table_form(self, capsys):
        code, out, _ = run(capsys, "threshold", "thm_3_1", "2,2")
        assert code == 0
        assert out.strip().endswith("= 1936/1")

    def test_threshold_k2_domain_error(self, capsys):
        code, _, err = run(capsys, "threshold", "thm_1_7", "2,2")
        assert code == 1
        assert "DivisionByZeroK2" in err

    def test_bad_graph6_domain_error(self, capsys):
        code, _, err = run(capsys, "rho", "~~~nope!")
        assert code == 1
        assert "ParseError" in err

    def test_usage_error_exit_two(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["bound", "nosuch", "1", "2"])
        assert exc.value.code == 2


class TestSearchAndSuites:
    def test_search_json_and_out(self, capsys, tmp_path):
        out_path = tmp_path / "rec.jsonl"
        code, out, _ = run(capsys, "--json", "search", "6", "2,2", "connected", "--out", str(out_path))
        assert code == 0
        payload = json.loads(out)
        assert payload["count_enumerated"] == 112
        from starfree.search import read_records

        recs = read_records(out_path)
        assert len(recs) == 1 and recs[0].max_rho == payload["max_rho"]

    def test_verify_edge_clean(self, capsys):
        code, out, _ = run(capsys, "verify", "edge", "6", "1,1", "all")
        assert code == 0
        assert "0 violation" in out

    def test_verify_lemma23_clean(self, capsys):
        code, out, _ = run(capsys, "verify", "lemma23", "--max-n", "12", "--max-k", "3", "--max-d", "3")
        assert code == 0
        assert "0 failure" in out

    def test_verify_bipartite_clean(self, capsys):
        code, out, _ = run(capsys, "verify", "bipartite", "--max-n", "6")
        assert code == 0

    def test_violations_exit_three(self, capsys, monkeypatch):
        from starfree.search import EdgeBoundViolation

        monkeypatch.setattr(
            cli, "verify_edge_bound", lambda *a, **k: [EdgeBoundViolation("E???", 99, 1)]
        )
        code, out, _ = run(capsys, "verify", "edge", "6", "1,1", "all")
        assert code == 3
        assert "1 violation" in out

    def test_conjecture_table(self, capsys):
        code, out, _ = run(capsys, "--json", "conjecture", "6", "2,2", "connected")
        assert code == 0
        payload = json.loads(out)
        assert len(payload["rows"]) >= 1
        assert payload["max_margin"] == max(r["margin"] for r in payload["rows"])

    def test_perron(self, capsys):
        code, out, _ = run(capsys, "--json", "perron", graph6_encode(make_complete_bipartite(2, 9)))
        assert code == 0
        payload = json.loads(out)
        assert payload["floor_ok"] is True
        assert payload["rho"] == pytest.approx(math.sqrt(18), abs=1e-9)


class TestDeterminism:
    def test_json_byte_identical_across_runs(self, capsys):
        outputs = set()
        for _ in range(2):
            _, out, _ = run(capsys, "--json", "search", "5", "2,1", "all")
            outputs.add(out)
        assert len(outputs) == 1

    def test_spectrum_runs_stable(self, capsys):
        g6 = graph6_encode(make_complete_bipartite(3, 4))
        outputs = {run(capsys, "--json", "spectrum", g6)[1] for _ in range(2)}
        assert len(outputs) == 1
