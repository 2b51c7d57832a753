"""Command line contract: outputs, exit codes, artifacts, determinism."""

import json
import subprocess
import sys

import pytest

from graphcurvature.cli import main
from graphcurvature.graphs import load_graph
from graphcurvature.report import from_csv, from_json


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCurvatureCommand:
    def test_vertex_probe(self, capsys):
        code, out, err = run_cli(
            capsys, "curvature", "gen:petersen", "--vertex", "o0")
        assert code == 0
        assert "-1" in out
        assert "multi-unlinked" in out

    def test_edge_probe_table(self, capsys):
        code, out, _ = run_cli(
            capsys, "curvature", "gen:cycle:5", "--edge", "1,2")
        assert code == 0
        assert "1/4" in out

    def test_edge_probe_parenthesized_labels(self, capsys):
        code, out, _ = run_cli(
            capsys, "curvature", "gen:zigzag:hypercube:6,cycle:6",
            "--edge", "(000000,1),(010000,3)")
        assert code == 0
        assert "-1/4" in out

    def test_all_sweep_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "curvature", "gen:hypercube:2", "--all",
            "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert len(doc["vertices"]) == 4
        assert len(doc["edges"]) == 4
        assert all(r["kappa"] == "1/2" for r in doc["edges"])
        assert all(r["rho"] == "2" for r in doc["vertices"])
        assert all(c["passed"] for c in doc["checks"])

    def test_all_sweep_csv_parses_back(self, capsys):
        code, out, _ = run_cli(
            capsys, "curvature", "gen:cycle:5", "--all", "--format", "csv")
        assert code == 0
        rep = from_csv(out)
        assert len(rep.vertices) == 5
        assert len(rep.edges) == 5

    def test_out_writes_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run_cli(
            capsys, "curvature", "gen:hypercube:2", "--all",
            "--format", "json", "--out", str(target))
        assert code == 0
        assert out == ""
        assert from_json(target.read_text()).all_passed()

    def test_file_source(self, capsys, tmp_path):
        p = tmp_path / "edge.json"
        p.write_text(json.dumps({
            "vertices": [0, 1], "edges": [[0, 1]],
            "labels": {"0": "x", "1": "y"},
        }))
        code, out, _ = run_cli(
            capsys, "curvature", f"file:{p}", "--vertex", "x")
        assert code == 0
        assert "2" in out

    def test_truncation_refusal(self, capsys):
        code, out, err = run_cli(
            capsys, "curvature", "gen:tree:3:4", "--vertex", "r.1.1.1.1")
        assert code == 2
        assert "refusing to probe" in err

    def test_unknown_generator(self, capsys):
        code, _, err = run_cli(capsys, "curvature", "gen:nonsense", "--all")
        assert code == 2
        assert "error:" in err

    def test_non_edge_rejected(self, capsys):
        code, _, err = run_cli(
            capsys, "curvature", "gen:cycle:6", "--edge", "1,3")
        assert code == 2
        assert "error:" in err


class TestVerifyCommand:
    SMALL = ["hypercube:2..3", "cycle:5", "star:3"]

    def test_small_corpus_passes(self, capsys):
        code, out, err = run_cli(capsys, "verify", *self.SMALL)
        assert code == 0
        assert "[FAIL]" not in out
        assert err == ""

    def test_range_expansion(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "hypercube:2..3", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        graphs = {r["graph"] for r in doc["vertices"]}
        assert graphs == {"hypercube:2", "hypercube:3"}
        assert set(doc["timing"]) == {"hypercube:2", "hypercube:3"}

    def test_fault_injection_fails_and_writes_artifacts(
            self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("CURVATURE_CORPUS_DIR", str(tmp_path))
        code, out, err = run_cli(
            capsys, "verify", "hypercube:3", "--inject-fault", "kappa")
        assert code == 1
        assert "[FAIL]" in out
        assert "check(s) failed" in err
        graph_file = tmp_path / "hypercube_3.json"
        violations_file = tmp_path / "hypercube_3.violations.json"
        assert graph_file.exists() and violations_file.exists()
        # the artifact graph round-trips into the library
        g = load_graph(graph_file)
        assert len(g.vertices) == 8
        doc = json.loads(violations_file.read_text())
        assert doc["spec"] == "hypercube:3"
        assert {v["check"] for v in doc["violations"]} == {
            "ollivier-class", "bipartite-transport",
            "transport-upper-bound", "quantization"}

    def test_no_artifacts_without_env(self, capsys, tmp_path, monkeypatch):
        monkeypatch.delenv("CURVATURE_CORPUS_DIR", raising=False)
        monkeypatch.chdir(tmp_path)
        code, *_ = run_cli(
            capsys, "verify", "hypercube:2", "--inject-fault", "rho")
        assert code == 1
        assert list(tmp_path.iterdir()) == []

    def test_parallel_matches_sequential(self, capsys):
        code1, out1, _ = run_cli(
            capsys, "verify", *self.SMALL, "--format", "csv")
        code2, out2, _ = run_cli(
            capsys, "verify", *self.SMALL, "--format", "csv", "--jobs", "3")
        assert code1 == code2 == 0
        assert out1 == out2  # csv carries no timing, so byte-identical

    def test_json_differs_only_in_timing(self, capsys):
        _, out1, _ = run_cli(
            capsys, "verify", "cycle:5", "--format", "json")
        _, out2, _ = run_cli(
            capsys, "verify", "cycle:5", "--format", "json", "--jobs", "2")
        d1, d2 = json.loads(out1), json.loads(out2)
        d1.pop("timing"), d2.pop("timing")
        assert d1 == d2


class TestDiameterBoundCommand:
    def test_tight_hypercube(self, capsys):
        code, out, _ = run_cli(capsys, "diameter-bound", "gen:hypercube:4")
        assert code == 0
        assert "diameter: 4" in out
        assert "4 <= 4: holds" in out

    def test_star_uses_irregular_bound(self, capsys):
        code, out, _ = run_cli(
            capsys, "diameter-bound", "gen:star:5", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["diameter"] == 2
        assert doc["kappa_star"] == "1/5"
        names = [b["name"] for b in doc["bounds"]]
        assert any("2d^2-2d" in n for n in names)
        assert all(b["holds"] for b in doc["bounds"])

    def test_nonpositive_curvature_reports_vacuous(self, capsys):
        code, out, _ = run_cli(capsys, "diameter-bound", "gen:petersen")
        assert code == 0
        assert "not applicable" in out

    def test_truncated_graph_rejected(self, capsys):
        code, _, err = run_cli(capsys, "diameter-bound", "gen:lattice:2:4")
        assert code == 2
        assert "truncated" in err

    def test_disconnected_raw_graph(self, capsys, tmp_path):
        p = tmp_path / "two.json"
        p.write_text(json.dumps({
            "vertices": [0, 1, 2, 3],
            "edges": [[0, 1], [2, 3]],
        }))
        code, _, err = run_cli(capsys, "diameter-bound", f"file:{p}")
        assert code == 2
        assert "disconnected" in err


class TestGenCommand:
    def test_json_stdout_round_trip(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "gen", "gen:petersen")
        assert code == 0
        p = tmp_path / "g.json"
        p.write_text(out)
        g = load_graph(p)
        assert len(g.vertices) == 10 and len(g.edges) == 15

    def test_edgelist_out(self, capsys, tmp_path):
        target = tmp_path / "g.edges"
        code, out, _ = run_cli(
            capsys, "gen", "gen:cycle:6", "--format", "edgelist",
            "--out", str(target))
        assert code == 0
        g = load_graph(target)
        assert len(g.edges) == 6

    def test_generated_lattice_keeps_truncation(self, capsys, tmp_path):
        target = tmp_path / "lat.json"
        code, *_ = run_cli(
            capsys, "gen", "gen:lattice:2:4", "--out", str(target))
        assert code == 0
        g = load_graph(target)
        assert g.truncation is not None
        assert g.truncation.host_degree == 4


class TestEntryPoint:
    def test_console_script_help(self):
        proc = subprocess.run(
            [sys.executable, "-m", "graphcurvature", "--help"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert "curvature" in proc.stdout
