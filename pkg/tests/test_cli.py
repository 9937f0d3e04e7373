"""Command-line interface: JSON output, exit codes, file handling."""

import json
import subprocess
import sys

import pytest

from fullgraph.graphs import from_graph6
from fullgraph.verifier import is_full
from fullgraph.patterns import parse_pattern_list


def run(*args, stdin=None, env=None):
    import os

    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run(
        [sys.executable, "-m", "fullgraph", *args],
        input=stdin,
        capture_output=True,
        text=True,
        env=full_env,
        timeout=300,
    )


class TestConstruct:
    def test_cyclic_json_shape(self):
        p = run("construct", "--theorem", "cyclic", "--patterns", "K3,E3")
        assert p.returncode == 0, p.stderr
        out = json.loads(p.stdout)
        assert out["order"] == 8
        assert out["verified"] is True
        assert out["recipe"]["theorem_tag"] == "cyclic"
        g = from_graph6(out["graph6"])
        assert is_full(g, parse_pattern_list("K3,E3")).verdict

    def test_star_pinned(self):
        p = run("construct", "--theorem", "star", "--m", "3", "--n", "5")
        assert p.returncode == 0
        out = json.loads(p.stdout)
        assert out["order"] == 9
        assert out["recipe"]["parameters"]["k"] == 2
        assert out["recipe"]["parameters"]["r"] == 3

    def test_design_with_plane(self):
        p = run("construct", "--theorem", "design", "--patterns", "K3,P3,E3", "--q", "3")
        assert p.returncode == 0
        out = json.loads(p.stdout)
        assert out["order"] == 9

    def test_h_vs_empty(self):
        p = run("construct", "--theorem", "h_vs_empty", "--patterns", "P3", "--n", "9")
        assert p.returncode == 0
        out = json.loads(p.stdout)
        assert out["order"] == 15

    def test_complete_bipartite(self):
        p = run("construct", "--theorem", "complete_bipartite", "--m", "4", "--n", "2")
        assert p.returncode == 0
        assert json.loads(p.stdout)["order"] == 5

    def test_delta_zero(self):
        p = run("construct", "--theorem", "delta_zero", "--patterns", "K2+K1", "--n", "3")
        assert p.returncode == 0
        assert json.loads(p.stdout)["order"] == 4

    def test_out_files(self, tmp_path):
        g6 = tmp_path / "g.g6"
        rec = tmp_path / "r.json"
        p = run("construct", "--theorem", "cyclic", "--patterns", "K2,E2",
                "--out", str(g6), "--recipe-out", str(rec))
        assert p.returncode == 0
        host = from_graph6(g6.read_text().strip())
        assert host.order == 4
        recipe = json.loads(rec.read_text())
        assert recipe["claimed_order"] == 4

    def test_precondition_error_exits_two(self):
        p = run("construct", "--theorem", "star", "--m", "3", "--n", "2")
        assert p.returncode == 2
        assert "error" in p.stderr.lower()

    def test_no_verify_skips_check(self):
        p = run("construct", "--theorem", "cyclic", "--patterns", "K2", "--no-verify")
        assert p.returncode == 0
        out = json.loads(p.stdout)
        assert out["verified"] is None

    def test_missing_required_params_exit_two(self):
        p = run("construct", "--theorem", "star", "--m", "3")
        assert p.returncode == 2
        p = run("construct", "--theorem", "cyclic")
        assert p.returncode == 2


class TestVerify:
    def test_verdict_true_exits_zero(self, tmp_path):
        f = tmp_path / "m.g6"
        f.write_text("CQ\n")  # perfect matching on four vertices
        p = run("verify", str(f), "--patterns", "K2,E2")
        assert p.returncode == 0
        out = json.loads(p.stdout)
        assert out["verdict"] is True
        assert all(entry["uncovered"] == [] for entry in out["patterns"])

    def test_verdict_false_exits_one(self, tmp_path):
        f = tmp_path / "k4.g6"
        f.write_text("C~\n")
        p = run("verify", str(f), "--patterns", "E2")
        assert p.returncode == 1
        out = json.loads(p.stdout)
        assert out["verdict"] is False
        assert out["patterns"][0]["uncovered"] == [0, 1, 2, 3]

    def test_stdin_host(self):
        p = run("verify", "-", "--patterns", "K2", stdin="A_\n")
        assert p.returncode == 0

    def test_missing_file_exits_two(self):
        p = run("verify", "/nonexistent/host.g6", "--patterns", "K2")
        assert p.returncode == 2

    def test_malformed_graph6_exits_two(self, tmp_path):
        f = tmp_path / "bad.g6"
        f.write_text("A_?trailing\n")
        p = run("verify", str(f), "--patterns", "K2")
        assert p.returncode == 2

    def test_bad_pattern_exits_two(self, tmp_path):
        f = tmp_path / "m.g6"
        f.write_text("A_\n")
        p = run("verify", str(f), "--patterns", "X9")
        assert p.returncode == 2


class TestBound:
    def test_egh(self):
        p = run("bound", "--egh", "3", "3")
        assert p.returncode == 0
        assert json.loads(p.stdout)["value"] == 8

    def test_star(self):
        p = run("bound", "--star", "3", "5")
        assert p.returncode == 0
        assert json.loads(p.stdout)["value"] == 9

    def test_summary_table(self):
        p = run("bound", "--patterns", "K2", "--n", "5")
        assert p.returncode == 0
        out = json.loads(p.stdout)
        entries = {e["name"]: e for e in out["entries"]}
        assert entries["complete_vs_empty_exact"]["value"] == 9
        assert out["best_lower"] == 9
        assert out["best_upper"] == 9

    def test_rejects_egh_below_two(self):
        p = run("bound", "--egh", "1", "5")
        assert p.returncode == 2


class TestSearch:
    def test_small_instance(self, tmp_path):
        p = run("search", "--patterns", "K2,E2", "--cache-dir", str(tmp_path))
        assert p.returncode == 0
        out = json.loads(p.stdout)
        assert out["f"] == 4
        assert out["witness"] == "CQ"
        assert "wall_time" not in out

    def test_reruns_are_byte_identical(self, tmp_path):
        p1 = run("search", "--patterns", "K2,E2", "--cache-dir", str(tmp_path))
        p2 = run("search", "--patterns", "K2,E2", "--cache-dir", str(tmp_path))
        assert p1.stdout == p2.stdout

    def test_env_cache_dir(self, tmp_path):
        p = run("search", "--patterns", "K2,E2", env={"FULLGRAPH_CACHE": str(tmp_path)})
        assert p.returncode == 0
        assert (tmp_path / "f_exact.jsonl").exists()

    def test_max_order_cap(self, tmp_path):
        p = run("search", "--patterns", "K4,E4", "--max-order", "6",
                "--cache-dir", str(tmp_path))
        assert p.returncode == 0
        out = json.loads(p.stdout)
        assert out["f"] is None
        assert out["exhaustive"] is True

    def test_lower_flag(self, tmp_path):
        p = run("search", "--patterns", "K2,E2", "--lower", "4",
                "--cache-dir", str(tmp_path))
        assert p.returncode == 0
        assert json.loads(p.stdout)["f"] == 4


class TestDesignCommand:
    def test_emits_valid_design(self, tmp_path):
        p = run("design", "--q", "3")
        assert p.returncode == 0
        out = json.loads(p.stdout)
        assert out["points"] == 9
        assert len(out["classes"]) == 4

    def test_out_file(self, tmp_path):
        f = tmp_path / "plane.json"
        p = run("design", "--q", "2", "--out", str(f))
        assert p.returncode == 0
        data = json.loads(f.read_text())
        assert data["points"] == 4

    def test_unsupported_order_exits_two(self):
        p = run("design", "--q", "6")
        assert p.returncode == 2


class TestUsage:
    def test_no_command_exits_two(self):
        p = run()
        assert p.returncode == 2

    def test_unknown_command_exits_two(self):
        p = run("frobnicate")
        assert p.returncode == 2

    def test_help_exits_zero(self):
        p = run("--help")
        assert p.returncode == 0
        assert "construct" in p.stdout
