import json
import subprocess
import sys
from pathlib import Path

import pytest

from eigsum.graphs import family_star_plus, format_edge_list
from eigsum.search import canonical_form


def run_cli(*args, expect=0):
    proc = subprocess.run(
        [sys.executable, "-m", "eigsum.cli", *args],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == expect, (args, proc.returncode, proc.stderr, proc.stdout)
    return proc


class TestSpectrum:
    def test_family_table(self):
        out = run_cli("spectrum", "--family", "star-plus:3", "--kind", "Q").stdout
        assert "4.561553" in out
        assert "0.438447" in out
        assert "n=4 e=4" in out

    def test_g6_json(self):
        out = run_cli("spectrum", "--g6", "Bw", "--format", "json").stdout
        data = json.loads(out)
        assert data["n"] == 3 and data["e"] == 3
        assert abs(data["s2"] - 5) < 1e-9
        assert abs(data["f"] - 1) < 1e-9

    def test_certify_carries_exact_brackets(self):
        out = run_cli(
            "spectrum", "--family", "star-plus:3", "--certify", "--format", "json"
        ).stdout
        data = json.loads(out)
        lo_num, lo_den = data["f_exact"]["lo"].split("/")
        assert int(lo_den) > 0
        assert abs(data["f_exact"]["approx"] - data["f"]) < 1e-9

    def test_bipartite_kinds_agree(self):
        a = json.loads(
            run_cli("spectrum", "--family", "double-star:2,2", "--kind", "Q",
                    "--format", "json").stdout
        )
        b = json.loads(
            run_cli("spectrum", "--family", "double-star:2,2", "--kind", "L",
                    "--format", "json").stdout
        )
        assert max(
            abs(x - y) for x, y in zip(a["eigenvalues"], b["eigenvalues"])
        ) < 1e-9

    def test_edge_file_input(self, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text(format_edge_list(family_star_plus(3)))
        out = run_cli("spectrum", "--edge-file", str(path), "--format", "json").stdout
        assert json.loads(out)["e"] == 4

    def test_parse_error_exit_two(self):
        proc = run_cli("spectrum", "--g6", "B" + chr(33), expect=2)
        assert "offset" in proc.stderr

    def test_family_error_exit_two(self):
        run_cli("spectrum", "--family", "star-plus:2", expect=2)
        run_cli("spectrum", "--family", "nonsense:1", expect=2)

    def test_requires_exactly_one_input(self):
        run_cli("spectrum", expect=2)
        run_cli("spectrum", "--g6", "Bw", "--family", "path:3", expect=2)


class TestSearch:
    def test_min_f_edges_json(self):
        out = run_cli("search", "min-f-edges", "--m", "4", "--format", "json").stdout
        data = json.loads(out)
        assert data["argext"] == [canonical_form(family_star_plus(3))]
        assert data["unique"] is True

    def test_laplacian_equality_table(self):
        out = run_cli(
            "search", "laplacian-equality", "--n", "5", "--connected"
        ).stdout
        assert "unique    : False" in out
        assert len(out.strip().splitlines()[-1].split(":")[1].split()) == 3

    def test_max_s2(self):
        out = run_cli(
            "search", "max-s2-cycledim", "--n", "6", "--c", "1", "--format", "json"
        ).stdout
        data = json.loads(out)
        assert data["argext"] == [canonical_form(family_star_plus(5))]

    def test_missing_flags_exit_two(self):
        run_cli("search", "min-f-edges", expect=2)
        run_cli("search", "max-s2-cycledim", "--n", "6", expect=2)

    def test_infeasible_range_exit_two(self):
        run_cli("search", "min-f-edges", "--m", "3", expect=2)

    def test_g6_file_pool(self, tmp_path):
        lines = run_cli("enumerate", "--edges", "4").stdout
        path = tmp_path / "pool.g6"
        path.write_text(lines)
        out = run_cli(
            "search", "min-f-edges", "--m", "4", "--g6-file", str(path),
            "--format", "json"
        ).stdout
        assert json.loads(out)["argext"] == [canonical_form(family_star_plus(3))]

    def test_parallelism_flag(self):
        a = run_cli("search", "min-f-vertices", "--n", "5", "--format", "json").stdout
        b = run_cli(
            "search", "min-f-vertices", "--n", "5", "--format", "json",
            "--parallelism", "2"
        ).stdout
        assert a == b


class TestEnumerate:
    def test_trees_five(self):
        out = run_cli("enumerate", "--vertices", "5", "--trees").stdout
        assert len(out.strip().splitlines()) == 3

    def test_edges_three(self):
        out = run_cli("enumerate", "--edges", "3").stdout
        assert len(out.strip().splitlines()) == 5

    def test_vertices_four(self):
        out = run_cli("enumerate", "--vertices", "4").stdout
        assert len(out.strip().splitlines()) == 11

    def test_needs_exactly_one_mode(self):
        run_cli("enumerate", expect=2)
        run_cli("enumerate", "--vertices", "4", "--edges", "3", expect=2)

    def test_infeasible(self):
        run_cli("enumerate", "--vertices", "11", expect=2)


class TestVerifyCommand:
    def test_single_suite_pass(self, tmp_path):
        proc = run_cli(
            "verify", "interlacing", "--trials", "60", "--seed", "42",
            "--out", str(tmp_path)
        )
        assert "edge-insert-interlacing" in proc.stdout
        reports = json.loads((tmp_path / "reports.json").read_text())["reports"]
        assert reports[0]["status"] == "PASS"
        csv_text = (tmp_path / "summary.csv").read_text()
        assert csv_text.startswith("claim_id,status,trials,runtime_ms")

    def test_comma_list(self):
        proc = run_cli(
            "verify", "delta-spectrum,interlacing", "--trials", "30", "--seed", "1"
        )
        assert "compound-spectrum-ksums" in proc.stdout
        assert "edge-insert-interlacing" in proc.stdout

    def test_alias(self):
        proc = run_cli("verify", "t4", "--m", "4:5")
        assert "min-f-edges" in proc.stdout

    def test_subgraph_lemma_honest_failure(self):
        # the dense-subgraph claim is false in general: exit code 1 with a
        # replayable counterexample
        proc = run_cli("verify", "subgraph-lemma", "--n-max", "6", expect=1)
        assert "FAIL" in proc.stdout
        assert "counterexample" in proc.stdout

    def test_unknown_suite_exit_two(self):
        run_cli("verify", "bogus", expect=2)

    def test_range_flag(self):
        proc = run_cli("verify", "star-plus-bounds", "--n", "7:15")
        assert "PASS" in proc.stdout


class TestDeterminism:
    def test_byte_identical_reruns(self, tmp_path):
        cmds = [
            ("enumerate", "--vertices", "5"),
            ("search", "min-f-edges", "--m", "5", "--format", "json"),
            ("search", "laplacian-equality", "--m", "5", "--format", "csv"),
            ("spectrum", "--family", "G:2,1", "--certify", "--format", "json"),
        ]
        for cmd in cmds:
            a = run_cli(*cmd).stdout
            b = run_cli(*cmd).stdout
            assert a == b, cmd

    def test_verify_deterministic_modulo_runtime(self, tmp_path):
        out1 = tmp_path / "r1"
        out2 = tmp_path / "r2"
        for out in (out1, out2):
            run_cli(
                "verify", "interlacing", "--trials", "40", "--seed", "9",
                "--out", str(out)
            )
        r1 = json.loads((out1 / "reports.json").read_text())["reports"]
        r2 = json.loads((out2 / "reports.json").read_text())["reports"]
        for a, b in zip(r1, r2):
            a.pop("runtime_ms")
            b.pop("runtime_ms")
        assert r1 == r2
