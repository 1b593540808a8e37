import json
import subprocess
import sys

import pytest

from bpvd import Graph, serialize_graph
from bpvd.cli import EXIT_CONTRACT, EXIT_NO, EXIT_OK, EXIT_USAGE, main


def cycle_text(m):
    return serialize_graph(Graph(m, [(i, (i + 1) % m) for i in range(m)]))


@pytest.fixture
def c10_file(tmp_path):
    f = tmp_path / "c10.txt"
    f.write_text(cycle_text(10))
    return str(f)


@pytest.fixture
def t2_file(tmp_path):
    g = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    f = tmp_path / "t2.txt"
    f.write_text(serialize_graph(g))
    return str(f)


def run_main(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


class TestRecognize:
    def test_almost_bpg(self, c10_file, capsys):
        code, out = run_main(["recognize", c10_file, "--json"], capsys)
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["class"] == "almost-bpg"
        assert payload["witness"]["length"] == 10

    def test_neither_with_t2_witness(self, t2_file, capsys):
        code, out = run_main(["recognize", t2_file, "--json"], capsys)
        payload = json.loads(out)
        assert payload["class"] == "neither"
        assert payload["witness"]["kind"] == "T2"
        assert payload["witness"]["vertices"] == [1, 2, 3, 4, 5, 6, 7]

    def test_bpg(self, tmp_path, capsys):
        f = tmp_path / "p4.txt"
        f.write_text("p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n")
        code, out = run_main(["recognize", str(f), "--json"], capsys)
        assert json.loads(out)["class"] == "bpg"

    def test_human_mode(self, c10_file, capsys):
        code, out = run_main(["recognize", c10_file], capsys)
        assert "almost bipartite permutation" in out


class TestSolve:
    def test_yes(self, c10_file, capsys):
        code, out = run_main(["solve", "--k", "1", c10_file, "--json"], capsys)
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["answer"] == "yes" and len(payload["deleted"]) == 1
        assert payload["verified"] is True
        assert payload["stats"]["branch_nodes"] >= 1

    def test_no(self, c10_file, capsys):
        code, out = run_main(["solve", "--k", "0", c10_file, "--json"], capsys)
        payload = json.loads(out)
        assert code == EXIT_NO
        assert payload["answer"] == "no" and payload["deleted"] == []

    def test_k_zero_on_bpg(self, tmp_path, capsys):
        f = tmp_path / "stair.txt"
        f.write_text("p edge 4 4\ne 1 3\ne 1 4\ne 2 3\ne 2 4\n")
        code, out = run_main(["solve", "--k", "0", str(f), "--json"], capsys)
        assert code == EXIT_OK and json.loads(out)["deleted"] == []

    def test_schema_stable(self, c10_file, capsys):
        _, out = run_main(["solve", "--k", "1", c10_file, "--json"], capsys)
        payload = json.loads(out)
        assert set(payload) == {"answer", "k", "deleted", "branch_deleted", "cut_deleted", "stats", "verified"}


class TestAnalyze:
    def test_structure_dump(self, c10_file, capsys):
        code, out = run_main(["analyze", c10_file, "--json"], capsys)
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["m"] == 10 and payload["parity"] == "cylinder"
        assert payload["report"]["passed"] is True
        assert len(payload["classes"]["A"]) == 10

    def test_requires_hole(self, tmp_path, capsys):
        f = tmp_path / "p4.txt"
        f.write_text("p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n")
        assert main(["analyze", str(f)]) == EXIT_CONTRACT

    def test_requires_almost_bpg(self, t2_file, capsys):
        assert main(["analyze", t2_file]) == EXIT_CONTRACT


class TestApproxOracleVerify:
    def test_approx(self, c10_file, capsys):
        code, out = run_main(["approx", c10_file, "--json"], capsys)
        payload = json.loads(out)
        assert code == EXIT_OK and payload["size"] == 1 and payload["verified"] is True

    def test_oracle(self, c10_file, capsys):
        code, out = run_main(["oracle", c10_file, "--json"], capsys)
        assert code == EXIT_OK and json.loads(out)["optimum"] == 1

    def test_oracle_guard(self, tmp_path, capsys):
        f = tmp_path / "big.txt"
        f.write_text(cycle_text(14))
        assert main(["oracle", str(f), "--max-n", "12"]) == EXIT_CONTRACT

    def test_verify_valid(self, c10_file, tmp_path, capsys):
        d = tmp_path / "del.json"
        d.write_text('{"deleted": [3]}')
        assert main(["verify", c10_file, "--deleted", str(d)]) == EXIT_OK

    def test_verify_invalid(self, c10_file, tmp_path, capsys):
        d = tmp_path / "del.txt"
        d.write_text("")
        assert main(["verify", c10_file, "--deleted", str(d)]) == EXIT_NO

    def test_verify_plain_ids(self, c10_file, tmp_path, capsys):
        d = tmp_path / "del.txt"
        d.write_text("3 7\n")
        assert main(["verify", c10_file, "--deleted", str(d)]) == EXIT_OK


class TestGen:
    def test_gen_files_and_sidecar(self, tmp_path, capsys):
        out = tmp_path / "g.txt"
        code = main([
            "gen", "--family", "thickened_cycle", "--m", "10",
            "--extra-a", "1", "--seed", "5", "--out", str(out),
        ])
        assert code == EXIT_OK
        sidecar = json.loads((tmp_path / "g.txt.json").read_text())
        assert sidecar["family"] == "thickened_cycle" and sidecar["seed"] == 5
        assert main(["recognize", str(out), "--json"]) == EXIT_OK

    def test_gen_planted_sidecar_bound(self, tmp_path, capsys):
        out = tmp_path / "p.txt"
        code = main([
            "gen", "--family", "planted", "--base-family", "staircase",
            "--nu", "3", "--nw", "3", "--q", "2", "--seed", "9", "--out", str(out),
        ])
        assert code == EXIT_OK
        sidecar = json.loads((tmp_path / "p.txt.json").read_text())
        assert sidecar["opt_upper_bound"] == 2

    def test_gen_missing_param(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["gen", "--family", "staircase", "--seed", "1"])
        assert exc.value.code == EXIT_USAGE


class TestErrors:
    def test_parse_error_exit_2(self, tmp_path, capsys):
        f = tmp_path / "bad.txt"
        f.write_text("p edge 2 1\ne 1 1\n")
        assert main(["recognize", str(f)]) == EXIT_USAGE

    def test_missing_file_exit_2(self, capsys):
        assert main(["recognize", "/nonexistent/g.txt"]) == EXIT_USAGE

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["solve"])  # missing --k
        assert exc.value.code == EXIT_USAGE

    def test_bad_worker_count(self, c10_file, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["recognize", c10_file, "--workers", "0"])
        assert exc.value.code == EXIT_USAGE


def test_byte_identical_runs(c10_file):
    cmd = [sys.executable, "-m", "bpvd.cli", "solve", "--k", "1", c10_file, "--json"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    assert first.returncode == second.returncode == EXIT_OK
    assert first.stdout == second.stdout and first.stdout
