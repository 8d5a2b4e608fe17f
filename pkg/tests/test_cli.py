import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

import helpers
from sc1p import BinaryMatrix
from sc1p.cli import main

DATA = Path(__file__).parent / "data"

MI1_TEXT = "3 3\n110\n011\n101\n"
SC1P_TEXT = "2 3\n110\n011\n"
M21_TEXT = "4 4\n1100\n0110\n0111\n1101\n"
M31T_TEXT = "4 3\n100\n111\n010\n001\n"
ZEROS12_TEXT = "12 12\n" + ("0" * 12 + "\n") * 12
TRIANGLE_TEXT = "3 3\n0 1\n0 2\n1 2\n"
P3_TEXT = "3 2\n0 1\n1 2\n"
DISCONNECTED_TEXT = "4 2\n0 1\n2 3\n"
TWO_PAIRS_TEXT = "4 2\n0 1\n2 3\n"

SOLVE_KEYS = {"answer", "budget", "certificate", "input_sha256", "problem",
              "stats", "time_ms"}
CERT_KEYS = {"cost", "deleted_cols", "deleted_rows", "flips",
             "from_reduced_graph"}


def put(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *args):
    code, out, err = run(capsys, *args)
    return code, json.loads(out), err


# ------------------------------------------------------------------ check

def test_check_yes_with_witness(tmp_path, capsys):
    path = put(tmp_path, "m.txt", SC1P_TEXT)
    code, doc, _ = run_json(capsys, "check", path)
    assert code == 0
    assert doc["answer"] == "yes"
    assert doc["problem"] == "recognize"
    assert doc["forbidden"] is None
    assert doc["time_ms"] is None
    # the reported orders really witness the property
    m = BinaryMatrix.parse(SC1P_TEXT)
    rows = m.to_lists()
    ro, co = doc["witness"]["row_order"], doc["witness"]["col_order"]
    grid = [[rows[i][j] for j in co] for i in ro]
    assert all(helpers.consecutive(r) for r in grid)
    assert all(helpers.consecutive([g[j] for g in grid])
               for j in range(len(co)))


def test_check_no_reports_forbidden(tmp_path, capsys):
    path = put(tmp_path, "m.txt", MI1_TEXT)
    code, doc, _ = run_json(capsys, "check", path)
    assert code == 1
    assert doc["answer"] == "no"
    assert doc["witness"] is None
    assert doc["forbidden"]["kind"] == "MIk"
    assert doc["forbidden"]["k"] == 1
    assert sorted(doc["forbidden"]["rows"]) == [0, 1, 2]
    assert sorted(doc["forbidden"]["cols"]) == [0, 1, 2]


@pytest.mark.parametrize("text", ["", "3 3\n110\n", "2 2\nxy\n01\n"])
def test_check_parse_error(tmp_path, capsys, text):
    path = put(tmp_path, "m.txt", text)
    code, out, err = run(capsys, "check", path)
    assert code == 2
    assert out == ""
    assert "error:" in err


def test_check_missing_file(tmp_path, capsys):
    code, out, err = run(capsys, "check", str(tmp_path / "absent.txt"))
    assert code == 2
    assert out == ""


# ------------------------------------------------------------------ solve

def test_solve_flip_worked_case(tmp_path, capsys):
    path = put(tmp_path, "m.txt", MI1_TEXT)
    code, doc, _ = run_json(capsys, "solve", path, "--problem", "sc1p-0e",
                            "--budget", "1")
    assert code == 0
    assert doc["answer"] == "yes"
    assert set(doc) == SOLVE_KEYS
    cert = doc["certificate"]
    assert set(cert) == CERT_KEYS
    assert cert["flips"] == [[0, 2, "0->1"]]
    assert cert["deleted_rows"] == [] and cert["deleted_cols"] == []
    assert cert["cost"] == 1


def test_solve_no_within_budget(tmp_path, capsys):
    path = put(tmp_path, "m.txt", M21_TEXT)
    code, doc, _ = run_json(capsys, "solve", path, "--problem", "sc1s-r",
                            "--budget", "0")
    assert code == 1
    assert doc["answer"] == "no"
    assert doc["certificate"] is None


def test_solve_reports_search_stats(tmp_path, capsys):
    path = put(tmp_path, "m.txt", M21_TEXT)
    code, doc, _ = run_json(capsys, "solve", path, "--problem", "sc1s-r",
                            "--budget", "1")
    assert code == 0
    assert doc["certificate"]["deleted_rows"] == [0]
    assert set(doc["stats"]) == {"cycle_phase_nodes", "fixed_phase_nodes",
                                 "nodes_expanded"}
    assert all(isinstance(v, int) for v in doc["stats"].values())


def test_solve_unsupported_combination(tmp_path, capsys):
    # no exact solver covers source-1 flips on an unbounded matrix
    path = put(tmp_path, "m.txt", M21_TEXT)
    for mode in ("auto", "fpt"):
        code, out, err = run(capsys, "solve", path, "--problem", "sc1p-01e",
                             "--budget", "1", "--mode", mode)
        assert code == 3
        assert out == ""
        assert "error:" in err


def test_solve_oracle_mode(tmp_path, capsys):
    path = put(tmp_path, "m.txt", M21_TEXT)
    code, doc, _ = run_json(capsys, "solve", path, "--problem", "sc1p-01e",
                            "--budget", "1", "--mode", "oracle")
    assert code == 0
    assert doc["certificate"]["flips"] == [[0, 0, "1->0"]]
    assert doc["stats"] is None


def test_solve_oracle_guard(tmp_path, capsys):
    path = put(tmp_path, "m.txt", ZEROS12_TEXT)
    code, out, err = run(capsys, "solve", path, "--problem", "sc1p-0e",
                         "--budget", "6", "--mode", "oracle")
    assert code == 4
    assert out == ""
    assert "guard" in err


def test_solve_approx_mode(tmp_path, capsys):
    path = put(tmp_path, "m.txt", M31T_TEXT)
    code, doc, _ = run_json(capsys, "solve", path, "--problem", "sc1s-r",
                            "--budget", "4", "--mode", "approx")
    assert code == 0
    assert doc["certificate"]["deleted_rows"] == [0, 1, 2, 3]

    # a miss still reports the approximate certificate for inspection
    code, doc, _ = run_json(capsys, "solve", path, "--problem", "sc1s-r",
                            "--budget", "0", "--mode", "approx")
    assert code == 1
    assert doc["answer"] == "no"
    assert doc["certificate"]["cost"] == 4


def test_solve_approx_unsupported(tmp_path, capsys):
    path = put(tmp_path, "m.txt", M21_TEXT)
    code, out, _ = run(capsys, "solve", path, "--problem", "sc1s-r",
                       "--budget", "1", "--mode", "approx")
    assert code == 3
    assert out == ""


def test_solve_rejects_bad_threads(tmp_path, capsys):
    path = put(tmp_path, "m.txt", MI1_TEXT)
    code, out, err = run(capsys, "solve", path, "--problem", "sc1s-r",
                         "--budget", "1", "--threads", "0")
    assert code == 2
    assert out == ""


# ----------------------------------------------------------------- reduce

def test_reduce_hampath(tmp_path, capsys):
    path = put(tmp_path, "g.txt", TRIANGLE_TEXT)
    code, doc, _ = run_json(capsys, "reduce", path, "--kind", "hampath")
    assert code == 0
    assert doc["kind"] == "hampath"
    assert doc["budget"] == 1
    assert BinaryMatrix.parse(doc["matrix"]).to_lists() == \
        [[1, 1, 0], [1, 0, 1], [0, 1, 1]]

    path = put(tmp_path, "p3.txt", P3_TEXT)
    code, doc, _ = run_json(capsys, "reduce", path, "--kind", "hampath")
    assert doc["budget"] == 0


def test_reduce_hampath_disconnected(tmp_path, capsys):
    path = put(tmp_path, "g.txt", DISCONNECTED_TEXT)
    code, out, err = run(capsys, "reduce", path, "--kind", "hampath")
    assert code == 3
    assert out == ""
    assert "connected" in err


def test_reduce_chain_kinds(tmp_path, capsys):
    path = put(tmp_path, "g.txt", TWO_PAIRS_TEXT)
    code, doc, _ = run_json(capsys, "reduce", path, "--kind",
                            "chain-completion", "--parts", "0,2/1,3")
    assert code == 0
    assert doc["budget"] is None
    assert BinaryMatrix.parse(doc["matrix"]).to_lists() == \
        [[1, 1, 1, 0], [1, 1, 0, 1], [0, 0, 1, 1], [0, 0, 1, 1]]

    code, doc, _ = run_json(capsys, "reduce", path, "--kind", "chain-editing",
                            "--parts", "0,2/1,3")
    assert code == 0
    m = BinaryMatrix.parse(doc["matrix"])
    assert (m.nrows, m.ncols) == (6, 6)


def test_reduce_bad_parts(tmp_path, capsys):
    path = put(tmp_path, "g.txt", TWO_PAIRS_TEXT)
    code, out, err = run(capsys, "reduce", path, "--kind", "chain-completion",
                         "--parts", "0;1")
    assert code == 2
    assert out == ""
    code, out, err = run(capsys, "reduce", path, "--kind", "chain-completion",
                         "--parts", "0,1/2,3")
    assert code == 3  # edge (0,1) does not cross that bipartition
    assert out == ""


def test_reduce_writes_out_file(tmp_path, capsys):
    path = put(tmp_path, "g.txt", TRIANGLE_TEXT)
    out_path = tmp_path / "reduced.txt"
    code, doc, _ = run_json(capsys, "reduce", path, "--kind", "hampath",
                            "--out", str(out_path))
    assert code == 0
    assert out_path.read_text() == doc["matrix"]


# ----------------------------------------------------------------- verify

def test_verify_answers_and_reasons(tmp_path, capsys):
    m_path = put(tmp_path, "m.txt", MI1_TEXT)
    cert_path = put(tmp_path, "c.json", json.dumps({"deleted_rows": [0]}))

    code, doc, _ = run_json(capsys, "verify", m_path, cert_path,
                            "--problem", "sc1s-r", "--budget", "1")
    assert code == 0
    assert doc == {"answer": "yes", "budget": 1,
                   "input_sha256": doc["input_sha256"], "problem": "sc1s-r",
                   "reason": "", "time_ms": None}

    code, doc, _ = run_json(capsys, "verify", m_path, cert_path,
                            "--problem", "sc1s-r", "--budget", "0")
    assert code == 1
    assert doc["reason"] == "BUDGET"

    code, doc, _ = run_json(capsys, "verify", m_path, cert_path,
                            "--problem", "sc1p-0e", "--budget", "1")
    assert code == 1
    assert doc["reason"] == "KIND"


def test_verify_flip_arrows(tmp_path, capsys):
    m_path = put(tmp_path, "m.txt", MI1_TEXT)
    cert_path = put(tmp_path, "c.json",
                    json.dumps({"flips": [[0, 2, "0->1"]]}))
    code, doc, _ = run_json(capsys, "verify", m_path, cert_path,
                            "--problem", "sc1p-0e", "--budget", "1")
    assert code == 0

    bad_path = put(tmp_path, "bad.json",
                   json.dumps({"flips": [[0, 2, "up"]]}))
    code, out, _ = run(capsys, "verify", m_path, bad_path,
                       "--problem", "sc1p-0e", "--budget", "1")
    assert code == 2
    assert out == ""


def test_verify_malformed_certificate(tmp_path, capsys):
    m_path = put(tmp_path, "m.txt", MI1_TEXT)
    cert_path = put(tmp_path, "c.json", "[1, 2]")
    code, out, _ = run(capsys, "verify", m_path, cert_path,
                       "--problem", "sc1s-r", "--budget", "1")
    assert code == 2
    cert_path = put(tmp_path, "c2.json", "{not json")
    code, out, _ = run(capsys, "verify", m_path, cert_path,
                       "--problem", "sc1s-r", "--budget", "1")
    assert code == 2


# -------------------------------------------------------------------- gen

def test_gen_deterministic(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv("SC1P_SEED", raising=False)
    args = ("gen", "--rows", "4", "--cols", "5", "--density", "0.5",
            "--seed", "7")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    m = BinaryMatrix.parse(first)
    assert (m.nrows, m.ncols) == (4, 5)
    _, other, _ = run(capsys, "gen", "--rows", "4", "--cols", "5",
                      "--density", "0.5", "--seed", "8")
    assert other != first

    out_path = tmp_path / "gen.txt"
    _, shown, _ = run(capsys, *args, "--out", str(out_path))
    assert out_path.read_text() == shown == first


def test_gen_env_seed_override(capsys, monkeypatch):
    monkeypatch.delenv("SC1P_SEED", raising=False)
    _, by_flag, _ = run(capsys, "gen", "--rows", "4", "--cols", "4",
                        "--density", "0.5", "--seed", "9")
    monkeypatch.setenv("SC1P_SEED", "9")
    _, by_env, _ = run(capsys, "gen", "--rows", "4", "--cols", "4",
                       "--density", "0.5", "--seed", "7")
    assert by_env == by_flag

    monkeypatch.setenv("SC1P_SEED", "-3")
    code, out, err = run(capsys, "gen", "--rows", "4", "--cols", "4",
                         "--density", "0.5")
    assert code == 2
    assert out == ""
    assert "SC1P_SEED" in err


def test_gen_validation(capsys, monkeypatch):
    monkeypatch.delenv("SC1P_SEED", raising=False)
    code, out, _ = run(capsys, "gen", "--rows", "3", "--cols", "3",
                       "--density", "0.5", "--planted-flips", "1")
    assert code == 2
    code, out, _ = run(capsys, "gen", "--rows", "3", "--cols", "3")
    assert code == 2
    code, out, _ = run(capsys, "gen", "--rows", "3", "--cols", "3",
                       "--density", "0.5", "--seed", str(1 << 64))
    assert code == 2


def test_modes_agree_on_bundled_instances(capsys):
    combos = [("m21.txt", "sc1s-r", 2), ("m21.txt", "sc1s-rc", 1),
              ("mik2.txt", "sc1p-0e", 2), ("m31t.txt", "sc1s-r", 1),
              ("contract.txt", "sc1s-rc", 1), ("colb_b.txt", "sc1s-c", 2),
              ("planted_a.txt", "sc1p-0e", 2)]
    for name, problem, budget in combos:
        path = str(DATA / name)
        exact, _, _ = run(capsys, "solve", path, "--problem", problem,
                          "--budget", str(budget), "--mode", "fpt")
        swept, _, _ = run(capsys, "solve", path, "--problem", problem,
                          "--budget", str(budget), "--mode", "oracle")
        assert exact == swept, (name, problem, budget)


# ---------------------------------------------------------- determinism

def cli_bytes(tmp_path, *args):
    env = dict(os.environ)
    env.pop("SC1P_SEED", None)
    proc = subprocess.run(
        [sys.executable, "-m", "sc1p", *args],
        capture_output=True, cwd=str(tmp_path), env=env)
    return proc.returncode, proc.stdout


def test_stdout_bytes_are_reproducible(tmp_path):
    path = put(tmp_path, "m.txt", M21_TEXT)
    args = ("solve", path, "--problem", "sc1s-rc", "--budget", "2")
    code1, out1 = cli_bytes(tmp_path, *args)
    code2, out2 = cli_bytes(tmp_path, *args)
    code4, out4 = cli_bytes(tmp_path, *args, "--threads", "4")
    assert code1 == code2 == code4 == 0
    assert out1 == out2 == out4
    doc = json.loads(out1)
    assert doc["time_ms"] is None
