import json
import subprocess
import sys

import pytest

from edgereg.harness import sweep as sweep_mod
from edgereg.harness.cli import main
from edgereg.harness.selftest import run_selftest
from edgereg.harness.theorems import RunConfig, TheoremReport, Verdict, verify_graph
from edgereg.graph import cycle_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("field", [2, 3])
def test_selftest_passes(field):
    assert run_selftest(field) == 0


def test_selftest_command(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0 and out.rstrip().endswith("PASS (0 failing)")


def test_invariants_graph6(capsys):
    code, out, err = run(capsys, "invariants", "Dhc")
    rec = json.loads(out)
    assert code == 0
    assert (rec["reg"], rec["ind_match_k2c5"], rec["cm2"]) == (2, 2, True)
    assert "0 with failing" in err


def test_invariants_edge_file(tmp_path, capsys):
    f = tmp_path / "c5.edges"
    f.write_text("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    code, out, _ = run(capsys, "invariants", "--input", str(f), "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 2 and "T15" in lines[0]


def test_invariants_parse_error(capsys):
    code, _, err = run(capsys, "invariants", "D?")
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "invariants")
    assert code == 2


def test_sweep_summary_and_output(tmp_path, capsys):
    out_file = tmp_path / "r.jsonl"
    code, out, _ = run(capsys, "sweep", "--max-n", "5", "-o", str(out_file))
    assert code == 0
    assert "graphs checked: 52" in out and "RESULT: PASS" in out
    recs = [json.loads(line) for line in out_file.read_text().splitlines()]
    assert len(recs) == 52 and [r["index"] for r in recs] == list(range(52))


def test_sweep_deterministic_and_parallel(tmp_path, capsys):
    files = []
    for i, jobs in enumerate(("1", "1", "2")):
        f = tmp_path / f"r{i}.jsonl"
        assert run(capsys, "sweep", "--max-n", "5", "--jobs", jobs, "-o", str(f))[0] == 0
        files.append(f.read_bytes())
    assert files[0] == files[1] == files[2]


def test_sweep_stdout_reports(capsys):
    code, out, err = run(capsys, "sweep", "--max-n", "3", "-o", "-", "--format", "csv")
    assert code == 0
    assert len(out.strip().splitlines()) == 1 + 1 + 2 + 4
    assert "RESULT: PASS" in err


def test_sweep_file_input(tmp_path, capsys):
    f = tmp_path / "one.g6"
    f.write_text("Dhc\n")
    code, out, _ = run(capsys, "sweep", "--input", str(f), "--max-n", "5", "-o", str(tmp_path / "o.jsonl"))
    assert code == 0 and "graphs checked: 1" in out
    rec = json.loads((tmp_path / "o.jsonl").read_text())
    assert rec["graph6"] == "Dhc" and rec["reg"] == 2


def test_sweep_file_errors(tmp_path, capsys):
    f = tmp_path / "big.g6"
    f.write_text("G?????\n")
    assert run(capsys, "sweep", "--input", str(f), "--max-n", "7")[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("4 2\n0 1\n")
    assert run(capsys, "sweep", "--input", str(bad))[0] == 2
    assert run(capsys, "sweep", "--input", str(tmp_path / "missing.g6"))[0] == 2
    assert run(capsys, "sweep", "--max-n", "11")[0] == 2


def test_sweep_other_family(capsys):
    code, out, _ = run(capsys, "sweep", "--max-n", "5", "--cycles", "3,5", "--pc-mode", "strict")
    assert code == 0 and "RESULT: PASS" in out
    with pytest.raises(SystemExit):
        main(["sweep", "--cycles", "2"])


def test_sweep_reports_failures(monkeypatch, capsys):
    def broken(g, cfg, index=None, name=None):
        r = verify_graph(g, cfg, index=index, name=name)
        return TheoremReport(r.invariants, [Verdict("T1", True, False)] + r.verdicts[1:])

    monkeypatch.setattr(sweep_mod, "verify_graph", broken)
    code, out, _ = run(capsys, "sweep", "--max-n", "3")
    assert code == 1
    assert "RESULT: FAIL" in out and "T1 on @" in out


def test_complex_library(capsys):
    code, out, err = run(capsys, "complex", "--library", "--max-join-n", "8")
    assert code == 0
    assert len(out.strip().splitlines()) == 30
    assert "T10: applicable" in err and "failed 0" in err


def test_complex_file(tmp_path, capsys):
    f = tmp_path / "cx.jsonl"
    f.write_text('{"name": "circle", "n": 3, "facets": [[0, 1], [1, 2], [0, 2]]}\n'
                 '{"n": 2, "facets": [[0], [1]]}\n')
    code, out, _ = run(capsys, "complex", "--input", str(f))
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and recs[0]["name"] == "circle" and recs[0]["cm2"]
    f.write_text('{"n": 2, "facets": [[0, 5]]}\n')
    assert run(capsys, "complex", "--input", str(f))[0] == 2
    assert run(capsys, "complex")[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "edgereg", "invariants", "A_"], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["reg"] == 1


def test_run_sweep_api():
    cfg = RunConfig(max_n=5)
    summary = sweep_mod.run_sweep(cfg, None, None, graphs=[cycle_graph(5)])
    assert summary.graphs == 1 and summary.total_failures == 0
    assert summary.lower_gap == {0: 1}
