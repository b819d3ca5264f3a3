import csv
import io
import json
import subprocess
import sys

import pytest

from conftest import FIXTURES
from crossmax.cli import EXIT_CODES, run

ERROR_FIXTURES = {"adjacent.txt", "k5_infeasible.txt"}
SOLVABLE = sorted(p for p in FIXTURES.glob("*.txt") if p.name not in ERROR_FIXTURES)


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--json")
    assert code == 0, err
    return json.loads(out)


def test_solve_planar_instance():
    code, out, _ = call("solve", FIXTURES / "c5.txt")
    assert code == 0
    assert "value: 4" in out
    assert "base_cases: 1" in out


@pytest.mark.parametrize("path", SOLVABLE, ids=lambda p: p.name)
def test_solve_and_oracle_agree_on_fixtures(path):
    solved = call_json("solve", path)
    oracle = call_json("oracle", path)
    assert solved["value"] == oracle["value"]


def test_solve_json_report():
    rep = call_json("solve", FIXTURES / "k6.txt")
    assert rep["value"] == "9"
    assert rep["witness"][0] == 1
    assert rep["S"] == [str(u) for u, b in enumerate(rep["witness"]) if b]
    assert rep["branches"] <= 2 ** rep["crossings"]
    assert len(rep["level_ms"]) == rep["depth"] + 1


def test_decimal_value_is_exact():
    assert call_json("solve", FIXTURES / "decimal.txt")["value"] == "4.625"


def test_parallel_report_is_deterministic():
    seq = call_json("solve", FIXTURES / "skeleton_k4.txt")
    par = call_json("solve", FIXTURES / "skeleton_k4.txt", "--parallel", 2)
    for key in ("value", "witness", "base_cases"):
        assert seq[key] == par[key]


def test_strategy_flag():
    for strategy in ("lowest", "highest", "busiest"):
        assert call_json("solve", FIXTURES / "k6.txt", "--strategy", strategy)["value"] == "9"


def test_validate_reports_removed_touch():
    rep = call_json("validate", FIXTURES / "touch.txt")
    assert rep["status"] == "reduced"
    assert rep["removed"] == [0]
    assert rep["remaining"] == 0


def test_validate_feasible_with_realization():
    rep = call_json("validate", FIXTURES / "k5_realized.txt")
    assert rep["status"] == "feasible"
    assert rep["realization"] == "valid"


def test_mcr_solve():
    rep = call_json("mcr-solve", FIXTURES / "k5_realized.txt")
    assert rep["value"] == "6"
    assert rep["split_edges"] == 5


def test_exit_codes(tmp_path):
    assert call("solve", tmp_path / "missing.txt")[0] == EXIT_CODES["parse"]
    bad = tmp_path / "bad.txt"
    bad.write_text("nodes 2\nedge 0 0 9 1\n")
    code, _, err = call("solve", bad)
    assert code == EXIT_CODES["parse"]
    assert "line 2" in err
    assert call("validate", FIXTURES / "k5_infeasible.txt")[0] == EXIT_CODES["infeasible"]
    assert call("solve", FIXTURES / "k5_infeasible.txt")[0] == EXIT_CODES["infeasible"]
    assert call("solve", FIXTURES / "adjacent.txt")[0] == EXIT_CODES["not-good"]
    assert call("validate", FIXTURES / "adjacent.txt")[0] == EXIT_CODES["not-good"]
    big = tmp_path / "big.txt"
    big.write_text("nodes 30\n" + "".join(f"edge {i} {i} {i + 1} 1\n" for i in range(29)))
    assert call("oracle", big)[0] == EXIT_CODES["too-large"]
    assert call("solve", big)[0] == 0
    assert call("mcr-solve", FIXTURES / "k5.txt")[0] == EXIT_CODES["realization"]
    broken = tmp_path / "broken.txt"
    broken.write_text("nodes 2\nedge 0 0 1 1\nrealize nodes 2\nrealize edge 0 0 1 2\ncontract 0 0\ncontract 1 1\n")
    assert call("mcr-solve", broken)[0] == EXIT_CODES["realization"]


def test_usage_errors():
    assert call()[0] == EXIT_CODES["usage"]
    assert call("solve")[0] == EXIT_CODES["usage"]
    assert call("bench", "--kmin", 3, "--kmax", 1)[0] == EXIT_CODES["usage"]
    assert call("bench", "--kmax", 50)[0] == EXIT_CODES["usage"]


def test_bench_csv():
    code, out, _ = call("bench", "--kmax", 3)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["k", "nodes", "branches", "base_cases", "wall_ms"]
    assert [int(r["k"]) for r in rows] == [0, 1, 2, 3]
    assert all(int(r["base_cases"]) == 2 ** int(r["k"]) for r in rows)
    assert len({r["nodes"] for r in rows}) == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "crossmax", "solve", str(FIXTURES / "k5.txt"), "--json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == "6"
