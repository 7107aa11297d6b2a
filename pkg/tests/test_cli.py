import csv
import io
import json
from fractions import Fraction as F

import pytest

from fairsubsidy.cli import CSV_COLUMNS, main
from fairsubsidy.core import instance_to_json, save_instance
from fairsubsidy.instances import gen_lower_bound_efs, gen_lower_bound_prop

from helpers import four_agent_example


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, inst in [("four_agent_example", four_agent_example()), ("lb4", gen_lower_bound_prop(4)), ("efs3", gen_lower_bound_efs(3))]:
        paths[name] = str(tmp_path / f"{name}.json")
        save_instance(inst, paths[name])
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_four_agent_example(files, capsys):
    code, out, _ = run(capsys, "solve", files["four_agent_example"], "--algorithm", "moving-knife-round-best")
    assert code == 0
    assert "total: 51/100" in out and "bound: 1" in out and out.rstrip().endswith("PASS")
    assert "ido subsidies: (51/100, 0, 0, 0)" in out


def test_solve_lower_bound_load_balance(files, capsys):
    code, out, _ = run(capsys, "solve", files["lb4"], "--algorithm", "load-balance")
    assert code == 0
    assert "total: 1\n" in out and "bound: 1\n" in out


def test_solve_efs(files, capsys):
    code, out, _ = run(capsys, "solve", files["efs3"], "--algorithm", "efs")
    assert code == 0
    assert "subsidies: (1, 1, 0)" in out and "total: 2\n" in out and "bound: 2\n" in out


def test_decimal_flag(files, capsys):
    _, out, _ = run(capsys, "solve", files["four_agent_example"], "--decimal")
    assert "51/100 (~0.51)" in out


def test_incompatible_algorithm_is_usage_error(files, capsys):
    code, _, err = run(capsys, "solve", files["four_agent_example"], "--algorithm", "load-balance")
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "solve", files["four_agent_example"], "--mode", "goods")
    assert code == 2


def test_bad_input(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"costs": [[0.5]]}')
    assert run(capsys, "solve", str(bad))[0] == 2
    assert run(capsys, "solve", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_verify(files, tmp_path, capsys):
    alloc = tmp_path / "a.json"
    alloc.write_text(json.dumps({"bundles": [[1], [2], []], "subsidies": ["1", "1", "0"]}))
    code, out, _ = run(capsys, "verify", files["efs3"], str(alloc))
    assert code == 0
    assert "efs: yes" in out and "ef: no" in out and "min subsidies: (1/3, 1/3, 0) total 2/3" in out


def test_oracle(files, capsys):
    code, out, _ = run(capsys, "oracle", files["lb4"], "--efs", "--algorithm", "load-balance")
    assert code == 0
    assert "min total subsidy: 1\n" in out and "min total EFS subsidy: 2\n" in out
    assert run(capsys, "oracle", files["four_agent_example"], "--cap", "10")[0] == 2


def test_generate(tmp_path, capsys):
    out_path = tmp_path / "g.json"
    assert run(capsys, "generate", "--n", "3", "--m", "4", "--seed", "7", "--out", str(out_path))[0] == 0
    assert len(json.loads(out_path.read_text())["costs"]) == 3
    code, out, _ = run(capsys, "generate", "--n", "5", "--lower-bound", "prop")
    assert json.loads(out) == instance_to_json(gen_lower_bound_prop(5))
    assert run(capsys, "generate", "--n", "3")[0] == 2


def _rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_bench_moving_knife(capsys):
    code, out, _ = run(capsys, "bench", "--trials", "100", "--n", "4..8", "--algorithm", "moving-knife-round-best")
    assert code == 0
    rows = _rows(out)
    assert out.splitlines()[0] == ",".join(CSV_COLUMNS)
    assert len(rows) == 100
    assert max(F(r["tight_ratio"]) for r in rows) <= 1
    assert {int(r["n"]) for r in rows} <= set(range(4, 9))


def test_bench_bid_and_take_weighted(capsys, tmp_path):
    path = tmp_path / "b.csv"
    code, _, _ = run(capsys, "bench", "--trials", "100", "--algorithm", "bid-and-take",
                     "--family", "weighted", "--out", str(path))
    assert code == 0
    rows = _rows(path.read_text())
    assert all(F(r["total_subsidy"]) <= F(int(r["n"]) - 1, 2) for r in rows)


def test_bench_zero_trials(capsys):
    code, out, _ = run(capsys, "bench", "--trials", "0")
    assert code == 0 and out.strip() == ",".join(CSV_COLUMNS)


def test_bench_deterministic_and_parallel(capsys):
    args = ["bench", "--trials", "30", "--seed", "5", "--mode", "goods"]
    first = run(capsys, *args)[1]
    assert run(capsys, *args)[1] == first
    assert run(capsys, *args, "--jobs", "2")[1] == first


def test_bench_bad_range(capsys):
    assert run(capsys, "bench", "--n", "x..3")[0] == 2
