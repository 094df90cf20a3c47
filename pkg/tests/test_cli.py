import json
import subprocess
import sys

import pytest

from abacrystal.cli import main


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tight_ball_for_level_one(capsys):
    code, out, err = run(["graph", "--model", "abacus", "--n", "3", "--l", "1", "--lambda", "1,0,0", "--deg", "3"], capsys)
    assert code == 0
    assert out.startswith("digraph")
    assert json.loads(err)["vertices"] == 6


def test_descending_ball_for_level_one(capsys):
    args = ["graph", "--n", "3", "--l", "1", "--lambda", "1,0,0", "--deg", "3", "--ball", "descending"]
    code, out, err = run(args, capsys)
    assert code == 0
    assert json.loads(err)["vertices"] == 7
    assert out.count("[label=") == 7 + out.count("->")


def test_degree_zero_is_one_vertex(capsys):
    code, out, err = run(["graph", "--lambda", "1,0,0", "--deg", "0", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert len(payload["graph"]["vertices"]) == 1
    assert payload["axioms"]["pass"]


@pytest.mark.parametrize("model", ["abacus", "partition", "cpp", "kyoto"])
def test_models_pass_axioms(model, capsys):
    code, _, err = run(["graph", "--model", model, "--lambda", "1,1,0", "--deg", "4", "--format", "json"], capsys)
    assert code == 0
    assert json.loads(err)["pass"]


def test_recolored_edge_fails(capsys):
    code, _, err = run(["graph", "--lambda", "1,1,0", "--deg", "3", "--corrupt"], capsys)
    assert code == 1
    assert not json.loads(err)["pass"]


@pytest.mark.parametrize(
    "args",
    [
        ["graph", "--lambda", "1,x"],
        ["graph", "--n", "4", "--lambda", "1,0,0"],
        ["graph", "--l", "2", "--lambda", "1,0,0"],
        ["graph", "--lambda", "0,0,0"],
        ["graph", "--lambda", "1,0,0", "--deg", "-1"],
        ["graph", "--model", "kyoto", "--lambda", "1,0,0", "--ball", "descending"],
        ["commutor", "--m", "1"],
        ["nonsense"],
        [],
    ],
)
def test_usage_errors_exit_2(args, capsys):
    with pytest.raises(SystemExit) as exc:
        main(args)
    assert exc.value.code == 2


def test_genfunc_compare(capsys):
    code, out, _ = run(["genfunc", "compare", "--n", "3", "--l", "2", "--lambda", "1,1,0", "--deg", "10"], capsys)
    assert code == 0
    assert json.loads(out)["three-way-equal"] is True


def test_genfunc_duality_wide(capsys):
    code, out, _ = run(["genfunc", "duality", "--lambda", "2,3,1", "--deg", "12"], capsys)
    payload = json.loads(out)
    assert code == 0
    assert payload["lambda_prime"] == [1, 1, 0, 0, 1, 0]


def test_bijection_weight_zero(capsys):
    code, out, _ = run(["bijection", "--lambda", "1,1,0", "--weight", "0"], capsys)
    payload = json.loads(out)
    assert code == 0
    assert payload["objects"] == payload["cpps"] == 1


def test_kyoto_includes_perfect_crystal_check(capsys):
    code, out, _ = run(["kyoto", "--lambda", "1,1,0", "--deg", "5"], capsys)
    payload = json.loads(out)
    assert code == 0
    assert payload["perfect_crystal_golden"] is True


def test_commutor_small(capsys):
    code, out, _ = run(["commutor", "--m", "2", "--max-size", "2", "--cactus-size", "3"], capsys)
    payload = json.loads(out)
    assert code == 0
    assert payload["cactus_triples"] > 0


def test_output_is_byte_stable(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        assert main(["graph", "--lambda", "1,1,0", "--deg", "4", "--format", "json", "--out", str(p)]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "abacrystal", "bijection", "--lambda", "1,1", "--weight", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["pass"]
