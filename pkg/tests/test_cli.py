import io
import json

import jsonschema
import pytest

from cyclicpaths import bijections as B
from cyclicpaths import formulas as F
from cyclicpaths import oracle as O
from cyclicpaths.cli import SCHEMA, dumps, main
from cyclicpaths.core import Composition, LatticePath
from cyclicpaths.render import render_svg


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--json")
    assert code == 0, err
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return doc


def test_count_all_shifts_text():
    code, out, _ = run("count", "--comp", "1,2,3", "--to", "6,3", "--all-shifts")
    assert code == 0
    assert "total = 36" in out
    assert "D((1,2,3), (6,3)) = 18" in out


def test_count_matches_library():
    doc = run_json("count", "--comp", "1,2,3", "--to", "6,3", "--all-shifts")
    a = Composition((1, 2, 3))
    assert doc["result"]["per_shift"] == [str(O.count_dominated(a.shift(j), (6, 3))) for j in range(3)]
    assert doc["result"]["good"] == str(O.count_lpbp(a, (6, 3)).good)
    doc = run_json("count", "--comp", "1,2,3", "--to", "6,3", "--shift", "1")
    assert doc["result"]["D"] == str(O.count_dominated(a.shift(1), (6, 3)))
    doc = run_json("count", "--comp", "1,1", "--to", "2,2", "--corners", "1")
    assert doc["result"] == {"upright": "2", "rightup": "2"}


def test_formula_theorem1_text():
    code, out, _ = run("formula", "theorem1", "--comp", "1,2,3", "--to", "6,3")
    assert code == 0 and "252/216/36" in out


FORMULA_CASES = [
    (["theorem1", "--comp", "2,0,4", "--to", "6,3"], lambda: F.lpbp_counts_formula((2, 0, 4), (6, 3)).good, "good"),
    (["ballot", "--slope", "2", "--to", "9,3"], lambda: F.ballot_formula(2, 9, 3), "count"),
    (["gencat", "--slope", "2", "--m", "5"], lambda: F.generalized_catalan(2, 5), "count"),
    (["corners", "--comp", "1,2", "--to", "3,2", "--corners", "1"], lambda: F.upright_corners_formula((1, 2), (3, 2), 1), "count"),
    (["corners2", "--comp", "1,2", "--to", "3,2", "--corners", "2"], lambda: F.rightup_corners_formula((1, 2), (3, 2), 2), "count"),
    (["periodic", "--a", "2", "--b", "5", "--n", "3"], lambda: F.periodic_counts(F.PeriodicSpec(2, 5, 3))[2], "Pab"),
    (["halfslope", "--c", "5", "--n", "3"], lambda: F.half_slope_formula(5, 3), "count"),
    (["cat-staircase", "--n", "3"], lambda: F.catalan_staircase_counts(3)[1], "to_even"),
    (["staircase", "--s", "3", "--t", "2", "--n", "4"], lambda: F.staircase_theorem_formula(3, 2, 4), "count"),
    (["kcat", "--n", "40", "--k", "5"], lambda: F.k_catalan_formula(40, 5), "count"),
    (["avoid", "--s", "2", "--t", "3", "--n", "3"], lambda: F.staircase_avoidance_count(2, 3, 3), "count"),
    (["avoid-corners", "--s", "2", "--t", "3", "--n", "3", "--corners", "2"], lambda: F.staircase_avoidance_corners(2, 3, 3, 2), "count"),
]


@pytest.mark.parametrize("argv,expected,key", FORMULA_CASES, ids=[c[0][0] for c in FORMULA_CASES])
def test_formula_numbers_equal_library(argv, expected, key):
    doc = run_json("formula", *argv)
    assert doc["result"][key] == str(expected())


def test_big_counts_are_strings():
    doc = run_json("formula", "kcat", "--n", "40", "--k", "5")
    assert int(doc["result"]["count"]) > 2**64


def test_hypothesis_violation_exits_1():
    code, _, err = run("formula", "theorem1", "--comp", "1,2,3", "--to", "1,2")
    assert code == 1 and "HypothesisError" in err


def test_usage_errors_exit_2():
    assert run("count", "--comp", "1,2")[0] == 2
    assert run("count", "--comp", "1,x", "--to", "1,1")[0] == 2
    assert run("count", "--comp", "1,2", "--to", "1,1", "--bogus")[0] == 2
    assert run("formula", "ballot", "--to", "3,1")[0] == 2
    assert run("nonsense")[0] == 2
    # no abbreviations of long flags
    assert run("count", "--com", "1,2", "--to", "1,1")[0] == 2


def test_domain_errors_exit_1():
    assert run("count", "--comp", "1,2", "--to", "9,9")[0] == 1
    assert run("bijection", "psi", "--comp", "1,1", "--path", "RURU", "--shift", "0")[0] == 1
    assert run("count", "--comp", "3,3,3,3", "--to", "9,4", "--corners", "1", "--cap", "10")[0] == 1


def test_json_round_trip_is_identity():
    for argv in (["formula", "periodic", "--a", "0", "--b", "1", "--n", "1"], ["count", "--comp", "1,1", "--to", "2,2", "--all-shifts"]):
        _, out, _ = run(*argv, "--json")
        assert dumps(json.loads(out)) + "\n" == out


def test_verify_small():
    code, out, _ = run("verify", "--max-n", "3", "--max-m", "3")
    assert code == 0
    assert out.strip().splitlines()[-1].startswith("all identities hold")


def test_verify_is_deterministic_across_workers():
    one = run_json("verify", "--max-n", "3", "--max-m", "2", "--workers", "1")
    two = run_json("verify", "--max-n", "3", "--max-m", "2", "--workers", "2")
    assert one["result"] == two["result"]


def test_verify_sample_is_seeded():
    a = run_json("verify", "--max-n", "4", "--max-m", "3", "--sample", "5", "--seed", "7")
    b = run_json("verify", "--max-n", "4", "--max-m", "3", "--sample", "5", "--seed", "7")
    assert a["result"] == b["result"] and a["result"]["compositions"] == "5"


def test_sweep_table():
    doc = run_json("sweep", "--max-n", "3", "--max-m", "2")
    assert doc["result"]["mismatches"] == "0"
    row = next(r for r in doc["result"]["rows"] if r["comp"] == "(1,2)" and r["to"] == "(3,2)")
    assert (row["all"], row["bad"], row["good"]) == tuple(str(v) for v in O.count_lpbp((1, 2), (3, 2)).as_tuple())


def test_bijection_psi_and_phi():
    doc = run_json("bijection", "psi", "--comp", "1,1", "--path", "UURR", "--shift", "0", "--trace")
    assert doc["result"]["path"] == "RURR"
    assert doc["result"]["trace"]
    doc = run_json("bijection", "phi", "--comp", "1,1", "--path", "RURR", "--bucket", "0", "--index", "0")
    assert (doc["result"]["path"], doc["result"]["shift"]) == ("UURR", "0")


def test_bijection_omega_round_trip():
    w = "RRRURRRRRURRUURR"
    code, out, _ = run("bijection", "omega", "--comp", "1,3,0,2,4,0,2", "--word", w, "--k", "3", "--trace")
    assert code == 0 and "positive s = 0,2,3" in out and "j = s_3 = 3" in out
    doc = run_json("bijection", "omega", "--comp", "1,3,0,2,4,0,2", "--word", w, "--k", "3")
    L = B.omega((1, 3, 0, 2, 4, 0, 2), 4, w, 3)
    assert doc["result"]["path"] == L.path.steps and doc["result"]["shift"] == str(L.shift_index)
    doc = run_json("bijection", "omega-inv", "--comp", "1,3,0,2,4,0,2", "--path", L.path.steps, "--shift", "4")
    assert doc["result"] == {"word": w, "k": "3"}


def test_render_to_file(tmp_path):
    out = tmp_path / "pic.svg"
    code, _, _ = run("render", "--comp", "1,1", "--path", "RURU", "--out", str(out))
    assert code == 0
    assert out.read_text() == render_svg((1, 1), paths=[LatticePath("RURU")])


def test_render_unwritable_exits_1(tmp_path):
    code, _, err = run("render", "--comp", "1,1", "--out", str(tmp_path / "missing" / "x.svg"))
    assert code == 1 and err


def test_module_entry_point_exit_codes():
    import subprocess
    import sys

    def code(*argv):
        return subprocess.run([sys.executable, "-m", "cyclicpaths", *argv], capture_output=True).returncode

    assert code("formula", "theorem1", "--comp", "1,2,3", "--to", "6,3") == 0
    assert code("formula", "theorem1", "--comp", "1,2,3", "--to", "1,2") == 1
    assert code("formula", "theorem1", "--comp", "1,2,3") == 2
