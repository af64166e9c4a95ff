import json
import subprocess
import sys

import pytest

from gupb.cli import main
from gupb.product import set_from_json


@pytest.fixture
def shifts_file(tmp_path, capsys):
    assert main(["construct", "shifts"]) == 0
    path = tmp_path / "shifts.json"
    path.write_text(capsys.readouterr().out)
    return path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bounds_single(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "3", "--d", "3")
    assert code == 0 and "<11,12>" in out
    code, out, _ = run(capsys, "bounds", "--n", "3", "--d", "3", "--format", "json")
    assert json.loads(out)["excluded_interval"] == [11, 12]


def test_bounds_table(capsys):
    code, out, _ = run(capsys, "--format", "json", "bounds", "--table", "3..5", "3..6")
    rows = json.loads(out)["table"]
    assert len(rows) == 12
    assert {"n": 5, "d": 6, "interval": [1302, 1619]} in rows
    code, out, _ = run(capsys, "bounds", "--table", "3..5", "3..6")
    assert "<629,780>" in out


def test_bounds_usage_errors(capsys):
    assert run(capsys, "bounds")[0] == 2
    assert run(capsys, "bounds", "--n", "2", "--d", "3")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_verify_and_check(capsys, shifts_file):
    code, out, _ = run(capsys, "verify-upb", str(shifts_file))
    assert code == 0 and "unextendible" in out
    code, out, _ = run(capsys, "check-gupb", str(shifts_file), "--format", "json")
    data = json.loads(out)
    assert code == 1 and not data["is_gupb_candidate"]
    assert all(c["extendible"] for c in data["cuts"])


def test_prove(capsys, shifts_file):
    code, out, _ = run(capsys, "prove-biproduct", str(shifts_file), "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["witness"]["max_overlap"] <= 1e-9


def test_prove_no_guarantee(capsys, tmp_path, qubit_low_degree_set):
    from gupb.product import set_to_json
    path = tmp_path / "low.json"
    path.write_text(set_to_json(qubit_low_degree_set))
    code, out, _ = run(capsys, "prove-biproduct", str(path))
    assert code == 1 and "no guarantee" in out


def test_graph(capsys, shifts_file, tmp_path):
    code, out, _ = run(capsys, "graph", str(shifts_file), "--pigeonhole")
    assert code == 0 and out.startswith("graph") and "red" in out
    dot = tmp_path / "g.dot"
    assert run(capsys, "graph", str(shifts_file), "--highlight", "1", "1", "-o", str(dot))[0] == 0
    assert dot.read_text().count('color="red"') == 1


def test_construct_round_trips(capsys, shifts_file):
    code, out, _ = run(capsys, "construct", "flag", str(shifts_file), str(shifts_file))
    assert code == 0 and set_from_json(out).shape.local_dims == (2, 2, 2, 2)
    code, out, _ = run(capsys, "construct", "tensor", str(shifts_file), str(shifts_file))
    assert set_from_json(out).k == 16
    code, out, _ = run(capsys, "construct", "group", str(shifts_file), "--groups", "0,1:2")
    assert set_from_json(out).shape.local_dims == (4, 2)
    assert run(capsys, "construct", "group", str(shifts_file))[0] == 2


def test_gen_set_deterministic(capsys):
    a = run(capsys, "gen-set", "--dims", "3,3,3", "--k", "9", "--seed", "5")[1]
    b = run(capsys, "--seed", "5", "gen-set", "--dims", "3,3,3", "--k", "9")[1]
    assert a == b and set_from_json(a).k == 9
    assert run(capsys, "gen-set", "--dims", "2,2", "--k", "9")[0] == 3


def test_seesaw(capsys, shifts_file):
    code, out, _ = run(capsys, "seesaw", str(shifts_file), "--cut", "0", "--restarts", "10")
    assert code == 0 and out.startswith("found")
    code, out, _ = run(capsys, "seesaw", str(shifts_file), "--restarts", "50", "--format", "json")
    assert code == 1 and json.loads(out)["residual"] > 1e-6


def test_search_cap(capsys, tmp_path):
    path = tmp_path / "big.json"
    main(["gen-set", "--dims", "3,3,3", "--k", "12"])
    path.write_text(capsys.readouterr().out)
    assert run(capsys, "verify-upb", str(path), "--max-exact-k", "10")[0] == 3


@pytest.mark.parametrize("text, fragment", [
    ("not json", "line 1"),
    ('{"dims":[2,2],"vectors":[[[[1,0],[0,0]],[[1,0]]]]}', "vectors[0][1]"),
    ('{"dims":[2,2],"vectors":[[[[1,0],[0,0]],[[1,0],[0,0]]],[[[1,0],[0,0]],[[1,0],[0,0]]]]}',
     "orthogonal"),
])
def test_malformed_input(capsys, tmp_path, text, fragment):
    path = tmp_path / "bad.json"
    path.write_text(text)
    code, _, err = run(capsys, "verify-upb", str(path))
    assert code == 2 and fragment in err


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "verify-upb", str(tmp_path / "nope.json"))[0] == 2


def test_bad_tolerance(capsys):
    assert run(capsys, "--tol", "0.5", "bounds", "--n", "3", "--d", "3")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gupb", "bounds", "--n", "3", "--d", "4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "<20,23>" in proc.stdout
