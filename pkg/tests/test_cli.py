import json

import pytest

from convexcol.cli import main

from conftest import FIXTURES

WORKED = str(FIXTURES / "worked_example.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_default_is_frontier(capsys):
    code, out, _ = run(capsys, "solve", "--input", WORKED, "--certificate")
    obj = json.loads(out)
    assert code == 0 and obj["algo"] == "frontier" and obj["decision"] == "YES"
    assert obj["certificate_verified"] is True


def test_solve_records_variant_and_exit_1(capsys):
    code, out, _ = run(capsys, "solve", "--input", WORKED, "--algo", "color-dp",
                       "--variant", "prose-superset")
    assert code == 1
    assert json.loads(out) == {"algo": "color-dp", "variant": "prose-superset", "decision": "NO"}


def test_pretty_goes_to_stderr(capsys):
    code, out, err = run(capsys, "--pretty", "trace", "--input", WORKED, "--j", "1", "--step", "1")
    assert code == 0 and err.startswith("T_1 after step 1")
    assert json.loads(out)["cells"][0][:6] == [True, True, True, False, False, True]
    code, _, err = run(capsys, "trace", "--input", WORKED, "--j", "1", "--step", "1")
    assert err == ""


def test_hcol(capsys, tmp_path):
    target = tmp_path / "h.json"
    target.write_text('{"order":3,"edges":[[1,2],[1,3],[2,3]]}')
    for algo in ("frontier", "usedset", "brute"):
        code, out, _ = run(capsys, "hcol", "--input", WORKED, "--target", str(target), "--algo", algo)
        assert json.loads(out)["algo"] == algo
    code, out, _ = run(capsys, "hcol", "--input", WORKED, "--target", str(target), "--certificate")
    assert code == 0 and json.loads(out)["certificate_verified"]


@pytest.mark.parametrize("argv, code, key, value", [
    (["check", "convex", "--input", str(FIXTURES / "graph9.json")], 0, "x_order", list(range(1, 10))),
    (["check", "biconvex", "--input", str(FIXTURES / "graph9.json")], 0, "y_order", [1, 2, 4, 3]),
    (["check", "biconvex", "--input", str(FIXTURES / "graph9.json"), "--x-order",
      "1,2,3,4,5,6,7,8,9", "--y-order", "1,2,3,4"], 1, "ok", False),
    (["check", "subd13", "--input", str(FIXTURES / "subd_k13_graph.json")], 1, "ok", False),
    (["check", "subd13", "--input", WORKED], 0, "witness", None),
    (["check", "multichain", "--input", str(FIXTURES / "corner_graph.json"), "--start", "x1"], 0,
     "layers", [["x1"], ["y1", "y2"], ["x2", "x3", "x4"], ["y3", "y4"], ["x5", "x6", "x7"]]),
    (["check", "straight", "--input", str(FIXTURES / "corner_graph.json"), "--order",
      "x1,y1,x2,y2,x3,y3,x4,y4,x5,x6,x7"], 0, "crossing", None),
    (["check", "convex", "--input", WORKED, "--order", "2,1,3,4,5,6,7,8,9"], 0, "ok", True),
])
def test_check(capsys, argv, code, key, value):
    got, out, _ = run(capsys, *argv)
    assert got == code and json.loads(out)[key] == value


def test_biconvex_uses_instance_y_order(capsys, tmp_path):
    path = tmp_path / "b.json"
    assert run(capsys, "gen", "biconvex", "--seed", "4", "--n", "9", "--y", "5")[0] == 0
    path.write_text(run(capsys, "gen", "biconvex", "--seed", "4", "--n", "9", "--y", "5")[1])
    code, out, _ = run(capsys, "check", "biconvex", "--input", str(path))
    assert code == 0 and json.loads(out)["y_order"] == json.loads(path.read_text())["y_order"]


@pytest.mark.parametrize("doc, error", [
    ('{"k":2}', "FormatError"),
    ('{"k":2,"x_lists":[[1]],"y":[{"a":2,"b":1,"list":[1]}]}', "InvalidInstanceError"),
    ("not json", "FormatError"),
])
def test_invalid_input_exit_2(capsys, tmp_path, doc, error):
    bad = tmp_path / "bad.json"
    bad.write_text(doc)
    code, out, _ = run(capsys, "solve", "--input", str(bad))
    assert code == 2 and json.loads(out)["error"] == error


def test_other_exit_2_paths(capsys, tmp_path):
    assert run(capsys, "solve", "--input", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "trace", "--input", WORKED, "--j", "7", "--step", "1")[0] == 2
    assert run(capsys, "check", "straight", "--input", WORKED)[0] == 2
    assert run(capsys, "check", "convex", "--input", WORKED, "--order", "1,1")[0] == 2
    assert run(capsys, "difftest", "--count", "1", "--max-n", "30")[0] == 2


def test_gen_is_deterministic(capsys):
    a = run(capsys, "gen", "convex", "--seed", "1", "--n", "8", "--y", "4", "--k", "3",
            "--density", "0.6")[1]
    b = run(capsys, "gen", "convex", "--seed", "1", "--n", "8", "--y", "4", "--k", "3",
            "--density", "0.6")[1]
    assert a == b == (FIXTURES / "gen_convex_seed1.json").read_text()
    target = json.loads(run(capsys, "gen", "target", "--seed", "2", "--order", "3")[1])
    assert target["order"] == 3


def test_difftest_and_out_dir(capsys, tmp_path):
    code, out, err = run(capsys, "--pretty", "difftest", "--count", "300", "--max-n", "8",
                         "--max-y", "5", "--out-dir", str(tmp_path))
    obj = json.loads(out)
    assert code == 0 and obj["frontier_vs_brute"] == {"agree": 300, "total": 300}
    assert len(obj["counterexample_files"]) == len(obj["counterexamples"]) > 0
    assert "frontier vs brute 300/300" in err
    code, out, _ = run(capsys, "difftest", "--count", "0")
    assert code == 0 and json.loads(out)["count"] == 0


def test_difftest_divergence_exit_3(capsys, monkeypatch):
    from convexcol import harness
    real = harness.solve_frontier

    def broken(inst, h=None, **kw):
        res = real(inst, h, **kw)
        res.decision = not res.decision
        return res

    monkeypatch.setattr(harness, "solve_frontier", broken)
    code, out, _ = run(capsys, "difftest", "--count", "5")
    assert code == 3 and json.loads(out)["divergence"] is True


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "20,40", "--repeats", "1")
    assert code == 0 and out.splitlines()[0] == "size,states,millis"
    code, out, _ = run(capsys, "bench", "--sizes", "8,40", "--algo", "brute", "--json", "--repeats", "1")
    rows = json.loads(out)["rows"]
    assert rows[1]["refused"] and rows[1]["millis"] is None
