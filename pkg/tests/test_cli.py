import json

import pytest

from lmwidth.cli import main
from lmwidth.io import loads_edgelist


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_gen(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "L", 1)
    assert code == 0 and out.splitlines()[0] == "7 6"
    code, out, _ = run(capsys, "gen", "H", 1)
    assert out.splitlines()[0] == "13 12"
    code, out, _ = run(capsys, "gen", "L", 0)
    assert out == "1 0\n"
    code, out, _ = run(capsys, "gen", "--family", "H", "--k", 1, "--format", "json")
    assert json.loads(out)["n"] == 13
    target = tmp_path / "l2.txt"
    assert run(capsys, "gen", "L", 2, "--out", target)[0] == 0
    from lmwidth.families import gen_L

    assert loads_edgelist(target.read_text()).edges == gen_L(2).graph.edges
    roles = json.loads((tmp_path / "l2.roles.json").read_text())
    assert roles["roles"]["0"] == "u2"


def test_power(capsys, tmp_path):
    p3 = tmp_path / "p3.txt"
    p3.write_text("3 2\n0 1\n1 2\n")
    code, out, _ = run(capsys, "power", p3, 2)
    assert loads_edgelist(out).m == 3
    code, out, _ = run(capsys, "power", p3, 1)
    assert out == p3.read_text()
    with pytest.raises(SystemExit) as exc:
        main(["power", str(p3), "0"])
    assert exc.value.code == 2
    code, out, _ = run(capsys, "power", p3, 2, "--format", "dot")
    assert "0 -- 2;" in out


def test_eval_layout(capsys, tmp_path):
    p4 = tmp_path / "p4.txt"
    p4.write_text("4 3\n0 1\n1 2\n2 3\n")
    lay = tmp_path / "lay.txt"
    lay.write_text("0 1 2 3\n")
    code, out, _ = run(capsys, "eval-layout", p4, lay)
    assert code == 0 and json.loads(out)["width"] == 1
    run(capsys, "gen", "L", 1, "--out", tmp_path / "l1.txt")
    run(capsys, "power", tmp_path / "l1.txt", 2, "--out", tmp_path / "l1sq.txt")
    lay.write_text("0 2 1 4 3 6 5\n")
    code, out, _ = run(capsys, "eval-layout", tmp_path / "l1sq.txt", lay)
    assert json.loads(out)["width"] == 1
    lay.write_text("0 1 1 3\n")
    code, _, err = run(capsys, "eval-layout", p4, lay)
    assert code == 2 and "permutation" in err


def test_solvers(capsys, tmp_path):
    k1 = tmp_path / "k1.txt"
    k1.write_text("1 0\n")
    code, out, _ = run(capsys, "lmw-exact", k1)
    assert json.loads(out)["width"] == 0
    run(capsys, "gen", "L", 3, "--out", tmp_path / "l3.txt")
    code, out, _ = run(capsys, "lmw-tree", tmp_path / "l3.txt")
    assert json.loads(out)["width"] == 3
    code, out, _ = run(capsys, "layout-tree", tmp_path / "l3.txt")
    data = json.loads(out)
    assert data["width"] == 3 and sorted(data["layout"]) == list(range(79))
    big = tmp_path / "p25.txt"
    big.write_text("25 24\n" + "".join(f"{i} {i + 1}\n" for i in range(24)))
    code, _, err = run(capsys, "lmw-exact", big)
    assert code == 3 and "cutoff" in err
    code, out, _ = run(capsys, "lmw-exact", big, "--oracle-cutoff", 25)
    assert code == 0 and json.loads(out)["width"] == 1
    code, _, _ = run(capsys, "lmw-tree", k1.parent / "missing.txt")
    assert code == 4


def test_certify_and_check(capsys, tmp_path):
    code, _, err = run(capsys, "certify", "H", 1, "--out", tmp_path / "h1.json")
    assert code == 0 and "lmw >= 2" in err
    run(capsys, "gen", "H", 1, "--out", tmp_path / "h1.txt")
    run(capsys, "power", tmp_path / "h1.txt", 2, "--out", tmp_path / "h1sq.txt")
    code, out, _ = run(capsys, "check-cert", tmp_path / "h1sq.txt", tmp_path / "h1.json")
    assert code == 0 and json.loads(out) == {"valid": True, "bound": 2}

    cert = json.loads((tmp_path / "h1.json").read_text())
    cert["children"][0]["parts"][1] = cert["children"][0]["parts"][0]
    (tmp_path / "bad.json").write_text(json.dumps(cert))
    code, out, _ = run(capsys, "check-cert", tmp_path / "h1sq.txt", tmp_path / "bad.json")
    report = json.loads(out)
    assert code == 5 and not report["valid"] and report["node"] == "/children/0"

    code, out, _ = run(capsys, "certify", "L", 2)
    assert code == 0 and json.loads(out)["bound"] == 2
    run(capsys, "gen", "L", 2, "--out", tmp_path / "l2.txt")
    code, out, _ = run(capsys, "certify", "--tree", tmp_path / "l2.txt")
    assert json.loads(out)["bound"] == 2


def test_power_profile(capsys, tmp_path):
    run(capsys, "gen", "L", 1, "--out", tmp_path / "l1.txt")
    code, out, _ = run(capsys, "power-profile", tmp_path / "l1.txt", "--max-m", 4)
    rows = json.loads(out)["rows"]
    assert [r["m"] for r in rows] == [1, 2, 3, 4]
    assert rows[3] == {"m": 4, "lower": 1, "upper": 1, "exact": True}


def test_acceptance_subset_is_deterministic(capsys):
    code, out, err = run(capsys, "acceptance", "--only", 5, 6)
    first = json.loads(out)
    assert code == 0 and first["passed"] and first["seed"] == 0
    assert "[PASS] 5." in err and "[PASS] 6." in err
    code, out, _ = run(capsys, "acceptance", "--only", 5, 6, "--oracle-cutoff", 24)
    second = json.loads(out)
    assert [c["passed"] for c in second["criteria"]] == [c["passed"] for c in first["criteria"]]
    assert [c["detail"] for c in second["criteria"]] == [c["detail"] for c in first["criteria"]]
