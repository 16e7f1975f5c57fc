import json
from pathlib import Path

import pytest

from dkcoalg.cli import main

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out.strip() else None), out.err


def test_homology_of_disk(capsys):
    code, rep, _ = run(capsys, "homology", FIXTURES / "disk2.json")
    assert code == 0
    assert rep["homology"] == [0, 0, 0, 0] and rep["degree_D_incomplete"]


def test_homology_of_coalgebra_and_simplicial(capsys):
    assert run(capsys, "homology", FIXTURES / "tensor_sphere1.json")[1]["homology"] == [1, 1, 1, 1]
    assert run(capsys, "homology", FIXTURES / "gamma_sphere1.json")[1]["homology"] == [0, 1, 0]


def test_verify_passes(capsys):
    code, rep, _ = run(capsys, "verify", "dold-kan-roundtrip", "--D", 5, "--trials", 50)
    assert code == 0 and rep["passed"]
    assert rep["config"]["D"] == 5 and rep["config"]["trials"] == 50


def test_verify_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert main(["verify", "kunneth", "--D", "4", "--trials", "5", "--seed", "3", "--out", str(p)]) == 0
    strip = lambda p: {k: v for k, v in json.loads(p.read_text()).items() if k != "seconds"}
    assert strip(a) == strip(b)


def test_counterexample(capsys):
    for field in ("Q", "GFp:5"):
        code, rep, _ = run(capsys, "counterexample", "--field", field)
        assert code == 0
        assert rep["lower_composite_zero"] and rep["right_map_invertible"] and not rep["commutes"]


def test_apply_functors(capsys, tmp_path):
    out = tmp_path / "g.json"
    assert main(["apply", "Gamma", str(FIXTURES / "sphere2.json"), "--out", str(out)]) == 0
    res = json.loads(out.read_text())["result"]
    assert res["object"]["type"] == "simplicial"
    code, rep, _ = run(capsys, "apply", "factor", FIXTURES / "counit_map.json")
    assert code == 0 and all(rep["checks"].values())
    code, rep, _ = run(capsys, "apply", "dual", FIXTURES / "tensor_sphere1.json")
    assert code == 0 and rep["result"]["object"]["type"] == "connected_algebra"


def test_lift_square_and_map(capsys):
    code, rep, _ = run(capsys, "lift", FIXTURES / "no_lift_square.json")
    assert code == 0 and rep["lift_exists"] is False
    code, rep, _ = run(capsys, "lift", FIXTURES / "sphere1_to_disk2.json")
    assert code == 0
    assert rep["injective"] and not rep["quasi_iso"] and rep["llp_Q"] and not rep["llp_P"]


@pytest.mark.parametrize("argv", [
    ["verify", "no-such-suite"],
    ["homology", "fixtures/does-not-exist.json"],
    ["homology", str(FIXTURES / "bad_d2.json")],
    ["homology", str(FIXTURES / "gf4.json")],
    ["apply", "cone", str(FIXTURES / "tensor_sphere1.json")],
    ["apply", "AW", str(FIXTURES / "sphere2.json")],
    ["counterexample", "--D", "1"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert "error" in capsys.readouterr().err


def test_bad_field_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["verify", "kunneth", "--field", "GFp:4"])
    assert e.value.code == 2
