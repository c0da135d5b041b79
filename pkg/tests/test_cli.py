import json

import numpy as np
import pytest

from copositive6.cli import run

CX = "0.20,0.29,0.30,0.23,0.06,0.02"


def _json(capsys, argv, code=0):
    assert run(argv) == code
    return json.loads(capsys.readouterr().out)


def test_essential(capsys):
    assert _json(capsys, ["essential"]) == ["13.1", "13.2", "16", "17", "19"]


def test_table3_csv(capsys):
    assert run(["table3", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("No.")
    assert len(lines) == 23
    assert lines[1] == "O5,\"8,16,17\""
    assert "13.1," in lines


def test_bad_phi_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        run(["gen", "--phi", "bad"])
    assert info.value.code == 2


def test_constraint_violation_exit_code(capsys):
    assert run(["gen", "--phi", "0.29,0.13,0.66,0.06,0.23,0.51"]) == 2
    assert "phi2+phi3+phi4" in capsys.readouterr().err


def test_gen_then_zeros(capsys, tmp_path):
    gen = _json(capsys, ["gen", "--phi", CX])
    assert gen["regime"] == ["GT", "GT", "GT"]
    path = tmp_path / "a.json"
    path.write_text(json.dumps(gen))
    found = _json(capsys, ["zeros", "--matrix", str(path)])
    assert [z["extended_support"]["I"] for z in found] == [
        [1, 2, 3], [1, 2, 6], [1, 5, 6], [2, 3, 4], [3, 4, 5], [4, 5, 6]]
    expected = {tuple(z["support"]): z["vector"] for z in gen["zeros"]}
    for z in found:
        assert np.allclose(z["vector"], expected[tuple(z["support"])], atol=1e-10)


def test_gen_scaled_and_radians(capsys):
    d = "1,2,3,1,2,3"
    gen = _json(capsys, ["gen", "--phi", CX, "--scale", d])
    assert gen["matrix"][1][1] == pytest.approx(4.0)
    rad = ",".join(str(float(x) * np.pi) for x in CX.split(","))
    plain = _json(capsys, ["gen", "--phi", CX])
    assert np.allclose(_json(capsys, ["gen", "--phi", rad, "--radians"])["matrix"], plain["matrix"])


def test_check_cop(capsys, tmp_path):
    ident = tmp_path / "i.json"
    ident.write_text(json.dumps(np.eye(6).tolist()))
    assert _json(capsys, ["check-cop", "--matrix", str(ident)])["verdict"] == "CopositiveUpToEps"
    bad = tmp_path / "b.json"
    m = np.eye(6)
    m[0, 1] = m[1, 0] = -2
    bad.write_text(json.dumps(m.tolist()))
    out = _json(capsys, ["check-cop", "--matrix", str(bad), "--samples", "1000"], code=1)
    assert out["verdict"] == "NotCopositive" and out["sampling_witness"] is not None


def test_zeros_reports_non_copositive(capsys, tmp_path):
    bad = tmp_path / "b.json"
    m = np.eye(6)
    m[0, 1] = m[1, 0] = -2
    bad.write_text(json.dumps({"matrix": m.tolist()}))
    assert run(["zeros", "--matrix", str(bad)]) == 1


def test_k1check(capsys):
    out = _json(capsys, ["k1check", "--phi", CX])
    assert out["verdict"] == "NonMember" and out["violating_triples"] == [[1, 3, 6]]
    assert _json(capsys, ["k1check", "--phi", "0.29,0.13,0.66,0.06,0.23,0.51", "--variant", "13.2"])["verdict"] \
        == "Unsupported"


def test_counterexample(capsys):
    out = _json(capsys, ["counterexample"])
    assert all(out["checks"].values())
    assert out["k1"]["m136_margin_below_-4/3"] > 0


def test_deterministic_output(capsys):
    run(["k1check", "--phi", CX, "--format", "csv"])
    first = capsys.readouterr().out
    run(["k1check", "--phi", CX, "--format", "csv"])
    assert capsys.readouterr().out == first
