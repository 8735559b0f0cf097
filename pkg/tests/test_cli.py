import csv
import io
import json
from fractions import Fraction as Q

import pytest

from d5jacobi.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_lattice(capsys):
    code, out, _ = run(capsys, "verify", "lattice")
    doc = json.loads(out)
    assert code == 0
    assert list(doc)[:5] == ["check", "passed", "max_residual", "seed", "samples"]
    assert doc["passed"] is True and doc["max_residual"] == "0"
    assert all(d["passed"] for d in doc["details"])


def test_verify_weyl_is_deterministic(capsys):
    args = ("verify", "weyl", "--seed", "7", "--trials", "10")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert json.loads(out1)["seed"] == 7


def test_verify_equivalence_small(capsys):
    code, out, _ = run(capsys, "verify", "equivalence", "--alpha", "1.5", "--beta", "0.5", "--s", "1",
                       "--nmax", "6", "--prec", "40", "--trials", "10")
    assert code == 0
    assert json.loads(out)["passed"]


def test_verify_basepoints_csv(capsys):
    code, out, _ = run(capsys, "verify", "basepoints", "--alpha", "3/2", "--beta", "1/2", "--s", "1",
                       "--n", "2", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert [r["passed"] for r in rows] == ["true", "true"]


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "verify", "nothing")[0] == 2
    assert run(capsys, "verify", "ladder", "--alpha", "1")[0] == 2
    assert run(capsys, "verify", "ladder", "--alpha", "abc", "--beta", "1", "--s", "1")[0] == 2
    assert run(capsys, "compute", "orbit-std", "--t", "1")[0] == 2
    assert run(capsys, "describe", "everything")[0] == 2
    code, _, err = run(capsys, "compute", "ladder", "--alpha", "0", "--beta", "1", "--s", "1", "--nmax", "3")
    assert code == 2 and "alpha > 0" in err


def test_compute_coeffs_classical(capsys):
    code, out, _ = run(capsys, "compute", "coeffs", "--alpha", "0", "--beta", "0", "--s", "0", "--nmax", "5")
    doc = json.loads(out)
    assert code == 0
    assert doc["columns"] == ["n", "h", "alpha", "beta", "p"]
    beta1 = Q(doc["rows"][1]["beta"])
    assert abs(beta1 - Q(1, 12)) < Q(1, 10 ** 50)


def test_csv_and_json_encode_same_values(capsys):
    args = ("compute", "ladder", "--nmax", "4", "--prec", "30")
    _, js, _ = run(capsys, *args)
    _, cs, _ = run(capsys, *args, "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(cs)))
    assert rows == json.loads(js)["rows"]


def test_compute_orbit_rec_columns(capsys):
    code, out, _ = run(capsys, "compute", "orbit-rec", "--nmax", "3", "--prec", "30")
    doc = json.loads(out)
    assert code == 0
    assert {"x", "y", "f", "g"} <= set(doc["columns"])
    assert len(doc["rows"]) == 3


def test_compute_orbit_rec_exact(capsys):
    code, out, _ = run(capsys, "compute", "orbit-rec", "--alpha", "3/2", "--beta", "1/2", "--s", "1",
                       "--x1", "1/3", "--y1", "2", "--nmax", "2", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert (rows[0]["f"], rows[0]["g"]) == ("-2/3", "3")


def test_compute_orbit_std(capsys):
    code, out, _ = run(capsys, "compute", "orbit-std", "--a", "1/2,1/4,1/8,1/8", "--t", "1", "--f", "2",
                       "--g", "1", "--nmax", "1")
    rows = json.loads(out)["rows"]
    assert code == 0
    assert (rows[1]["f"], rows[1]["g"]) == ("-11/8", "-227/209")
    assert [rows[1][f"a{i}"] for i in range(4)] == ["3/2", "-3/4", "9/8", "-7/8"]


def test_singular_step_exits_1(capsys):
    code, _, err = run(capsys, "compute", "orbit-std", "--a", "1/2,1/4,1/8,1/8", "--t", "1", "--f", "2",
                       "--g", "0", "--nmax", "1")
    assert code == 1
    assert "SingularStepError" in err


def test_describe_topics(capsys):
    code, out, _ = run(capsys, "describe", "roots", "--surface", "recurrence")
    labels = [r["label"] for r in json.loads(out)["rows"]]
    assert code == 0 and labels == ["d0", "d1", "d2", "d3", "d4", "d5", "a0", "a1", "a2", "a3"]
    code, out, _ = run(capsys, "describe", "basepoints", "--surface", "standard")
    assert [r["label"] for r in json.loads(out)["rows"]] == [f"p{i}" for i in range(1, 9)]
    code, out, _ = run(capsys, "describe", "words")
    words = {r["name"]: r for r in json.loads(out)["rows"]}
    assert words["standard"]["word"] == "s3 s2 w3 w1 w2 w0"
    assert words["recurrence"]["word"] == "s3 s2 w1 w2 w0 w1"
    assert words["standard"]["parameter_shift"] == "1,-1,1,-1"
    for topic in ("rootvars", "maps"):
        assert run(capsys, "describe", topic)[0] == 0


def test_out_file(tmp_path, capsys):
    target = tmp_path / "lattice.json"
    code, out, _ = run(capsys, "verify", "lattice", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["passed"]


def test_failure_exit_code(monkeypatch, capsys):
    from d5jacobi import cli
    from d5jacobi.report import VerificationReport

    monkeypatch.setattr(cli.lattice, "lattice_suite", lambda: [VerificationReport("broken", False, "1")])
    code, out, _ = run(capsys, "verify", "lattice")
    assert code == 1
    assert json.loads(out)["passed"] is False


@pytest.mark.parametrize("flag", ["--help"])
def test_help(flag, capsys):
    assert run(capsys, flag)[0] == 0
