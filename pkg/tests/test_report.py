import json
from fractions import Fraction as Q

from d5jacobi.opcore import make_context
from d5jacobi.report import ResidualTracker, decimal_string, reports_to_csv, reports_to_json


def test_decimal_strings():
    ctx = make_context(30)
    assert decimal_string(Q(3, 4)) == "3/4"
    assert decimal_string(Q(6, 3)) == "2"
    assert decimal_string(True) == "true"
    assert decimal_string(ctx.zero) == "0"
    assert decimal_string(ctx.mpf(1) / 3, 5) == "0.33333"


def test_tracker_threshold_and_worst():
    ctx = make_context(30)
    tr = ResidualTracker("demo", threshold=ctx.mpf("1e-10"), seed=4)
    tr.add("small", ctx.mpf("1e-20"))
    assert tr.report().passed
    tr.add("large", ctx.mpf("1e-5"))
    rep = tr.report()
    assert not rep.passed
    assert rep.max_residual == "1.0e-5"
    assert [d["passed"] for d in rep.details] == [True, False]


def test_empty_report_fails():
    assert not ResidualTracker("nothing").report().passed


def test_serialisation():
    tr = ResidualTracker("exact", seed=1)
    tr.add("item", 0, True)
    rep = tr.report()
    doc = json.loads(reports_to_json([rep]))[0]
    assert list(doc) == ["check", "passed", "max_residual", "seed", "samples", "threshold", "details"]
    lines = reports_to_csv([rep]).splitlines()
    assert lines == ["check,passed,max_residual,threshold,seed,samples", "exact,true,0,0,1,1"]
