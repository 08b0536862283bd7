"""Smoke test for the pysplitcurve extension (build it with maturin first)."""
import json

import pysplitcurve

G6 = "(x^3+y^3+z^3)^2-(z^2-4*x*y)*(x*y+y*z+z*x)^2"


def test_examples_listed():
    assert "split6" in pysplitcurve.example_ids()


def test_verify_example():
    r = json.loads(pysplitcurve.verify_example("nonsplit6a"))
    assert r["passed"] and r["outcome"] == "NonSplitting"


def test_unknown_example():
    try:
        pysplitcurve.verify_example("nope")
    except KeyError:
        return
    raise AssertionError("expected KeyError")


def test_analyze_and_pullback():
    assert json.loads(pysplitcurve.analyze(G6, "z^2-4*x*y"))["outcome"] == "Split(3,3)"
    assert json.loads(pysplitcurve.pullback("x*y"))["factor_type"] == [1, 1]


def test_bad_polynomial():
    try:
        pysplitcurve.pullback("x^^2")
    except ValueError:
        return
    raise AssertionError("expected ValueError")


if __name__ == "__main__":
    for name, f in sorted(globals().items()):
        if name.startswith("test_"):
            f()
            print("ok", name)
