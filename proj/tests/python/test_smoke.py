"""Smoke tests for the compiled bindings: chart construction, exact
arithmetic, the canonical bracket, derived brackets, and the scenario
runner round-trip."""

import json
import os

import pytest

import koszul


def plane():
    ch = koszul.Chart.shifted_cotangent([("x", 0), ("y", 0)], 1)
    return ch, koszul.Linfty.build(koszul.poly(ch, "p(x)*p(y)"))


def test_version():
    assert koszul.version() == "1.0.0"
    assert koszul.__version__ == "1.0.0"


def test_chart_construction():
    ch = koszul.Chart.shifted_cotangent([("x", 0), ("a", 1)], 2)
    assert len(ch) == 4
    assert ch.names == ["x", "a", "p(x)", "p(a)"]
    assert ch.is_cotangent
    assert ch.shift == 2
    assert ch.degree("p(x)") == 2
    assert ch.degree("p(a)") == 1
    plain = koszul.Chart.make([("a", 1), ("b", 1)])
    assert not plain.is_cotangent
    with pytest.raises(ValueError):
        plain.degree("nope")


def test_graded_arithmetic():
    ch = koszul.Chart.make([("a", 1), ("b", 1), ("t", 0)])
    a = koszul.coordinate(ch, "a")
    b = koszul.coordinate(ch, "b")
    assert (a * a).is_zero
    assert (a * b + b * a).is_zero
    assert a * b == -(b * a)
    assert (2 * a + a) == koszul.poly(ch, "3*a")
    assert (a * b).degree == 2
    p = koszul.poly(ch, "1/2*t*t - t*t")
    assert p == koszul.constant(ch, -1, 2) * koszul.poly(ch, "t*t")
    assert p.scale(-2, 1) == koszul.poly(ch, "t*t")


def test_parse_error():
    ch = koszul.Chart.make([("x", 0)])
    with pytest.raises(koszul.ParseError):
        koszul.poly(ch, "x +")
    with pytest.raises(koszul.ParseError):
        koszul.poly(ch, "y")


def test_canonical_bracket():
    ch, _ = plane()
    x = koszul.coordinate(ch, "x")
    px = koszul.coordinate(ch, "p(x)")
    assert koszul.bracket(x, px).render() == "-1"
    assert koszul.bracket(px, x).render() == "1"
    assert koszul.bracket(x, koszul.coordinate(ch, "y")).is_zero
    f = koszul.poly(ch, "x + y*p(x)")
    assert koszul.zero_section(f) == koszul.coordinate(ch, "x")
    assert koszul.partial(f, "p(x)") == koszul.poly(ch, "y")


def test_partial_sign_convention():
    ch = koszul.Chart.make([("a", 1), ("b", 1)])
    assert koszul.partial(koszul.poly(ch, "a*b"), "b").render() == "-a"


def test_derived_brackets():
    ch, S = plane()
    assert S.is_strict
    assert S.arity_bound == 2
    assert S.curvature.is_zero
    x = koszul.coordinate(ch, "x")
    y = koszul.coordinate(ch, "y")
    assert S.bracket([x, y]).render() == "1"
    assert S.bracket([y, x]).render() == "-1"
    assert S.bracket([x, x]).is_zero
    assert S.identity_residual([x, y], 4).is_zero
    assert S.exp_flow(x, koszul.coordinate(ch, "p(x)")) == koszul.poly(
        ch, "1 + p(x)"
    )
    assert S.mc_residual(koszul.constant(ch, 0)).is_zero
    assert koszul.decalage_sign([2, 2]) == -1


def test_master_equation_error():
    ch = koszul.Chart.shifted_cotangent(
        [("z1", 1), ("z2", 1), ("z3", 1), ("z4", 1)], 2
    )
    koszul.Linfty.build(koszul.poly(ch, "z1*z2*p(z3)"))  # fine
    with pytest.raises(koszul.MasterEquationError):
        koszul.Linfty.build(koszul.poly(ch, "z1*z2*p(z3) + z3*z4*p(z1)"))


def test_extended_brackets():
    ch, S = plane()
    zero = koszul.constant(ch, 0)
    a = koszul.Extended.make(zero, koszul.poly(ch, "p(x)"))
    b = koszul.Extended.make(zero, koszul.poly(ch, "x"))
    base, ambient = S.extended_brackets(2, [a, b])
    assert base.is_zero
    assert ambient.render() == "-1"
    amb, bs = S.extended_residual(zero, koszul.poly(ch, "p(x)*p(y)"))
    assert amb.is_zero  # theta_t = theta satisfies the ambient equation
    assert bs.is_zero


def test_inline_scenario():
    text = (
        "coord x : 0\n"
        "coord y : 0\n"
        "shift 1\n"
        "theta = p(x)*p(y)\n"
        "check master\n"
        "check brackets 2\n"
    )
    rep = json.loads(koszul.run_scenario_text(text))
    assert rep["version"] == "1.0.0"
    assert rep["shift"] == 1
    assert rep["summary"] == {"passed": 2, "failed": 0, "errors": 0, "exit": 0}
    assert [c["outcome"] for c in rep["checks"]] == ["pass", "pass"]


def test_scenario_file():
    scen = os.environ.get("KOSZUL_SCENARIOS", "scenarios")
    rep = json.loads(
        koszul.run_scenario_file(os.path.join(scen, "so3-courant.scn"))
    )
    assert rep["shift"] == 2
    assert rep["summary"]["exit"] == 0
    assert rep["summary"]["passed"] == len(rep["checks"])
    kinds = {c["kind"] for c in rep["checks"]}
    assert "master" in kinds
