"""Optimal-value bounds and the two closed-form validity checks."""

import pytest

import intervalgap.bounds
from intervalgap.bounds import (
    BoundsReport,
    best_value,
    bounds_report,
    check_thm_lower,
    check_thm_upper,
    rhs_lower,
    rhs_upper,
    worst_value,
    worst_value_grid_estimate,
    worst_value_validated,
)
from intervalgap.feasibility import ThreeValued
from intervalgap.interval_model import (
    Form,
    ModelError,
    UnsupportedFormError,
    dualize,
    iv,
    problem,
)
from intervalgap.oracle import enumerate_values
from intervalgap.rational_lp import NEG_INF, POS_INF, Q, ext_max, ext_min

from conftest import random_problems


def thin_unit_problem():
    return problem(Form.EQ_NONNEG, [["1"]], ["1"], ["1"])


def test_always_infeasible_bounds(always_infeasible_primal_problem):
    p = always_infeasible_primal_problem
    assert best_value(p) is POS_INF
    assert worst_value(p) is POS_INF
    assert rhs_lower(p) is NEG_INF
    assert rhs_upper(p) is POS_INF


def test_always_infeasible_lower_formula_fails(always_infeasible_primal_problem):
    r = check_thm_lower(always_infeasible_primal_problem)
    assert r.lower_formula_valid is False
    assert r.f_lower is POS_INF and r.rhs_lower is NEG_INF
    assert "min side weakly feasible: No" in r.condition_trace
    assert ("max side strongly feasible (rhs_lower program feasible): No"
            in r.condition_trace)


def test_always_infeasible_upper_formula_holds(always_infeasible_primal_problem):
    """The interesting split: strongly zero fails, yet the closed form
    stands because the dual sweep is unbounded on one orthant."""
    r = check_thm_upper(always_infeasible_primal_problem)
    assert r.upper_formula_valid is ThreeValued.YES
    assert r.f_upper is POS_INF and r.rhs_upper is POS_INF
    assert "rhs_upper is +inf: Yes" in r.condition_trace
    assert any(t.startswith("strongly zero duality gap: No")
               for t in r.condition_trace)


def test_thin_problem_all_four_coincide():
    r = bounds_report(thin_unit_problem())
    one = Q(1)
    assert r.f_lower.value == one and r.f_upper.value == one
    assert r.rhs_lower.value == one and r.rhs_upper.value == one
    assert r.lower_formula_valid is True
    assert r.upper_formula_valid is ThreeValued.YES


def test_form_c_corner_bounds():
    p = problem(Form.INEQ_NONNEG, [["1"]], [iv(("1", "2"))], [iv(("1", "2"))])
    assert best_value(p).value == 0
    assert worst_value(p).value == 0
    summary = enumerate_values(p)
    assert ext_min(o.value for _, o, _ in summary.per_scenario) == best_value(p)
    assert ext_max(o.value for _, o, _ in summary.per_scenario) == worst_value(p)


def test_form_c_report_has_no_dual_side():
    p = problem(Form.INEQ_NONNEG, [["1"]], [iv(("1", "2"))], [iv(("1", "2"))])
    r = bounds_report(p)
    assert r.rhs_lower is None and r.rhs_upper is None
    assert r.lower_formula_valid is None and r.upper_formula_valid is None
    assert ("dual-side formulas apply to the equality shape only; "
            "bounds reported alone") in r.condition_trace


def recast_mixed(b1, c2):
    # the two-constraint mixed problem rewritten with slacks into
    # equality shape: x1 + x3 = b1, -x2 + x4 = -1
    return problem(Form.EQ_NONNEG,
                   [["1", "0", "1", "0"], ["0", "-1", "0", "1"]],
                   [iv(b1), "-1"],
                   ["1", iv(c2), "0", "0"])


@pytest.mark.parametrize("b1", [("-1", "0"), ("-1", "-1/2")])
def test_recast_upper_formula_invalid(b1):
    p = recast_mixed(b1, ("-1", "-1/2"))
    r = check_thm_upper(p)
    assert r.f_upper is POS_INF
    assert r.rhs_upper is NEG_INF
    assert r.upper_formula_valid is ThreeValued.NO


def test_rhs_lower_thin_dual():
    assert rhs_lower(thin_unit_problem()).value == 1


def test_rhs_upper_unbounded_orthant():
    # max [1,2]y with y <= 0 free to roam the negative axis when the
    # objective vertex flips sign
    p = problem(Form.EQ_NONNEG, [["1"]], [iv(("-1", "1"))], ["0"])
    assert rhs_upper(p) is POS_INF


def test_bounds_reject_free_variable_form(full_axis_problem):
    for op in (best_value, worst_value, bounds_report):
        with pytest.raises(UnsupportedFormError):
            op(full_axis_problem)


def test_dual_side_formulas_reject_nonneg_inequality_form():
    p = problem(Form.INEQ_NONNEG, [["1"]], ["1"], ["1"])
    for op in (rhs_lower, rhs_upper, check_thm_lower, check_thm_upper):
        with pytest.raises(UnsupportedFormError):
            op(p)


def test_bounds_reject_dual_orientation():
    with pytest.raises(ModelError, match="dualize"):
        best_value(dualize(thin_unit_problem()))
    with pytest.raises(ModelError, match="dualize"):
        bounds_report(dualize(thin_unit_problem()))


def test_rhs_upper_matches_endpoint_dual_maximum():
    """Arbitration: the orthant sweep equals the endpoint-scenario
    maximum of the dual value, infinities included."""
    for p in random_problems(seed=301, count=80, form=Form.EQ_NONNEG,
                             wide_cap=4):
        summary = enumerate_values(p)
        oracle_max = ext_max(d.value for _, _, d in summary.per_scenario)
        assert rhs_upper(p) == oracle_max


def test_lower_biconditional_random():
    for p in random_problems(seed=302, count=60, form=Form.EQ_NONNEG,
                             wide_cap=4):
        r = check_thm_lower(p)  # raises SelfCheckError on any violation
        assert r.lower_formula_valid == (r.f_lower == r.rhs_lower)
        assert r.f_lower >= r.rhs_lower


def test_worst_value_validated_random():
    for p in random_problems(seed=303, count=40, form=Form.EQ_NONNEG,
                             wide_cap=3):
        value, exact = worst_value_validated(p)
        assert exact
        assert value == worst_value(p)
        summary = enumerate_values(p)
        endpoint_max = ext_max(o.value for _, o, _ in summary.per_scenario)
        assert value >= endpoint_max


def test_best_value_below_endpoint_minimum():
    for p in random_problems(seed=304, count=40, form=Form.EQ_NONNEG,
                             wide_cap=3):
        summary = enumerate_values(p)
        endpoint_min = ext_min(o.value for _, o, _ in summary.per_scenario)
        assert best_value(p) <= endpoint_min


def test_report_orders_bounds():
    for p in random_problems(seed=305, count=30, form=Form.EQ_NONNEG,
                             wide_cap=3):
        r = bounds_report(p)
        assert r.f_lower <= r.f_upper
        assert r.f_upper >= r.rhs_upper


def test_demotion_path(monkeypatch):
    p = thin_unit_problem()
    monkeypatch.setattr(intervalgap.bounds, "worst_value",
                        lambda prob, cap=0: NEG_INF)
    value, exact = worst_value_validated(p)
    assert not exact
    assert value == worst_value_grid_estimate(p)
    r = bounds_report(p, validate_upper=True)
    assert isinstance(r, BoundsReport)
    assert r.f_upper == value
    assert r.upper_formula_valid is ThreeValued.UNKNOWN
    assert ("f_upper formula demoted: grid found a harder scenario; "
            "reporting the grid value, no upper verdict") in r.condition_trace
    assert r.rhs_upper is not None


def test_validated_report_without_demotion():
    p = thin_unit_problem()
    r = bounds_report(p, validate_upper=True)
    assert r.upper_formula_valid is ThreeValued.YES
    assert all("demoted" not in line for line in r.condition_trace)
