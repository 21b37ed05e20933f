"""The exact LP core: trichotomy, duality, anti-cycling, validation."""

import pytest
from hypothesis import given, settings, strategies as st

from intervalgap.rational_lp import (
    NEG_INF,
    POS_INF,
    ExtendedRational,
    LpProblem,
    LpStatus,
    Q,
    Rel,
    Sense,
    VarDomain,
    ext_max,
    ext_min,
    feasible,
    lp,
    qstr,
    solve,
    textbook_dual,
)

N = VarDomain.NONNEG
F = VarDomain.FREE


def test_q_accepts_rational_strings_and_ints():
    assert Q("1/3") * 3 == 1
    assert Q("-2") == -2
    assert Q(7) == 7
    assert qstr(Q("4/6")) == "2/3"
    assert qstr(Q(-3)) == "-3"


def test_q_rejects_floats_and_bools():
    with pytest.raises(TypeError):
        Q(0.5)
    with pytest.raises(TypeError):
        Q(True)


def test_extended_rational_total_order_and_negation():
    one = ExtendedRational.finite(1)
    assert NEG_INF < one < POS_INF
    assert -POS_INF is NEG_INF and -NEG_INF is POS_INF
    assert -one == ExtendedRational.finite(-1)
    assert str(one) == "1" and str(POS_INF) == "+inf"


def test_empty_extremes_convention():
    assert ext_min([]) is POS_INF
    assert ext_max([]) is NEG_INF


def test_optimal_min():
    out = solve(lp(Sense.MIN, [1], [((1,), Rel.GE, 2)], (N,)))
    assert out.status is LpStatus.OPTIMAL
    assert out.value == ExtendedRational.finite(2)
    assert out.point == (Q(2),)


def test_infeasible_conflicting_equalities():
    # x1 - x2 = 0 and x1 - x2 = 1 cannot both hold.
    out = solve(lp(Sense.MIN, [0, 0],
                   [((1, -1), Rel.EQ, 0), ((1, -1), Rel.EQ, 1)], (N, N)))
    assert out.status is LpStatus.INFEASIBLE
    assert out.value is POS_INF


def test_infeasible_zero_row():
    ok, point = feasible(lp(Sense.MIN, [0], [((0,), Rel.LE, -1)], (F,)))
    assert not ok and point is None


def test_trivial_zero_row_feasible():
    ok, point = feasible(lp(Sense.MIN, [0], [((0,), Rel.LE, 1)], (F,)))
    assert ok
    assert point == (Q(0),)


def test_unbounded_min():
    out = solve(lp(Sense.MIN, [1], [((1,), Rel.LE, 0)], (F,)))
    assert out.status is LpStatus.UNBOUNDED
    assert out.value is NEG_INF


def test_max_conventions_mirror():
    out = solve(lp(Sense.MAX, [1], [((1,), Rel.GE, 0)], (N,)))
    assert out.status is LpStatus.UNBOUNDED
    assert out.value is POS_INF
    out = solve(lp(Sense.MAX, [1], [((0,), Rel.LE, -1)], (N,)))
    assert out.status is LpStatus.INFEASIBLE
    assert out.value is NEG_INF


def test_beale_cycling_instance_terminates():
    # The classic cycling example for naive pivoting; Bland's rule must
    # grind through it to the exact optimum.
    rows = [
        (("1/4", -60, "-1/25", 9), Rel.LE, 0),
        (("1/2", -90, "-1/50", 3), Rel.LE, 0),
        ((0, 0, 1, 0), Rel.LE, 1),
    ]
    out = solve(lp(Sense.MIN, ("-3/4", 150, "-1/50", 6), rows, (N,) * 4))
    assert out.status is LpStatus.OPTIMAL
    assert out.value == ExtendedRational.finite("-1/20")


def test_degenerate_rows_are_dropped_not_fatal():
    # Duplicated constraint forces a redundant row through phase one.
    rows = [((1, 1), Rel.EQ, 2), ((1, 1), Rel.EQ, 2)]
    out = solve(lp(Sense.MIN, [1, 0], rows, (N, N)))
    assert out.status is LpStatus.OPTIMAL
    assert out.value == ExtendedRational.finite(0)


def test_feasible_witness_is_checked():
    ok, point = feasible(lp(Sense.MIN, [0, 0],
                            [((1, 2), Rel.GE, 4), ((1, -1), Rel.LE, 1)],
                            (N, F)))
    assert ok
    assert Q(point[0]) + 2 * Q(point[1]) >= 4


def test_problem_validation():
    with pytest.raises(ValueError):
        lp(Sense.MIN, [], [], ())
    with pytest.raises(ValueError):
        lp(Sense.MIN, [1, 2], [((1,), Rel.LE, 0)], (N, N))
    with pytest.raises(TypeError):
        LpProblem(Sense.MIN, (Q(1),), (), ("nonneg",))


def test_textbook_dual_value_agreement_mixed():
    primal = lp(Sense.MIN, [2, 3, 1],
                [((1, 1, 0), Rel.GE, 3),
                 ((0, 1, 2), Rel.EQ, 4),
                 ((1, 0, 1), Rel.LE, 5)],
                (N, N, F))
    p = solve(primal)
    d = solve(textbook_dual(primal))
    assert p.status is LpStatus.OPTIMAL and d.status is LpStatus.OPTIMAL
    assert p.value == d.value


def test_textbook_dual_of_dual_value():
    primal = lp(Sense.MIN, [1, -1],
                [((1, 1), Rel.LE, 4), ((1, -2), Rel.GE, -2)],
                (N, N))
    twice = textbook_dual(textbook_dual(primal))
    assert solve(primal).value == solve(twice).value


small_q = st.integers(-4, 4).map(Q)
pos_q = st.integers(1, 5).map(lambda k: Q(k) / 2)


@st.composite
def small_lps(draw):
    n = draw(st.integers(1, 3))
    m = draw(st.integers(1, 3))
    rows = []
    for _ in range(m):
        coeffs = tuple(draw(small_q) for _ in range(n))
        rel = draw(st.sampled_from((Rel.LE, Rel.GE, Rel.EQ)))
        rows.append((coeffs, rel, draw(small_q)))
    domains = tuple(draw(st.sampled_from((N, F))) for _ in range(n))
    objective = tuple(draw(small_q) for _ in range(n))
    sense = draw(st.sampled_from((Sense.MIN, Sense.MAX)))
    return lp(sense, objective, rows, domains)


@settings(max_examples=80, deadline=None)
@given(small_lps(), pos_q)
def test_row_scaling_invariance(problem, scale):
    """Scaling one constraint by a positive rational changes nothing."""
    first = problem.rows[0]
    scaled_row = (tuple(scale * a for a in first.coeffs), first.rel,
                  scale * first.rhs)
    scaled = lp(problem.sense, problem.objective,
                [scaled_row] + [(r.coeffs, r.rel, r.rhs)
                                for r in problem.rows[1:]],
                problem.domains)
    a, b = solve(problem), solve(scaled)
    assert a.status is b.status
    assert a.value == b.value


@settings(max_examples=80, deadline=None)
@given(small_lps(), pos_q)
def test_objective_scaling_scales_value(problem, scale):
    scaled = lp(problem.sense, tuple(scale * a for a in problem.objective),
                [(r.coeffs, r.rel, r.rhs) for r in problem.rows],
                problem.domains)
    a, b = solve(problem), solve(scaled)
    assert a.status is b.status
    if a.status is LpStatus.OPTIMAL:
        assert b.value.value == scale * a.value.value


@settings(max_examples=80, deadline=None)
@given(small_lps())
def test_optimal_point_is_feasible_and_matches_value(problem):
    out = solve(problem)
    if out.status is LpStatus.OPTIMAL:
        assert problem.point_is_feasible(out.point)
        assert problem.objective_at(out.point) == out.value.value


@settings(max_examples=80, deadline=None)
@given(small_lps())
def test_weak_duality_against_textbook_dual(problem):
    p = solve(problem)
    d = solve(textbook_dual(problem))
    if p.status is LpStatus.OPTIMAL and d.status is LpStatus.OPTIMAL:
        assert p.value == d.value
    if problem.sense is Sense.MIN:
        if p.status is LpStatus.UNBOUNDED:
            assert d.status is LpStatus.INFEASIBLE
    else:
        if p.status is LpStatus.UNBOUNDED:
            assert d.status is LpStatus.INFEASIBLE
