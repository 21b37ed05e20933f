"""Weak and strong feasibility tests for the three system shapes."""

import pytest

from intervalgap.feasibility import (
    FeasVerdict,
    SystemKind,
    ThreeValued,
    as_ternary,
    max_side_system,
    min_side_system,
    side_system,
    strong_feasible,
    strong_side,
    weak_feasible,
    weak_side,
)
from intervalgap.interval_model import (
    Form,
    Orientation,
    dualize,
    endpoint_selections,
    iv,
    problem,
    realize_max,
    row_orthant_matrix,
    sign_vectors,
    vertex_vector,
)
from intervalgap.rational_lp import Q, Rel, Sense, VarDomain, feasible, lp


def test_three_valued_refuses_truthiness():
    with pytest.raises(TypeError):
        bool(ThreeValued.YES)
    assert ThreeValued.NO.token == "No"


def test_as_ternary():
    yes = FeasVerdict(answer=True)
    no = FeasVerdict(answer=False)
    assert as_ternary(yes) is ThreeValued.YES
    assert as_ternary(no) is ThreeValued.NO
    assert as_ternary(ThreeValued.UNKNOWN) is ThreeValued.UNKNOWN


def test_weak_free_trivial_yes():
    v = weak_feasible(SystemKind.INEQ_FREE, ((iv("0"),),), (iv("1"),))
    assert v.answer
    assert v.witness == (Q(0),)
    assert v.sign_vector == (1,)


def test_weak_free_trivial_no_names_orthant_count():
    v = weak_feasible(SystemKind.INEQ_FREE, ((iv("0"),),), (iv("-1"),))
    assert not v.answer
    assert "all 2 orthant systems infeasible" in v.notes


def test_weak_free_needs_the_orthant_sweep():
    """A point with mixed signs that no single row-endpoint system sees.

    The max side of this problem is feasible only at mixed sign
    patterns; sweeping matrices chosen row-wise (each row all-low or
    all-high) misses it, while the column-orthant sweep finds it.
    """
    big = problem(Form.EQ_NONNEG,
                  [["1", "-1", iv(("-1", "1"))],
                   ["1", "-1", iv(("-1", "1"))]],
                  ["0", "0"],
                  ["0", "0", "-1"])
    side = max_side_system(big)
    assert side.kind is SystemKind.INEQ_FREE
    v = weak_feasible(side.kind, side.matrix, side.rhs)
    assert v.answer
    point = v.witness
    # the witness satisfies some scenario of the system directly
    assert v.certificate_system.point_is_feasible(point)
    # but every row-endpoint matrix choice is infeasible at once:
    for signs in sign_vectors(3):
        M = row_orthant_matrix(side.matrix, signs)
        rows = [(M[i], Rel.LE, side.rhs[i].lo) for i in range(len(M))]
        ok, _ = feasible(lp(Sense.MIN, [0] * 2, rows, (VarDomain.FREE,) * 2))
        assert not ok


def test_weak_nonneg_single_lp():
    v = weak_feasible(SystemKind.INEQ_NONNEG,
                      ((iv(("-2", "1")),),), (iv(("-1", "0")),))
    assert v.answer
    x = v.witness[0]
    assert x >= 0 and Q(-2) * x <= 0


def test_weak_eqn_relaxation_note_on_failure():
    v = weak_feasible(SystemKind.EQN, ((iv("0"),),), (iv("1"),))
    assert not v.answer
    assert "solvability relaxation LP infeasible" in v.notes


def test_weak_eqn_wide_matrix_yes():
    v = weak_feasible(SystemKind.EQN, ((iv(("-1", "1")),),), (iv("1"),))
    assert v.answer
    assert v.witness[0] >= 0


def test_max_side_uses_transposed_upper_matrix():
    """Feasibility of the max side must see the widest matrix scenario."""
    p = problem(Form.INEQ_NONNEG, [[iv(("0", "2"))]], ["-5"], ["-1"])
    v = weak_side(p, Orientation.DUAL)
    assert v.answer
    # hand check: y = -1/2 with A = 2 gives 2y = -1 <= c = -1, y <= 0
    side = max_side_system(p)
    assert side.var_sign == -1
    # the side holds -transpose(A) over the substituted z = -y >= 0,
    # so the scenario A = 2 shows up as the low endpoint -2:
    assert side.matrix[0][0].lo == -2 and side.matrix[0][0].hi == 0


def test_side_system_kinds_per_form():
    A = problem(Form.EQ_NONNEG, [["1"]], ["1"], ["1"])
    B = problem(Form.INEQ_FREE, [["1"]], ["1"], ["1"])
    C = problem(Form.INEQ_NONNEG, [["1"]], ["1"], ["1"])
    assert min_side_system(A).kind is SystemKind.EQN
    assert max_side_system(A).kind is SystemKind.INEQ_FREE
    assert min_side_system(B).kind is SystemKind.INEQ_FREE
    assert max_side_system(B).kind is SystemKind.EQN
    assert min_side_system(C).kind is SystemKind.INEQ_NONNEG
    assert max_side_system(C).kind is SystemKind.INEQ_NONNEG
    assert min_side_system(A).var_sign == 1
    assert max_side_system(A).var_sign == 1
    assert max_side_system(B).var_sign == -1
    assert max_side_system(C).var_sign == -1


def test_side_system_is_orientation_relative():
    p = problem(Form.EQ_NONNEG, [["1"]], ["1"], ["1"])
    d = dualize(p)
    # On the dual-oriented problem, the "primal" side is the max side.
    assert side_system(d, Orientation.PRIMAL).kind is SystemKind.INEQ_FREE
    assert side_system(d, Orientation.DUAL).kind is SystemKind.EQN
    assert side_system(p, Orientation.PRIMAL).kind is SystemKind.EQN


def test_strong_free_split_witness():
    # x must reach at least 1 under every a in [1, 2]: x = 1 works.
    v = strong_feasible(SystemKind.INEQ_FREE,
                        ((iv(("-2", "-1")),),), (iv(("-1", "0")),))
    assert isinstance(v, FeasVerdict)
    assert v.answer
    assert v.witness == (Q(1),)


def test_strong_free_no():
    v = strong_feasible(SystemKind.INEQ_FREE,
                        ((iv(("-1", "1")),),), (iv("-1"),))
    assert isinstance(v, FeasVerdict)
    assert not v.answer


def test_strong_nonneg_single_lp():
    v = strong_feasible(SystemKind.INEQ_NONNEG,
                        ((iv(("1", "2")),),), (iv(("3", "4")),))
    assert v.answer
    assert v.witness[0] >= 0
    assert Q(2) * v.witness[0] <= 3


def test_strong_eqn_thin_vertex_sweep():
    # Thin matrix, wide rhs: solvable for every vertex of the rhs box.
    v = strong_feasible(SystemKind.EQN,
                        ((iv("1"), iv("-1")),), (iv(("-1", "1")),))
    assert isinstance(v, FeasVerdict)
    assert v.answer


def test_strong_eqn_thin_failing_vertex_reported():
    v = strong_feasible(SystemKind.EQN,
                        ((iv("1"),),), (iv(("-1", "1")),))
    assert isinstance(v, FeasVerdict)
    assert not v.answer
    assert v.sign_vector is not None
    # the reported vertex really is unsolvable in nonneg variables
    bad = vertex_vector((iv(("-1", "1")),), v.sign_vector)
    assert bad[0] < 0


def test_strong_eqn_wide_matrix_is_unknown():
    v = strong_feasible(SystemKind.EQN,
                        ((iv(("0", "1")),),), (iv("0"),))
    assert v is ThreeValued.UNKNOWN


def test_strong_side_roundtrip_on_paper_fixture(mixed_feasibility_problem):
    v = strong_side(mixed_feasibility_problem, Orientation.PRIMAL)
    assert isinstance(v, FeasVerdict)
    assert not v.answer
    w = weak_side(mixed_feasibility_problem, Orientation.PRIMAL)
    assert w.answer
    assert w.witness is not None


def test_full_axis_problem_weak_sides(full_axis_problem):
    pv = weak_side(full_axis_problem, Orientation.PRIMAL)
    dv = weak_side(full_axis_problem, Orientation.DUAL)
    assert pv.answer and dv.answer


def test_always_infeasible_min_side(always_infeasible_primal_problem):
    v = weak_side(always_infeasible_primal_problem, Orientation.PRIMAL)
    assert not v.answer
    w = weak_side(always_infeasible_primal_problem, Orientation.DUAL)
    assert w.answer
    s = strong_side(always_infeasible_primal_problem, Orientation.DUAL)
    # weakly but not strongly feasible on the max side: the first
    # endpoint scenario pins the wide objective entry at its low end,
    # where the max realization collapses
    assert isinstance(s, FeasVerdict) and not s.answer
    sc = next(endpoint_selections(always_infeasible_primal_problem))
    assert sc.c[0] == Q(-1)
    ok, _ = feasible(realize_max(sc))
    assert not ok
