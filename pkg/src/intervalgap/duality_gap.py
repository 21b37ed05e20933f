"""Weakly and strongly zero duality gap.

One scenario has zero duality gap exactly when at least one of its two
programs is feasible (both infeasible is the only gap case, and then the
gap is infinite). Lifting over the box:

  weakly zero    some scenario has zero gap
                 <=> the min side or the max side is weakly feasible.
                 Decided exactly, always.
  strongly zero  every scenario has zero gap. Decided exactly when the
                 matrix is degenerate; otherwise attacked by a ladder of
                 sufficient conditions, necessary conditions and a grid
                 refuter, with an honest Unknown when none of them bites.

The ladder order: degenerate exact path; sufficient (either side
strongly feasible, insofar as that is decidable); necessary-condition
refutation; grid counterexample; Unknown. A No always tries to attach a
witness scenario whose two programs re-solve to infeasible; on the
degenerate path and for the INEQ_NONNEG shape this always succeeds, on
interval-matrix necessary failures it is a best-effort grid search,
because a refutation certificate may require irrational data.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .interval_model import (
    DEFAULT_ENUM_CAP,
    CapExceeded,
    Form,
    IlpProblem,
    Interval,
    ModelError,
    Scenario,
    grid_points,
    realize_max,
    realize_min,
    vertex_vector,
)
from .feasibility import (
    FeasVerdict,
    ThreeValued,
    as_ternary,
    max_side_system,
    min_side_system,
    strong_feasible,
    weak_feasible,
)
from .rational_lp import SelfCheckError, feasible

from itertools import product


@dataclass(frozen=True, slots=True)
class DgReport:
    """A three-valued verdict with its provenance.

    fired_condition names the clause that decided the verdict; notes
    list every evaluated sub-condition with its outcome. At most one
    witness field is set: a point (plus the sign vector that found it)
    for weak-mode Yes, a scenario for strong-mode No.
    """

    verdict: ThreeValued
    mode: str
    fired_condition: str
    witness_point: Optional[tuple] = None
    witness_signs: Optional[tuple] = None
    witness_scenario: Optional[Scenario] = None
    notes: tuple = ()


def _feas_word(verdict: FeasVerdict) -> str:
    return "Yes" if verdict.answer else "No"


def weakly_zero(prob: IlpProblem, cap: int = DEFAULT_ENUM_CAP) -> DgReport:
    """Exact decision; the verdict is never Unknown.

    The min side is tested first; on success its feasible point (a
    solution of the certificate system recorded in the notes) is the
    witness. Side names in fired_condition refer to the min program as
    primal and the max program as dual, independent of orientation.
    """
    s_min = min_side_system(prob)
    v_min = weak_feasible(s_min.kind, s_min.matrix, s_min.rhs, cap)
    notes = ["min side weakly feasible: " + _feas_word(v_min)]
    if v_min.answer:
        return DgReport(ThreeValued.YES, "weak", "weak.primal",
                        v_min.witness, v_min.sign_vector, None, tuple(notes))

    s_max = max_side_system(prob)
    v_max = weak_feasible(s_max.kind, s_max.matrix, s_max.rhs, cap)
    notes.append("max side weakly feasible: " + _feas_word(v_max))
    if v_max.answer:
        if s_max.var_sign < 0:
            notes.append("witness is in substituted coordinates: the max "
                         "side's own variables are its negation")
        return DgReport(ThreeValued.YES, "weak", "weak.dual",
                        v_max.witness, v_max.sign_vector, None, tuple(notes))
    return DgReport(ThreeValued.NO, "weak", "weak.none", None, None, None,
                    tuple(notes))


def _or3(a: ThreeValued, b: ThreeValued) -> ThreeValued:
    if ThreeValued.YES in (a, b):
        return ThreeValued.YES
    if ThreeValued.UNKNOWN in (a, b):
        return ThreeValued.UNKNOWN
    return ThreeValued.NO


def necessary_strong(prob: IlpProblem, cap: int = DEFAULT_ENUM_CAP):
    """The two necessary conditions for strongly zero gap, evaluated
    three-valued. Returns (not_refuted, notes): not_refuted is False
    exactly when some condition is definitively violated.

    (i)  the min side is weakly feasible or the max side strongly;
    (ii) the max side is weakly feasible or the min side strongly.
    If (i) failed, some scenario's min program would be infeasible with
    a max program that is not always feasible either; symmetrically for
    (ii). A disjunct that is Unknown can never refute.
    """
    first, second, notes = _necessary_parts(prob, cap)
    refuted = ThreeValued.NO in (first, second)
    return (not refuted), tuple(notes)


def _side_verdicts(prob: IlpProblem, cap: int):
    s_min = min_side_system(prob)
    s_max = max_side_system(prob)
    ps = strong_feasible(s_min.kind, s_min.matrix, s_min.rhs, cap)
    ds = strong_feasible(s_max.kind, s_max.matrix, s_max.rhs, cap)
    return s_min, s_max, ps, ds


def _necessary_parts(prob: IlpProblem, cap: int):
    s_min, s_max, ps, ds = _side_verdicts(prob, cap)
    pw = weak_feasible(s_min.kind, s_min.matrix, s_min.rhs, cap)
    dw = weak_feasible(s_max.kind, s_max.matrix, s_max.rhs, cap)
    first = _or3(as_ternary(pw), as_ternary(ds))
    second = _or3(as_ternary(ps), as_ternary(dw))
    notes = [
        "min side weakly feasible: " + _feas_word(pw),
        "max side weakly feasible: " + _feas_word(dw),
        "min side strongly feasible: " + as_ternary(ps).token,
        "max side strongly feasible: " + as_ternary(ds).token,
        "necessary (min weak or max strong): " + first.token,
        "necessary (max weak or min strong): " + second.token,
    ]
    return first, second, notes


def _assert_gap_witness(scenario: Scenario) -> Scenario:
    if feasible(realize_min(scenario))[0] or feasible(realize_max(scenario))[0]:
        raise SelfCheckError("claimed gap witness has a feasible side")
    return scenario


def _lo_matrix(prob: IlpProblem) -> tuple:
    return tuple(tuple(e.lo for e in row) for row in prob.A)


def _hi_matrix(prob: IlpProblem) -> tuple:
    return tuple(tuple(e.hi for e in row) for row in prob.A)


def _lo_vector(intervals) -> tuple:
    return tuple(e.lo for e in intervals)


def _degenerate_witness(prob: IlpProblem, ps: FeasVerdict,
                        ds: FeasVerdict) -> Scenario:
    """With a degenerate matrix, both failing sides name concrete data:
    an equality side fails at a recorded right-hand-side vertex, an
    inequality side fails at its all-lower bound (its hardest data)."""
    if prob.form is Form.EQ_NONNEG:
        bad_b = vertex_vector(prob.b, ps.sign_vector)
    else:
        bad_b = _lo_vector(prob.b)
    if prob.form is Form.INEQ_FREE:
        bad_c = vertex_vector(prob.c, ds.sign_vector)
    else:
        bad_c = _lo_vector(prob.c)
    scenario = Scenario(_lo_matrix(prob), bad_b, bad_c, prob)
    return _assert_gap_witness(scenario)


def _grid_matrix_candidates(prob: IlpProblem, depth: int):
    m, n = prob.m, prob.n
    flat = [grid_points(e, depth) for row in prob.A for e in row]
    for values in product(*flat):
        yield tuple(tuple(values[i * n + j] for j in range(n))
                    for i in range(m))


def _necessary_witness(prob: IlpProblem, failed_first: bool,
                       depth: int, cap: int) -> Optional[Scenario]:
    """Build a both-infeasible scenario after a necessary-condition
    refutation. One side is infeasible in every scenario, so only the
    other side's failing data needs to be located."""
    if prob.form is Form.INEQ_NONNEG:
        if failed_first:
            # Max side's strong test failed at matrix A.lo with c.lo.
            scenario = Scenario(_lo_matrix(prob), _lo_vector(prob.b),
                                _lo_vector(prob.c), prob)
        else:
            # Min side's strong test failed at matrix A.hi with b.lo.
            scenario = Scenario(_hi_matrix(prob), _lo_vector(prob.b),
                                _lo_vector(prob.c), prob)
        return _assert_gap_witness(scenario)

    # Interval-matrix equality shapes: search the grid for the one side
    # that is known to fail somewhere; the opposite side fails everywhere.
    count = 1
    for row in prob.A:
        for e in row:
            count *= len(grid_points(e, depth))
    part = prob.c if failed_first else prob.b
    for e in part:
        count *= len(grid_points(e, depth))
    if count > cap:
        raise CapExceeded(count, cap, "necessary-failure witness search")

    part_choices = [grid_points(e, depth) for e in part]
    b_lo, c_lo = _lo_vector(prob.b), _lo_vector(prob.c)
    for a_matrix in _grid_matrix_candidates(prob, depth):
        for values in product(*part_choices):
            if failed_first:
                probe = Scenario(a_matrix, b_lo, values, prob)
                bad = not feasible(realize_max(probe))[0]
            else:
                probe = Scenario(a_matrix, values, c_lo, prob)
                bad = not feasible(realize_min(probe))[0]
            if bad:
                b_vec = b_lo if failed_first else values
                c_vec = values if failed_first else c_lo
                return _assert_gap_witness(
                    Scenario(a_matrix, b_vec, c_vec, prob))
    return None


def strongly_zero(prob: IlpProblem, grid_depth: int = 1,
                  cap: int = DEFAULT_ENUM_CAP) -> DgReport:
    """Three-valued decision ladder for strongly zero duality gap.

    Exact (never Unknown) when the matrix is degenerate. A Yes from the
    sufficient rung is cross-checked against the necessary conditions
    and raises SelfCheckError if both directions are simultaneously
    reachable, which would mean the implementation is wrong.
    """
    from .oracle import grid_counterexample_strong

    s_min, s_max, ps, ds = _side_verdicts(prob, cap)
    ps_t, ds_t = as_ternary(ps), as_ternary(ds)
    notes = [
        "min side strongly feasible: " + ps_t.token,
        "max side strongly feasible: " + ds_t.token,
    ]

    if prob.matrix_is_degenerate:
        notes.insert(0, "degenerate matrix: exact characterization")
        if ps_t is ThreeValued.YES:
            return DgReport(ThreeValued.YES, "strong",
                            "strong.degenerate.primal",
                            ps.witness, None, None, tuple(notes))
        if ds_t is ThreeValued.YES:
            if s_max.var_sign < 0:
                notes.append("witness is in substituted coordinates: the "
                             "max side's own variables are its negation")
            return DgReport(ThreeValued.YES, "strong",
                            "strong.degenerate.dual",
                            ds.witness, ds.sign_vector, None, tuple(notes))
        witness = _degenerate_witness(prob, ps, ds)
        return DgReport(ThreeValued.NO, "strong",
                        "strong.degenerate.neither",
                        None, None, witness, tuple(notes))

    pw = weak_feasible(s_min.kind, s_min.matrix, s_min.rhs, cap)
    dw = weak_feasible(s_max.kind, s_max.matrix, s_max.rhs, cap)
    notes.append("min side weakly feasible: " + _feas_word(pw))
    notes.append("max side weakly feasible: " + _feas_word(dw))
    first = _or3(as_ternary(pw), ds_t)
    second = _or3(ps_t, as_ternary(dw))
    notes.append("necessary (min weak or max strong): " + first.token)
    notes.append("necessary (max weak or min strong): " + second.token)

    if ThreeValued.YES in (ps_t, ds_t):
        if ThreeValued.NO in (first, second):
            raise SelfCheckError(
                "sufficient condition and a necessary-condition refutation "
                "fired on the same problem")
        which = "primal" if ps_t is ThreeValued.YES else "dual"
        side = ps if ps_t is ThreeValued.YES else ds
        if which == "dual" and s_max.var_sign < 0:
            notes.append("witness is in substituted coordinates: the max "
                         "side's own variables are its negation")
        return DgReport(ThreeValued.YES, "strong",
                        "strong.sufficient." + which,
                        side.witness, None, None, tuple(notes))

    for failed_first, cond in ((True, first), (False, second)):
        if cond is ThreeValued.NO:
            witness = _necessary_witness(prob, failed_first, grid_depth, cap)
            if witness is None:
                notes.append("no grid scenario certifies the refutation at "
                             "depth %d; the verdict stands without one"
                             % grid_depth)
            name = ("strong.necessary.min_weak_or_max_strong"
                    if failed_first else
                    "strong.necessary.max_weak_or_min_strong")
            return DgReport(ThreeValued.NO, "strong", name,
                            None, None, witness, tuple(notes))

    found = grid_counterexample_strong(prob, grid_depth, cap)
    if found is not None:
        _assert_gap_witness(found)
        notes.append("grid refuter found a both-infeasible scenario at "
                     "depth %d" % grid_depth)
        return DgReport(ThreeValued.NO, "strong", "strong.grid_counterexample",
                        None, None, found, tuple(notes))

    notes.append("grid refuter found nothing at depth %d" % grid_depth)
    return DgReport(ThreeValued.UNKNOWN, "strong", "strong.undecided",
                    None, None, None, tuple(notes))


# ---------------------------------------------------------------------------
# Verdict-preserving reductions.
# ---------------------------------------------------------------------------

def _thin_hi(intervals) -> tuple:
    return tuple(Interval(e.hi, e.hi) for e in intervals)


def _thin_lo(intervals) -> tuple:
    return tuple(Interval(e.lo, e.lo) for e in intervals)


def reduce_weak(prob: IlpProblem) -> IlpProblem:
    """Collapse every interval the weak-gap tests never read below its
    used endpoint; weakly_zero is invariant under this map.

    EQ_NONNEG keeps b (its weak test reads both bounds) and pins c at
    the upper bounds; INEQ_FREE mirrors that for b; INEQ_NONNEG pins
    both b and c at the upper bounds. The matrix always stays: the min
    side reads its lower bounds and the max side its upper bounds, so
    no single matrix selection preserves both tests.
    """
    if prob.form is Form.EQ_NONNEG:
        return replace(prob, c=_thin_hi(prob.c))
    if prob.form is Form.INEQ_FREE:
        return replace(prob, b=_thin_hi(prob.b))
    return replace(prob, b=_thin_hi(prob.b), c=_thin_hi(prob.c))


def reduce_strong_deg(prob: IlpProblem) -> IlpProblem:
    """The strong-gap counterpart for degenerate matrices, pinning at
    lower bounds instead; strongly_zero is invariant. Requires a
    degenerate matrix, where the strong characterization is exact."""
    if not prob.matrix_is_degenerate:
        raise ModelError("reduce_strong_deg needs a degenerate matrix")
    if prob.form is Form.EQ_NONNEG:
        return replace(prob, c=_thin_lo(prob.c))
    if prob.form is Form.INEQ_FREE:
        return replace(prob, b=_thin_lo(prob.b))
    return replace(prob, b=_thin_lo(prob.b), c=_thin_lo(prob.c))
