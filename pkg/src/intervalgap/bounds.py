"""Bounds of the optimal value set, and when the dual-side formulas hit them.

For the min program family over the data box, f_lower and f_upper are
the infimum and supremum of scenario optima on the extended axis, with
the usual conventions (an infeasible scenario contributes +inf, an
unbounded one -inf).

The equality shape (form code "A") additionally gets the two dual-side
quantities this package exists to check:

  rhs_lower   value of one explicit LP; equals f_lower exactly when the
              min side is weakly feasible or the max side strongly
              feasible. The check is an if-and-only-if and is asserted
              in both directions on every call.
  rhs_upper   the best dual scenario value, computed by decomposing the
              dual variable space into its 2^m sign orthants; per
              orthant the loosest constraint matrix is a single
              endpoint selection, so the sweep is exact.

f_upper for the equality shape uses the classical sign-orthant vertex
formula. It is treated as a hypothesis, not gospel: every term is a
true scenario optimum, so it can only ever sit below the real supremum,
and worst_value_validated cross-checks it against a dense grid and
demotes the result to the grid value (flagged inexact) whenever the
grid wins. The randomized test suite runs that validation wholesale.

The free-variable inequality shape is rejected throughout: neither
bound has a stated finite procedure here, and guessing one would be
worse than refusing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .rational_lp import (
    NEG_INF,
    POS_INF,
    ExtendedRational,
    LpStatus,
    Rel,
    SelfCheckError,
    Sense,
    VarDomain,
    lp,
    solve,
)
from .interval_model import (
    DEFAULT_ENUM_CAP,
    CapExceeded,
    Form,
    IlpProblem,
    ModelError,
    Orientation,
    Scenario,
    UnsupportedFormError,
    grid_points,
    orthant_matrix,
    realize_min,
    row_orthant_matrix,
    sign_vectors,
    transpose_intervals,
    vertex_vector,
)
from .feasibility import ThreeValued, min_side_system, weak_feasible
from .duality_gap import strongly_zero


@dataclass(frozen=True, slots=True)
class BoundsReport:
    """Computed bounds plus formula verdicts; fields a given entry point
    does not evaluate stay None. lower_formula_valid is an exact boolean,
    upper_formula_valid inherits three-valuedness from strongly_zero.
    condition_trace lists the evaluated clauses in a fixed order."""

    f_lower: Optional[ExtendedRational] = None
    f_upper: Optional[ExtendedRational] = None
    rhs_lower: Optional[ExtendedRational] = None
    rhs_upper: Optional[ExtendedRational] = None
    lower_formula_valid: Optional[bool] = None
    upper_formula_valid: Optional[ThreeValued] = None
    condition_trace: tuple = ()


def _require_min_program(prob: IlpProblem) -> None:
    if prob.orientation is not Orientation.PRIMAL:
        raise ModelError(
            "bounds describe the min program, but this problem is "
            "dual-oriented; dualize it back first")


def _reject_free_shape(prob: IlpProblem) -> None:
    if prob.form is Form.INEQ_FREE:
        raise UnsupportedFormError(
            "no bound formula is provided for the free-variable "
            "inequality shape")


def _corner(prob: IlpProblem, a_hi: bool, b_hi: bool, c_hi: bool) -> Scenario:
    a = tuple(tuple(e.hi if a_hi else e.lo for e in row) for row in prob.A)
    b = tuple(e.hi if b_hi else e.lo for e in prob.b)
    c = tuple(e.hi if c_hi else e.lo for e in prob.c)
    return Scenario(a, b, c, prob)


def best_value(prob: IlpProblem) -> ExtendedRational:
    """f_lower, exact.

    The inequality-with-nonnegative-variables shape is monotone: the
    scenario (A.lo, b.hi, c.lo) simultaneously has the largest feasible
    set and the cheapest objective, so one scenario LP settles it. The
    equality shape has no easiest scenario; there f_lower is the optimum
    of c.lo over the union of all scenario feasible sets, which for
    nonnegative variables is the polyhedron
        A.lo x <= b.hi,  A.hi x >= b.lo,  x >= 0.
    """
    _require_min_program(prob)
    _reject_free_shape(prob)
    if prob.form is Form.INEQ_NONNEG:
        return solve(realize_min(_corner(prob, False, True, False))).value
    rows = [(tuple(e.lo for e in row), Rel.LE, rhs.hi)
            for row, rhs in zip(prob.A, prob.b)]
    rows += [(tuple(e.hi for e in row), Rel.GE, rhs.lo)
             for row, rhs in zip(prob.A, prob.b)]
    objective = tuple(e.lo for e in prob.c)
    domains = (VarDomain.NONNEG,) * prob.n
    return solve(lp(Sense.MIN, objective, rows, domains)).value


def worst_value(prob: IlpProblem, cap: int = DEFAULT_ENUM_CAP) -> ExtendedRational:
    """f_upper. Exact for the inequality shape (hardest scenario
    (A.hi, b.lo, c.hi) by the same monotonicity as best_value).

    For the equality shape this is the sign-orthant vertex formula: the
    max of scenario optima over the 2^m scenarios that pin row i of A
    low and b_i high when p_i = +1, and the reverse when p_i = -1, with
    c at its upper bounds. Each term is a genuine scenario optimum, so
    the result is never above the true supremum; whether it always
    reaches it is exactly what worst_value_validated probes.
    """
    _require_min_program(prob)
    _reject_free_shape(prob)
    if prob.form is Form.INEQ_NONNEG:
        return solve(realize_min(_corner(prob, True, False, True))).value
    c_hi = tuple(e.hi for e in prob.c)
    best = NEG_INF
    for p in sign_vectors(prob.m, cap):
        scenario = Scenario(row_orthant_matrix(prob.A, p),
                            vertex_vector(prob.b, p), c_hi, prob)
        value = solve(realize_min(scenario)).value
        if value.is_pos_inf:
            return POS_INF
        if best < value:
            best = value
    return best


def worst_value_grid_estimate(prob: IlpProblem, depth: int = 2,
                              cap: int = DEFAULT_ENUM_CAP) -> ExtendedRational:
    """Max of scenario optima over a depth-d grid of A and b, c pinned
    at its upper bounds (the worst objective when x >= 0). Always a
    lower estimate of f_upper, and an exhaustive one on degenerate data.
    """
    _require_min_program(prob)
    _reject_free_shape(prob)
    m, n = prob.m, prob.n
    choices = [grid_points(e, depth) for row in prob.A for e in row]
    choices += [grid_points(e, depth) for e in prob.b]
    count = 1
    for c in choices:
        count *= len(c)
    if count > cap:
        raise CapExceeded(count, cap, "grid estimate of the worst value")
    c_hi = tuple(e.hi for e in prob.c)
    best = NEG_INF
    for values in product(*choices):
        a = tuple(tuple(values[i * n + j] for j in range(n)) for i in range(m))
        scenario = Scenario(a, values[m * n:], c_hi, prob)
        value = solve(realize_min(scenario)).value
        if value.is_pos_inf:
            return POS_INF
        if best < value:
            best = value
    return best


def worst_value_validated(prob: IlpProblem, depth: int = 2,
                          cap: int = DEFAULT_ENUM_CAP):
    """Cross-validated f_upper: returns (value, exact).

    The closed form can only undershoot, so a grid value strictly above
    it disproves the formula on this instance; the result is then
    demoted to the grid value with exact=False.
    """
    candidate = worst_value(prob, cap)
    estimate = worst_value_grid_estimate(prob, depth, cap)
    if candidate < estimate:
        return estimate, False
    return candidate, True


def rhs_lower(prob: IlpProblem) -> ExtendedRational:
    """The dual-side lower quantity for the equality shape: the value of

        max b.hi y1 - b.lo y2   s.t.  A.lo^T y1 - A.hi^T y2 <= c.lo,
                                      y1 <= 0, y2 <= 0,

    solved after substituting u = -y1, v = -y2. This LP is the textbook
    dual of the best_value LP; its constraint system is also precisely
    the strong-feasibility test of the max side, so feasibility here
    (value above -inf) means the max side is strongly feasible.
    """
    _require_min_program(prob)
    if prob.form is not Form.EQ_NONNEG:
        raise UnsupportedFormError(
            "the dual-side bound formulas are stated for the equality "
            "shape only")
    m, n = prob.m, prob.n
    rows = []
    for j in range(n):
        coeffs = tuple(-prob.A[i][j].lo for i in range(m)) \
            + tuple(prob.A[i][j].hi for i in range(m))
        rows.append((coeffs, Rel.LE, prob.c[j].lo))
    objective = tuple(-e.hi for e in prob.b) + tuple(e.lo for e in prob.b)
    domains = (VarDomain.NONNEG,) * (2 * m)
    return solve(lp(Sense.MAX, objective, rows, domains)).value


def rhs_upper(prob: IlpProblem, cap: int = DEFAULT_ENUM_CAP) -> ExtendedRational:
    """The best dual scenario value for the equality shape.

    The dual programs are max b.y s.t. A^T y <= c over the box. Split
    the y space into sign orthants q: inside one orthant the loosest
    achievable left-hand side picks, independently per entry, A_ij low
    where q_i = +1 and high where q_i = -1, and the best b picks b_i
    high where y_i >= 0. Both picks are the single endpoint scenario
    that the f_upper sweep visits at p = q, so every orthant value is
    attained and the sweep max equals the true supremum, including the
    infinite cases.
    """
    _require_min_program(prob)
    if prob.form is not Form.EQ_NONNEG:
        raise UnsupportedFormError(
            "the dual-side bound formulas are stated for the equality "
            "shape only")
    at = transpose_intervals(prob.A)
    c_hi = tuple(e.hi for e in prob.c)
    m = prob.m
    best = NEG_INF
    for q in sign_vectors(m, cap):
        rows = [(row, Rel.LE, rhs)
                for row, rhs in zip(orthant_matrix(at, q), c_hi)]
        for i, s in enumerate(q):
            unit = tuple(s if k == i else 0 for k in range(m))
            rows.append((unit, Rel.GE, 0))
        outcome = solve(lp(Sense.MAX, vertex_vector(prob.b, q), rows,
                           (VarDomain.FREE,) * m))
        if outcome.status is LpStatus.UNBOUNDED:
            return POS_INF
        if best < outcome.value:
            best = outcome.value
    return best


def check_thm_lower(prob: IlpProblem, cap: int = DEFAULT_ENUM_CAP) -> BoundsReport:
    """Does rhs_lower reach f_lower? Exact, never Unknown.

    Valid exactly when the min side is weakly feasible or the max side
    is strongly feasible (the latter read off the rhs_lower LP status).
    Both directions of the equivalence are asserted against the computed
    values; a mismatch raises SelfCheckError.
    """
    f_lo = best_value(prob)
    rhs = rhs_lower(prob)
    side = min_side_system(prob)
    pw = weak_feasible(side.kind, side.matrix, side.rhs, cap)
    max_strong = not rhs.is_neg_inf
    valid = pw.answer or max_strong
    if valid != (f_lo == rhs):
        raise SelfCheckError(
            "lower formula condition and value equality disagree: "
            "condition %s, f_lower %s, rhs_lower %s"
            % (valid, f_lo, rhs))
    if f_lo < rhs:
        raise SelfCheckError("weak duality violated: f_lower below rhs_lower")
    trace = (
        "min side weakly feasible: %s" % ("Yes" if pw.answer else "No"),
        "max side strongly feasible (rhs_lower program feasible): %s"
        % ("Yes" if max_strong else "No"),
        "lower formula valid: %s" % ("Yes" if valid else "No"),
    )
    return BoundsReport(f_lower=f_lo, rhs_lower=rhs,
                        lower_formula_valid=valid, condition_trace=trace)


def check_thm_upper(prob: IlpProblem, grid_depth: int = 1,
                    cap: int = DEFAULT_ENUM_CAP) -> BoundsReport:
    """Does rhs_upper reach f_upper? Valid when the duality gap is
    strongly zero or rhs_upper is +inf; invalid when strongly nonzero
    with finite rhs_upper; Unknown exactly when strongly_zero is.

    Decided branches assert the claimed equality or inequality of the
    two values; f_upper >= rhs_upper is asserted unconditionally (both
    sweeps range over the same scenarios, where the min program never
    falls below its dual).
    """
    f_up = worst_value(prob, cap)
    g_up = rhs_upper(prob, cap)
    if f_up < g_up:
        raise SelfCheckError("weak duality violated: f_upper below rhs_upper")
    strong = strongly_zero(prob, grid_depth, cap)
    if strong.verdict is ThreeValued.YES or g_up.is_pos_inf:
        if f_up != g_up:
            raise SelfCheckError(
                "upper formula should hold but %s != %s" % (f_up, g_up))
        verdict = ThreeValued.YES
    elif strong.verdict is ThreeValued.NO:
        if f_up == g_up:
            raise SelfCheckError(
                "upper formula should fail but both sides are %s" % (f_up,))
        verdict = ThreeValued.NO
    else:
        verdict = ThreeValued.UNKNOWN
    trace = (
        "strongly zero duality gap: %s (%s)"
        % (strong.verdict.token, strong.fired_condition),
        "rhs_upper is +inf: %s" % ("Yes" if g_up.is_pos_inf else "No"),
        "upper formula valid: %s" % verdict.token,
    )
    return BoundsReport(f_upper=f_up, rhs_upper=g_up,
                        upper_formula_valid=verdict, condition_trace=trace)


def bounds_report(prob: IlpProblem, grid_depth: int = 1,
                  cap: int = DEFAULT_ENUM_CAP,
                  validate_upper: bool = False) -> BoundsReport:
    """Everything the bounds command prints, in one report.

    The inequality shape gets the two exact bounds and no formula
    verdicts (the dual-side quantities are stated for the equality
    shape). With validate_upper the equality shape's f_upper is first
    cross-checked on a depth-2 grid; if the grid beats the formula the
    report carries the grid value, no upper verdict, and a demotion
    notice instead of a possibly wrong equality claim.
    """
    _require_min_program(prob)
    _reject_free_shape(prob)
    if prob.form is Form.INEQ_NONNEG:
        f_lo = best_value(prob)
        f_up = worst_value(prob, cap)
        if f_up < f_lo:
            raise SelfCheckError("bound order violated: f_upper < f_lower")
        return BoundsReport(
            f_lower=f_lo, f_upper=f_up,
            condition_trace=("dual-side formulas apply to the equality "
                             "shape only; bounds reported alone",))

    if validate_upper:
        f_up, exact = worst_value_validated(prob, max(grid_depth, 2), cap)
        if not exact:
            lower = check_thm_lower(prob, cap)
            trace = lower.condition_trace + (
                "f_upper formula demoted: grid found a harder scenario; "
                "reporting the grid value, no upper verdict",)
            return BoundsReport(
                f_lower=lower.f_lower, f_upper=f_up,
                rhs_lower=lower.rhs_lower, rhs_upper=rhs_upper(prob, cap),
                lower_formula_valid=lower.lower_formula_valid,
                upper_formula_valid=ThreeValued.UNKNOWN,
                condition_trace=trace)

    lower = check_thm_lower(prob, cap)
    upper = check_thm_upper(prob, grid_depth, cap)
    if upper.f_upper < lower.f_lower:
        raise SelfCheckError("bound order violated: f_upper < f_lower")
    return BoundsReport(
        f_lower=lower.f_lower, f_upper=upper.f_upper,
        rhs_lower=lower.rhs_lower, rhs_upper=upper.rhs_upper,
        lower_formula_valid=lower.lower_formula_valid,
        upper_formula_valid=upper.upper_formula_valid,
        condition_trace=lower.condition_trace + upper.condition_trace)
