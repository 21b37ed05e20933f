"""Brute-force ground truth, independent of the characterization-based
deciders. Everything here answers by enumeration plus exact solving.

The weak oracle is exact: weak feasibility of an inequality-kind side is
attained at an endpoint scenario, and the equality-kind sides are decided
by exhaustive candidate-vertex enumeration over the solvability
relaxation (a pointed polyhedron, so nonempty implies a vertex exists).

The strong-gap oracle is a refuter only. It samples a rational grid and
looks for a scenario whose primal and dual are both infeasible; finding
one disproves strongly zero gap, finding none proves nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .interval_model import (
    DEFAULT_ENUM_CAP,
    CapExceeded,
    Form,
    IlpProblem,
    Orientation,
    Scenario,
    endpoint_grid,
    endpoint_selections,
    grid_points,
    problem,
    realize_max,
    realize_min,
)
from .feasibility import SideSystem, SystemKind, max_side_system, min_side_system
from .rational_lp import (
    LinearRow,
    LpProblem,
    Q,
    Rel,
    Sense,
    VarDomain,
    feasible,
    solve,
)


# ---------------------------------------------------------------------------
# Optimal-value summaries over endpoint scenarios.
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class ValueSummary:
    """Optimal values of the problem's own program over all endpoint
    scenarios. Flags and finite_values summarize the own-side values;
    per_scenario keeps (scenario, min outcome, max outcome) triples for
    both sides of every scenario."""

    has_pos_inf: bool
    has_neg_inf: bool
    finite_values: tuple
    per_scenario: tuple


def enumerate_values(prob: IlpProblem,
                     cap: int = DEFAULT_ENUM_CAP) -> ValueSummary:
    rows = []
    own_is_min = prob.orientation is Orientation.PRIMAL
    has_pos = has_neg = False
    finite = set()
    for scenario in endpoint_selections(prob, cap):
        out_min = solve(realize_min(scenario))
        out_max = solve(realize_max(scenario))
        rows.append((scenario, out_min, out_max))
        own = out_min.value if own_is_min else out_max.value
        if own.is_pos_inf:
            has_pos = True
        elif own.is_neg_inf:
            has_neg = True
        else:
            finite.add(own.value)
    return ValueSummary(has_pos, has_neg, tuple(sorted(finite)), tuple(rows))


# ---------------------------------------------------------------------------
# Exact weak-gap oracle.
# ---------------------------------------------------------------------------

def _solve_square(rows, rhs):
    """Gaussian elimination over rationals; None when singular."""
    n = len(rhs)
    aug = [list(rows[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            return None
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        piv = aug[col][col]
        aug[col] = [a / piv for a in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(aug[i][n] for i in range(n))


def _eqn_weak_by_vertices(matrix, rhs, cap: int) -> bool:
    """Weak feasibility of an equality side, decided without the simplex:
    enumerate candidate vertices of { M.lo x <= r.hi, M.hi x >= r.lo,
    x >= 0 } as solutions of n tight rows and test them against all rows.
    The polyhedron lies in the nonnegative orthant, hence is pointed, so
    it is nonempty exactly when some candidate passes."""
    m, n = len(matrix), len(matrix[0])
    grid_rows = []
    grid_rhs = []
    for i in range(m):
        grid_rows.append([e.lo for e in matrix[i]])
        grid_rhs.append(rhs[i].hi)
    for i in range(m):
        grid_rows.append([-e.hi for e in matrix[i]])
        grid_rhs.append(-rhs[i].lo)
    for j in range(n):
        grid_rows.append([Q(-1) if k == j else Q(0) for k in range(n)])
        grid_rhs.append(Q(0))

    total = comb(len(grid_rows), n)
    if total > cap:
        raise CapExceeded(total, cap, "candidate-vertex enumeration")
    for picked in combinations(range(len(grid_rows)), n):
        point = _solve_square([grid_rows[i] for i in picked],
                              [grid_rhs[i] for i in picked])
        if point is None:
            continue
        if all(sum((a * x for a, x in zip(grid_rows[i], point)), Q(0))
               <= grid_rhs[i] for i in range(len(grid_rows))):
            return True
    return False


def _ineq_weak_by_endpoints(side: SideSystem, cap: int) -> bool:
    m, n = len(side.matrix), len(side.matrix[0])
    flat = tuple(e for row in side.matrix for e in row) + tuple(side.rhs)
    domain = (VarDomain.FREE if side.kind is SystemKind.INEQ_FREE
              else VarDomain.NONNEG)
    for values in endpoint_grid(flat, cap, "side endpoint enumeration"):
        rows = tuple(
            LinearRow(values[i * n:(i + 1) * n], Rel.LE, values[m * n + i])
            for i in range(m))
        lp = LpProblem(Sense.MIN, (Q(0),) * n, rows, (domain,) * n)
        ok, _ = feasible(lp)
        if ok:
            return True
    return False


def _side_weakly_feasible(side: SideSystem, cap: int) -> bool:
    if side.kind is SystemKind.EQN:
        return _eqn_weak_by_vertices(side.matrix, side.rhs, cap)
    return _ineq_weak_by_endpoints(side, cap)


def oracle_weakly_zero(prob: IlpProblem, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """Ground truth for weakly zero duality gap: some scenario has a
    feasible min side or a feasible max side. Scenario feasibility of a
    side depends only on that side's own data, so the two sides are
    searched independently."""
    if _side_weakly_feasible(min_side_system(prob), cap):
        return True
    return _side_weakly_feasible(max_side_system(prob), cap)


# ---------------------------------------------------------------------------
# Grid refuter for strongly zero duality gap.
# ---------------------------------------------------------------------------

def _grid_choice_lists(intervals, depth: int):
    return [grid_points(e, depth) for e in intervals]


def grid_counterexample_strong(prob: IlpProblem, depth: int = 1,
                               cap: int = DEFAULT_ENUM_CAP):
    """First scenario (in lexicographic grid order: row-major A, then b,
    then c, each entry sampled ascending) whose min program AND max
    program are infeasible; None when the sampled grid has no such
    scenario. Sound refuter, never a prover.

    Depth d samples each non-degenerate interval at 2^d + 1 evenly
    spaced rationals, endpoints always included, so deepening the grid
    only refines it.
    """
    if depth < 1:
        raise ValueError("depth must be a positive integer")
    m, n = prob.m, prob.n
    a_flat = tuple(e for row in prob.A for e in row)
    a_choices = _grid_choice_lists(a_flat, depth)
    b_choices = _grid_choice_lists(prob.b, depth)
    c_choices = _grid_choice_lists(prob.c, depth)

    total = 1
    for choices in (a_choices, b_choices, c_choices):
        for points in choices:
            total *= len(points)
    if total > cap:
        raise CapExceeded(total, cap, "grid counterexample search")

    b_lo = tuple(e.lo for e in prob.b)
    c_lo = tuple(e.lo for e in prob.c)

    for a_values in product(*a_choices):
        a_matrix = tuple(tuple(a_values[i * n + j] for j in range(n))
                         for i in range(m))
        bad_b = None
        for b_values in product(*b_choices):
            probe = Scenario(a_matrix, b_values, c_lo, prob)
            if not feasible(realize_min(probe))[0]:
                bad_b = b_values
                break
        if bad_b is None:
            continue
        for c_values in product(*c_choices):
            probe = Scenario(a_matrix, b_lo, c_values, prob)
            if not feasible(realize_max(probe))[0]:
                return Scenario(a_matrix, bad_b, c_values, prob)
    return None


# ---------------------------------------------------------------------------
# Hardness gadgets, used as adversarial test-instance generators.
# ---------------------------------------------------------------------------

def gadget_weak(core: IlpProblem) -> IlpProblem:
    """Wrap an INEQ_FREE problem so the wrapped max side is infeasible in
    every scenario: add one free variable u with objective +1 and the row
    u <= 1. The wrapped dual gains the constraint z = 1 with z <= 0, so
    the wrapped program has weakly zero gap exactly when the core
    constraint system is weakly feasible."""
    if core.form is not Form.INEQ_FREE or core.orientation is not Orientation.PRIMAL:
        raise ValueError("gadget_weak expects a primal INEQ_FREE problem")
    zero = Q(0)
    a_rows = [tuple(row) + (zero,) for row in core.A]
    a_rows.append((zero,) * core.n + (Q(1),))
    return problem(Form.INEQ_FREE, a_rows,
                   tuple(core.b) + (Q(1),),
                   tuple(core.c) + (Q(1),))


def gadget_strong(core: IlpProblem) -> IlpProblem:
    """Wrap an EQ_NONNEG problem so the wrapped max side is infeasible in
    every scenario: add nonnegative u, v with objective u - 2v and the row
    u - v = 0. The wrapped dual gains w <= 1 and -w <= -2, which is empty,
    so the wrapped program has strongly zero gap exactly when the core
    constraint system is strongly feasible (the new row is always
    satisfiable at u = v = 0)."""
    if core.form is not Form.EQ_NONNEG or core.orientation is not Orientation.PRIMAL:
        raise ValueError("gadget_strong expects a primal EQ_NONNEG problem")
    zero = Q(0)
    a_rows = [tuple(row) + (zero, zero) for row in core.A]
    a_rows.append((zero,) * core.n + (Q(1), Q(-1)))
    return problem(Form.EQ_NONNEG, a_rows,
                   tuple(core.b) + (zero,),
                   tuple(core.c) + (Q(1), Q(-2)))
