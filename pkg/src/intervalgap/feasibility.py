"""Weak and strong feasibility of interval linear systems.

A system here is one side of an interval program, normalized to one of
three canonical kinds over an interval matrix M and right-hand side r:

    EQN          M x  = r, x >= 0
    INEQ_FREE    M x <= r, x free
    INEQ_NONNEG  M x <= r, x >= 0

Weakly feasible means some scenario of (M, r) has a solution; strongly
feasible means every scenario does. Each kind gets its exact
characterization:

  weak EQN          one LP:  M.lo x <= r.hi, M.hi x >= r.lo, x >= 0
  weak INEQ_NONNEG  one LP:  M.lo x <= r.hi, x >= 0
  weak INEQ_FREE    a sweep over column sign vectors p: the system
                    (M_c - dM diag p) x <= r.hi for some p
  strong INEQ_FREE  one LP:  M.hi x1 - M.lo x2 <= r.lo, x1, x2 >= 0,
                    witness x = x1 - x2
  strong INEQ_NONNEG one LP: M.hi x <= r.lo, x >= 0
  strong EQN        decidable only for a degenerate matrix, by the sweep
                    over right-hand-side vertices r_c + diag(p) dr; with a
                    non-degenerate matrix the answer is Unknown by design

The Unknown for equality systems with a genuinely interval matrix is
deliberate honesty: no finite characterization is implemented, and a
guess would poison every verdict built on top of this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .interval_model import (
    DEFAULT_ENUM_CAP,
    Form,
    IlpProblem,
    Orientation,
    negate_intervals,
    orthant_matrix,
    sign_vectors,
    transpose_intervals,
    vertex_vector,
)
from .rational_lp import (
    LinearRow,
    LpProblem,
    Q,
    Rel,
    Sense,
    VarDomain,
    feasible,
)


class ThreeValued(Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"

    @property
    def token(self) -> str:
        return self.value

    def __bool__(self) -> bool:
        raise TypeError(
            "ThreeValued verdicts do not collapse to booleans; "
            "compare against ThreeValued.YES / NO / UNKNOWN explicitly")


class SystemKind(Enum):
    EQN = "eqn"
    INEQ_FREE = "ineq_free"
    INEQ_NONNEG = "ineq_nonneg"


@dataclass(frozen=True, slots=True)
class FeasVerdict:
    """Outcome of a weak/strong feasibility test.

    answer       the boolean verdict
    witness      a point, when one exists naturally: for weak tests a
                 solution of the certificate system, for strong
                 INEQ kinds the strongly feasible point itself
    sign_vector  the deciding sign vector, when a sweep was involved:
                 the successful orthant for a weak INEQ_FREE yes, the
                 failing right-hand-side vertex for a strong EQN no
    certificate_system  the concrete LpProblem whose feasibility (or
                 infeasibility, for single-LP no answers) proved the
                 verdict; None when the proof is a whole sweep
    notes        human-readable trace of what was evaluated
    """

    answer: bool
    witness: Optional[tuple] = None
    sign_vector: Optional[tuple] = None
    certificate_system: Optional[LpProblem] = None
    notes: tuple = ()


def _le_rows(matrix, rhs):
    return [LinearRow(row, Rel.LE, entry) for row, entry in zip(matrix, rhs)]


def _lo(matrix):
    return tuple(tuple(e.lo for e in row) for row in matrix)


def _hi(matrix):
    return tuple(tuple(e.hi for e in row) for row in matrix)


def weak_feasible(kind: SystemKind, matrix, rhs,
                  cap: int = DEFAULT_ENUM_CAP) -> FeasVerdict:
    """Is some scenario of the system feasible? Always decides."""
    n = len(matrix[0])
    r_hi = tuple(e.hi for e in rhs)

    if kind is SystemKind.EQN:
        r_lo = tuple(e.lo for e in rhs)
        rows = _le_rows(_lo(matrix), r_hi)
        rows += [LinearRow(row, Rel.GE, entry)
                 for row, entry in zip(_hi(matrix), r_lo)]
        lp = LpProblem(Sense.MIN, (Q(0),) * n, tuple(rows),
                       (VarDomain.NONNEG,) * n)
        ok, point = feasible(lp)
        return FeasVerdict(ok, point, None, lp,
                           ("solvability relaxation LP %s" %
                            ("feasible" if ok else "infeasible"),))

    if kind is SystemKind.INEQ_NONNEG:
        lp = LpProblem(Sense.MIN, (Q(0),) * n, tuple(_le_rows(_lo(matrix), r_hi)),
                       (VarDomain.NONNEG,) * n)
        ok, point = feasible(lp)
        return FeasVerdict(ok, point, None, lp,
                           ("easiest-scenario LP %s" %
                            ("feasible" if ok else "infeasible"),))

    # INEQ_FREE: orthant sweep. A solution of any orthant system solves the
    # scenario whose matrix picks, per column, the bound that sign selects.
    tried = 0
    for signs in sign_vectors(n, cap):
        tried += 1
        rows = _le_rows(orthant_matrix(matrix, signs), r_hi)
        lp = LpProblem(Sense.MIN, (Q(0),) * n, tuple(rows),
                       (VarDomain.FREE,) * n)
        ok, point = feasible(lp)
        if ok:
            return FeasVerdict(True, point, signs, lp,
                               ("orthant system %s feasible" % (signs,),))
    return FeasVerdict(False, None, None, None,
                       ("all %d orthant systems infeasible" % tried,))


def strong_feasible(kind: SystemKind, matrix, rhs,
                    cap: int = DEFAULT_ENUM_CAP
                    ) -> Union[FeasVerdict, ThreeValued]:
    """Is every scenario of the system feasible?

    Returns a FeasVerdict, except for an equality system with a
    non-degenerate matrix, where it returns ThreeValued.UNKNOWN.
    """
    m, n = len(matrix), len(matrix[0])
    r_lo = tuple(e.lo for e in rhs)

    if kind is SystemKind.INEQ_NONNEG:
        lp = LpProblem(Sense.MIN, (Q(0),) * n, tuple(_le_rows(_hi(matrix), r_lo)),
                       (VarDomain.NONNEG,) * n)
        ok, point = feasible(lp)
        return FeasVerdict(ok, point, None, lp,
                           ("hardest-scenario LP %s" %
                            ("feasible" if ok else "infeasible"),))

    if kind is SystemKind.INEQ_FREE:
        hi, lo = _hi(matrix), _lo(matrix)
        rows = []
        for i in range(m):
            coeffs = tuple(hi[i]) + tuple(-a for a in lo[i])
            rows.append(LinearRow(coeffs, Rel.LE, r_lo[i]))
        lp = LpProblem(Sense.MIN, (Q(0),) * (2 * n), tuple(rows),
                       (VarDomain.NONNEG,) * (2 * n))
        ok, point = feasible(lp)
        if not ok:
            return FeasVerdict(False, None, None, lp,
                               ("split-variable LP infeasible",))
        witness = tuple(point[j] - point[n + j] for j in range(n))
        return FeasVerdict(True, witness, None, lp,
                           ("split-variable LP feasible; witness is the "
                            "difference of its two halves",))

    # EQN
    if any(not e.is_degenerate for row in matrix for e in row):
        return ThreeValued.UNKNOWN
    scenario_matrix = _lo(matrix)
    checked = 0
    for signs in sign_vectors(m, cap):
        checked += 1
        vertex = vertex_vector(rhs, signs)
        rows = [LinearRow(row, Rel.EQ, entry)
                for row, entry in zip(scenario_matrix, vertex)]
        lp = LpProblem(Sense.MIN, (Q(0),) * n, tuple(rows),
                       (VarDomain.NONNEG,) * n)
        ok, _ = feasible(lp)
        if not ok:
            return FeasVerdict(False, None, signs, lp,
                               ("right-hand-side vertex %s infeasible"
                                % (signs,),))
    return FeasVerdict(True, None, None, None,
                       ("all %d right-hand-side vertex systems feasible"
                        % checked,))


# ---------------------------------------------------------------------------
# The two sides of an interval program, in canonical kinds.
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class SideSystem:
    """One side of a program as a canonical system.

    var_sign is +1 when the system's variables are the side's own
    variables and -1 when they are their negations (the max sides of the
    INEQ_FREE and INEQ_NONNEG shapes have variables y <= 0; substituting
    z = -y >= 0 lands in a canonical kind and negates the matrix).
    """

    kind: SystemKind
    matrix: tuple
    rhs: tuple
    var_sign: int


_MIN_SIDE_KIND = {
    Form.EQ_NONNEG: SystemKind.EQN,
    Form.INEQ_FREE: SystemKind.INEQ_FREE,
    Form.INEQ_NONNEG: SystemKind.INEQ_NONNEG,
}


def min_side_system(prob: IlpProblem) -> SideSystem:
    """The constraint system of the min program over (A, b)."""
    return SideSystem(_MIN_SIDE_KIND[prob.form], prob.A, prob.b, 1)


def max_side_system(prob: IlpProblem) -> SideSystem:
    """The constraint system of the max program over (A^T, c)."""
    at = transpose_intervals(prob.A)
    if prob.form is Form.EQ_NONNEG:
        return SideSystem(SystemKind.INEQ_FREE, at, prob.c, 1)
    if prob.form is Form.INEQ_FREE:
        return SideSystem(SystemKind.EQN, negate_intervals(at), prob.c, -1)
    return SideSystem(SystemKind.INEQ_NONNEG, negate_intervals(at), prob.c, -1)


def side_system(prob: IlpProblem, side: Orientation) -> SideSystem:
    """The requested side relative to the problem's orientation: side
    PRIMAL is the program the problem denotes, side DUAL its opposite."""
    if (side is Orientation.PRIMAL) == (prob.orientation is Orientation.PRIMAL):
        return min_side_system(prob)
    return max_side_system(prob)


def weak_side(prob: IlpProblem, side: Orientation,
              cap: int = DEFAULT_ENUM_CAP) -> FeasVerdict:
    s = side_system(prob, side)
    return weak_feasible(s.kind, s.matrix, s.rhs, cap)


def strong_side(prob: IlpProblem, side: Orientation,
                cap: int = DEFAULT_ENUM_CAP) -> Union[FeasVerdict, ThreeValued]:
    s = side_system(prob, side)
    return strong_feasible(s.kind, s.matrix, s.rhs, cap)


def as_ternary(verdict: Union[FeasVerdict, ThreeValued]) -> ThreeValued:
    if isinstance(verdict, ThreeValued):
        return verdict
    return ThreeValued.YES if verdict.answer else ThreeValued.NO
