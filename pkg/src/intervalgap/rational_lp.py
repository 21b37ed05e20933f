"""Exact linear programming over the rationals.

Everything downstream reduces to feasibility or optimization of small
linear programs, and every verdict in this package is a logical claim,
so the solver works in exact rational arithmetic with a rigorous
Infeasible / Unbounded / Optimal trichotomy. No floats, no tolerances.

The solver is a dense two-phase simplex with Bland's anti-cycling rule.
It is deliberately simple: the contract is the trichotomy, not speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from typing import Iterable, Optional, Sequence, Union

try:
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as _rational


class SelfCheckError(RuntimeError):
    """An internal invariant failed. Results must not be trusted."""


QLike = Union[int, str, "_rational"]


def Q(value: QLike) -> "_rational":
    """Coerce to an exact rational.

    Accepts ints, rationals, and strings like "-2", "1/3" or "3.5"
    (decimal strings are exact). Floats are rejected: they carry
    binary rounding error and would poison every verdict downstream.
    """
    if isinstance(value, float):
        raise TypeError(
            "float %r rejected: pass an int or a string such as '3.5'" % (value,)
        )
    if isinstance(value, bool):
        raise TypeError("bool is not a rational scalar")
    return _rational(value)


def qstr(value) -> str:
    """Canonical string form of a rational: "p/q", or "p" when integral."""
    return str(_rational(value))


_Q0 = Q(0)
_Q1 = Q(1)


# ---------------------------------------------------------------------------
# Extended rationals: the value lattice for optimal values.
# ---------------------------------------------------------------------------

class _ExtTag(Enum):
    NEG_INF = 0
    FINITE = 1
    POS_INF = 2


@total_ordering
@dataclass(frozen=True, slots=True)
class ExtendedRational:
    """A rational extended with -inf and +inf.

    Total order: NEG_INF < any finite < POS_INF. By convention
    min over the empty set is POS_INF and max over the empty set
    is NEG_INF (see ext_min / ext_max).
    """

    tag: _ExtTag
    value: Optional[object] = None

    def __post_init__(self):
        if self.tag is _ExtTag.FINITE:
            if self.value is None:
                raise ValueError("finite ExtendedRational needs a value")
            object.__setattr__(self, "value", Q(self.value))
        elif self.value is not None:
            raise ValueError("infinite ExtendedRational carries no value")

    @staticmethod
    def finite(value: QLike) -> "ExtendedRational":
        return ExtendedRational(_ExtTag.FINITE, Q(value))

    @property
    def is_finite(self) -> bool:
        return self.tag is _ExtTag.FINITE

    @property
    def is_pos_inf(self) -> bool:
        return self.tag is _ExtTag.POS_INF

    @property
    def is_neg_inf(self) -> bool:
        return self.tag is _ExtTag.NEG_INF

    def __lt__(self, other: "ExtendedRational") -> bool:
        if not isinstance(other, ExtendedRational):
            return NotImplemented
        if self.tag is not other.tag:
            return self.tag.value < other.tag.value
        if self.tag is _ExtTag.FINITE:
            return self.value < other.value
        return False

    def __neg__(self) -> "ExtendedRational":
        if self.tag is _ExtTag.POS_INF:
            return NEG_INF
        if self.tag is _ExtTag.NEG_INF:
            return POS_INF
        return ExtendedRational.finite(-self.value)

    def __str__(self) -> str:
        if self.tag is _ExtTag.POS_INF:
            return "+inf"
        if self.tag is _ExtTag.NEG_INF:
            return "-inf"
        return qstr(self.value)


POS_INF = ExtendedRational(_ExtTag.POS_INF)
NEG_INF = ExtendedRational(_ExtTag.NEG_INF)


def ext_min(values: Iterable[ExtendedRational]) -> ExtendedRational:
    """Minimum on the extended axis; min of nothing is +inf."""
    best = POS_INF
    for v in values:
        if v < best:
            best = v
    return best


def ext_max(values: Iterable[ExtendedRational]) -> ExtendedRational:
    """Maximum on the extended axis; max of nothing is -inf."""
    best = NEG_INF
    for v in values:
        if best < v:
            best = v
    return best


# ---------------------------------------------------------------------------
# Problem and outcome types.
# ---------------------------------------------------------------------------

class Sense(Enum):
    MIN = "min"
    MAX = "max"


class Rel(Enum):
    LE = "<="
    EQ = "="
    GE = ">="


class VarDomain(Enum):
    NONNEG = "nonneg"
    FREE = "free"


@dataclass(frozen=True, slots=True)
class LinearRow:
    """One constraint: coeffs . x  REL  rhs."""

    coeffs: tuple
    rel: Rel
    rhs: object

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Q(a) for a in self.coeffs))
        object.__setattr__(self, "rhs", Q(self.rhs))

    def holds_at(self, point: Sequence) -> bool:
        lhs = sum((a * x for a, x in zip(self.coeffs, point)), _Q0)
        if self.rel is Rel.LE:
            return lhs <= self.rhs
        if self.rel is Rel.GE:
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True, slots=True)
class LpProblem:
    """A single linear program over rationals.

    Invariants: at least one variable; every row and the objective have
    exactly one coefficient per variable; one domain per variable.
    """

    sense: Sense
    objective: tuple
    rows: tuple
    domains: tuple

    def __post_init__(self):
        object.__setattr__(self, "objective", tuple(Q(a) for a in self.objective))
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "domains", tuple(self.domains))
        n = len(self.objective)
        if n < 1:
            raise ValueError("an LpProblem needs at least one variable")
        if len(self.domains) != n:
            raise ValueError("domain count %d != variable count %d"
                             % (len(self.domains), n))
        for d in self.domains:
            if not isinstance(d, VarDomain):
                raise TypeError("domains must be VarDomain members")
        for row in self.rows:
            if not isinstance(row, LinearRow):
                raise TypeError("rows must be LinearRow instances")
            if len(row.coeffs) != n:
                raise ValueError("row has %d coefficients, expected %d"
                                 % (len(row.coeffs), n))

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    def objective_at(self, point: Sequence):
        return sum((a * x for a, x in zip(self.objective, point)), _Q0)

    def point_is_feasible(self, point: Sequence) -> bool:
        if len(point) != self.num_vars:
            return False
        for d, x in zip(self.domains, point):
            if d is VarDomain.NONNEG and x < 0:
                return False
        return all(row.holds_at(point) for row in self.rows)


def lp(sense: Sense, objective: Sequence[QLike],
       rows: Iterable[tuple], domains: Sequence[VarDomain]) -> LpProblem:
    """Convenience constructor: rows as (coeffs, Rel, rhs) triples."""
    built = tuple(LinearRow(tuple(cs), rel, rhs) for cs, rel, rhs in rows)
    return LpProblem(sense, tuple(objective), built, tuple(domains))


class LpStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True, slots=True)
class LpOutcome:
    """Result of solve(): status, optimal value on the extended axis,
    and the optimal point (present exactly when status is OPTIMAL).

    Value conventions: a min problem reports +inf when infeasible and
    -inf when unbounded; a max problem mirrors both.
    """

    status: LpStatus
    value: ExtendedRational
    point: Optional[tuple] = None


# ---------------------------------------------------------------------------
# Standard-form conversion.
# ---------------------------------------------------------------------------

def _standard_form(problem: LpProblem, with_objective: bool):
    """Rewrite as: minimize cost . z  s.t.  M z = d, z >= 0, d >= 0.

    Free variables split into a positive and a negative part; LE/GE rows
    get a slack or surplus column; rows are sign-normalized so d >= 0.
    Returns (matrix, rhs, cost, colmap) where colmap[j] is
    (original_var, sign) for variable columns and None for slack columns.
    """
    n = problem.num_vars
    colmap = []
    for j, dom in enumerate(problem.domains):
        colmap.append((j, 1))
        if dom is VarDomain.FREE:
            colmap.append((j, -1))

    slack_cols = sum(1 for r in problem.rows if r.rel is not Rel.EQ)
    width = len(colmap) + slack_cols

    matrix = []
    rhs = []
    slack_at = len(colmap)
    for row in problem.rows:
        line = [_Q0] * width
        for col, mapping in enumerate(colmap):
            var, sign = mapping
            if row.coeffs[var]:
                line[col] = row.coeffs[var] if sign > 0 else -row.coeffs[var]
        if row.rel is Rel.LE:
            line[slack_at] = _Q1
            slack_at += 1
        elif row.rel is Rel.GE:
            line[slack_at] = -_Q1
            slack_at += 1
        d = row.rhs
        if d < 0:
            line = [-a for a in line]
            d = -d
        matrix.append(line)
        rhs.append(d)

    cost = [_Q0] * width
    if with_objective:
        flip = problem.sense is Sense.MAX
        for col, mapping in enumerate(colmap):
            var, sign = mapping
            a = problem.objective[var] * sign
            cost[col] = -a if flip else a
    return matrix, rhs, cost, colmap


def _pivot(matrix, rhs, cost, basis, row, col):
    piv = matrix[row][col]
    matrix[row] = [a / piv for a in matrix[row]]
    rhs[row] = rhs[row] / piv
    pivot_line = matrix[row]
    for i in range(len(matrix)):
        if i == row:
            continue
        f = matrix[i][col]
        if f:
            matrix[i] = [a - f * b for a, b in zip(matrix[i], pivot_line)]
            rhs[i] = rhs[i] - f * rhs[row]
    f = cost[col]
    if f:
        cost[:] = [a - f * b for a, b in zip(cost, pivot_line)]
    basis[row] = col


def _run_simplex(matrix, rhs, cost, basis) -> str:
    """Bland's rule throughout: entering column is the lowest index with a
    negative reduced cost; the leaving row breaks ratio ties by the lowest
    basic variable index. Guarantees termination without any cycling check.
    """
    width = len(cost)
    while True:
        enter = -1
        for j in range(width):
            if cost[j] < 0:
                enter = j
                break
        if enter < 0:
            return "optimal"
        leave = -1
        best = None
        for i in range(len(matrix)):
            a = matrix[i][enter]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return "unbounded"
        _pivot(matrix, rhs, cost, basis, leave, enter)


def _phase_one(matrix, rhs, width):
    """Append artificial columns, minimize their sum.

    Returns (feasible, basis). On success the artificials are driven out
    of the basis (redundant rows are dropped in place) and the artificial
    columns are truncated, leaving a feasible reduced tableau.
    """
    m = len(matrix)
    for i in range(m):
        matrix[i] = matrix[i] + [_Q1 if k == i else _Q0 for k in range(m)]
    basis = [width + i for i in range(m)]

    cost = [_Q0] * (width + m)
    for j in range(width):
        cost[j] = -sum((matrix[i][j] for i in range(m)), _Q0)
    _run_simplex(matrix, rhs, cost, basis)  # cannot be unbounded: cost >= 0

    artificial_total = sum((rhs[i] for i in range(m) if basis[i] >= width), _Q0)
    if artificial_total != 0:
        return False, basis

    for i in range(m - 1, -1, -1):
        if basis[i] < width:
            continue
        pivot_col = -1
        for j in range(width):
            if matrix[i][j]:
                pivot_col = j
                break
        if pivot_col >= 0:
            _pivot(matrix, rhs, cost, basis, i, pivot_col)
        else:
            # Redundant constraint: the row is zero outside the artificials.
            del matrix[i]
            del rhs[i]
            del basis[i]

    for i in range(len(matrix)):
        matrix[i] = matrix[i][:width]
    return True, basis


def _extract_point(problem: LpProblem, colmap, basis, rhs, width) -> tuple:
    z = [_Q0] * width
    for i, b in enumerate(basis):
        if b < width:
            z[b] = rhs[i]
    x = [_Q0] * problem.num_vars
    for col, mapping in enumerate(colmap):
        var, sign = mapping
        if z[col]:
            x[var] = x[var] + (z[col] if sign > 0 else -z[col])
    return tuple(x)


def _verify_optimal(problem: LpProblem, point, value) -> None:
    if not problem.point_is_feasible(point):
        raise SelfCheckError("optimal point fails feasibility re-check")
    if problem.objective_at(point) != value:
        raise SelfCheckError("optimal value does not match its point")


def solve(problem: LpProblem) -> LpOutcome:
    """Exact trichotomy for one LP. Deterministic for a fixed input.

    Every OPTIMAL result is re-verified against the original rows before
    being returned; a failure raises SelfCheckError rather than returning
    a wrong certificate.
    """
    matrix, rhs, cost, colmap = _standard_form(problem, with_objective=True)
    width = len(cost)
    ok, basis = _phase_one(matrix, rhs, width)
    if not ok:
        value = POS_INF if problem.sense is Sense.MIN else NEG_INF
        return LpOutcome(LpStatus.INFEASIBLE, value)

    for i, b in enumerate(basis):
        f = cost[b]
        if f:
            cost = [a - f * c for a, c in zip(cost, matrix[i])]
    outcome = _run_simplex(matrix, rhs, cost, basis)
    if outcome == "unbounded":
        value = NEG_INF if problem.sense is Sense.MIN else POS_INF
        return LpOutcome(LpStatus.UNBOUNDED, value)

    point = _extract_point(problem, colmap, basis, rhs, width)
    value = problem.objective_at(point)
    _verify_optimal(problem, point, value)
    return LpOutcome(LpStatus.OPTIMAL, ExtendedRational.finite(value), point)


def feasible(problem: LpProblem):
    """Phase one only: (True, witness point) or (False, None)."""
    matrix, rhs, cost, colmap = _standard_form(problem, with_objective=False)
    width = len(cost)
    ok, basis = _phase_one(matrix, rhs, width)
    if not ok:
        return False, None
    point = _extract_point(problem, colmap, basis, rhs, width)
    if not problem.point_is_feasible(point):
        raise SelfCheckError("phase-one witness fails feasibility re-check")
    return True, point


# ---------------------------------------------------------------------------
# Textbook dual, used for cross-validation.
# ---------------------------------------------------------------------------

def textbook_dual(problem: LpProblem) -> LpProblem:
    """The classical dual with sign-constrained dual variables rewritten
    over NONNEG/FREE domains.

    For a min problem: a GE row yields y_i >= 0, a LE row y_i <= 0, an EQ
    row a free y_i; a NONNEG variable yields a LE dual row, a FREE variable
    an EQ dual row; the dual maximizes b . y. A dual variable constrained to
    y_i <= 0 is substituted by its negation, which flips its column and its
    objective coefficient and preserves the optimal value exactly. The max
    case mirrors the signs.
    """
    minimizing = problem.sense is Sense.MIN
    signs = []
    domains = []
    for row in problem.rows:
        if row.rel is Rel.EQ:
            signs.append(1)
            domains.append(VarDomain.FREE)
            continue
        natural = row.rel is (Rel.GE if minimizing else Rel.LE)
        signs.append(1 if natural else -1)
        domains.append(VarDomain.NONNEG)

    objective = tuple(s * row.rhs for s, row in zip(signs, problem.rows))
    dual_rows = []
    rel = Rel.LE if minimizing else Rel.GE
    for j in range(problem.num_vars):
        coeffs = tuple(s * row.coeffs[j] for s, row in zip(signs, problem.rows))
        row_rel = rel if problem.domains[j] is VarDomain.NONNEG else Rel.EQ
        dual_rows.append(LinearRow(coeffs, row_rel, problem.objective[j]))

    if not dual_rows:  # no primal variables cannot happen (n >= 1)
        raise AssertionError("unreachable")
    sense = Sense.MAX if minimizing else Sense.MIN
    return LpProblem(sense, objective, tuple(dual_rows), tuple(domains))
