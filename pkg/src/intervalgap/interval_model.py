"""Interval data for linear programs.

An interval program is a box of ordinary LPs: every matrix and vector
entry ranges over a closed rational interval, and each point of the box
is called a scenario. This module owns the data types (Interval,
IlpProblem, Scenario), the three canonical problem shapes, dualization,
scenario realization, endpoint and sign-vector enumeration, and the
JSON problem-file format.

Problem shapes, with x the variable vector and A an m x n box:

    EQ_NONNEG    (file code "A"):  min c.x  s.t.  A x  = b, x >= 0
    INEQ_FREE    (file code "B"):  min c.x  s.t.  A x <= b, x free
    INEQ_NONNEG  (file code "C"):  min c.x  s.t.  A x <= b, x >= 0

Each shape's dual is the classical one; a problem object tagged with the
dual orientation denotes that max program over the same data box.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from enum import Enum
from itertools import product
from typing import Iterator, Sequence, Union

from .rational_lp import (
    LinearRow,
    LpProblem,
    Q,
    Rel,
    Sense,
    VarDomain,
    qstr,
)

DEFAULT_ENUM_CAP = 2 ** 20


class ModelError(ValueError):
    """Structurally invalid interval data."""


class ParseError(ModelError):
    """A problem file that does not match the schema."""


class UnsupportedFormError(ModelError):
    """The operation is not defined for this problem shape."""


class CapExceeded(RuntimeError):
    """An enumeration would exceed the configured cap.

    Carries the exact count so the refusal can name it.
    """

    def __init__(self, count: int, cap: int, what: str):
        self.count = count
        self.cap = cap
        super().__init__(
            "%s needs %d cases, which exceeds the cap of %d"
            % (what, count, cap))


# ---------------------------------------------------------------------------
# Intervals.
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Interval:
    lo: object
    hi: object

    def __post_init__(self):
        object.__setattr__(self, "lo", Q(self.lo))
        object.__setattr__(self, "hi", Q(self.hi))
        if self.lo > self.hi:
            raise ModelError("interval [%s, %s] is empty"
                             % (qstr(self.lo), qstr(self.hi)))

    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    @property
    def center(self):
        return (self.lo + self.hi) / 2

    @property
    def radius(self):
        return (self.hi - self.lo) / 2

    def contains(self, value) -> bool:
        return self.lo <= value <= self.hi

    def negated(self) -> "Interval":
        """The interval of negations: [lo, hi] -> [-hi, -lo]."""
        return Interval(-self.hi, -self.lo)

    def __str__(self) -> str:
        if self.is_degenerate:
            return qstr(self.lo)
        return "[%s, %s]" % (qstr(self.lo), qstr(self.hi))


IntervalLike = Union[Interval, int, str, tuple, list]


def iv(value: IntervalLike) -> Interval:
    """Coerce to an Interval: a scalar makes a degenerate interval,
    a two-element sequence makes [lo, hi]."""
    if isinstance(value, Interval):
        return value
    if isinstance(value, (tuple, list)):
        if len(value) != 2:
            raise ModelError("interval literal must have exactly two bounds")
        return Interval(value[0], value[1])
    return Interval(value, value)


def grid_points(interval: Interval, depth: int):
    """2^depth + 1 evenly spaced rationals across the interval, endpoints
    included; a degenerate interval yields its single point."""
    if depth < 1:
        raise ValueError("depth must be a positive integer")
    if interval.is_degenerate:
        return [interval.lo]
    steps = 2 ** depth
    span = interval.hi - interval.lo
    return [interval.lo + span * k / steps for k in range(steps + 1)]


# ---------------------------------------------------------------------------
# Problems and scenarios.
# ---------------------------------------------------------------------------

class Form(Enum):
    """The three canonical shapes; values are the problem-file codes."""

    EQ_NONNEG = "A"
    INEQ_FREE = "B"
    INEQ_NONNEG = "C"

    @property
    def code(self) -> str:
        return self.value

    @classmethod
    def from_code(cls, code: str) -> "Form":
        for member in cls:
            if member.value == code:
                return member
        raise ParseError("unknown form %r, expected one of A, B, C" % (code,))


class Orientation(Enum):
    PRIMAL = "primal"
    DUAL = "dual"

    @property
    def flipped(self) -> "Orientation":
        return Orientation.DUAL if self is Orientation.PRIMAL else Orientation.PRIMAL


def _interval_rows(data, rows: int, cols: int, what: str):
    try:
        grid = tuple(tuple(iv(entry) for entry in row) for row in data)
    except ModelError:
        raise
    except (TypeError, ValueError) as exc:
        raise ModelError("bad %s entry: %s" % (what, exc)) from exc
    if len(grid) != rows or any(len(row) != cols for row in grid):
        raise ModelError("%s must be a %d x %d grid" % (what, rows, cols))
    return grid


def _interval_vector(data, length: int, what: str):
    try:
        vec = tuple(iv(entry) for entry in data)
    except ModelError:
        raise
    except (TypeError, ValueError) as exc:
        raise ModelError("bad %s entry: %s" % (what, exc)) from exc
    if len(vec) != length:
        raise ModelError("%s must have %d entries" % (what, length))
    return vec


@dataclass(frozen=True, slots=True)
class IlpProblem:
    """An interval linear program: a shape tag, the data box, and an
    orientation selecting the min program (primal) or its max dual."""

    form: Form
    A: tuple
    b: tuple
    c: tuple
    orientation: Orientation = Orientation.PRIMAL

    def __post_init__(self):
        if not isinstance(self.form, Form):
            raise ModelError("form must be a Form member")
        if not isinstance(self.orientation, Orientation):
            raise ModelError("orientation must be an Orientation member")
        rows = tuple(tuple(r) for r in self.A)
        if not rows or not rows[0]:
            raise ModelError("the matrix needs at least one row and column")
        m, n = len(rows), len(rows[0])
        object.__setattr__(self, "A", _interval_rows(rows, m, n, "matrix A"))
        object.__setattr__(self, "b", _interval_vector(self.b, m, "vector b"))
        object.__setattr__(self, "c", _interval_vector(self.c, n, "vector c"))

    @property
    def m(self) -> int:
        return len(self.A)

    @property
    def n(self) -> int:
        return len(self.A[0])

    @property
    def matrix_is_degenerate(self) -> bool:
        return all(e.is_degenerate for row in self.A for e in row)

    @property
    def wide_entry_count(self) -> int:
        entries = [e for row in self.A for e in row]
        entries.extend(self.b)
        entries.extend(self.c)
        return sum(1 for e in entries if not e.is_degenerate)

    def dualize(self) -> "IlpProblem":
        """Flip orientation. Same data box; applying it twice is identity."""
        return replace(self, orientation=self.orientation.flipped)


def problem(form: Form, A, b, c,
            orientation: Orientation = Orientation.PRIMAL) -> IlpProblem:
    return IlpProblem(form, tuple(tuple(row) for row in A),
                      tuple(b), tuple(c), orientation)


def dualize(prob: IlpProblem) -> IlpProblem:
    return prob.dualize()


@dataclass(frozen=True, slots=True)
class Scenario:
    """One concrete LP from the box: every entry fixed to a rational
    inside its interval. Membership is validated on construction."""

    A: tuple
    b: tuple
    c: tuple
    parent: IlpProblem

    def __post_init__(self):
        a_rows = tuple(tuple(Q(x) for x in row) for row in self.A)
        b_vec = tuple(Q(x) for x in self.b)
        c_vec = tuple(Q(x) for x in self.c)
        object.__setattr__(self, "A", a_rows)
        object.__setattr__(self, "b", b_vec)
        object.__setattr__(self, "c", c_vec)
        p = self.parent
        if len(a_rows) != p.m or any(len(r) != p.n for r in a_rows):
            raise ModelError("scenario matrix shape mismatch")
        if len(b_vec) != p.m or len(c_vec) != p.n:
            raise ModelError("scenario vector length mismatch")
        for i, row in enumerate(a_rows):
            for j, x in enumerate(row):
                if not p.A[i][j].contains(x):
                    raise ModelError("scenario A[%d][%d]=%s outside %s"
                                     % (i, j, qstr(x), p.A[i][j]))
        for i, x in enumerate(b_vec):
            if not p.b[i].contains(x):
                raise ModelError("scenario b[%d]=%s outside %s"
                                 % (i, qstr(x), p.b[i]))
        for j, x in enumerate(c_vec):
            if not p.c[j].contains(x):
                raise ModelError("scenario c[%d]=%s outside %s"
                                 % (j, qstr(x), p.c[j]))


def realize_min(scenario: Scenario) -> LpProblem:
    """The scenario's min program in its native variables."""
    form = scenario.parent.form
    n = scenario.parent.n
    rel = Rel.EQ if form is Form.EQ_NONNEG else Rel.LE
    dom = VarDomain.FREE if form is Form.INEQ_FREE else VarDomain.NONNEG
    rows = tuple(LinearRow(row, rel, rhs)
                 for row, rhs in zip(scenario.A, scenario.b))
    return LpProblem(Sense.MIN, scenario.c, rows, (dom,) * n)


def realize_max(scenario: Scenario) -> LpProblem:
    """The scenario's max dual program in its native variables y.

    EQ_NONNEG dual:    max b.y  s.t.  At y <= c, y free
    INEQ_FREE dual:    max b.y  s.t.  At y  = c, y <= 0
    INEQ_NONNEG dual:  max b.y  s.t.  At y <= c, y <= 0

    Sign bounds y <= 0 are encoded as explicit rows, so the reported
    point is the actual dual vector, not a substituted one.
    """
    form = scenario.parent.form
    m, n = scenario.parent.m, scenario.parent.n
    rel = Rel.EQ if form is Form.INEQ_FREE else Rel.LE
    rows = []
    for j in range(n):
        col = tuple(scenario.A[i][j] for i in range(m))
        rows.append(LinearRow(col, rel, scenario.c[j]))
    if form is not Form.EQ_NONNEG:
        for i in range(m):
            unit = tuple(Q(1) if k == i else Q(0) for k in range(m))
            rows.append(LinearRow(unit, Rel.LE, Q(0)))
    return LpProblem(Sense.MAX, scenario.b, tuple(rows), (VarDomain.FREE,) * m)


def realize_own(scenario: Scenario) -> LpProblem:
    """The program the parent's orientation designates."""
    if scenario.parent.orientation is Orientation.PRIMAL:
        return realize_min(scenario)
    return realize_max(scenario)


# ---------------------------------------------------------------------------
# Enumeration primitives.
# ---------------------------------------------------------------------------

def sign_vectors(k: int, cap: int = DEFAULT_ENUM_CAP) -> Iterator[tuple]:
    """All of {+1, -1}^k, lexicographic with +1 before -1."""
    count = 2 ** k
    if count > cap:
        raise CapExceeded(count, cap, "sign-vector sweep over %d entries" % k)
    return product((1, -1), repeat=k)


def endpoint_grid(intervals: Sequence[Interval],
                  cap: int = DEFAULT_ENUM_CAP,
                  what: str = "endpoint enumeration") -> Iterator[tuple]:
    """Every endpoint selection of a flat interval tuple, lexicographic
    over entries with lo before hi. Degenerate entries contribute one
    choice, so 2^k selections for k non-degenerate entries."""
    wide = sum(1 for e in intervals if not e.is_degenerate)
    count = 2 ** wide
    if count > cap:
        raise CapExceeded(count, cap, what)
    choices = [(e.lo,) if e.is_degenerate else (e.lo, e.hi) for e in intervals]
    return product(*choices)


def flatten_problem(prob: IlpProblem) -> tuple:
    entries = [e for row in prob.A for e in row]
    entries.extend(prob.b)
    entries.extend(prob.c)
    return tuple(entries)


def unflatten_scenario(prob: IlpProblem, flat: Sequence) -> Scenario:
    m, n = prob.m, prob.n
    a_rows = tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(m))
    b_vec = tuple(flat[m * n: m * n + m])
    c_vec = tuple(flat[m * n + m:])
    return Scenario(a_rows, b_vec, c_vec, prob)


def endpoint_selections(prob: IlpProblem,
                        cap: int = DEFAULT_ENUM_CAP) -> Iterator[Scenario]:
    """Stream the 2^k endpoint scenarios of the data box, deterministic
    lexicographic order (row-major A, then b, then c; lo before hi)."""
    flat = flatten_problem(prob)
    grid = endpoint_grid(flat, cap, "endpoint scenario enumeration")
    return (unflatten_scenario(prob, values) for values in grid)


# ---------------------------------------------------------------------------
# Orthant and vertex selections.
# ---------------------------------------------------------------------------

def transpose_intervals(matrix) -> tuple:
    rows, cols = len(matrix), len(matrix[0])
    return tuple(tuple(matrix[i][j] for i in range(rows)) for j in range(cols))


def negate_intervals(matrix) -> tuple:
    return tuple(tuple(e.negated() for e in row) for row in matrix)


def orthant_matrix(matrix, col_signs: Sequence[int]) -> tuple:
    """Center minus radius scaled by column signs: entry (i, j) sits at
    its lower bound when col_signs[j] = +1 and upper bound when -1.
    This is the matrix M_c - dM * diag(p)."""
    return tuple(tuple(e.lo if s > 0 else e.hi for e, s in zip(row, col_signs))
                 for row in matrix)


def row_orthant_matrix(matrix, row_signs: Sequence[int]) -> tuple:
    """Row-scaled counterpart M_c - diag(p) * dM: row i sits entirely at
    lower bounds when row_signs[i] = +1, upper bounds when -1."""
    return tuple(tuple(e.lo if s > 0 else e.hi for e in row)
                 for row, s in zip(matrix, row_signs))


def vertex_vector(vector, signs: Sequence[int]) -> tuple:
    """The right-hand-side vertex v_c + diag(p) * dv: entry i at its upper
    bound when signs[i] = +1, lower bound when -1."""
    return tuple(e.hi if s > 0 else e.lo for e, s in zip(vector, signs))


# ---------------------------------------------------------------------------
# Problem files.
# ---------------------------------------------------------------------------

_ALLOWED_KEYS = {"form", "orientation", "A", "b", "c"}


def _interval_from_json(value, where: str) -> Interval:
    def scalar(x):
        if isinstance(x, float):
            raise ParseError(
                "%s: float %r is inexact; write it as a string like \"3.5\""
                % (where, x))
        if not isinstance(x, (int, str)):
            raise ParseError("%s: expected a rational string or integer"
                             % where)
        try:
            return Q(x)
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise ParseError("%s: not a rational: %r" % (where, x)) from exc

    if isinstance(value, list):
        if len(value) != 2:
            raise ParseError("%s: interval list must be [lo, hi]" % where)
        lo, hi = scalar(value[0]), scalar(value[1])
        if lo > hi:
            raise ParseError("%s: empty interval [%s, %s]"
                             % (where, qstr(lo), qstr(hi)))
        return Interval(lo, hi)
    return iv(scalar(value))


def problem_from_obj(obj) -> IlpProblem:
    if not isinstance(obj, dict):
        raise ParseError("problem file must be a JSON object")
    unknown = set(obj) - _ALLOWED_KEYS
    if unknown:
        raise ParseError("unknown keys: %s" % ", ".join(sorted(unknown)))
    for key in ("form", "A", "b", "c"):
        if key not in obj:
            raise ParseError("missing key %r" % key)
    form = Form.from_code(obj["form"]) if isinstance(obj["form"], str) else None
    if form is None:
        raise ParseError("form must be a string")
    orientation = Orientation.PRIMAL
    if "orientation" in obj:
        raw = obj["orientation"]
        if raw not in ("primal", "dual"):
            raise ParseError("orientation must be \"primal\" or \"dual\"")
        orientation = Orientation(raw)
    if not isinstance(obj["A"], list) or not obj["A"]:
        raise ParseError("A must be a non-empty list of rows")
    a_rows = []
    for i, row in enumerate(obj["A"]):
        if not isinstance(row, list) or not row:
            raise ParseError("A[%d] must be a non-empty list" % i)
        a_rows.append(tuple(_interval_from_json(x, "A[%d][%d]" % (i, j))
                            for j, x in enumerate(row)))
    if not isinstance(obj["b"], list):
        raise ParseError("b must be a list")
    if not isinstance(obj["c"], list):
        raise ParseError("c must be a list")
    b_vec = tuple(_interval_from_json(x, "b[%d]" % i)
                  for i, x in enumerate(obj["b"]))
    c_vec = tuple(_interval_from_json(x, "c[%d]" % j)
                  for j, x in enumerate(obj["c"]))
    try:
        return IlpProblem(form, tuple(a_rows), b_vec, c_vec, orientation)
    except ModelError as exc:
        raise ParseError(str(exc)) from exc


def _interval_to_json(interval: Interval):
    if interval.is_degenerate:
        return qstr(interval.lo)
    return [qstr(interval.lo), qstr(interval.hi)]


def problem_to_obj(prob: IlpProblem) -> dict:
    obj = {"form": prob.form.code}
    if prob.orientation is Orientation.DUAL:
        obj["orientation"] = "dual"
    obj["A"] = [[_interval_to_json(e) for e in row] for row in prob.A]
    obj["b"] = [_interval_to_json(e) for e in prob.b]
    obj["c"] = [_interval_to_json(e) for e in prob.c]
    return obj


def problem_to_text(prob: IlpProblem) -> str:
    return json.dumps(problem_to_obj(prob), indent=2) + "\n"


def loads_problem(text: str) -> IlpProblem:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("invalid JSON: %s" % exc) from exc
    return problem_from_obj(obj)


def load_problem(path) -> IlpProblem:
    with open(path, "r", encoding="utf-8") as handle:
        return loads_problem(handle.read())
