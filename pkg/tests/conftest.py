"""Shared fixtures and random-instance generators.

Everything stays tiny on purpose: dimensions up to 3 and endpoints in
{-2..2} keep the brute-force oracles exhaustive, and a wide-interval
budget per instance keeps the exponential sweeps inside the suite's
time budget. Generators take an explicit random.Random so every test
pins its own seed.
"""

import random

import pytest

from intervalgap import Form, IlpProblem, Interval, iv, problem

ENDPOINTS = (-2, -1, 0, 1, 2)


def seeded(seed: int) -> random.Random:
    return random.Random(seed)


def random_interval(rng: random.Random, wide_ok: bool = True) -> Interval:
    lo = rng.choice(ENDPOINTS)
    if not wide_ok or rng.random() < 0.5:
        return Interval(lo, lo)
    hi = rng.choice(ENDPOINTS)
    if hi < lo:
        lo, hi = hi, lo
    return Interval(lo, hi)


def random_problem(rng: random.Random, form: Form = None, max_dim: int = 3,
                   wide_cap: int = 5, thin_matrix: bool = False) -> IlpProblem:
    """One random instance with at most wide_cap non-degenerate entries;
    thin_matrix confines them to b and c."""
    if form is None:
        form = rng.choice((Form.EQ_NONNEG, Form.INEQ_FREE, Form.INEQ_NONNEG))
    m = rng.randint(1, max_dim)
    n = rng.randint(1, max_dim)
    budget = [wide_cap]

    def entry(allowed: bool) -> Interval:
        e = random_interval(rng, wide_ok=allowed and budget[0] > 0)
        if not e.is_degenerate:
            budget[0] -= 1
        return e

    a = tuple(tuple(entry(not thin_matrix) for _ in range(n)) for _ in range(m))
    b = tuple(entry(True) for _ in range(m))
    c = tuple(entry(True) for _ in range(n))
    return IlpProblem(form, a, b, c)


def random_problems(seed: int, count: int, **kwargs):
    rng = seeded(seed)
    return [random_problem(rng, **kwargs) for _ in range(count)]


# ---------------------------------------------------------------------------
# The four recurring instances from the write-ups this package reproduces.
# ---------------------------------------------------------------------------

def make_mixed_feasibility_problem(b1=("-1", "0"), c2=("-1", "1")) -> IlpProblem:
    """min x1 + c2 x2 s.t. x1 <= b1, -x2 <= -1, x >= 0. Its scenarios
    realize every combination of primal/dual feasibility, and tightening
    b1 or c2 flips the gap verdicts; tests pass variant bounds in."""
    return problem(Form.INEQ_NONNEG,
                   [[1, 0], [0, -1]],
                   [iv(b1), iv("-1")],
                   [iv("1"), iv(c2)])


@pytest.fixture
def mixed_feasibility_problem() -> IlpProblem:
    return make_mixed_feasibility_problem()


@pytest.fixture
def interval_row_equality_problem() -> IlpProblem:
    """min -x2 s.t. [-1,1] x1 - x2 = 1, x >= 0: one wide matrix entry in
    an equality row, the smallest instance where the strong-gap ladder
    must honestly answer Unknown."""
    return problem(Form.EQ_NONNEG,
                   [[iv(("-1", "1")), iv("-1")]],
                   [iv("1")],
                   [iv("0"), iv("-1")])


@pytest.fixture
def full_axis_problem() -> IlpProblem:
    """min [-1,1] x s.t. [0,1] x <= [-1,1], x free: the endpoint optimal
    values already cover both infinities, yet one scenario still has
    both sides infeasible."""
    return problem(Form.INEQ_FREE,
                   [[iv(("0", "1"))]],
                   [iv(("-1", "1"))],
                   [iv(("-1", "1"))])


@pytest.fixture
def always_infeasible_primal_problem() -> IlpProblem:
    """min [-1,0] x1 s.t. x1 - x2 = 0, x1 - x2 = 1, x >= 0: the primal
    is infeasible in every scenario while the dual is weakly but not
    strongly feasible, separating the lower-formula condition from the
    weak-gap verdict."""
    return problem(Form.EQ_NONNEG,
                   [[1, -1], [1, -1]],
                   [iv("0"), iv("1")],
                   [iv(("-1", "0")), iv("0")])
