"""Exact analysis of interval linear programs.

Feasibility (weak and strong), zero duality gap (weakly and strongly),
optimal-value-set bounds, and brute-force oracles for cross-checking,
all over exact rational arithmetic. See the README for the problem-file
format and the command-line interface.
"""

from .rational_lp import (
    NEG_INF,
    POS_INF,
    ExtendedRational,
    LinearRow,
    LpOutcome,
    LpProblem,
    LpStatus,
    Q,
    Rel,
    SelfCheckError,
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
from .interval_model import (
    DEFAULT_ENUM_CAP,
    CapExceeded,
    Form,
    IlpProblem,
    Interval,
    ModelError,
    Orientation,
    ParseError,
    Scenario,
    UnsupportedFormError,
    dualize,
    endpoint_selections,
    grid_points,
    iv,
    load_problem,
    loads_problem,
    problem,
    problem_from_obj,
    problem_to_obj,
    problem_to_text,
    realize_max,
    realize_min,
    realize_own,
)
from .feasibility import (
    FeasVerdict,
    SideSystem,
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
from .duality_gap import (
    DgReport,
    necessary_strong,
    reduce_strong_deg,
    reduce_weak,
    strongly_zero,
    weakly_zero,
)
from .bounds import (
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
from .oracle import (
    ValueSummary,
    enumerate_values,
    gadget_strong,
    gadget_weak,
    grid_counterexample_strong,
    oracle_weakly_zero,
)

__version__ = "0.1.0"
