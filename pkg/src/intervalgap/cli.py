"""Command-line front end.

Subcommands:

  feas      weak or strong feasibility of one side
  dg        weakly or strongly zero duality gap
  bounds    optimal-value bounds and the dual-side formula checks
  oracle    brute-force cross-checks: endpoint values, gap refuter
  dualize   flip a problem file's orientation
  reduce    verdict-preserving interval collapse

Exit codes: 0 Yes, 1 No, 2 Unknown (verdict commands; report commands
use 0 for success), 3 parse or model errors, 4 failed internal
self-check, 5 enumeration cap exceeded.

stdout carries the report and nothing else; identical input produces
byte-identical output. Timing and error messages go to stderr. With
--json the report is a single versioned JSON object; all rationals are
strings, so the output survives a round-trip through any JSON parser
untouched.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .rational_lp import ExtendedRational, SelfCheckError, qstr
from .interval_model import (
    DEFAULT_ENUM_CAP,
    CapExceeded,
    IlpProblem,
    ModelError,
    Scenario,
    load_problem,
    problem_to_text,
)
from .feasibility import (
    FeasVerdict,
    ThreeValued,
    as_ternary,
    side_system,
    strong_feasible,
    weak_feasible,
)
from .duality_gap import reduce_strong_deg, reduce_weak, strongly_zero, weakly_zero
from .bounds import bounds_report
from .oracle import enumerate_values, grid_counterexample_strong, oracle_weakly_zero
from .interval_model import Orientation

SCHEMA = "intervalgap/1"

EXIT_YES = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2
EXIT_MODEL_ERROR = 3
EXIT_SELF_CHECK = 4
EXIT_CAP = 5

_VERDICT_EXITS = {
    ThreeValued.YES: EXIT_YES,
    ThreeValued.NO: EXIT_NO,
    ThreeValued.UNKNOWN: EXIT_UNKNOWN,
}


def _point_obj(point):
    return None if point is None else [qstr(x) for x in point]


def _signs_obj(signs):
    return None if signs is None else list(signs)


def _scenario_obj(scenario: Scenario):
    if scenario is None:
        return None
    return {
        "A": [[qstr(x) for x in row] for row in scenario.A],
        "b": [qstr(x) for x in scenario.b],
        "c": [qstr(x) for x in scenario.c],
    }


def _ext_obj(value: ExtendedRational):
    return None if value is None else str(value)


def _digest(prob: IlpProblem) -> dict:
    return {
        "form": prob.form.code,
        "orientation": prob.orientation.value,
        "rows": prob.m,
        "cols": prob.n,
        "wide_entries": prob.wide_entry_count,
    }


def _emit(args, obj: dict, text_lines) -> None:
    if args.json:
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")
    else:
        for line in text_lines:
            sys.stdout.write(line + "\n")


def _describe(prob: IlpProblem) -> str:
    return "form %s (%s), %d x %d, %d wide entries" % (
        prob.form.code, prob.orientation.value, prob.m, prob.n,
        prob.wide_entry_count)


# ---------------------------------------------------------------------------
# Subcommands. Each returns the process exit code.
# ---------------------------------------------------------------------------

def cmd_feas(args, prob: IlpProblem, cap: int) -> int:
    side = Orientation(args.side)
    system = side_system(prob, side)
    if args.mode == "weak":
        verdict = weak_feasible(system.kind, system.matrix, system.rhs, cap)
    else:
        verdict = strong_feasible(system.kind, system.matrix, system.rhs, cap)
    ternary = as_ternary(verdict)
    witness = verdict.witness if isinstance(verdict, FeasVerdict) else None
    signs = verdict.sign_vector if isinstance(verdict, FeasVerdict) else None
    notes = list(verdict.notes) if isinstance(verdict, FeasVerdict) else \
        ["interval matrix with equality rows: no exact strong test is "
         "available, answering Unknown"]
    if witness is not None and system.var_sign < 0:
        notes.append("witness is in substituted coordinates: the side's "
                     "own variables are its negation")

    obj = {
        "schema": SCHEMA,
        "command": "feas",
        "problem": _digest(prob),
        "side": args.side,
        "mode": args.mode,
        "verdict": ternary.token,
        "witness": _point_obj(witness),
        "sign_vector": _signs_obj(signs),
        "notes": notes,
    }
    lines = [_describe(prob),
             "%s %s feasibility: %s" % (args.side, args.mode, ternary.token)]
    if witness is not None:
        lines.append("witness: (%s)" % ", ".join(qstr(x) for x in witness))
    if signs is not None:
        lines.append("sign vector: %s" % (signs,))
    lines.extend("note: " + n for n in notes)
    _emit(args, obj, lines)
    return _VERDICT_EXITS[ternary]


def cmd_dg(args, prob: IlpProblem, cap: int) -> int:
    if args.mode == "weak":
        report = weakly_zero(prob, cap)
    else:
        report = strongly_zero(prob, args.grid_depth, cap)
    obj = {
        "schema": SCHEMA,
        "command": "dg",
        "problem": _digest(prob),
        "mode": args.mode,
        "verdict": report.verdict.token,
        "fired_condition": report.fired_condition,
        "witness_point": _point_obj(report.witness_point),
        "witness_signs": _signs_obj(report.witness_signs),
        "witness_scenario": _scenario_obj(report.witness_scenario),
        "notes": list(report.notes),
    }
    lines = [_describe(prob),
             "%sly zero duality gap: %s" % (args.mode, report.verdict.token),
             "decided by: %s" % report.fired_condition]
    if report.witness_point is not None:
        lines.append("witness point: (%s)"
                     % ", ".join(qstr(x) for x in report.witness_point))
    if report.witness_signs is not None:
        lines.append("witness signs: %s" % (report.witness_signs,))
    if report.witness_scenario is not None:
        s = report.witness_scenario
        lines.append("witness scenario: A=%s b=(%s) c=(%s)"
                     % ([[qstr(x) for x in row] for row in s.A],
                        ", ".join(qstr(x) for x in s.b),
                        ", ".join(qstr(x) for x in s.c)))
    lines.extend("note: " + n for n in report.notes)
    _emit(args, obj, lines)
    return _VERDICT_EXITS[report.verdict]


def cmd_bounds(args, prob: IlpProblem, cap: int) -> int:
    report = bounds_report(prob, args.grid_depth, cap,
                           validate_upper=args.validate_upper)
    valid_lower = report.lower_formula_valid
    valid_upper = report.upper_formula_valid
    obj = {
        "schema": SCHEMA,
        "command": "bounds",
        "problem": _digest(prob),
        "f_lower": _ext_obj(report.f_lower),
        "f_upper": _ext_obj(report.f_upper),
        "rhs_lower": _ext_obj(report.rhs_lower),
        "rhs_upper": _ext_obj(report.rhs_upper),
        "lower_formula_valid": valid_lower,
        "upper_formula_valid": None if valid_upper is None else valid_upper.token,
        "condition_trace": list(report.condition_trace),
    }
    lines = [_describe(prob)]
    for label, value in (("f_lower", report.f_lower),
                         ("f_upper", report.f_upper),
                         ("rhs_lower", report.rhs_lower),
                         ("rhs_upper", report.rhs_upper)):
        if value is not None:
            lines.append("%s: %s" % (label, value))
    if valid_lower is not None:
        lines.append("lower formula valid: %s" % ("Yes" if valid_lower else "No"))
    if valid_upper is not None:
        lines.append("upper formula valid: %s" % valid_upper.token)
    lines.extend("note: " + n for n in report.condition_trace)
    _emit(args, obj, lines)
    return EXIT_YES


def cmd_oracle(args, prob: IlpProblem, cap: int) -> int:
    summary = enumerate_values(prob, cap)
    weak = oracle_weakly_zero(prob, cap)
    counterexample = grid_counterexample_strong(prob, args.depth, cap)
    obj = {
        "schema": SCHEMA,
        "command": "oracle",
        "problem": _digest(prob),
        "depth": args.depth,
        "weakly_zero": weak,
        "endpoint_scenarios": len(summary.per_scenario),
        "has_pos_inf": summary.has_pos_inf,
        "has_neg_inf": summary.has_neg_inf,
        "finite_values": [qstr(v) for v in summary.finite_values],
        "strong_counterexample": _scenario_obj(counterexample),
    }
    lines = [_describe(prob),
             "weakly zero duality gap (endpoint oracle): %s"
             % ("Yes" if weak else "No"),
             "endpoint scenarios: %d" % len(summary.per_scenario),
             "optimal values: pos_inf=%s neg_inf=%s finite={%s}"
             % (summary.has_pos_inf, summary.has_neg_inf,
                ", ".join(qstr(v) for v in summary.finite_values))]
    if counterexample is None:
        lines.append("no both-infeasible scenario on the depth-%d grid"
                     % args.depth)
    else:
        lines.append("both-infeasible scenario: A=%s b=(%s) c=(%s)"
                     % ([[qstr(x) for x in row] for row in counterexample.A],
                        ", ".join(qstr(x) for x in counterexample.b),
                        ", ".join(qstr(x) for x in counterexample.c)))
    _emit(args, obj, lines)
    return EXIT_YES


def cmd_dualize(args, prob: IlpProblem, cap: int) -> int:
    sys.stdout.write(problem_to_text(prob.dualize()))
    return EXIT_YES


def cmd_reduce(args, prob: IlpProblem, cap: int) -> int:
    reduced = reduce_weak(prob) if args.mode == "weak" else reduce_strong_deg(prob)
    sys.stdout.write(problem_to_text(reduced))
    return EXIT_YES


# ---------------------------------------------------------------------------
# Wiring.
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="problem file (JSON)")
    common.add_argument("--json", action="store_true",
                        help="emit one JSON report object instead of text")
    common.add_argument("--max-enum", type=int, default=None, metavar="N",
                        help="enumeration cap; overrides INTERVALGAP_MAX_ENUM "
                             "(default %d)" % DEFAULT_ENUM_CAP)

    parser = argparse.ArgumentParser(
        prog="intervalgap",
        description="Feasibility, duality gap, and optimal-value bounds "
                    "for interval linear programs, in exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("feas", parents=[common],
                       help="weak/strong feasibility of one side")
    p.add_argument("--side", choices=("primal", "dual"), default="primal")
    p.add_argument("--mode", choices=("weak", "strong"), default="weak")
    p.set_defaults(run=cmd_feas)

    p = sub.add_parser("dg", parents=[common],
                       help="weakly/strongly zero duality gap")
    p.add_argument("--mode", choices=("weak", "strong"), required=True)
    p.add_argument("--grid-depth", type=int, default=1, metavar="D",
                   help="refutation grid density for strong mode (default 1)")
    p.set_defaults(run=cmd_dg)

    p = sub.add_parser("bounds", parents=[common],
                       help="optimal-value bounds and formula checks")
    p.add_argument("--grid-depth", type=int, default=1, metavar="D")
    p.add_argument("--validate-upper", action="store_true",
                   help="cross-check the f_upper formula on a depth-2 grid "
                        "and demote it if the grid finds a harder scenario")
    p.set_defaults(run=cmd_bounds)

    p = sub.add_parser("oracle", parents=[common],
                       help="brute-force endpoint and grid cross-checks")
    p.add_argument("--depth", type=int, default=1, metavar="D")
    p.set_defaults(run=cmd_oracle)

    p = sub.add_parser("dualize", parents=[common],
                       help="flip orientation, print the problem file")
    p.set_defaults(run=cmd_dualize)

    p = sub.add_parser("reduce", parents=[common],
                       help="collapse intervals preserving the gap verdict")
    p.add_argument("--mode", choices=("weak", "strong-deg"), default="weak")
    p.set_defaults(run=cmd_reduce)

    return parser


def _resolve_cap(args) -> int:
    if args.max_enum is not None:
        if args.max_enum < 1:
            raise ModelError("--max-enum must be positive")
        return args.max_enum
    raw = os.environ.get("INTERVALGAP_MAX_ENUM")
    if raw is not None and raw != "":
        try:
            cap = int(raw)
        except ValueError:
            raise ModelError(
                "INTERVALGAP_MAX_ENUM must be an integer, got %r" % raw)
        if cap < 1:
            raise ModelError("INTERVALGAP_MAX_ENUM must be positive")
        return cap
    return DEFAULT_ENUM_CAP


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, which would collide with the
        # Unknown verdict code; --help's exit 0 passes through untouched.
        return 0 if not exc.code else EXIT_MODEL_ERROR
    started = time.perf_counter()
    try:
        cap = _resolve_cap(args)
        prob = load_problem(args.file)
        code = args.run(args, prob, cap)
    except ModelError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_MODEL_ERROR
    except OSError as exc:
        print("error: cannot read %s: %s" % (args.file, exc), file=sys.stderr)
        return EXIT_MODEL_ERROR
    except CapExceeded as exc:
        print("error: %s" % exc, file=sys.stderr)
        print("raise the cap with --max-enum or INTERVALGAP_MAX_ENUM",
              file=sys.stderr)
        return EXIT_CAP
    except SelfCheckError as exc:
        print("internal self-check failed: %s" % exc, file=sys.stderr)
        return EXIT_SELF_CHECK
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    print("elapsed: %.1f ms" % elapsed_ms, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
