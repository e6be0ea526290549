"""Structured text reports for CLI output and experiment scripts.

Reports are flat `key value...` lines. The first line names the report
kind; list values are space-separated with vertex ids ascending. Rationals
are printed exactly ("3/2", never "1.5"). A trailing `wall_ms` line is
appended only when a wall time is supplied, so deterministic runs stay
byte-identical.
"""

from __future__ import annotations

from fractions import Fraction

from .degeneracy import DegeneracyOrdering, NotDegenerate
from .engine import ActivationTrace
from .instance import Violation, format_rational
from .oracles import OracleResult
from .solvers import ApproxTargetSetResult, SolveReport


def _ids(vertices) -> str:
    return " ".join(str(v) for v in sorted(vertices))


def _finish(lines: list[str], wall_ms: float | None) -> str:
    if wall_ms is not None:
        lines.append(f"wall_ms {wall_ms:.3f}")
    return "\n".join(lines) + "\n"


def trace_report(trace: ActivationTrace, total_vertices: int | None = None,
                 wall_ms: float | None = None) -> str:
    lines = ["report simulate"]
    if total_vertices is not None:
        done = len(trace.final_active) == total_vertices
        lines.append(f"activated_all {'true' if done else 'false'}")
    lines.append(f"rounds {trace.num_rounds}")
    for t, members in enumerate(trace.rounds):
        lines.append(f"round {t} {_ids(members)}".rstrip())
    lines.append(f"final {_ids(trace.final_active)}".rstrip())
    return _finish(lines, wall_ms)


def solve_report_text(report: SolveReport, wall_ms: float | None = None) -> str:
    lines = [
        "report solve",
        f"method {report.method}",
        f"cost {format_rational(report.cost)}",
    ]
    for v in sorted(report.incentives):
        lines.append(f"p {v} {format_rational(report.incentives[v])}")
    for key in sorted(report.certificate):
        lines.append(f"certificate {key} {report.certificate[key]}")
    return _finish(lines, wall_ms)


def approx_report_text(result: ApproxTargetSetResult, wall_ms: float | None = None) -> str:
    lines = [
        "report solve",
        "method algorithm-one",
        f"size {len(result.seed)}",
        f"set {_ids(result.seed)}".rstrip(),
        f"tau_max {format_rational(result.tau_max)}",
    ]
    if result.min_positive_slack is not None:
        lines.append(f"min_positive_slack {format_rational(result.min_positive_slack)}")
    if result.claimed_ratio is not None:
        lines.append(f"claimed_ratio {format_rational(result.claimed_ratio)}")
    return _finish(lines, wall_ms)


def cover_report_text(cover, wall_ms: float | None = None) -> str:
    lines = [
        "report solve",
        "method vc-bound",
        f"size {len(cover)}",
        f"set {_ids(cover)}".rstrip(),
    ]
    return _finish(lines, wall_ms)


def oracle_report_text(problem: str, result: OracleResult, wall_ms: float | None = None) -> str:
    lines = [
        "report oracle",
        f"problem {problem}",
        f"optimum {format_rational(result.optimum) if isinstance(result.optimum, Fraction) else result.optimum}",
    ]
    if isinstance(result.witness, dict):
        for v in sorted(result.witness):
            lines.append(f"p {v} {format_rational(result.witness[v])}")
    else:
        lines.append(f"witness {_ids(result.witness)}".rstrip())
    lines.append(f"explored {result.explored}")
    return _finish(lines, wall_ms)


def degeneracy_report_text(result: DegeneracyOrdering | NotDegenerate, wall_ms: float | None = None) -> str:
    if isinstance(result, NotDegenerate):
        lines = [
            "report degeneracy",
            "degenerate false",
            f"stuck {_ids(result.stuck)}".rstrip(),
        ]
    else:
        lines = [
            "report degeneracy",
            "degenerate true",
            "order " + " ".join(str(v) for v in result.order),
        ]
        for v in result.order:
            lines.append(f"slack {v} {format_rational(result.slacks[v])}")
    return _finish(lines, wall_ms)


def validate_report_text(violation: Violation | None, wall_ms: float | None = None) -> str:
    if violation is None:
        lines = ["report validate", "ok true"]
    else:
        lines = [
            "report validate",
            "ok false",
            f"rule {violation.rule}",
            f"detail {violation.detail}",
        ]
    return _finish(lines, wall_ms)


def check_report_text(result, wall_ms: float | None = None) -> str:
    lines = [
        "report check",
        f"name {result.name}",
        f"checked {result.checked}",
        f"failures {len(result.failures)}",
        f"pass {'true' if result.passed else 'false'}",
    ]
    for message in result.failures[:5]:
        lines.append(f"failure {message}")
    return _finish(lines, wall_ms)


def emit_report(obj, wall_ms: float | None = None, problem: str = "target-set") -> str:
    """Render any result object; OracleResult needs `problem` for its tag."""
    if isinstance(obj, ActivationTrace):
        return trace_report(obj, None, wall_ms)
    if isinstance(obj, SolveReport):
        return solve_report_text(obj, wall_ms)
    if isinstance(obj, OracleResult):
        return oracle_report_text(problem, obj, wall_ms)
    if isinstance(obj, ApproxTargetSetResult):
        return approx_report_text(obj, wall_ms)
    if isinstance(obj, (DegeneracyOrdering, NotDegenerate)):
        return degeneracy_report_text(obj, wall_ms)
    raise TypeError(f"no report format for {type(obj).__name__}")
