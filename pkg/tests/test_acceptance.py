"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
complete. Every criterion is exact (rational arithmetic, zero tolerance).
"""

from targetset import checks
from targetset.cli import main
from targetset.wtg import parse_wtg, serialize_wtg

from conftest import FIXTURES


def _report(number: int, result: checks.CheckResult) -> None:
    status = "PASS" if result.passed else "FAIL"
    print(f"[acceptance] criterion {number:02d} {status} {result.name} "
          f"(checked={result.checked}, failures={len(result.failures)})")
    for message in result.failures[:5]:
        print(f"[acceptance]     {message}")
    assert result.passed, f"criterion {number} failed: {result.failures[:5]}"


def test_criterion_01_degeneracy_soundness_completeness():
    _report(1, checks.check_degeneracy_oracle(instances=500, max_n=12, seed=0))


def test_criterion_02_approximation_guarantee():
    _report(2, checks.check_algorithm_one(instances=300, max_n=10, seed=0))


def test_criterion_03_degenerate_vector_optimality():
    _report(3, checks.check_otvw_degenerate(instances=300, max_n=9, seed=0))


def test_criterion_04_two_level_solver():
    _report(4, checks.check_two_level(instances=200, max_n=9, seed=0))


def test_criterion_05_min_or_full_solver():
    _report(5, checks.check_min_or_full(instances=200, max_n=9, seed=0))


def test_criterion_06_complete_embedding_preservation():
    _report(6, checks.check_tss_preservation(instances=100, max_n=7, seed=0))


def test_criterion_07_hub_embedding_preservation():
    _report(7, checks.check_degenerate_preservation(instances=100, max_n=6, seed=0))


def test_criterion_08_bounds_sandwich():
    _report(8, checks.check_bounds(instances=150, max_n=8, seed=0))


def test_criterion_09_directed_consistency():
    _report(9, checks.check_bidirected(instances=100, max_n=8, seed=0))


def test_criterion_10_kappa_equivalence():
    _report(10, checks.check_kappa(instances=200, max_n=10, seed=0))


def test_criterion_11_vector_oracle_vs_grid_search():
    _report(11, checks.check_otv_grid(instances=300, max_n=4, seed=0))


def test_criterion_12_toolkit_round_trip_and_determinism(tmp_path, capsys):
    failures = []
    fixture_files = sorted(FIXTURES.glob("*.wtg"))
    for path in fixture_files:
        text = path.read_text()
        instance, incentives = parse_wtg(text)
        if serialize_wtg(instance, incentives) != text:
            failures.append(f"{path.name}: round trip changed the file")
    runs = []
    for _ in range(2):
        code = main(["solve", "--method", "degenerate",
                     str(FIXTURES / "p3.wtg"), "--deterministic"])
        out = capsys.readouterr().out
        if code != 0:
            failures.append("deterministic solve run failed")
        runs.append(out)
    if runs[0] != runs[1]:
        failures.append("deterministic runs were not byte-identical")
    if "wall_ms" in runs[0]:
        failures.append("deterministic run still contains wall time")
    result = checks.CheckResult("toolkit", len(fixture_files) + 1, failures)
    _report(12, result)
