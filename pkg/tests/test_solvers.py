"""Polynomial solvers against frozen examples and the exhaustive oracles."""

import random
from fractions import Fraction

import pytest

from targetset import (
    DIRECTED,
    GenSpec,
    PreconditionError,
    UNDIRECTED,
    approx_target_set,
    build_instance,
    classify_and_solve,
    exact_min_target_set,
    exact_min_target_vector,
    exact_min_vertex_cover,
    generate,
    is_target_set,
    is_target_vector,
    solve_degenerate,
    solve_min_or_full,
    solve_two_level,
    target_vector_lower_bound,
    vertex_cover_target_set,
)


def path3(tau=1):
    return build_instance(UNDIRECTED, 3, [(1, 2), (2, 3)], tau)


def triangle(tau=1):
    return build_instance(UNDIRECTED, 3, [(1, 2), (1, 3), (2, 3)], tau)


# ---------------------------------------------------------------- approx set

def test_approx_on_path_is_optimal():
    result = approx_target_set(path3())
    assert result.seed == {3}
    assert result.tau_max == 1 and result.min_positive_slack == 1
    assert result.claimed_ratio == 1
    assert exact_min_target_set(path3()).optimum == 1


def test_approx_on_saturated_triangle():
    inst = triangle(2)
    result = approx_target_set(inst)
    assert result.seed == {2, 3}
    assert is_target_set(inst, result.seed)
    opt = exact_min_target_set(inst).optimum
    assert opt == 2
    assert Fraction(len(result.seed)) <= result.claimed_ratio * opt


def test_approx_zero_thresholds_selects_nothing():
    # with zero thresholds the peel precondition needs zero incident sums,
    # so these are the shapes on which the empty selection is reachable
    edgeless = build_instance(UNDIRECTED, 3, [], 0)
    weightless = build_instance(UNDIRECTED, 3, [(1, 2, 0), (1, 3, 0), (2, 3, 0)], 0)
    for inst in (edgeless, weightless):
        result = approx_target_set(inst)
        assert result.seed == frozenset()
        assert result.min_positive_slack is None and result.claimed_ratio is None
        assert is_target_set(inst, frozenset())
    # zero thresholds over positive weights violate the degeneracy condition
    with pytest.raises(PreconditionError):
        approx_target_set(triangle(0))


def test_approx_rejects_non_degenerate_input():
    with pytest.raises(PreconditionError):
        approx_target_set(triangle(1))


# ----------------------------------------------------------- degenerate OTV

def test_degenerate_solver_on_path():
    report = solve_degenerate(path3())
    assert report.cost == 1
    assert report.cost == exact_min_target_vector(path3()).optimum
    assert is_target_vector(path3(), report.incentives)


def test_degenerate_solver_on_saturated_triangle():
    inst = triangle(2)
    report = solve_degenerate(inst)
    assert report.cost == 3  # 6 - 3
    assert report.cost == exact_min_target_vector(inst).optimum


def test_degenerate_solver_edgeless_pays_thresholds():
    inst = build_instance(UNDIRECTED, 2, [], [2, 3])
    report = solve_degenerate(inst)
    assert report.incentives == dict(inst.tau)
    assert report.cost == 5


# ------------------------------------------------------------- lower bound

def test_lower_bound_examples():
    assert target_vector_lower_bound(path3()) == 1
    assert target_vector_lower_bound(triangle(1)) == 0
    assert exact_min_target_vector(triangle(1)).optimum == 1  # bound not tight here
    assert target_vector_lower_bound(build_instance(UNDIRECTED, 2, [], [2, 3])) == 5


# ---------------------------------------------------------------- two-level

def test_two_level_unit_triangle_all_low():
    inst = triangle(1)  # every tau equals incident sum minus the minimum weight
    report = solve_two_level(inst)
    assert report.cost == 1
    assert report.certificate["branch"] == "split"
    assert exact_min_target_vector(inst).optimum == 1
    for pair in [(1, 2), (1, 3), (2, 3)]:
        other = solve_two_level(inst, removed_edge=pair)
        assert other.cost == 1
        assert is_target_vector(inst, other.incentives)


def test_two_level_with_a_saturated_vertex_goes_degenerate():
    inst = triangle([2, 1, 1])
    report = solve_two_level(inst)
    assert report.certificate["branch"] == "degenerate"
    assert report.cost == 1
    assert exact_min_target_vector(inst).optimum == 1


def test_two_level_zero_threshold_edge():
    inst = build_instance(UNDIRECTED, 2, [(1, 2)], [0, 0])
    assert solve_two_level(inst).cost == 0


def test_two_level_preconditions():
    with pytest.raises(PreconditionError):
        solve_two_level(triangle("3/2"))
    disconnected = build_instance(UNDIRECTED, 4, [(1, 2), (3, 4)], 1)
    with pytest.raises(PreconditionError):
        solve_two_level(disconnected)
    with pytest.raises(PreconditionError):
        solve_two_level(build_instance(DIRECTED, 2, [(1, 2)], 1))
    with pytest.raises(ValueError):
        solve_two_level(triangle(1), removed_edge=(1, 4))


# -------------------------------------------------------------- min-or-full

def test_min_or_full_triangle():
    inst = triangle([1, 2, 2])
    report = solve_min_or_full(inst)
    assert report.incentives == {1: Fraction(1), 2: Fraction(1), 3: Fraction(0)}
    assert report.cost == 2
    assert exact_min_target_vector(inst).optimum == 2


def test_min_or_full_star():
    inst = build_instance(UNDIRECTED, 3, [(1, 2), (1, 3)], [2, 1, 1])
    report = solve_min_or_full(inst)
    assert report.incentives == {1: Fraction(0), 2: Fraction(1), 3: Fraction(1)}
    assert report.cost == 2
    assert exact_min_target_vector(inst).optimum == 2


def test_min_or_full_single_edge_ambiguous_levels():
    inst = build_instance(UNDIRECTED, 2, [(1, 2)], [1, 1])
    report = solve_min_or_full(inst)
    assert report.cost == 1
    assert exact_min_target_vector(inst).optimum == 1


def test_min_or_full_with_zero_weight_edge():
    # mu = 0, so the low class is exactly the zero-threshold vertices
    inst = build_instance(UNDIRECTED, 3, [(1, 2, 0), (1, 3, 2), (2, 3, 2)], [0, 2, 4])
    report = solve_min_or_full(inst)
    assert report.cost == 2
    assert report.cost == exact_min_target_vector(inst).optimum
    assert is_target_vector(inst, report.incentives)


def test_min_or_full_preconditions():
    with pytest.raises(PreconditionError):
        solve_min_or_full(triangle("3/2"))
    with pytest.raises(PreconditionError):
        solve_min_or_full(build_instance(UNDIRECTED, 2, [], 1))


# ------------------------------------------------------------- vertex cover

def test_cover_bound_on_path():
    cover = vertex_cover_target_set(path3())
    assert cover == {1, 2}
    assert is_target_set(path3(), cover)
    assert exact_min_vertex_cover(path3()).optimum == 1
    assert is_target_set(path3(), {2})


def test_cover_bound_trivial_cases():
    empty = build_instance(UNDIRECTED, 3, [], 0)
    assert vertex_cover_target_set(empty) == frozenset()
    inst = triangle(2)
    assert vertex_cover_target_set(inst) == {1, 2}


def test_cover_bound_precondition_names_the_vertex():
    inst = build_instance(UNDIRECTED, 2, [(1, 2)], [1, 9])
    with pytest.raises(PreconditionError, match="vertex 2"):
        vertex_cover_target_set(inst)


# ----------------------------------------------------------------- classify

def test_classify_dispatches_degenerate_first():
    report = classify_and_solve(path3())
    assert report is not None and report.method == "degenerate"
    assert report.cost == 1


def test_classify_reaches_two_level():
    report = classify_and_solve(triangle(1))
    assert report is not None and report.method == "two-level"
    assert report.cost == 1


def test_classify_reaches_min_or_full():
    # unequal weights keep tau = mu away from the two-level pattern, and the
    # whole triangle is stuck (no vertex reaches its incident sum)
    inst = build_instance(UNDIRECTED, 3, [(1, 2, 1), (1, 3, 2), (2, 3, 2)], 1)
    report = classify_and_solve(inst)
    assert report is not None and report.method == "min-or-full"
    assert report.cost == 1
    assert report.cost == exact_min_target_vector(inst).optimum


def test_classify_unsupported_patterns():
    k4 = build_instance(
        UNDIRECTED, 4,
        [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        "5/2",
    )
    assert classify_and_solve(k4) is None
    assert classify_and_solve(build_instance(DIRECTED, 2, [(1, 2)], 1)) is None


# ------------------------------------------------- random oracle spot sweep

def test_solver_costs_match_oracle_on_small_random_instances():
    rng = random.Random(42)
    for _ in range(30):
        inst = generate(GenSpec(family="degenerate", n=rng.randint(1, 7),
                                seed=rng.randrange(2**32)))
        assert solve_degenerate(inst).cost == exact_min_target_vector(inst, limit=7).optimum
