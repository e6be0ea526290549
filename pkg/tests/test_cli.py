"""Command line interface: reports, exit codes, determinism."""

import pytest

from targetset.cli import main
from targetset import parse_wtg, serialize_wtg, build_instance, UNDIRECTED


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_ok(fixtures, capsys):
    code, out, _ = run(capsys, "validate", str(fixtures / "p3.wtg"))
    assert code == 0
    assert "ok true" in out


def test_validate_broken_file(tmp_path, capsys):
    bad = tmp_path / "bad.wtg"
    bad.write_text("wtg 1\nmode undirected\nn 1\nv 1 1\ne 1 1 1\n")
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 2
    assert "self-loop" in err


def test_simulate_seed_set(fixtures, capsys):
    code, out, _ = run(capsys, "simulate", str(fixtures / "p3.wtg"),
                       "--seed-set", "1", "--deterministic")
    assert code == 0
    assert "activated_all true" in out
    assert "round 0 1\nround 1 2\nround 2 3" in out


def test_simulate_empty_seed_set(fixtures, capsys):
    code, out, _ = run(capsys, "simulate", str(fixtures / "p3.wtg"),
                       "--seed-set", "", "--deterministic")
    assert code == 0
    assert "activated_all false" in out


def test_simulate_with_incentive_file(fixtures, capsys):
    code, out, _ = run(capsys, "simulate", str(fixtures / "p3.wtg"),
                       "--incentives", str(fixtures / "p3_incentives.wtg"),
                       "--deterministic")
    assert code == 0
    assert "activated_all true" in out


def test_simulate_uses_own_incentive_lines(fixtures, capsys):
    code, out, _ = run(capsys, "simulate", str(fixtures / "p3_incentives.wtg"),
                       "--deterministic")
    assert code == 0
    assert "activated_all true" in out


def test_simulate_without_any_drive_is_usage_error(fixtures, capsys):
    code, _, err = run(capsys, "simulate", str(fixtures / "p3.wtg"))
    assert code == 1
    assert "seed-set" in err


def test_degeneracy_report(fixtures, capsys):
    code, out, _ = run(capsys, "degeneracy", str(fixtures / "p3.wtg"), "--deterministic")
    assert code == 0
    assert "degenerate true" in out
    assert "order 3 2 1" in out


def test_solve_degenerate_p3_costs_one(fixtures, capsys):
    code, out, _ = run(capsys, "solve", "--method", "degenerate",
                       str(fixtures / "p3.wtg"), "--deterministic")
    assert code == 0
    assert "cost 1" in out


def test_solve_auto_picks_two_level_for_unit_triangle(tmp_path, capsys):
    tri = build_instance(UNDIRECTED, 3, [(1, 2), (1, 3), (2, 3)], 1)
    f = tmp_path / "tri.wtg"
    f.write_text(serialize_wtg(tri))
    code, out, _ = run(capsys, "solve", str(f), "--deterministic")
    assert code == 0
    assert "method two-level" in out and "cost 1" in out


def test_solve_wrong_method_exits_3(fixtures, capsys):
    code, _, err = run(capsys, "solve", "--method", "two-level",
                       str(fixtures / "k3_weighted.wtg"))
    assert code == 3
    assert "precondition" in err


def test_oracle_limit_exit_code(fixtures, capsys):
    code, _, err = run(capsys, "oracle", "target-set", str(fixtures / "p3.wtg"),
                       "--limit-n", "2")
    assert code == 4
    assert "limit" in err


def test_oracle_reports_optimum(fixtures, capsys):
    code, out, _ = run(capsys, "oracle", "target-vector", str(fixtures / "p3.wtg"),
                       "--deterministic")
    assert code == 0
    assert "optimum 1" in out


def test_reduce_preserves_oracle_answer(fixtures, tmp_path, capsys):
    image_path = tmp_path / "image.wtg"
    code, _, _ = run(capsys, "reduce", "prop1", str(fixtures / "p3.wtg"),
                     "-o", str(image_path))
    assert code == 0
    code, out_src, _ = run(capsys, "oracle", "target-set", str(fixtures / "p3.wtg"),
                           "--deterministic")
    assert code == 0
    code, out_img, _ = run(capsys, "oracle", "target-set", str(image_path),
                           "--deterministic")
    assert code == 0
    line = [l for l in out_src.splitlines() if l.startswith("optimum")]
    assert line and line == [l for l in out_img.splitlines() if l.startswith("optimum")]


def test_reduce_output_is_parseable_with_notes(fixtures, capsys):
    code, out, _ = run(capsys, "reduce", "bidirect", str(fixtures / "p3.wtg"))
    assert code == 0
    assert out.startswith("# ")
    instance, _ = parse_wtg(out)
    assert instance.mode == "directed"
    assert len(instance.edges) == 4


def test_gen_is_deterministic(capsys):
    args = ("gen", "--family", "degenerate", "--n", "7", "--seed", "99")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    instance, _ = parse_wtg(out1)
    assert instance.n == 7


def test_gen_infeasible_spec_is_usage_error(capsys):
    code, _, err = run(capsys, "gen", "--family", "cubic", "--n", "5")
    assert code == 1


def test_unknown_subcommand_exits_1(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 1


def test_unknown_check_exits_1(capsys):
    code, _, err = run(capsys, "check", "no-such-sweep")
    assert code == 1


def test_check_subcommand_runs_a_sweep(capsys):
    code, out, _ = run(capsys, "check", "kappa", "--instances", "5",
                       "--limit-n", "6", "--deterministic")
    assert code == 0
    assert "pass true" in out


def test_deterministic_flag_makes_runs_byte_identical(fixtures, capsys):
    args = ("solve", "--method", "degenerate", str(fixtures / "p3.wtg"), "--deterministic")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
    assert "wall_ms" not in out1
    _, timed, _ = run(capsys, "solve", "--method", "degenerate", str(fixtures / "p3.wtg"))
    assert "wall_ms" in timed


def test_solve_witness_reverifies_through_simulate(fixtures, tmp_path, capsys):
    code, out, _ = run(capsys, "solve", "--method", "degenerate",
                       str(fixtures / "p3.wtg"), "--deterministic")
    assert code == 0
    incentives = {}
    for line in out.splitlines():
        if line.startswith("p "):
            _, v, value = line.split()
            incentives[int(v)] = value
    instance, _ = parse_wtg((fixtures / "p3.wtg").read_text())
    from targetset import build_incentives
    vector_file = tmp_path / "vector.wtg"
    vector_file.write_text(serialize_wtg(instance, build_incentives(instance, incentives)))
    code, out, _ = run(capsys, "simulate", str(fixtures / "p3.wtg"),
                       "--incentives", str(vector_file), "--deterministic")
    assert code == 0
    assert "activated_all true" in out
