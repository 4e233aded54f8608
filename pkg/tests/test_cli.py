"""Command-line interface: output formats and exit codes."""

import json

import pytest

from rectsym.cli import (
    EXIT_COUNTEREXAMPLE,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_USAGE,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_lr(capsys):
    code, out, _ = run(capsys, "compute", "lr", "--lambda", "1", "--mu", "1", "--nu", "2")
    assert code == EXIT_OK
    assert out == "1\n"


def test_compute_kostka_foulkes(capsys):
    code, out, _ = run(
        capsys, "compute", "kostka-foulkes", "--lambda", "2,1", "--mu", "1,1,1"
    )
    assert code == EXIT_OK
    assert out == "t + t^2\n"


def test_compute_plethysm(capsys):
    code, out, _ = run(
        capsys, "compute", "plethysm", "--lambda", "2", "--mu", "2", "--nu", "2,2"
    )
    assert code == EXIT_OK
    assert out == "1\n"


def test_compute_empty_partition_spelled_zero(capsys):
    code, out, _ = run(capsys, "compute", "lr", "--lambda", "0", "--mu", "0", "--nu", "0")
    assert code == EXIT_OK
    assert out == "1\n"


def test_compute_weight_mismatch_is_zero_not_error(capsys):
    code, out, _ = run(capsys, "compute", "lr", "--lambda", "1", "--mu", "1", "--nu", "3")
    assert code == EXIT_OK
    assert out == "0\n"


def test_compute_cross_check(capsys):
    code, out, _ = run(
        capsys,
        "compute",
        "kronecker",
        "--lambda", "2,1",
        "--mu", "2,1",
        "--nu", "2,1",
        "--check",
    )
    assert code == EXIT_OK
    assert out == "1\n"


def test_compute_json(capsys):
    code, out, _ = run(
        capsys, "compute", "lr", "--lambda", "1", "--mu", "1", "--nu", "2", "--json"
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["command"] == "compute"
    assert payload["family"] == "lr"
    assert payload["value"] == 1
    assert payload["lambda"] == [1] and payload["mu"] == [1] and payload["nu"] == [2]


def test_compute_malformed_partition(capsys):
    code, _, err = run(capsys, "compute", "lr", "--lambda", "2,3", "--mu", "1", "--nu", "3")
    assert code == EXIT_USAGE
    assert "error:" in err


def test_compute_kostka_foulkes_rejects_nu(capsys):
    code, _, err = run(
        capsys,
        "compute", "kostka-foulkes",
        "--lambda", "2", "--mu", "1,1", "--nu", "2",
    )
    assert code == EXIT_USAGE
    assert "error:" in err


def test_verify_text(capsys):
    code, out, _ = run(
        capsys, "verify", "kf-box", "--max-weight", "3", "--boxes", "2,2,2"
    )
    assert code == EXIT_OK
    assert "kf-box" in out
    assert "ok:" in out
    assert "0 counterexamples" in out


def test_verify_all_small(capsys):
    code, out, _ = run(
        capsys,
        "verify", "all",
        "--max-weight", "2",
        "--boxes", "2,2,2",
        "--max-k", "1",
        "--max-image-weight", "12",
    )
    assert code == EXIT_OK
    assert out.count("\n") >= 11  # header + ten rules + summary


def test_verify_unknown_rule(capsys):
    code, _, err = run(capsys, "verify", "no-such-rule")
    assert code == EXIT_USAGE
    assert "error:" in err


def test_verify_json_deterministic(capsys):
    argv = (
        "verify", "kf-box",
        "--max-weight", "3",
        "--boxes", "2,2,2",
        "--json",
    )
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)

    def strip(text):
        payload = json.loads(text)
        for rep in payload["rules"]:
            rep.pop("elapsed_s", None)
        return payload

    assert strip(first) == strip(second)
    assert strip(first)["ok"] is True


def test_reduce_identity_text(capsys):
    code, out, _ = run(
        capsys, "reduce", "kronecker", "--lambda", "4,4", "--mu", "4,4", "--nu", "4,4"
    )
    assert code == EXIT_OK
    assert "chain: identity (no profitable reduction)" in out
    assert "weight 8" in out


def test_reduce_plethysm_text(capsys):
    code, out, _ = run(
        capsys, "reduce", "plethysm", "--lambda", "1", "--mu", "3,3", "--nu", "3,3"
    )
    assert code == EXIT_OK
    assert "original: 1 / 3,3 / 3,3 (weight 6)" in out
    assert "reduced: 1 / 0 / 0 (weight 0)" in out


def test_reduce_vanishing_text(capsys):
    code, out, _ = run(
        capsys, "reduce", "plethysm", "--lambda", "1", "--mu", "1,1", "--nu", "2"
    )
    assert code == EXIT_OK
    assert "reduced: coefficient is 0" in out


def test_reduce_execute(capsys):
    code, out, _ = run(
        capsys,
        "reduce", "kronecker",
        "--lambda", "2,2,2", "--mu", "2,2,2", "--nu", "6",
        "--execute",
    )
    assert code == EXIT_OK


def test_reduce_json(capsys):
    code, out, _ = run(
        capsys,
        "reduce", "kronecker",
        "--lambda", "1", "--mu", "1", "--nu", "1",
        "--json",
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["family"] == "kronecker"
    assert payload["reduced"] == [[], [], []]
    assert payload["weight_after"] == 0


def test_reduce_weight_mismatch(capsys):
    code, _, err = run(
        capsys, "reduce", "kronecker", "--lambda", "2", "--mu", "1", "--nu", "2"
    )
    assert code == EXIT_USAGE
    assert "error:" in err


def test_bench(capsys):
    code, out, _ = run(
        capsys,
        "bench", "kronecker",
        "--lambda", "2,2,2,2,2", "--mu", "2,2,2,2,2", "--nu", "2,2,2,2,2",
        "--repeats", "1",
    )
    assert code == EXIT_OK
    assert "value:" in out
    assert "naive median:" in out


def test_apply_text(capsys):
    code, out, _ = run(
        capsys,
        "apply", "kron-box",
        "--lambda", "2,2,2", "--mu", "2,2,2", "--nu", "2,2,2",
        "--box", "2,2,2",
    )
    assert code == EXIT_OK
    assert out == "2 / 2 / 2\n"


def test_apply_kf_two_index(capsys):
    code, out, _ = run(
        capsys, "apply", "kf-box", "--lambda", "2", "--mu", "1,1", "--k", "3", "--n", "2"
    )
    assert code == EXIT_OK
    assert out == "3,1 / 2,2\n"


def test_apply_vanishing(capsys):
    code, out, _ = run(
        capsys,
        "apply", "kron-box",
        "--lambda", "2,2,2,2,2", "--mu", "2,2,2,2,2", "--nu", "2,2,2,2,2",
        "--box", "2,2,2",
    )
    assert code == EXIT_OK
    assert "vanishes: coefficient is 0" in out


def test_apply_precondition_violation(capsys):
    code, _, err = run(
        capsys,
        "apply", "lr-box",
        "--lambda", "3", "--mu", "1", "--nu", "3,1",
        "--box", "2,1,2",
    )
    assert code == EXIT_USAGE
    assert "error:" in err


def test_apply_box_conflicts_with_parts(capsys):
    code, _, err = run(
        capsys,
        "apply", "kron-box",
        "--lambda", "1", "--mu", "1", "--nu", "1",
        "--box", "1,1,1",
        "--l", "1",
    )
    assert code == EXIT_USAGE
    assert "error:" in err


def test_argparse_rejects_unknown_family(capsys):
    with pytest.raises(SystemExit) as info:
        main(["compute", "nope", "--lambda", "1", "--mu", "1", "--nu", "1"])
    assert info.value.code == 2
    capsys.readouterr()


def test_exit_code_values():
    assert (EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_MISMATCH) == (0, 1, 2, 3)
