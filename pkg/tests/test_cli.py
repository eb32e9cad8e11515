"""End-to-end tests of the command-line interface: payload shapes,
delimited output, and the exit-code contract (0 pass, 1 discrepancy,
2 usage error)."""

import json

import pytest

from rigidchar.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_char_json(capsys):
    code, payload = run_json(
        capsys, "char", "--type", "A", "--rank", "2", "--weight", "1,1"
    )
    assert code == 0
    assert {"mu": [0, 0], "mult": 2} in payload["entries"]
    assert {"mu": [1, 1], "mult": 1} in payload["entries"]


def test_char_tsv(capsys):
    code, out = run(
        capsys, "char", "--type", "B", "--rank", "2", "--weight", "0,2",
        "--format", "tsv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split("\t") == ["mu", "mult"]
    assert "0,0\t2" in lines


def test_dim(capsys):
    code, payload = run_json(
        capsys, "dim", "--type", "A", "--rank", "2", "--weight", "1,1"
    )
    assert code == 0 and payload["dim"] == 8


def test_tensor(capsys):
    code, payload = run_json(
        capsys, "tensor", "--type", "A", "--rank", "1",
        "--left", "1", "--right", "1",
    )
    assert code == 0
    comps = {tuple(c["lambda"]): c["mult"] for c in payload["components"]}
    assert comps == {(2,): 1, (0,): 1}


def test_orbit(capsys):
    code, payload = run_json(
        capsys, "orbit", "--type", "B", "--rank", "2", "--weight", "1,0"
    )
    assert code == 0 and payload["size"] == 4
    assert sorted(map(tuple, payload["weights"])) == sorted(
        [(1, 0), (-1, 2), (1, -2), (-1, 0)]
    )


def test_reconstruct(capsys):
    code, payload = run_json(
        capsys, "reconstruct", "--type", "A", "--rank", "2", "--cutoff", "2"
    )
    assert code == 0
    assert payload["matches_freudenthal"] is True
    assert payload["oracle_queries"] < payload["entries"]


def test_verify_pass(capsys):
    code, out = run(
        capsys, "verify", "--type", "B", "--rank", "2", "--cutoff", "3",
        "--mode", "full", "--format", "tsv",
    )
    assert code == 0 and out.strip() == "PASS"


def test_supp_lemma_pass_and_fail(capsys):
    code, payload = run_json(
        capsys, "supp-lemma", "--type", "A", "--rank", "3", "--k-bound", "2"
    )
    assert code == 0 and payload["result"] == "pass"
    code, payload = run_json(
        capsys, "supp-lemma", "--type", "B", "--rank", "3", "--k-bound", "2"
    )
    assert code == 1 and payload["result"] == "fail"
    assert payload["failures"]


def test_identities_pass_and_flag(capsys):
    code, payload = run_json(capsys, "identities", "--type", "B", "--rank", "3")
    assert code == 0 and payload["result"] == "pass"
    code, payload = run_json(capsys, "identities", "--type", "D", "--rank", "5")
    assert code == 1 and payload["result"] == "discrepancy"
    spin = next(r for r in payload["rows"] if r["i"] == 5)
    assert spin["alpha_coeffs"] == [1, 2, 3, 2, 2]
    assert spin["agrees"] is False


def test_falsify_violation_exits_zero(capsys):
    code, payload = run_json(
        capsys, "falsify", "--type", "A", "--rank", "2", "--cutoff", "2",
        "--lambda", "1,1", "--mu", "0,0", "--delta", "1",
    )
    assert code == 0 and payload["result"] == "violation"


def test_usage_errors_exit_two(capsys):
    assert main(["char", "--type", "E", "--rank", "6", "--weight", "1"]) == 2
    assert main(["char", "--type", "A", "--rank", "2"]) == 2


def test_bad_weight_arity_exits_two(capsys):
    code = main(["char", "--type", "A", "--rank", "2", "--weight", "1,1,1"])
    assert code == 2


def test_bad_rank_exits_two(capsys):
    code = main(["char", "--type", "D", "--rank", "3", "--weight", "1,0,0"])
    assert code == 2
