import json

import pytest

from specht import cli, graded
from specht.graded import DualShiftVerdict
from specht.tableaux import Node, count_standard_tableaux, parse_multipartition


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out.strip() else None), out.err


# enumerate ---------------------------------------------------------------------


def test_enumerate_examples(capsys):
    code, data, _ = run(capsys, "enumerate", "--n", "2", "--level", "1")
    assert code == 0 and {r["lambda"]: r["tableaux"] for r in data["multipartitions"]} == {"(2)": 1, "(1,1)": 1}
    code, data, _ = run(capsys, "enumerate", "--sweep", "n=2", "level=2")
    assert code == 0 and [r["lambda"] for r in data["multipartitions"]] == ["(2|)", "(1,1|)", "(1|1)", "(|2)", "(|1,1)"]
    code, data, _ = run(capsys, "enumerate", "--n", "0", "--level", "1")
    assert code == 0 and [r["lambda"] for r in data["multipartitions"]] == ["()"]


def test_enumerate_counts_match_hook_formula(capsys):
    code, data, _ = run(capsys, "enumerate", "--n", "5", "--level", "2")
    assert code == 0
    for row in data["multipartitions"]:
        assert row["tableaux"] == count_standard_tableaux(parse_multipartition(row["lambda"]))


def test_enumerate_guard(capsys):
    code, _, err = run(capsys, "enumerate", "--n", "13", "--level", "1")
    assert code == 2 and "12" in err


# restrict -------------------------------------------------------------------------


def test_restrict_examples(capsys):
    code, data, _ = run(capsys, "restrict", "--lambda", "(2,1)", "--charge", "0", "--field", "q", "--xi", "1")
    assert code == 0 and data["pass"] and len(data["layers"]) == 2
    code, data, _ = run(capsys, "restrict", "--lambda", "(1|1)", "--charge", "0,0", "--field", "cyclo", "--m", "4")
    assert code == 0 and data["pass"] and data["e"] == 2
    code, _, err = run(capsys, "restrict", "--lambda", "(1|1)", "--charge", "0,0", "--field", "q", "--xi", "2")
    assert code == 3 and err


def test_restrict_sweep_over_a_prime_field(capsys):
    code, data, _ = run(capsys, "restrict", "--sweep", "n=3", "level=1", "--charge", "0", "--field", "fp", "--p", "2", "--xi", "1")
    assert code == 0 and data["pass"] and len(data["runs"]) == 1 + 1 + 2 + 3


def test_restrict_empty_shape_is_vacuous(capsys):
    code, data, _ = run(capsys, "restrict", "--lambda", "()", "--charge", "0", "--field", "q", "--xi", "1")
    assert code == 0 and data["pass"] and data["layers"] == []


@pytest.mark.parametrize(
    "argv",
    [
        ["restrict", "--lambda", "(2,3)", "--charge", "0"],
        ["restrict", "--lambda", "(2", "--charge", "0"],
        ["restrict", "--lambda", "(2|1)", "--charge", "0"],
        ["restrict", "--lambda", "(2)", "--charge", "0", "--field", "fp", "--p", "101", "--xi", "1"],
        ["restrict", "--lambda", "(2)", "--charge", "0", "--field", "fp", "--p", "9", "--xi", "1"],
        ["restrict", "--lambda", "(2)", "--charge", "0", "--field", "cyclo", "--m", "4", "--e", "3"],
        ["restrict", "--lambda", "(2)", "--sweep", "n=2", "level=1", "--charge", "0"],
        ["graded", "--lambda", "(2)", "--charge", "x", "--e", "2"],
        ["graded", "--lambda", "(2)", "--charge", "0", "--e", "1"],
    ],
)
def test_bad_configuration_exits_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["frobnicate"])
    assert info.value.code == 2


# graded ------------------------------------------------------------------------------


def test_graded_examples(capsys):
    code, data, _ = run(capsys, "graded", "--lambda", "(2)", "--charge", "0", "--e", "2")
    assert code == 0 and data["pass"]
    (b,) = data["branching"]
    assert b["i"] == 1 and b["terms"] == [{"node": [1, 1, 2], "shift": 1, "mu": "(1)"}]
    assert b["lhs_character"] == b["rhs_character"] == [[[0], [[1, 1]]]]
    code, data, _ = run(capsys, "graded", "--lambda", "()", "--charge", "0", "--e", "3")
    assert code == 0 and data["pass"] and data["branching"] == []


def test_graded_sweep(capsys):
    code, data, _ = run(capsys, "graded", "--sweep", "n=6", "level=1", "--e", "3", "--charge", "0")
    assert code == 0 and data["pass"] and data["e"] == 3


def test_graded_failure_exits_4(capsys, monkeypatch):
    monkeypatch.setattr(graded, "dual_shift_check", lambda lam, charge, e: DualShiftVerdict(lam, [(Node(1, 1, 1), 1, 0, 0, 0)]))
    code, data, _ = run(capsys, "graded", "--lambda", "(1)", "--charge", "0", "--e", "2")
    assert code == 4 and not data["pass"]


# determinism and files -----------------------------------------------------------------


def test_output_is_byte_deterministic(tmp_path):
    argv = ["restrict", "--sweep", "n=3", "level=2", "--charge", "0,1", "--field", "cyclo", "--m", "3"]
    paths = []
    for k, jobs in enumerate(["1", "1", "2"]):
        out = tmp_path / f"r{k}.json"
        assert cli.main(argv + ["--jobs", jobs, "--out", str(out)]) == 0
        paths.append(out)
    texts = [p.read_bytes() for p in paths]
    assert texts[0] == texts[1] == texts[2]
    meta = json.loads((tmp_path / "r0.json.meta.json").read_text())
    assert set(meta) == {"timestamp", "argv", "seconds", "jobs"}
    assert "timestamp" not in texts[0].decode()


# verify-all ---------------------------------------------------------------------------


def test_verify_all_subset(capsys):
    code = cli.main(["verify-all", "--only", "counts", "--jobs", "1"])
    out = capsys.readouterr()
    data = json.loads(out.out)
    assert code == 0 and [c["name"] for c in data["criteria"]] == ["restriction bijection counts"]
    assert out.err.split()[:3] == ["[PASS]", "criterion", "6"]


def test_verify_all_rejects_unknown_names(capsys):
    assert cli.main(["verify-all", "--only", "nonsense"]) == 2
