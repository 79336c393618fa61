import json

import pytest

from semiringkit.cli import main
from semiringkit.finite import load_table

BOOL_TABLE = "order 2\nadd\n0 1\n1 1\nmul\n0 0\n0 1\n"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_validate(tmp_path, capsys):
    good = tmp_path / "bool.tbl"
    good.write_text(BOOL_TABLE)
    assert run(capsys, "validate", str(good))[0] == 0

    bad = tmp_path / "bad.tbl"
    bad.write_text("order 2\nadd\n0 1\n1 1\nmul\n0 1\n1 1\n")
    code, out, _ = run(capsys, "validate", str(bad))
    assert code == 1 and "absorption" in out

    ragged = tmp_path / "ragged.tbl"
    ragged.write_text("order 2\nadd\n0 1\n1 1 1\nmul\n0 0\n0 1\n")
    code, _, err = run(capsys, "validate", str(ragged))
    assert code == 2 and "ParseError" in err and "line 4" in err


def test_missing_file_is_usage_error(tmp_path, capsys):
    assert run(capsys, "validate", str(tmp_path / "nope.tbl"))[0] == 2


def test_gcd(capsys):
    code, rep = run_json(capsys, "gcd", "nat", "12", "18")
    assert code == 0 and rep["output"]["gcd"] == 6
    assert rep["output"]["chain"] == [12, 18, 12, 6, 0]
    code, rep = run_json(capsys, "gcd", "trop", "3", "5")
    assert rep["output"]["gcd"] == 3
    code, _, err = run(capsys, "gcd", "nat", "0", "0")
    assert code == 2 and "ZeroInputs" in err


def test_report_fields(capsys):
    _, rep = run_json(capsys, "factor", "nat", "12")
    assert list(rep) == ["command", "inputs", "output", "verdicts", "exit_code"]
    assert rep["output"]["factors"] == [2, 2, 3]


def test_check_saturated(capsys):
    code, rep = run_json(capsys, "check", "saturated", "--order", "3")
    assert code == 0 and rep["verdicts"]
    assert all(v["holds"] for v in rep["verdicts"])


def test_check_gk(capsys):
    code, rep = run_json(capsys, "check", "gk")
    by_name = {v["name"]: v for v in rep["verdicts"]}
    assert code == 0
    assert by_name["goldman-krull/TropicalNat"]["holds"]
    assert not by_name["goldman-krull/Naturals"]["holds"]
    assert by_name["goldman-krull/Naturals"]["witness"]["u_to_p"]["30"] == 7
    assert by_name["goldman-krull/Boolean"]["holds"]


def test_check_gaussian_nat_expected_failure(capsys):
    code, rep = run_json(capsys, "check", "gaussian", "--family", "nat")
    (v,) = rep["verdicts"]
    assert code == 0 and not v["holds"] and v["expected"] is False
    assert v["witness"]["f"] == "2 + 3 X" and v["witness"]["separating_element"] == 4


def test_expectations_override_flips_exit(tmp_path, capsys):
    path = tmp_path / "exp.json"
    path.write_text(json.dumps({}))
    code, _, _ = run(capsys, "check", "gaussian", "--family", "nat", "--expectations", str(path))
    assert code == 1


def test_unknown_suite(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check", "everything"])
    assert exc.value.code == 2


def test_enumerate(tmp_path, capsys):
    code, rep = run_json(capsys, "enumerate", "2")
    assert code == 0 and rep["output"]["count"] == 2
    out = tmp_path / "order3.txt"
    code, rep = run_json(capsys, "enumerate", "3", "-o", str(out))
    summaries = {s["name"]: s["summary"] for s in rep["output"]["semirings"]}
    assert summaries["S3.2"] == "ideals=3 primes=2 subtractive=yes principal=yes"
    blocks = [b for b in out.read_text().split("# ") if b.strip()]
    assert len(blocks) == 6
    for block in blocks:
        load_table(block.split("\n", 1)[1])
    code, _, err = run(capsys, "enumerate", "9")
    assert code == 2 and "CapExceeded" in err


def test_informational_commands(capsys):
    for argv in (["ideals", "chain3"], ["spec", "trop"], ["content", "nat", "2 + 3 X"],
                 ["localize", "nat", "powers:2", "3/4"], ["integral", "nat", "3/2"],
                 ["gk", "nat", "--u", "2"], ["nilpotent", "nat"], ["laws", "bool"]):
        assert run(capsys, *argv)[0] == 0, argv


def test_output_is_deterministic(capsys):
    first = run(capsys, "check", "euclid", "--json")[1]
    second = run(capsys, "check", "euclid", "--json")[1]
    assert first == second
