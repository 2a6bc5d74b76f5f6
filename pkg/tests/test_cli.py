"""Command-line behavior: formats, exit codes, piping, determinism."""

import io
import json
import subprocess
import sys

import pytest

from zdg import sgt
from zdg.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_proc(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "zdg", *argv], capture_output=True
    )
    return proc.returncode, proc.stdout, proc.stderr


# -- example and invariants -------------------------------------------------------


def test_example_emits_parseable_sgt(capsys):
    code, out, _ = run_cli(capsys, "example", "ex3.4")
    assert code == 0
    t = sgt.loads(out)
    assert t.order == 5
    assert t.names == ("0", "a", "b", "c", "d")


def test_example_report_format(capsys):
    code, out, _ = run_cli(capsys, "example", "ex3.5", "--format", "report")
    assert code == 0
    block = json.loads(out)
    assert block["order"] == 4
    assert block["rows"][1][1] == 1


def test_unknown_example_exits_1(capsys):
    code, out, err = run_cli(capsys, "example", "nope")
    assert code == 1
    assert "unknown example" in err


def test_invariants_of_wheel_fixture(capsys):
    code, out, _ = run_cli(capsys, "invariants", "ex4.5")
    assert code == 0
    for line in ("chi = 4", "omega = 3", "girth = 3", "diameter = 2",
                 "vertices = 6", "edges = 10"):
        assert line in out


def test_example_pipes_into_invariants(capsys, monkeypatch):
    _, table_text, _ = run_cli(capsys, "example", "ex4.5")
    monkeypatch.setattr(sys, "stdin", io.StringIO(table_text))
    code, out, _ = run_cli(capsys, "invariants", "-")
    assert code == 0
    assert "chi = 4" in out and "omega = 3" in out


def test_invariants_report_is_json(capsys):
    code, out, _ = run_cli(capsys, "invariants", "powerset:3", "--format", "report")
    assert code == 0
    block = json.loads(out)
    assert block["chi"] == 3 and block["omega"] == 3
    assert block["graph"]["girth"] == 3
    assert len(block["decomposition"]["primes"]) == 3


def test_infinite_girth_serializes_as_string(capsys):
    _, out, _ = run_cli(capsys, "invariants", "ex3.4", "--format", "report")
    assert json.loads(out)["graph"]["girth"] == "inf"


# -- graph ------------------------------------------------------------------------


def test_graph_text_lists_adjacency(capsys):
    code, out, _ = run_cli(capsys, "graph", "ex3.4")
    assert code == 0
    assert "a: b" in out
    assert "b: a c" in out


def test_graph_dot_output(capsys):
    code, out, _ = run_cli(capsys, "graph", "ex3.8", "--format", "dot")
    assert code == 0
    assert out.startswith("graph gamma {")
    assert '"a" -- "b";' in out


def test_graph_bar_variant(capsys):
    _, plain, _ = run_cli(capsys, "graph", "ex4.5", "--format", "report")
    _, barred, _ = run_cli(capsys, "graph", "ex4.5", "--bar", "--format", "report")
    assert len(json.loads(plain)["edges"]) == 10
    assert len(json.loads(barred)["edges"]) == 15


# -- validate ----------------------------------------------------------------------


def test_validate_accepts_good_file(tmp_path, capsys):
    path = tmp_path / "null2.sgt"
    path.write_text("2\n0 0\n0 0\n")
    code, out, _ = run_cli(capsys, "validate", str(path))
    assert code == 0
    assert out.startswith("valid: commutative semigroup with zero, order 2")


def test_validate_reports_violations_and_exits_1(tmp_path, capsys):
    path = tmp_path / "bad.sgt"
    path.write_text("3\n0 0 0\n0 2 0\n0 0 1\n")
    code, out, _ = run_cli(capsys, "validate", str(path))
    assert code == 1
    assert "not-associative" in out


def test_validate_missing_file_exits_1(capsys):
    code, _, err = run_cli(capsys, "validate", "does/not/exist.sgt")
    assert code == 1
    assert "error:" in err


def test_validate_builtin_id(capsys):
    code, out, _ = run_cli(capsys, "validate", "ex4.5")
    assert code == 0
    assert "order 7" in out


# -- check -------------------------------------------------------------------------


def test_check_all_clauses_hold_on_ex34(capsys):
    code, out, _ = run_cli(capsys, "check", "ex3.4")
    assert code == 0
    assert "FAILS" not in out
    assert ", 0 fail," in out


def test_check_selector_picks_matching_clauses(capsys):
    code, out, _ = run_cli(capsys, "check", "ex3.4", "--theorem", "2.2")
    assert code == 0
    lines = [l for l in out.splitlines() if l and not l[0].isdigit()]
    assert all("2.2" in l for l in lines)
    assert any("thm-2.2-median" in l for l in lines)


def test_check_report_format(capsys):
    code, out, _ = run_cli(capsys, "check", "ex3.5", "--theorem", "3.1",
                           "--format", "report")
    assert code == 0
    block = json.loads(out)
    assert block["selector"] == "3.1"
    (c,) = block["clauses"]
    assert c["id"] == "thm-3.1-parts-ideals-primes"
    assert c["applicable"] is False and c["holds"] is True


def test_check_cutset_cap_flag(capsys):
    code, out, _ = run_cli(capsys, "check", "ortho:zg3+zg3",
                           "--theorem", "2.6", "--cutset-cap", "1")
    assert code == 0
    assert "n/a" in out


def test_check_stdin(capsys, monkeypatch):
    _, table_text, _ = run_cli(capsys, "example", "powerset:2")
    monkeypatch.setattr(sys, "stdin", io.StringIO(table_text))
    code, out, _ = run_cli(capsys, "check", "-")
    assert code == 0
    assert "FAILS" not in out


# -- enumerate and search ------------------------------------------------------------


def test_enumerate_emits_blank_separated_records(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--order", "3")
    assert code == 0
    records = out.strip().split("\n\n")
    assert len(records) == 14
    for rec in records:
        assert sgt.loads(rec).order == 3


def test_enumerate_up_to_iso_count(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--order", "4", "--up-to-iso")
    assert code == 0
    assert len(out.strip().split("\n\n")) == 39


def test_enumerate_limit(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--order", "3", "--limit", "5")
    assert code == 0
    assert len(out.strip().split("\n\n")) == 5


def test_enumerate_rejects_large_order(capsys):
    code, _, err = run_cli(capsys, "enumerate", "--order", "9")
    assert code == 1
    assert "orders 2 through 6" in err


def test_search_cli_finds_matches(capsys):
    code, out, _ = run_cli(capsys, "search", "--order", "4", "--up-to-iso",
                           "--predicate", "complete-rpartite:2")
    assert code == 0
    assert out.strip()


def test_search_unknown_predicate_exits_1(capsys):
    code, _, err = run_cli(capsys, "search", "--order", "3",
                           "--predicate", "bogus")
    assert code == 1
    assert "unknown predicate" in err


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_unknown_flag_is_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["invariants", "--nope", "x"])
    assert info.value.code == 2


# -- determinism ----------------------------------------------------------------------


def test_repeated_runs_are_byte_identical():
    commands = [
        ("example", "ex4.5"),
        ("invariants", "ex4.5"),
        ("invariants", "powerset:3", "--format", "report"),
        ("check", "ex3.4"),
        ("graph", "ex4.5", "--format", "dot"),
        ("enumerate", "--order", "3", "--up-to-iso"),
    ]
    for argv in commands:
        code1, out1, _ = run_proc(*argv)
        code2, out2, _ = run_proc(*argv)
        assert code1 == code2 == 0
        assert out1 == out2
