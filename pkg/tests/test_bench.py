import csv

from abasolve.bench import (
    MEMORY,
    NONE,
    RUNTIME,
    TIMEOUT,
    CaseResult,
    Limits,
    aggregate,
    cli_run,
    collect_cases,
    run_case,
    summary_lines,
    write_csv,
)

from conftest import FIXTURES


def test_clean_case_has_no_exceptions():
    result = run_case(FIXTURES / "ex4.aba")
    assert result.exceptions == {NONE}
    assert result.exception_label() == ""
    assert result.wall_time > 0
    assert result.case_name == "ex4"


def test_branch_bomb_is_a_runtime_case():
    result = run_case(FIXTURES / "bomb.aba")
    assert RUNTIME in result.exceptions


def test_unparseable_case_is_a_runtime_case(tmp_path):
    bad = tmp_path / "broken.aba"
    bad.write_text("not valid\n")
    result = run_case(bad)
    assert RUNTIME in result.exceptions


def test_tiny_timeout_trips():
    result = run_case(FIXTURES / "bomb.aba", Limits(timeout_seconds=1e-9))
    assert TIMEOUT in result.exceptions


def test_tiny_memory_budget_trips():
    result = run_case(FIXTURES / "bomb.aba", Limits(memory_mib=0.001))
    assert MEMORY in result.exceptions


def test_exception_label_joins_sorted():
    result = CaseResult("x", 0.1, 0.1, exceptions={TIMEOUT, MEMORY})
    assert result.exception_label() == "MEMORY & TIMEOUT"


def test_aggregate_counts():
    results = [
        CaseResult("a", 1.0, 1.0, exceptions={NONE}),
        CaseResult("b", 3.0, 3.0, exceptions={NONE}),
        CaseResult("c", 5.0, 5.0, exceptions={RUNTIME}),
        CaseResult("d", 7.0, 7.0, exceptions={TIMEOUT, MEMORY}),
    ]
    summary = aggregate(results)
    assert summary.n_cases == 4
    assert summary.n_with_exceptions == 2
    assert summary.n_runtime == 1
    assert summary.n_timeout == 1
    assert summary.n_memory == 1
    assert summary.total_runtime == 16.0
    assert summary.non_exception_total == 4.0
    assert summary.non_exception_average == 2.0


def test_summary_lines_match_counters():
    summary = aggregate([CaseResult("a", 1.0, 1.0, exceptions={RUNTIME})])
    lines = summary_lines(summary)
    assert lines[0] == "Number of cases\t1"
    assert lines[1] == "Number of cases with exceptions\t1"
    assert lines[3] == "Number of cases with runtime exception\t1"


def test_write_csv_round_trips(tmp_path):
    results = [
        CaseResult("a", 0.5, 0.25, exceptions={NONE}),
        CaseResult("b", 1.5, 1.0, exceptions={RUNTIME}),
    ]
    path = tmp_path / "out.csv"
    write_csv(results, path)
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert rows[0]["case"] == "a"
    assert rows[0]["exceptions"] == ""
    assert rows[1]["exceptions"] == "RUNTIME"
    assert float(rows[1]["wall_time"]) == 1.5


def test_collect_cases_expands_directories(tmp_path):
    (tmp_path / "z.aba").write_text("")
    (tmp_path / "a.aba").write_text("")
    (tmp_path / "ignore.txt").write_text("")
    files = collect_cases([str(tmp_path)])
    assert [f.name for f in files] == ["a.aba", "z.aba"]
    single = collect_cases([str(tmp_path / "z.aba")])
    assert [f.name for f in single] == ["z.aba"]


def test_cli_run_writes_outputs(tmp_path, capsys):
    csv_path = tmp_path / "cases.csv"
    summary_path = tmp_path / "summary.txt"
    code = cli_run([
        str(FIXTURES / "ex4.aba"),
        str(FIXTURES / "ex5.aba"),
        "--csv", str(csv_path),
        "--summary", str(summary_path),
    ])
    assert code == 0
    out = capsys.readouterr().out
    assert "ex4" in out and "ex5" in out
    assert "Number of cases\t2" in out
    assert summary_path.read_text().startswith("Number of cases\t2")
    with open(csv_path, newline="") as fh:
        assert len(list(csv.DictReader(fh))) == 2
