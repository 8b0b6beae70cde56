import math

import pytest

from momst_analyze import (
    classify_instance,
    geometric_mean,
    read_rows,
    render_text,
    summarize,
)


def test_classify_instance_tokens():
    assert classify_instance("runs/complete_n10_d3_anticorrelated_s1.momst") == \
        ("complete", "anticorrelated")
    assert classify_instance("grid_3x3_uncorrelated.momst") == ("grid", "uncorrelated")
    assert classify_instance("RANDOM_SPARSE_correlated") == ("random_sparse", "correlated")
    assert classify_instance("mystery.momst") == ("unknown", "unknown")


def test_geometric_mean_basics():
    assert math.isclose(geometric_mean([1.0, 4.0]), 2.0, rel_tol=1e-12)
    assert math.isclose(geometric_mean([2.0]), 2.0, rel_tol=1e-12)
    with pytest.raises(ValueError):
        geometric_mean([])


def test_read_rows_schema_error(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("instance,algorithm\nfoo,bar\n", encoding="utf-8")
    with pytest.raises(ValueError):
        read_rows(str(bad))


def test_summarize_single_group(six_row_csv):
    rows = read_rows(six_row_csv)
    summaries = summarize(rows)
    assert len(summaries) == 1
    s = summaries[0]
    assert (s.family, s.n, s.d, s.correlation) == ("complete", 10, 3, "anticorrelated")

    ig = s.per_algorithm["igmda"]
    bn = s.per_algorithm["bn"]
    assert ig["solved"] == 3 and bn["solved"] == 2
    assert math.isclose(ig["time_solve_s"], 10.0 ** (1 / 3), rel_tol=1e-9)
    assert math.isclose(bn["time_solve_s"], math.sqrt(32.0), rel_tol=1e-9)
    assert math.isclose(ig["solutions"], 20.0, rel_tol=1e-9)
    assert math.isclose(bn["solutions"], math.sqrt(200.0), rel_tol=1e-9)
    assert math.isclose(ig["iterations"], 400.0, rel_tol=1e-9)
    assert math.isclose(bn["iterations"], 400.0, rel_tol=1e-9)
    assert math.isclose(ig["transition_nodes"], 64.0, rel_tol=1e-9)
    assert math.isclose(bn["transition_nodes"], 64.0, rel_tol=1e-9)
    # both-solved rule: the 5.0s igmda run has no bn partner and is excluded
    assert math.isclose(s.speedup, 4.0, rel_tol=1e-9)


def test_unsolved_group_renders_dashes(six_row_csv, tmp_path):
    extra = (
        "runs/grid_n9_d2_correlated_s1.momst,igmda,9,12,2,solved,5,50,20,0.0,0.5,0,0,5\n"
        "runs/grid_n9_d2_correlated_s1.momst,bn,9,12,2,memout,0,10,4,0.0,7.0,0,0,0\n"
    )
    path = tmp_path / "two_groups.csv"
    with open(six_row_csv, encoding="utf-8") as fh:
        path.write_text(fh.read() + extra, encoding="utf-8")
    summaries = summarize(read_rows(str(path)))
    grid = next(s for s in summaries if s.family == "grid")
    assert grid.per_algorithm["bn"]["solved"] == 0
    assert grid.per_algorithm["bn"]["time_solve_s"] is None
    assert grid.speedup is None
    text = render_text(summaries)
    grid_line = next(line for line in text.splitlines() if "grid" in line)
    assert " - " in grid_line or grid_line.rstrip().endswith("-")


def test_summarize_pure_function(six_row_csv):
    rows = read_rows(six_row_csv)
    first = summarize(rows)
    second = summarize(read_rows(six_row_csv))
    assert render_text(first) == render_text(second)
