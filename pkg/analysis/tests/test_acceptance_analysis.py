"""Acceptance criterion for the analysis package: exact geometric means on
the synthetic six-row CSV, the both-solved speedup rule, and non-empty
images for all three plot kinds."""

import math
import os

from momst_analyze import PLOT_KINDS, plot, read_rows, summarize


def _report(name, ok, detail=""):
    suffix = " (%s)" % detail if detail else ""
    print("[ACCEPTANCE] %s: %s%s" % (name, "PASS" if ok else "FAIL", suffix))
    assert ok, name


def test_summarize_matches_hand_computation(six_row_csv):
    s = summarize(read_rows(six_row_csv))[0]
    ig, bn = s.per_algorithm["igmda"], s.per_algorithm["bn"]
    checks = {
        "igmda time": (ig["time_solve_s"], 10.0 ** (1 / 3)),
        "bn time": (bn["time_solve_s"], math.sqrt(32.0)),
        "igmda solutions": (ig["solutions"], 20.0),
        "igmda iterations": (ig["iterations"], 400.0),
        "bn iterations": (bn["iterations"], 400.0),
        "speedup both-solved": (s.speedup, 4.0),
    }
    bad = [name for name, (got, want) in checks.items()
           if not math.isclose(got, want, rel_tol=1e-9)]
    _report("summarize-geometric-means", not bad, ", ".join(bad) or "1e-9 rel tol")


def test_plots_emit_images(six_row_csv, tmp_path):
    rows = read_rows(six_row_csv)
    empty = []
    for kind in PLOT_KINDS:
        files = plot(rows, kind, str(tmp_path / kind))
        if not files or any(os.path.getsize(f) == 0 for f in files):
            empty.append(kind)
    _report("plots-nonempty", not empty, ", ".join(empty) or "all three kinds")
