"""Evaluation tooling for momst benchmark CSVs: geometric-mean summary
tables and runtime/iteration plots."""

from .plots import PLOT_KINDS, plot
from .summarize import (
    SummaryRow,
    classify_instance,
    geometric_mean,
    read_rows,
    render_text,
    summarize,
    write_summary_csv,
)

__all__ = [
    "PLOT_KINDS", "SummaryRow", "classify_instance", "geometric_mean",
    "plot", "read_rows", "render_text", "summarize", "write_summary_csv",
]

__version__ = "0.1.0"
