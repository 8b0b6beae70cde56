"""momst-analyze: turn harness CSVs into summary tables and plots."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .plots import PLOT_KINDS, plot
from .summarize import read_rows, render_text, summarize, write_summary_csv


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="momst-analyze", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("summarize", help="geometric-mean summary table")
    p.add_argument("--csv", required=True)
    p.add_argument("--out", required=True, help="output directory")

    p = sub.add_parser("plot", help="write plot images")
    p.add_argument("--csv", required=True)
    p.add_argument("--kind", choices=PLOT_KINDS, required=True)
    p.add_argument("--out", required=True, help="output directory")

    args = parser.parse_args(argv)
    rows = read_rows(args.csv)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    if args.command == "summarize":
        summaries = summarize(rows)
        text = render_text(summaries)
        (out_dir / "summary.txt").write_text(text, encoding="utf-8")
        write_summary_csv(summaries, str(out_dir / "summary.csv"))
        sys.stdout.write(text)
    else:
        files = plot(rows, args.kind, str(out_dir))
        for path in files:
            print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
