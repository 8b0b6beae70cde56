"""Scatter and trend plots for benchmark CSV results.

Three kinds: per-instance runtime scatter (baseline vs igmda, log-log with
the y=x diagonal, one image per summary group), and per-size geometric
means of iterations/second and iterations/solution per algorithm. Times
below a millisecond are clamped to 1 ms before log plotting rather than
dropped, so every row stays visible.
"""

from __future__ import annotations

import warnings
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .summarize import BASELINE, CONTENDER, geometric_mean  # noqa: E402

PLOT_KINDS = ("runtime_scatter", "its_per_sec", "its_per_sol")

_CLAMP_S = 1e-3


def _clamp(t: float) -> float:
    return max(t, _CLAMP_S)


def plot(rows: list[dict], kind: str, out_dir: str) -> list[str]:
    """Write the requested plot kind for every group; returns file paths."""
    if kind not in PLOT_KINDS:
        raise ValueError("unknown plot kind %r" % kind)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if kind == "runtime_scatter":
        files = _runtime_scatter(rows, out)
    else:
        files = _per_size_means(rows, kind, out)
    if not files:
        warnings.warn("no plottable rows for %s" % kind)
    return files


def _runtime_scatter(rows: list[dict], out: Path) -> list[str]:
    groups: dict[tuple, dict[str, dict[str, dict]]] = {}
    for row in rows:
        if row["status"] != "solved":
            continue
        key = (row["family"], row["n"], row["d"], row["correlation"])
        groups.setdefault(key, {}).setdefault(row["algorithm"], {})[
            row["instance"]] = row
    files = []
    for key, by_algo in sorted(groups.items()):
        base = by_algo.get(BASELINE, {})
        cont = by_algo.get(CONTENDER, {})
        common = sorted(set(base) & set(cont))
        if not common:
            continue
        xs = [_clamp(base[i]["time_solve_s"]) for i in common]
        ys = [_clamp(cont[i]["time_solve_s"]) for i in common]
        fig, ax = plt.subplots(figsize=(5, 5))
        ax.scatter(xs, ys, s=18, alpha=0.8)
        lo = min(xs + ys) * 0.5
        hi = max(xs + ys) * 2
        ax.plot([lo, hi], [lo, hi], "k--", linewidth=1, label="y = x")
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_xlabel("%s time [s]" % BASELINE)
        ax.set_ylabel("%s time [s]" % CONTENDER)
        family, n, d, corr = key
        ax.set_title("%s n=%d d=%d %s" % (family, n, d, corr))
        ax.legend()
        path = out / ("runtime_scatter_%s_n%d_d%d_%s.png" % key)
        fig.savefig(path, dpi=120, bbox_inches="tight")
        plt.close(fig)
        files.append(str(path))
    return files


def _per_size_means(rows: list[dict], kind: str, out: Path) -> list[str]:
    groups: dict[tuple, dict[str, dict[int, list[float]]]] = {}
    for row in rows:
        if row["status"] != "solved":
            continue
        if kind == "its_per_sec":
            value = row["iterations"] / _clamp(row["time_solve_s"])
        else:
            if row["solutions"] <= 0:
                continue
            value = row["iterations"] / row["solutions"]
        key = (row["family"], row["d"], row["correlation"])
        per_algo = groups.setdefault(key, {})
        per_algo.setdefault(row["algorithm"], {}).setdefault(
            row["n"], []).append(value)
    ylabel = ("iterations / second" if kind == "its_per_sec"
              else "iterations / solution")
    files = []
    for key, per_algo in sorted(groups.items()):
        fig, ax = plt.subplots(figsize=(6, 4))
        plotted = False
        for algo, by_n in sorted(per_algo.items()):
            sizes = sorted(by_n)
            means = [geometric_mean(by_n[n]) for n in sizes]
            if sizes:
                ax.plot(sizes, means, marker="o", label=algo)
                plotted = True
        if not plotted:
            plt.close(fig)
            continue
        ax.set_yscale("log")
        ax.set_xlabel("nodes")
        ax.set_ylabel(ylabel)
        family, d, corr = key
        ax.set_title("%s d=%d %s" % (family, d, corr))
        ax.legend()
        path = out / ("%s_%s_d%d_%s.png" % (kind, family, d, corr))
        fig.savefig(path, dpi=120, bbox_inches="tight")
        plt.close(fig)
        files.append(str(path))
    return files
