"""Geometric-mean summary tables for benchmark CSV results.

Rows are grouped by (family, n, d, correlation); family and correlation are
recovered from tokens in the instance name. Means are taken over solved
rows only, and the speedup (baseline time over igmda time) only over
instances both algorithms solved — groups an algorithm never solved render
as '-'.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

GROUP_KEYS = ("family", "n", "d", "correlation")
METRICS = ("solutions", "transition_nodes", "iterations", "time_solve_s")
BASELINE, CONTENDER = "bn", "igmda"

_TIME_FLOOR = 1e-9  # guards log/ratio against zero timer readings


def classify_instance(name: str) -> tuple[str, str]:
    """(family, correlation) tokens found in an instance name."""
    lowered = name.lower()
    family = "unknown"
    for token in ("random_sparse", "complete", "grid"):
        if token in lowered:
            family = token
            break
    if "anticorrelated" in lowered:
        correlation = "anticorrelated"
    elif "uncorrelated" in lowered:
        correlation = "uncorrelated"
    elif "correlated" in lowered:
        correlation = "correlated"
    else:
        correlation = "unknown"
    return family, correlation


def read_rows(csv_path: str) -> list[dict]:
    with open(csv_path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        required = {"instance", "algorithm", "n", "d", "status", "solutions",
                    "iterations", "transition_nodes", "time_solve_s"}
        missing = required - set(reader.fieldnames or ())
        if missing:
            raise ValueError("CSV missing columns: %s" % ", ".join(sorted(missing)))
        rows = []
        for raw in reader:
            family, correlation = classify_instance(raw["instance"])
            rows.append({
                "instance": raw["instance"],
                "algorithm": raw["algorithm"],
                "family": family,
                "correlation": correlation,
                "n": int(raw["n"]),
                "d": int(raw["d"]),
                "status": raw["status"],
                "solutions": float(raw["solutions"]),
                "iterations": float(raw["iterations"]),
                "transition_nodes": float(raw["transition_nodes"]),
                "time_solve_s": float(raw["time_solve_s"]),
            })
        return rows


def geometric_mean(values: list[float]) -> float:
    if not values:
        raise ValueError("geometric mean of empty sequence")
    return math.exp(math.fsum(math.log(max(v, _TIME_FLOOR)) for v in values)
                    / len(values))


@dataclass
class SummaryRow:
    family: str
    n: int
    d: int
    correlation: str
    per_algorithm: dict = field(default_factory=dict)  # algo -> metrics dict
    speedup: float | None = None


def summarize(rows: list[dict]) -> list[SummaryRow]:
    groups: dict[tuple, list[dict]] = {}
    for row in rows:
        key = (row["family"], row["n"], row["d"], row["correlation"])
        groups.setdefault(key, []).append(row)

    out = []
    for key in sorted(groups, key=lambda k: (k[0], k[2], k[3], k[1])):
        members = groups[key]
        summary = SummaryRow(*key)
        by_algo: dict[str, list[dict]] = {}
        for row in members:
            by_algo.setdefault(row["algorithm"], []).append(row)
        for algo, algo_rows in sorted(by_algo.items()):
            solved = [r for r in algo_rows if r["status"] == "solved"]
            stats = {"count": len(algo_rows), "solved": len(solved)}
            for metric in METRICS:
                stats[metric] = (geometric_mean([r[metric] for r in solved])
                                 if solved else None)
            summary.per_algorithm[algo] = stats
        summary.speedup = _speedup(by_algo)
        out.append(summary)
    return out


def _speedup(by_algo: dict[str, list[dict]]) -> float | None:
    base = {r["instance"]: r for r in by_algo.get(BASELINE, ())
            if r["status"] == "solved"}
    cont = {r["instance"]: r for r in by_algo.get(CONTENDER, ())
            if r["status"] == "solved"}
    common = sorted(set(base) & set(cont))
    if not common:
        return None
    ratios = [max(base[i]["time_solve_s"], _TIME_FLOOR)
              / max(cont[i]["time_solve_s"], _TIME_FLOOR) for i in common]
    return geometric_mean(ratios)


def _fmt(value, pattern="%.2f") -> str:
    return "-" if value is None else pattern % value


def render_text(summaries: list[SummaryRow]) -> str:
    algos = sorted({a for s in summaries for a in s.per_algorithm})
    head = ["family", "n", "d", "corr"]
    for algo in algos:
        head += ["%s_solved" % algo, "%s_|T*|" % algo, "%s_|V|" % algo,
                 "%s_its" % algo, "%s_time" % algo]
    head.append("speedup")
    lines = [head]
    for s in summaries:
        line = [s.family, str(s.n), str(s.d), s.correlation]
        for algo in algos:
            stats = s.per_algorithm.get(algo)
            if stats is None:
                line += ["-"] * 5
            else:
                line += [str(stats["solved"]), _fmt(stats["solutions"]),
                         _fmt(stats["transition_nodes"]),
                         _fmt(stats["iterations"]),
                         _fmt(stats["time_solve_s"], "%.4f")]
        line.append(_fmt(s.speedup))
        lines.append(line)
    widths = [max(len(row[i]) for row in lines) for i in range(len(head))]
    return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(row, widths))
                     for row in lines) + "\n"


def write_summary_csv(summaries: list[SummaryRow], path: str) -> None:
    algos = sorted({a for s in summaries for a in s.per_algorithm})
    fields = list(GROUP_KEYS)
    for algo in algos:
        fields += ["%s_solved" % algo] + ["%s_%s" % (algo, m) for m in METRICS]
    fields.append("speedup")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(fields)
        for s in summaries:
            row = [s.family, s.n, s.d, s.correlation]
            for algo in algos:
                stats = s.per_algorithm.get(algo)
                if stats is None:
                    row += [""] * (1 + len(METRICS))
                else:
                    row.append(stats["solved"])
                    row += ["" if stats[m] is None else repr(stats[m])
                            for m in METRICS]
            row.append("" if s.speedup is None else repr(s.speedup))
            writer.writerow(row)
