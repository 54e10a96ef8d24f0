"""Rendering of verification runs: text body, CSV table and figure files.

The text body is a deterministic function of the check results' names,
references, statuses and residuals; wall-clock timings are kept out of it so
identical seeds produce byte-identical bodies.  The CSV and the figures are
the file-artifact view of the same run and do include timings.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .verify import CheckResult


def format_value(x: float) -> str:
    return f"{x:.9f}"


def format_body(results: list[CheckResult]) -> str:
    """Deterministic report body: one line per check, no timings."""
    width = max((len(r.name) for r in results), default=10)
    lines = []
    for r in results:
        status = "pass" if r.passed else "FAIL"
        lines.append(
            f"{status}  {r.name:<{width}}  residual {r.residual:.3e}"
            f"  threshold {r.threshold:.1e}  [{r.reference}]"
        )
    failed = sum(1 for r in results if not r.passed)
    lines.append("")
    if failed:
        lines.append(f"{failed} of {len(results)} checks failed")
    else:
        lines.append(f"all {len(results)} checks passed")
    return "\n".join(lines) + "\n"


def results_as_json(results: list[CheckResult], seed: int, samples: int) -> str:
    doc = {
        "seed": seed,
        "samples": samples,
        "checks": [
            {
                "name": r.name,
                "reference": r.reference,
                "status": "pass" if r.passed else "fail",
                "residual": r.residual,
                "threshold": r.threshold,
                "elapsed_s": round(r.elapsed, 6),
            }
            for r in results
        ],
        "passed": all(r.passed for r in results),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def write_csv(results: list[CheckResult], path: Path):
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["name", "reference", "status", "residual", "threshold", "elapsed_s"])
        for r in results:
            writer.writerow(
                [
                    r.name,
                    r.reference,
                    "pass" if r.passed else "fail",
                    f"{r.residual:.12e}",
                    f"{r.threshold:.3e}",
                    f"{r.elapsed:.6f}",
                ]
            )


def render_figures(results: list[CheckResult], directory: Path) -> list[Path]:
    """Residual and timing charts for the run, written as PNG files."""
    directory.mkdir(parents=True, exist_ok=True)
    names = [r.name for r in results]
    pos = np.arange(len(results))

    fig, ax = plt.subplots(figsize=(9, 0.28 * len(results) + 1.5))
    residuals = np.array([max(r.residual, 1e-18) for r in results])
    thresholds = np.array([r.threshold for r in results])
    colors = ["#2a7e43" if r.passed else "#b03a2e" for r in results]
    ax.barh(pos, residuals, color=colors, height=0.6, label="residual")
    ax.plot(thresholds, pos, "k|", markersize=9, label="threshold")
    ax.set_xscale("log")
    ax.set_yticks(pos)
    ax.set_yticklabels(names, fontsize=7)
    ax.invert_yaxis()
    ax.set_xlabel("worst residual (log scale)")
    ax.set_title("verification residuals vs thresholds")
    ax.legend(loc="lower right", fontsize=7)
    fig.tight_layout()
    residual_path = directory / "residuals.png"
    fig.savefig(residual_path, dpi=150)
    plt.close(fig)

    fig, ax = plt.subplots(figsize=(9, 0.28 * len(results) + 1.5))
    ax.barh(pos, [r.elapsed for r in results], color="#34618e", height=0.6)
    ax.set_yticks(pos)
    ax.set_yticklabels(names, fontsize=7)
    ax.invert_yaxis()
    ax.set_xlabel("elapsed seconds")
    ax.set_title("verification check timings")
    fig.tight_layout()
    timing_path = directory / "timings.png"
    fig.savefig(timing_path, dpi=150)
    plt.close(fig)
    return [residual_path, timing_path]


def write_report(
    results: list[CheckResult], directory: Path, seed: int, samples: int
) -> list[Path]:
    """Write the delimited table, the JSON document and the figures."""
    directory.mkdir(parents=True, exist_ok=True)
    csv_path = directory / "report.csv"
    write_csv(results, csv_path)
    json_path = directory / "report.json"
    json_path.write_text(results_as_json(results, seed, samples))
    paths = [csv_path, json_path]
    paths.extend(render_figures(results, directory))
    return paths
