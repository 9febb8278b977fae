"""Report files for the permutation experiment: records CSV, summary JSON, SVG.

Outputs are byte-identical across runs with the same configuration and
seed, except for the wall_time_s field of the summary.  The SVG is pinned
by fixing matplotlib's hash salt and dropping the date metadata.
"""

from __future__ import annotations

import csv
import io
import json

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .experiments import ComparisonRecord, ExperimentReport

RECORDS_HEADER = ["string", "assembly_index", "lzw_codes", "lzw_bytes", "huffman_bits", "entropy"]


def records_csv(records: tuple[ComparisonRecord, ...]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(RECORDS_HEADER)
    for r in records:
        writer.writerow(
            [r.string, r.assembly_index, r.lzw_codes, r.lzw_bytes, r.huffman_bits, repr(r.entropy)]
        )
    return buf.getvalue()


def summary_dict(report: ExperimentReport) -> dict:
    m = report.difference_moments
    return {
        "config": {
            "base": report.config.base,
            "samples": report.config.samples,
            "seed": report.config.seed,
            "mode": report.config.mode,
            "size_metric": report.config.size_metric,
            "workers": report.config.workers,
            "length_cap": report.config.length_cap,
            "generator": report.generator,
        },
        "record_count": len(report.records),
        "pearson_r": report.pearson_r,
        "pearson_by_metric": dict(report.pearson_by_metric),
        "difference_stats": {
            "mean": m.mean,
            "std": m.std,
            "skewness": m.skewness,
            "excess_kurtosis": m.excess_kurtosis,
            "zero_variance": m.zero_variance,
        },
        "histogram": {
            "bin_width": report.bin_width,
            "bins": [[edge, count] for edge, count in report.histogram],
        },
        "wall_time_s": report.wall_time_s,
    }


def summary_json(report: ExperimentReport) -> str:
    return json.dumps(summary_dict(report), indent=2) + "\n"


def write_records_csv(report: ExperimentReport, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(records_csv(report.records))


def write_summary_json(report: ExperimentReport, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(summary_json(report))


def write_histogram_svg(report: ExperimentReport, path: str) -> None:
    """Standalone bar chart of the difference histogram."""
    edges = [edge for edge, _ in report.histogram]
    counts = [count for _, count in report.histogram]
    metric = report.config.size_metric
    with plt.rc_context({"svg.hashsalt": "assemblage", "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(7, 4.5))
        ax.bar(edges, counts, width=report.bin_width * 0.9, align="edge", color="#4878a8")
        ax.set_xlabel(f"assembly_index - {metric}")
        ax.set_ylabel("count")
        ax.set_title(f"Difference histogram, n = {len(report.records)}")
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
