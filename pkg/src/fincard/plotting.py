"""Figures for verification reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def render_report(records, outdir) -> list:
    """Write a per-suite summary figure (cases, failures, runtime) into outdir."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    names = [r.suite for r in records]
    cases = [r.cases for r in records]
    failed = [len(r.failures) for r in records]
    millis = [r.millis or 0 for r in records]
    pos = range(len(records))

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 3.8))
    ax1.bar(pos, cases, color="0.7", label="cases")
    ax1.bar(pos, failed, color="tab:red", label="failures")
    ax1.set_yscale("symlog")
    ax1.set_xticks(list(pos), names, rotation=30, ha="right")
    ax1.set_ylabel("count")
    ax1.legend(frameon=False)

    ax2.bar(pos, millis, color=["tab:green" if r.passed else "tab:red" for r in records])
    ax2.set_xticks(list(pos), names, rotation=30, ha="right")
    ax2.set_ylabel("wall time (ms)")

    fig.tight_layout()
    path = outdir / "summary.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return [path]
