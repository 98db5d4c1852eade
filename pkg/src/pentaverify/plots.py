"""Matplotlib figure rendering for the table-producing subcommands.

Figures are written to files next to the delimited output; nothing here is on
the verification path.
"""

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def save_ratio_figure(reports, path: str) -> None:
    """|exact/main - 1| against n, one line per (family, k), log-log axes."""
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    series: dict[tuple[str, int], list[tuple[int, float]]] = {}
    for r in reports:
        if math.isfinite(r.rel_dev):
            series.setdefault((r.family, r.k), []).append((r.n, abs(r.rel_dev)))
    for (family, k), pts in sorted(series.items()):
        pts.sort()
        ax.plot([p[0] for p in pts], [p[1] for p in pts],
                marker="o", label=f"{family}, k={k}")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("|exact / main term - 1|")
    ax.set_title("Main-term convergence")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_lemma_figure(reports, path: str) -> None:
    """Normalized arc defects against n, one line per (check, k)."""
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    series: dict[tuple[str, int], list[tuple[int, float]]] = {}
    for r in reports:
        series.setdefault((r.kind, r.k), []).append((r.n, r.defect))
    for (kind, k), pts in sorted(series.items()):
        pts.sort()
        ax.plot([p[0] for p in pts], [p[1] for p in pts],
                marker="s", label=f"{kind}, k={k}")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("normalized defect")
    ax.set_title("Arc-lemma defect boundedness")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
