"""Matplotlib renderings of experiment and benchmark reports."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def plot_accuracy(report, path) -> None:
    """Bar chart of per-shape accuracy, annotated with match counts."""
    labels = [r.shape.label for r in report.shapes]
    accuracies = [r.accuracy for r in report.shapes]
    fig, ax = plt.subplots(figsize=(max(4.0, 1.1 * len(labels)), 3.4))
    bars = ax.bar(labels, accuracies, color="#4878a8")
    for bar, result in zip(bars, report.shapes):
        ax.annotate(
            f"{result.matches}/{result.shape.count}",
            (bar.get_x() + bar.get_width() / 2, bar.get_height()),
            ha="center",
            va="bottom",
            fontsize=8,
        )
    ax.set_ylim(0.0, 1.12)
    ax.set_ylabel("accuracy")
    ax.set_xlabel("operand shape")
    ax.set_title(f"accuracy by shape (seed {report.seed})")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_timing(result, path) -> None:
    """Log-log scatter of multiply time against operand size, with the fit."""
    sizes = np.array([size for size, _ in result.points], dtype=float)
    times = np.array([seconds for _, seconds in result.points], dtype=float)
    coeffs = np.polyfit(np.log(sizes), np.log(times), 1)
    fit = np.exp(np.polyval(coeffs, np.log(sizes)))
    fig, ax = plt.subplots(figsize=(4.8, 3.6))
    ax.loglog(sizes, times, "o", label="median")
    ax.loglog(sizes, fit, "-", label=f"fit, slope {result.slope:.2f}")
    ax.set_xlabel("digits per operand")
    ax.set_ylabel("seconds")
    ax.set_title("multiply wall time")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
