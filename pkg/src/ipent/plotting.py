"""Figures written next to CLI reports (non-interactive backend)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def _occ_label(occ):
    return "".join(str(k) for k in occ) if max(occ) < 10 else ",".join(str(k) for k in occ)


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)


def plot_spectrum(values, path, symbol="lambda", title=""):
    values = np.asarray(values, dtype=float)
    fig, ax = plt.subplots(figsize=(5, 3.2))
    idx = np.arange(1, values.size + 1)
    ax.bar(idx, values, color="tab:blue")
    ax.set_xticks(idx)
    ax.set_xlabel("index")
    ax.set_ylabel(symbol)
    ax.set_title(title or f"standard-form {symbol}")
    _save(fig, path)


def plot_distribution(probabilities, path, counts=None, title=""):
    """Bar chart of a number distribution, optionally with sampled frequencies."""
    occs = list(probabilities)
    p = np.array([probabilities[o] for o in occs])
    x = np.arange(len(occs))
    fig, ax = plt.subplots(figsize=(max(4, 0.6 * len(occs) + 2), 3.2))
    if counts is None:
        ax.bar(x, p, color="tab:blue", label="exact")
    else:
        total = sum(counts.values())
        freq = np.array([counts.get(o, 0) / total for o in occs])
        ax.bar(x - 0.2, p, width=0.4, color="tab:blue", label="exact")
        ax.bar(x + 0.2, freq, width=0.4, color="tab:orange", label=f"sampled (n={total})")
        ax.legend()
    ax.set_xticks(x)
    ax.set_xticklabels([_occ_label(o) for o in occs], rotation=45 if len(occs) > 8 else 0)
    ax.set_xlabel("occupation")
    ax.set_ylabel("probability")
    ax.set_ylim(0, 1.05)
    ax.set_title(title or "joint number distribution")
    _save(fig, path)


def plot_batch(rows, path):
    """Measure (bosons) and rank per file; separable files drawn in grey."""
    names = [r["file"] for r in rows]
    vals = [r["measure"] if isinstance(r.get("measure"), float) else 0.0 for r in rows]
    ranks = [r["rank"] for r in rows]
    colors = ["tab:grey" if r.get("separable") else "tab:red" for r in rows]
    x = np.arange(len(rows))
    fig, (ax1, ax2) = plt.subplots(2, 1, sharex=True,
                                   figsize=(max(4, 0.5 * len(rows) + 2), 5))
    ax1.bar(x, vals, color=colors)
    ax1.set_ylabel("measure (bosons)")
    ax1.set_title("batch summary (grey: separable)")
    ax2.bar(x, ranks, color=colors)
    ax2.set_ylabel("rank")
    ax2.set_xticks(x)
    ax2.set_xticklabels(names, rotation=60, ha="right", fontsize=7)
    _save(fig, path)
