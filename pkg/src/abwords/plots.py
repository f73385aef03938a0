"""Figure rendering for the report path of the CLI.

Figures are written to files next to the delimited output; matplotlib
is only imported here so library users without a display stack pay
nothing."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .abelian import CorridorProfile, FrequencyBounds  # noqa: E402


def plot_corridor(profile: CorridorProfile, path: str) -> None:
    ns = range(1, profile.n_max + 1)
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.fill_between(ns, profile.mins, profile.maxs, alpha=0.3, step="mid",
                    label="corridor")
    ax.plot(ns, profile.mins, drawstyle="steps-mid", lw=0.8)
    ax.plot(ns, profile.maxs, drawstyle="steps-mid", lw=0.8)
    ax.set_xlabel("factor length n")
    ax.set_ylabel("factor weight")
    ax.set_title(f"corridor ({profile.provenance})")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_word_graph(g: list[int], path: str, slope: float | None = None) -> None:
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(range(len(g)), g, lw=0.9, label="g(i)")
    if slope is not None:
        ax.plot([0, len(g) - 1], [0, slope * (len(g) - 1)], "--", lw=0.8,
                label=f"slope {slope:.4f}")
    ax.set_xlabel("i")
    ax.set_ylabel("weight of prefix")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_complexity(values: list[int], path: str) -> None:
    fig, ax = plt.subplots(figsize=(7, 4))
    ns = range(1, len(values) + 1)
    ax.plot(ns, values, marker=".", lw=0.9, label="factor complexity")
    ax.plot(ns, [n + 1 for n in ns], "--", lw=0.8, label="n + 1")
    ax.set_xlabel("n")
    ax.set_ylabel("count")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_frequency(bounds: FrequencyBounds, path: str) -> None:
    ns = range(1, bounds.n_max + 1)
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(ns, [float(x) for x in bounds.lower], label="lower")
    ax.plot(ns, [float(x) for x in bounds.upper], label="upper")
    ax.set_xlabel("n")
    ax.set_ylabel("letter-1 frequency")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
