"""Matplotlib figures summarizing a census run, written next to the CSV."""

from __future__ import annotations

import os
from collections import Counter
from typing import Sequence

from .census import CensusRow

# headless rendering: figures go to files, never to a display
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def render_census_figures(rows: Sequence[CensusRow], out_dir: str,
                          prefix: str = "census") -> list[str]:
    """Write summary figures for census rows; returns the file paths."""
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    paths.append(_counts_figure(rows, os.path.join(out_dir, f"{prefix}_counts.png")))
    paths.append(_girth_figure(rows, os.path.join(out_dir, f"{prefix}_girth.png")))
    paths.append(_match_figure(rows, os.path.join(out_dir, f"{prefix}_matches.png")))
    return paths


def _counts_figure(rows: Sequence[CensusRow], path: str) -> str:
    ns = sorted({r.n for r in rows})
    cand = [sum(1 for r in rows if r.n == n) for n in ns]
    conn = [sum(1 for r in rows if r.n == n and r.connected) for n in ns]
    hits = [sum(1 for r in rows if r.n == n and r.is2dt == "true") for n in ns]
    fig, ax = plt.subplots(figsize=(6, 4))
    width = 0.27
    xs = range(len(ns))
    ax.bar([x - width for x in xs], cand, width, label="candidates")
    ax.bar(list(xs), conn, width, label="connected")
    ax.bar([x + width for x in xs], hits, width, label="2-distance-transitive")
    ax.set_xticks(list(xs))
    ax.set_xticklabels([str(n) for n in ns])
    ax.set_xlabel("n (group order 4n)")
    ax.set_ylabel("connection sets")
    ax.set_title("Census candidates per group")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _girth_figure(rows: Sequence[CensusRow], path: str) -> str:
    girths = Counter(r.girth for r in rows
                     if r.connected and r.girth is not None)
    keys = sorted(girths)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(range(len(keys)), [girths[k] for k in keys])
    ax.set_xticks(range(len(keys)))
    ax.set_xticklabels([str(k) for k in keys])
    ax.set_xlabel("girth")
    ax.set_ylabel("connected candidates")
    ax.set_title("Girth distribution of connected candidates")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _match_figure(rows: Sequence[CensusRow], path: str) -> str:
    matches = Counter(r.match for r in rows if r.is2dt == "true")
    keys = sorted(matches)
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.barh(range(len(keys)), [matches[k] for k in keys])
    ax.set_yticks(range(len(keys)))
    ax.set_yticklabels(keys, fontsize=8)
    ax.set_xlabel("2-distance-transitive hits")
    ax.set_title("Catalog matches")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
