"""Figures for the report commands. Uses the non-interactive Agg backend."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .catalog import Catalog, CatalogEntry, default_catalog  # noqa: E402
from .checks import profile_for  # noqa: E402
from .hilbert import HilbertProfile  # noqa: E402
from .invariants import expected_dim  # noqa: E402

MARKERS = "osD^v<>"


def _finish(fig, path: str | Path) -> Path:
    path = Path(path)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_degree_table(entries: list[CatalogEntry], path: str | Path, catalog: Catalog | None = None) -> Path:
    """Component dimensions against the expected dimension, and h0(I_X(2)), h0(I_X(3)), by genus."""
    cat = catalog or default_catalog()
    d = entries[0].d
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    gs = [e.g for e in entries]
    ax1.plot(gs, [expected_dim(d, g) for g in gs], "k--", lw=1, label="expected")
    for e in entries:
        for i, c in enumerate(e.components):
            ax1.plot(e.g, c.dimension, MARKERS[i % len(MARKERS)], color=f"C{i}",
                     label=f"component {i + 1}" if e is max(entries, key=lambda x: len(x.components)) else None)
    ax1.set_xlabel("genus g")
    ax1.set_ylabel("dimension")
    ax1.set_title(f"Hilbert scheme components, d = {d}")
    ax1.legend(frameon=False, fontsize=8)

    for t, style in ((2, "o-"), (3, "s-")):
        xs, ys = [], []
        for e in entries:
            for c in e.components:
                xs.append(e.g)
                ys.append(profile_for(e, c, cat, 3).entries[t].h0_ideal)
        ax2.plot(xs, ys, style, ms=4, label=f"t = {t}")
    ax2.set_xlabel("genus g")
    ax2.set_ylabel("h0(I_X(t))")
    ax2.set_title("hypersurfaces containing the curve")
    ax2.legend(frameon=False, fontsize=8)
    return _finish(fig, path)


def plot_profiles(profiles: dict[str, HilbertProfile], path: str | Path) -> Path:
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    for i, (label, p) in enumerate(sorted(profiles.items())):
        ts = sorted(p.entries)
        ax1.plot(ts, p.h0(), MARKERS[i % len(MARKERS)] + "-", label=label)
        ax2.plot(ts, p.h1(), MARKERS[i % len(MARKERS)] + "-", label=label)
    ax1.set_yscale("symlog")
    ax1.set_ylabel("h0(I_X(t))")
    ax2.set_ylabel("h1(I_X(t))")
    for ax in (ax1, ax2):
        ax.set_xlabel("t")
        ax.legend(frameon=False, fontsize=8)
    return _finish(fig, path)
