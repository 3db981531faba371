"""Figure rendering for benchmark results.

Turns benchmark records into a median-per-size plot written next to the
delimited output.  Import cost is deferred so the library never pulls
in matplotlib unless a figure is actually requested.
"""

from __future__ import annotations

from collections import defaultdict
from statistics import median


def medians(records):
    """Median nanos per (structure, n), sorted by n within structure."""
    groups = defaultdict(list)
    for r in records:
        groups[(r.structure, r.n)].append(r.nanos)
    out = defaultdict(list)
    for (structure, n), nanos in sorted(groups.items()):
        out[structure].append((n, median(nanos)))
    return dict(out)


def render_figure(records, path, title=None):
    """Plot median seconds against sequence size, one line per structure.

    ``build`` records give time-to-construct per target size; ``groups``
    records give per-group time against the size reached.  The figure is
    written to ``path`` (format from the extension).
    """
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    med = medians(records)
    experiments = {r.experiment for r in records}

    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    markers = {"raz": "o", "naive": "s"}
    for structure, points in sorted(med.items()):
        xs = [n for n, _ in points]
        ys = [ns / 1e9 for _, ns in points]
        ax.plot(xs, ys, marker=markers.get(structure, "x"), label=structure)
    ax.set_xlabel("sequence length")
    ax.set_ylabel("median seconds" if "build" in experiments
                  else "seconds per group")
    if len({n for pts in med.values() for n, _ in pts}) > 2:
        ax.set_xscale("log")
        ax.set_yscale("log")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    ax.set_title(title or " / ".join(sorted(experiments)))
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
    return path
