#!/usr/bin/env python3
"""Render an entclass scan CSV as a colored region diagram.

Usage:
    plot_regions.py <scan.csv> <out.png>

Every grid point of the (alpha, beta) simplex gets exactly one label by
precedence I > II > III > PPT > none:

    I    the single-flip witness fires (viol_In)
    II   the double-branch witness fires (viol_I2)
    III  genuine multipartite entanglement detected (viol_GME)
    PPT  positive partial transpose for both inequivalent cuts
    none nothing detected

Reads only the CSV written by ``entclass scan``; no other coupling to
the library.
"""

import csv
import sys

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.lines import Line2D

REQUIRED_COLUMNS = (
    "alpha",
    "beta",
    "viol_In",
    "viol_I2",
    "viol_InM1",
    "viol_GME",
    "ppt_1v3",
    "ppt_2v2",
)

# label -> (color, legend text), in precedence order
REGION_STYLE = {
    "I": ("#d62728", "I: outside the single-flip family"),
    "II": ("#2ca02c", "II: outside the double-branch family"),
    "III": ("#7f7f7f", "III: genuinely multipartite entangled"),
    "PPT": ("#1f77b4", "PPT: positive partial transpose, both cuts"),
}
NONE_COLOR = "#f2f2f2"

FIG_SIZE = (6.0, 5.0)
DPI = 150


def load_rows(path):
    """Parse the scan CSV; raises ValueError when columns are missing."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [c for c in REQUIRED_COLUMNS if c not in header]
        if missing:
            raise ValueError(f"{path} is missing required columns: {', '.join(missing)}")
        rows = []
        for record in reader:
            rows.append(
                {
                    "alpha": float(record["alpha"]),
                    "beta": float(record["beta"]),
                    "viol_In": record["viol_In"] == "1",
                    "viol_I2": record["viol_I2"] == "1",
                    "viol_GME": record["viol_GME"] == "1",
                    "ppt_both": record["ppt_1v3"] == "1" and record["ppt_2v2"] == "1",
                }
            )
    return rows


def label_row(row):
    """Dominant region label of one grid point, or None."""
    if row["viol_In"]:
        return "I"
    if row["viol_I2"]:
        return "II"
    if row["viol_GME"]:
        return "III"
    if row["ppt_both"]:
        return "PPT"
    return None


def assign_labels(rows):
    return [label_row(row) for row in rows]


def build_figure(rows):
    """Assemble the figure; returns (fig, ax) for inspection or saving."""
    labels = assign_labels(rows)
    fig, ax = plt.subplots(figsize=FIG_SIZE)

    if rows:
        # marker area tracks the grid pitch so tiles touch at any step
        alphas = sorted({row["alpha"] for row in rows})
        pitch = min(
            (b - a for a, b in zip(alphas, alphas[1:]) if b > a), default=0.05
        )
        points_per_unit = ax.get_window_extent(
            fig.canvas.get_renderer()
        ).width / fig.dpi * 72.0
        size = max((pitch * points_per_unit / 1.0) ** 2 * 1.9, 4.0)
        for label in list(REGION_STYLE) + [None]:
            xs = [r["alpha"] for r, l in zip(rows, labels) if l == label]
            ys = [r["beta"] for r, l in zip(rows, labels) if l == label]
            if not xs:
                continue
            color = REGION_STYLE[label][0] if label else NONE_COLOR
            ax.scatter(xs, ys, c=color, s=size, marker="s", linewidths=0)

    # simplex boundary
    ax.plot([0, 1, 0, 0], [0, 0, 1, 0], color="black", linewidth=0.8)
    ax.set_xlim(-0.02, 1.02)
    ax.set_ylim(-0.02, 1.02)
    ax.set_xlabel("alpha (GHZ-type weight)")
    ax.set_ylabel("beta (W-type weight)")
    ax.set_title("Detected entanglement regions over the noise plane")
    handles = [
        Line2D(
            [], [], marker="s", linestyle="", color=color, label=text, markersize=9
        )
        for color, text in REGION_STYLE.values()
    ]
    ax.legend(handles=handles, loc="upper right", fontsize=8, framealpha=0.9)
    return fig, ax


def render(csv_path, out_path):
    rows = load_rows(csv_path)
    fig, _ = build_figure(rows)
    fig.savefig(out_path, dpi=DPI)
    plt.close(fig)


def main(argv):
    if len(argv) != 3:
        print("usage: plot_regions.py <scan.csv> <out.png>", file=sys.stderr)
        return 2
    try:
        render(argv[1], argv[2])
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
