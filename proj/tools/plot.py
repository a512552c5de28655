#!/usr/bin/env python3
"""Plot the CSV files written by `confdiff reproduce <figure>`.

usage: plot.py FIGURE_DIR [-o out.png]
"""
import argparse
import csv
import glob
import os
import re

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def read_csv(path):
    with open(path, newline="") as f:
        return list(csv.DictReader(f))


def trim(rows, n):
    # Summaries are padded to the loop budget; stop a few loops past saturation.
    last = len(rows)
    for i, r in enumerate(rows):
        if float(r["mean"]) >= n - 1e-9:
            last = min(len(rows), i + 5)
            break
    return rows[:last]


def plot_summaries(ax, paths, n):
    for path in paths:
        rows = trim(read_csv(path), n)
        loops = [int(r["loop"]) for r in rows]
        mean = [float(r["mean"]) for r in rows]
        label = os.path.basename(path).replace("_summary.csv", "").replace("summary_", "")
        line, = ax.plot(loops, mean, label=label)
        ax.fill_between(loops, [float(r["p10"]) for r in rows],
                        [float(r["p90"]) for r in rows], color=line.get_color(), alpha=0.15)
    ax.set_xlabel("loop")
    ax.set_ylabel("informed vertices")
    ax.legend()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("figure_dir")
    ap.add_argument("-o", "--out")
    args = ap.parse_args()
    d = args.figure_dir
    out = args.out or os.path.join(d, "plot.png")

    n = 100
    manifest = os.path.join(d, "manifest.ini")
    if os.path.exists(manifest):
        m = re.search(r"^n\s*=\s*(\d+)", open(manifest).read(), re.M)
        if m:
            n = int(m.group(1))

    fig, ax = plt.subplots(figsize=(7, 4.5))
    summaries = sorted(glob.glob(os.path.join(d, "*summary*.csv")),
                       key=lambda p: [int(x) if x.isdigit() else x
                                      for x in re.split(r"(\d+)", p)])
    if summaries:
        plot_summaries(ax, summaries, n)
    elif os.path.exists(os.path.join(d, "degree_histogram.csv")):
        rows = read_csv(os.path.join(d, "degree_histogram.csv"))
        ax.loglog([int(r["degree"]) for r in rows],
                  [float(r["mean_count"]) for r in rows], "o", ms=3)
        ax.set_xlabel("degree")
        ax.set_ylabel("mean vertex count")
    elif os.path.exists(os.path.join(d, "matrix_average.csv")):
        rows = read_csv(os.path.join(d, "matrix_average.csv"))
        for fam in sorted({r["family"] for r in rows}):
            sel = [r for r in rows if r["family"] == fam]
            ax.semilogx([int(r["n"]) for r in sel],
                        [float(r["mean_weight"]) for r in sel], "o-", label=fam)
        ax.axhline(0.5, color="grey", lw=0.8)
        ax.set_xlabel("n")
        ax.set_ylabel("mean off-diagonal weight")
        ax.legend()
    else:
        raise SystemExit(f"nothing to plot in {d}")

    ax.set_title(os.path.basename(os.path.normpath(d)))
    fig.tight_layout()
    fig.savefig(out, dpi=120)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
