"""Command-line plotters for the solver's CSV outputs.

plot-line <csv> --var rho [--oracle <csv>] --out <img>
plot-contours <csv> --var mach --levels 2.0:3.0:0.05 --out <img>

Exit codes: 0 on success, 1 on missing/invalid input, 2 on usage errors.
"""
import argparse
import csv
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .levels import parse_levels  # noqa: E402


def _read_csv(path):
    """Columns of a headered CSV as a dict of float arrays."""
    with open(path, newline="") as f:
        reader = csv.reader(f)
        header = next(reader)
        rows = [[float(v) for v in row] for row in reader if row]
    data = np.asarray(rows)
    return {name: data[:, k] for k, name in enumerate(header)}


def main_line(argv=None):
    parser = argparse.ArgumentParser(
        prog="plot-line", description="1D line plot of a solver CSV")
    parser.add_argument("csv", help="line CSV (x,rho,u,p,...)")
    parser.add_argument("--var", default="rho")
    parser.add_argument("--oracle", default=None,
                        help="exact-solution CSV to overlay")
    parser.add_argument("--out", required=True)
    args = parser.parse_args(argv)

    try:
        cols = _read_csv(args.csv)
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    if args.var not in cols:
        print(f"error: column {args.var!r} not in {sorted(cols)}",
              file=sys.stderr)
        return 1

    fig, ax = plt.subplots(figsize=(6, 4))
    if args.oracle is not None:
        try:
            oracle = _read_csv(args.oracle)
        except OSError as err:
            print(f"error: {err}", file=sys.stderr)
            return 1
        if args.var in oracle:
            ax.plot(oracle["x"], oracle[args.var], "-", color="0.3", lw=1.0,
                    label="exact")
    ax.plot(cols["x"], cols[args.var], "o", ms=3, mfc="none", label="computed")
    ax.set_xlabel("x")
    ax.set_ylabel(args.var)
    ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(args.out, dpi=150)
    plt.close(fig)
    return 0


def _field_grids(cols):
    """Reshape sparse (i,j) rows into dense masked (ni, nj) arrays."""
    ii = cols["i"].astype(int)
    jj = cols["j"].astype(int)
    ni, nj = ii.max() + 1, jj.max() + 1
    grids = {}
    for name, vals in cols.items():
        if name in ("i", "j"):
            continue
        dense = np.full((ni, nj), np.nan)
        dense[ii, jj] = vals
        grids[name] = np.ma.masked_invalid(dense)
    # blanked cells leave holes in the coordinate arrays; contouring needs
    # full X/Y, and the blanked geometries are grid-line-aligned, so fill
    # from the per-line means
    for name, axis in (("xc", 1), ("yc", 0)):
        dense = grids[name].filled(np.nan)
        line = np.nanmean(dense, axis=axis, keepdims=True)
        hole = np.isnan(dense)
        dense[hole] = np.broadcast_to(line, dense.shape)[hole]
        grids[name] = dense
    return grids


def main_contours(argv=None):
    parser = argparse.ArgumentParser(
        prog="plot-contours", description="2D contour plot of a field CSV")
    parser.add_argument("csv", help="field CSV (i,j,xc,yc,rho,u,v,p,mach)")
    parser.add_argument("--var", default="mach")
    parser.add_argument("--levels", required=True,
                        help="start:end:step contour levels")
    parser.add_argument("--out", required=True)
    args = parser.parse_args(argv)

    try:
        levels = parse_levels(args.levels)
    except ValueError as err:
        parser.error(str(err))
    try:
        cols = _read_csv(args.csv)
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    if args.var not in cols:
        print(f"error: column {args.var!r} not in {sorted(cols)}",
              file=sys.stderr)
        return 1

    grids = _field_grids(cols)
    fig, ax = plt.subplots(figsize=(7, 5))
    ax.contour(grids["xc"], grids["yc"], grids[args.var], levels=levels,
               colors="k", linewidths=0.6)
    ax.set_aspect("equal")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_title(f"{args.var} ({args.levels})")
    fig.tight_layout()
    fig.savefig(args.out, dpi=150)
    plt.close(fig)
    return 0


if __name__ == "__main__":
    sys.exit(main_line())
