#!/usr/bin/env python3
"""Level-set figures for the saddle-bearing builtin domains.

For each domain: locate the dominant saddle, rasterize Re g(r+is) near the
strip, build the descent contour, and emit an SVG with the admissible-level
line and the contour overlaid.
Usage:
    python scripts/levelset_figures.py --out artifacts/levels
"""

import argparse
import os

from nonscatter.curves import builtin
from nonscatter.saddle import build_contour, find_saddles, grid_to_svg, level_region, validate_contour

DOMAINS = (("ellipse", (2.0, 1.0)), ("cardioid", ()), ("deltoid", ()), ("nonconvex", ()))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="artifacts/levels")
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)

    for name, params in DOMAINS:
        curve = builtin(name, *params)
        sp = find_saddles(curve)[0]
        grid = level_region(curve, sp)
        path = build_contour(curve, sp, grid)
        rep = validate_contour(curve, path)
        svg = grid_to_svg(grid, path)
        dest = os.path.join(args.out, f"{name}.svg")
        with open(dest, "w") as fh:
            fh.write(svg)
        print(
            f"{name:10s} t0 = {sp.t0:.6f}  margin {path.margin:.4f}  "
            f"max excess {rep.max_excess:.4f}  -> {dest}"
        )


if __name__ == "__main__":
    main()
