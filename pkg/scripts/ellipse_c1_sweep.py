#!/usr/bin/env python3
"""First-order limit on the 2:1 ellipse.

Sweeps resid(lam) = lam^(3/2) e^(-lam sqrt3) I(lam) along the validated
descent contour and tabulates the relative gap to the predicted constant C1.
Usage:
    python scripts/ellipse_c1_sweep.py --out artifacts/ellipse
"""

import argparse
import os

from nonscatter.asymptotics import asym_report
from nonscatter.curves import builtin
from nonscatter.quad import fit_decay, lambda_sweep, sweep_to_csv
from nonscatter.saddle import build_contour, find_saddles, level_region
from nonscatter.waves import PlaneWave


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="artifacts/ellipse")
    ap.add_argument("--lam-max", type=float, default=320.0)
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)

    curve = builtin("ellipse", 2.0, 1.0)
    wave = PlaneWave(k=1.0, alpha=0.0)
    q = 2.0
    sp = find_saddles(curve)[0]
    path = build_contour(curve, sp, level_region(curve, sp))
    rep = asym_report(curve, wave, q, sp, path)
    print(f"verdict {rep.verdict}  C1 = {rep.C1:.12g}")

    grid = []
    lam = 10.0
    while lam <= args.lam_max:
        grid.append(lam)
        lam *= 2.0
    recs = lambda_sweep(curve, wave, q, grid, 1.5, sp.g0, path)
    with open(os.path.join(args.out, "sweep.csv"), "w") as fh:
        fh.write(sweep_to_csv(recs))

    print(f"{'lam':>8}  {'|resid/C1 - 1|':>16}")
    for r in recs:
        print(f"{r.lam:8.1f}  {abs(r.resid / rep.C1 - 1.0):16.6f}")
    fit = fit_decay(recs)
    print(f"tail fit: limit {fit.limit:.12g}  correction order {fit.order:.3f}")
    print(f"limit vs C1 relative gap {abs(fit.limit / rep.C1 - 1.0):.2e}")


if __name__ == "__main__":
    main()
