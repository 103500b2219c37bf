#!/usr/bin/env python3
"""Second-order limits on the two cusped domains.

Deltoid: real-interval sweep of lam^(5/2) e^(-3 lam) I(lam) against
C2 = sqrt(pi/12) k^2 (q-1) u(3,0); the gap halves per doubling of lam.

Cardioid: contour sweep of lam^(5/2) I(lam).  The scaled integral does not
approach 3i sqrt(pi/2) k^2 (q-1); it decays exponentially, and this script
also fits the decay rate in log|resid| = log A - c lam.
Usage:
    python scripts/cusp_c2_sweeps.py --out artifacts/cusps
"""

import argparse
import math
import os

import numpy as np

from nonscatter.curves import builtin
from nonscatter.quad import lambda_sweep, sweep_to_csv
from nonscatter.saddle import build_contour, find_saddles, level_region
from nonscatter.waves import PlaneWave, value as wave_value


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="artifacts/cusps")
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)

    wave = PlaneWave(k=1.0, alpha=0.0)
    q = 2.0
    grid = [10.0, 20.0, 40.0, 80.0, 160.0, 320.0]

    deltoid = builtin("deltoid")
    sp_d = find_saddles(deltoid)[0]
    recs = lambda_sweep(deltoid, wave, q, grid, 2.5, sp_d.g0, None)
    with open(os.path.join(args.out, "deltoid.csv"), "w") as fh:
        fh.write(sweep_to_csv(recs))
    C2_d = math.sqrt(math.pi / 12) * (q - 1.0) * wave_value(wave, (3.0, 0.0))
    print("deltoid (outward cusp), real-interval quadrature")
    print(f"{'lam':>8}  {'|resid/C2 - 1|':>16}")
    for r in recs:
        print(f"{r.lam:8.1f}  {abs(r.resid / C2_d - 1.0):16.6f}")

    cardioid = builtin("cardioid")
    sp_c = find_saddles(cardioid)[0]
    path = build_contour(cardioid, sp_c, level_region(cardioid, sp_c))
    recs = lambda_sweep(cardioid, wave, q, grid, 2.5, sp_c.g0, path)
    with open(os.path.join(args.out, "cardioid.csv"), "w") as fh:
        fh.write(sweep_to_csv(recs))
    C2_c = 3j * math.sqrt(math.pi / 2) * (q - 1.0)
    print("cardioid (inward cusp), descent-contour quadrature")
    print(f"{'lam':>8}  {'|resid|':>12}  {'|resid/C2|':>12}")
    for r in recs:
        print(f"{r.lam:8.1f}  {abs(r.resid):12.4e}  {abs(r.resid / C2_c):12.4e}")
    lams = np.array([r.lam for r in recs])
    mags = np.array([abs(r.resid) for r in recs])
    print("local decay rate -dlog|resid|/dlam:")
    for i in range(1, len(recs)):
        if mags[i] < mags[i - 1] and mags[i] > 1e-8:  # stay above the quadrature floor
            rate = -math.log(mags[i] / mags[i - 1]) / (lams[i] - lams[i - 1])
            print(f"  [{lams[i - 1]:6.0f}, {lams[i]:6.0f}]  {rate:.4f}")
    print("rate grows with lam: decay beats every power, no finite C2 limit")


if __name__ == "__main__":
    main()
