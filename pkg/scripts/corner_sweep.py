#!/usr/bin/env python3
"""Inverse-square law at a corner.

For the wedge of half-angle theta the boundary integral over the two legs
obeys lam^2 I(lam) -> C = (2m/(1+m^2)) k^2 (q-1) u(0), m = tan theta.
Usage:
    python scripts/corner_sweep.py --out artifacts/corner
"""

import argparse
import math
import os

from nonscatter.asymptotics import corner_constants
from nonscatter.curves import CornerDomain
from nonscatter.quad import boundary_integral_I
from nonscatter.waves import PlaneWave


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="artifacts/corner")
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)

    wave = PlaneWave(k=1.0, alpha=0.0)
    q = 2.0
    lines = ["theta,lambda,re_scaled,im_scaled,re_C,im_C,rel_gap"]
    for theta in (math.pi / 6, math.pi / 4, math.pi / 3):
        dom = CornerDomain(theta=theta, a1=-1.0, a2=-1.0)
        C = corner_constants(dom, wave, 1.0, q).C
        print(f"theta = {theta:.6f}  C = {C:.12g}")
        print(f"{'lam':>8}  {'|lam^2 I / C - 1|':>18}")
        for lam in (20.0, 40.0, 60.0, 80.0, 120.0):
            val = lam * lam * boundary_integral_I(dom, wave, q, lam)
            gap = abs(val / C - 1.0)
            print(f"{lam:8.1f}  {gap:18.6f}")
            lines.append(
                f"{theta!r},{lam!r},{val.real!r},{val.imag!r},{C.real!r},{C.imag!r},{gap!r}"
            )
    with open(os.path.join(args.out, "corner.csv"), "w") as fh:
        fh.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
