#!/usr/bin/env python3
"""Sweep the asymmetry parameter and tabulate the clone trade-off.

Writes the same CSV layout as `cvcloner sweep --asym`, plus a quick textual
summary of the fidelity trade-off endpoints.  Useful as a starting point for
plotting F_a against F_c.

    python3 scripts/gamma_sweep.py --start -2 --stop 2 --steps 81 -o sweep.csv
"""

import argparse
import sys

import numpy as np

from cvcloner.analysis import clone_report
from cvcloner.circuits import AsymSpec, asym_params


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--start", type=float, default=-2.0)
    parser.add_argument("--stop", type=float, default=2.0)
    parser.add_argument("--steps", type=int, default=81)
    parser.add_argument("-o", "--output", default=None,
                        help="CSV destination (default: standard output)")
    args = parser.parse_args()
    if args.steps < 1 or args.stop < args.start:
        parser.error("need steps >= 1 and stop >= start")

    lines = ["gamma,u,v,w,n_chaotic_1,n_chaotic_2,fidelity_1,fidelity_2,noise_product"]
    grid = np.linspace(args.start, args.stop, args.steps)
    for g in grid:
        p = asym_params(float(g))
        r1, r2 = clone_report(AsymSpec(float(g)))
        cells = [g, p.u, p.v, p.w, r1.n_chaotic, r2.n_chaotic,
                 r1.fidelity, r2.fidelity, r1.n_chaotic * r2.n_chaotic]
        lines.append(",".join(f"{c:.10g}" for c in cells))
    text = "\n".join(lines) + "\n"

    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    lo, hi = clone_report(AsymSpec(float(grid[0]))), clone_report(AsymSpec(float(grid[-1])))
    print(f"# gamma={grid[0]:+.3f}: F_1={lo[0].fidelity:.6f} F_2={lo[1].fidelity:.6f}",
          file=sys.stderr)
    print(f"# gamma={grid[-1]:+.3f}: F_1={hi[0].fidelity:.6f} F_2={hi[1].fidelity:.6f}",
          file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
