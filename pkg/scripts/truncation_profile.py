#!/usr/bin/env python3
"""Truncation-error profiles of the piecewise evaluators.

For each requested truncation order, reports the maximum absolute error
of the series path against the closed-form evaluation over a log grid.
Useful for picking the switch window for a given order (e.g. order 40
holds ~1e-12 inside |log rho| <= 2 but only ~3e-5 out at rho = 20).
"""

import argparse
import sys

import numpy as np

from hwkit.evaluate import truncation_error_profile


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--target", default="F", choices=("F", "G", "JBS"))
    ap.add_argument("--orders", type=int, nargs="*",
                    default=[6, 12, 20, 30, 40])
    ap.add_argument("--rho-min", type=float, default=0.05)
    ap.add_argument("--rho-max", type=float, default=20.0)
    ap.add_argument("--points", type=int, default=60)
    args = ap.parse_args(argv)

    grid = list(np.geomspace(args.rho_min, args.rho_max, args.points))
    domain = (min(grid) * 0.999, max(grid) * 1.001)
    per_order, per_point = truncation_error_profile(
        args.target, args.orders, grid, domain=domain)

    print("order,max_abs_err,argmax_rho")
    for n in args.orders:
        errs = per_point[n]
        rho_star, err_star = max(errs, key=lambda t: t[1])
        print(f"{n},{per_order[n]:.3e},{rho_star:.4f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
