#!/usr/bin/env python3
"""Coefficient-asymptotics diagnostics for plotting.

Emits, per family, the CSV table (n, coeff_exact, coeff_asympt, epsilon,
trig_factor) up to a requested order, plus a summary of the root-test
medians against the reciprocal convergence radii.  The epsilon outliers
line up with near-zeros of the oscillatory factor; plot epsilon against
the trig factor to see it.
"""

import argparse
import pathlib
import statistics
import sys

from hwkit.asympt import diagnostic_epsilon, epsilon_csv, exact_family_floats
from hwkit.exact import critical_points

FAMILIES = ("c", "d", "cJ", "dJ", "dF", "dG")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order", type=int, default=100)
    ap.add_argument("--families", nargs="*", default=list(FAMILIES))
    ap.add_argument("--outdir", default="diagnostics")
    args = ap.parse_args(argv)

    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    table = critical_points(1)
    limits = {"c": 1.0 / (1.0 - table.omega[0])}
    for fam in ("d", "dJ", "dF", "dG"):
        limits[fam] = 1.0 / table.rho_x

    for fam in args.families:
        rows = diagnostic_epsilon(fam, args.order)
        path = outdir / f"epsilon_{fam}.csv"
        path.write_text(epsilon_csv(rows))
        msg = f"{fam}: wrote {path}"
        if fam in limits:
            vals = exact_family_floats(fam, args.order)
            lo = max(2, args.order - 20)
            med = statistics.median(abs(vals[n]) ** (1.0 / n)
                                    for n in range(lo, args.order + 1))
            msg += (f"; root-test median over [{lo},{args.order}] = {med:.5f}"
                    f" vs limit {limits[fam]:.5f}"
                    f" (dev {abs(med / limits[fam] - 1):.4f})")
        print(msg)
    return 0


if __name__ == "__main__":
    sys.exit(main())
