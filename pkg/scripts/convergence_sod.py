#!/usr/bin/env python3
"""Grid-refinement study on the modified Sod tube.

Prints the L1 density error and per-level refinement ratios for each
scheme at order 1.
"""
import argparse

from movers import cases
from movers.gas import GasModel, conserved_to_primitive
from movers.riemann import exact_riemann, l1_error
from movers.schemes import Scheme, SwitchParams
from movers.solver1d import TimeControls, run


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--grids", default="100,200,400")
    ap.add_argument("--cfl", type=float, default=0.8)
    args = ap.parse_args()
    sizes = [int(s) for s in args.grids.split(",")]

    gas = GasModel()
    sw = SwitchParams()
    case = cases.lookup("sod-modified-sonic")
    sol = exact_riemann(*case.left_right, gas)

    for scheme in Scheme:
        errs = []
        for n in sizes:
            grid = cases.build_grid_1d(case, n)
            fld, _ = run(grid, case.ic, scheme,
                         TimeControls(cfl=args.cfl, t_final=case.t_final),
                         order=1, gas=gas, sw=sw, bcs=case.bc_1d)
            w = conserved_to_primitive(fld.interior(), gas)
            errs.append(l1_error(grid.centers(), w, sol, fld.t,
                                 case.x0)["rho"])
        ratios = [errs[k] / errs[k + 1] for k in range(len(errs) - 1)]
        cells = ",".join(f"{e:.4e}" for e in errs)
        rtxt = ",".join(f"{r:.3f}" for r in ratios)
        print(f"{scheme.value:<12} errors [{cells}]  ratios [{rtxt}]")


if __name__ == "__main__":
    main()
