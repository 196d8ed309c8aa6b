"""Command-line driver: run benchmark cases and emit CSV outputs.

Subcommands:
  run    advance one case with one scheme, write field/history/summary files
  list   print the case registry
  sweep  run one case over a list of grid sizes for convergence tables

Exit codes: 0 success, 1 runtime failure (positivity loss), 2 usage error.
"""
import argparse
import sys
from pathlib import Path

import numpy as np

from . import cases as case_registry
from . import io as out
from .errors import PositivityError
from .gas import GasModel
from .riemann import exact_riemann, l1_error
from .schemes import Scheme, SwitchParams
from .solver1d import TimeControls, run
from .solver2d import run_2d
from .gas import conserved_to_primitive


def _parse_scheme(text):
    try:
        return Scheme(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown scheme {text!r}; choose from "
            + ", ".join(s.value for s in Scheme))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="movers",
        description="Finite-volume central solvers for the Euler equations")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one case")
    _add_run_flags(p_run)

    sub.add_parser("list", help="list registered cases")

    p_sweep = sub.add_parser("sweep", help="grid-refinement sweep of one case")
    _add_run_flags(p_sweep)
    p_sweep.add_argument("--grids", required=True,
                         help="comma-separated cell counts, e.g. 100,200,400")
    return parser


def _add_run_flags(p):
    p.add_argument("--case", required=True)
    p.add_argument("--scheme", type=_parse_scheme, default=Scheme.MOVERS_LE)
    p.add_argument("--order", type=int, choices=(1, 2), default=1)
    p.add_argument("--nx", type=int, default=None)
    p.add_argument("--ny", type=int, default=None)
    p.add_argument("--cfl", type=float, default=None)
    p.add_argument("--tfinal", type=float, default=None)
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--out", default="out")
    p.add_argument("--eps0", type=float, default=1e-8)
    p.add_argument("--delta0", type=float, default=1e-6)


def _controls(case, args, dim):
    cfl = args.cfl
    if cfl is None:
        cfl = case.cfl if case.cfl is not None else (0.8 if dim == 1 else 0.4)
    t_final = args.tfinal if args.tfinal is not None else case.t_final
    ctl = TimeControls(cfl=cfl, t_final=t_final)
    if args.max_steps is not None:
        ctl.max_steps = args.max_steps
    if case.steady:
        ctl.steady_tol = 1e-12
        ctl.steady_drop = case.steady_drop
    return ctl


def _run_single(case, args, outdir, tag=""):
    gas = GasModel()
    sw = SwitchParams(eps0=args.eps0, delta0=args.delta0)
    outdir.mkdir(parents=True, exist_ok=True)
    stem = f"{case.name}_{args.scheme.value}_o{args.order}{tag}"

    if case.dim == 1:
        grid = case_registry.build_grid_1d(case, args.nx)
        controls = _controls(case, args, 1)
        fld, hist = run(grid, case.ic, args.scheme, controls,
                        order=args.order, gas=gas, sw=sw, bcs=case.bc_1d,
                        cfl_ramp_steps=case.cfl_ramp_steps)
        out.write_line_csv(fld, gas, outdir / f"{stem}.csv")
        summary = dict(case=case.name, scheme=args.scheme.value,
                       order=args.order, n_cells=grid.n_cells,
                       t=fld.t, steps=fld.n_step,
                       min_rho=float(np.min(fld.interior()[0])))
        if case.left_right is not None:
            sol = exact_riemann(*case.left_right, gas)
            out.write_oracle_csv(sol, grid.centers(), fld.t, case.x0,
                                 outdir / f"{stem}_oracle.csv")
            if fld.t > 0.0:
                w = conserved_to_primitive(fld.interior(), gas)
                err = l1_error(grid.centers(), w, sol, fld.t, case.x0)
                summary["l1_error"] = {k: float(v) for k, v in err.items()}
    else:
        grid = case_registry.build_grid_2d(case, args.nx, args.ny)
        controls = _controls(case, args, 2)
        fld, hist = run_2d(grid, case.ic, args.scheme, controls, case.bc_2d,
                           order=args.order, gas=gas, sw=sw,
                           cfl_ramp_steps=case.cfl_ramp_steps,
                           coeff_freeze_step=case.coeff_freeze_step)
        out.write_field_csv(fld, gas, outdir / f"{stem}_field.csv",
                            outdir / f"{stem}_meta.txt", case, args.scheme)
        summary = dict(case=case.name, scheme=args.scheme.value,
                       order=args.order, shape=list(grid.shape),
                       t=fld.t, steps=fld.n_step,
                       min_rho=hist.min_rho[-1] if hist.min_rho else None,
                       min_p=hist.min_p[-1] if hist.min_p else None)

    out.write_history(hist, outdir / f"{stem}_history.csv")
    out.write_summary(outdir / f"{stem}_summary.json", **summary)
    return summary


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "list":
        for name in case_registry.registry():
            print(name)
        return 0

    try:
        case = case_registry.lookup(args.case)
    except KeyError as err:
        parser.error(str(err))

    try:
        if args.command == "run":
            summary = _run_single(case, args, Path(args.out))
            print(f"{case.name}: done at t={summary['t']:.6g} "
                  f"after {summary['steps']} steps")
        else:  # sweep
            sizes = [int(s) for s in args.grids.split(",")]
            for n in sizes:
                args.nx = n
                sub = Path(args.out) / f"n{n}"
                summary = _run_single(case, args, sub, tag=f"_n{n}")
                err = summary.get("l1_error", {}).get("rho")
                msg = f"  n={n}: steps={summary['steps']}"
                if err is not None:
                    msg += f" L1(rho)={err:.6e}"
                print(msg)
    except PositivityError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
