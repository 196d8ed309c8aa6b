"""CSV and metadata emitters. Files are byte-deterministic per run config."""
import json

import numpy as np

from .gas import conserved_to_primitive, entropy_density, sound_speed


def _fmt(v):
    return f"{float(v):.17g}"


def write_line_csv(fld, gas, path):
    """1D field as `x,rho,u,p,e,mach,entropy`, one row per cell."""
    x = fld.grid.centers()
    w = conserved_to_primitive(fld.interior(), gas)
    rho, u, p = w
    e = p / ((gas.gamma - 1.0) * rho)
    mach = np.abs(u) / sound_speed(w, gas)
    ent = entropy_density(w, gas)
    with open(path, "w", newline="\n") as f:
        f.write("x,rho,u,p,e,mach,entropy\n")
        for row in zip(x, rho, u, p, e, mach, ent):
            f.write(",".join(_fmt(v) for v in row) + "\n")


def write_oracle_csv(sol, x, t, x0, path):
    """Sampled exact Riemann solution as `x,rho,u,p`."""
    if t > 0.0:
        w = sol.sample((np.asarray(x) - x0) / t)
    else:
        w = np.where(np.asarray(x)[None, :] < x0,
                     np.asarray(sol.w_L)[:, None], np.asarray(sol.w_R)[:, None])
    with open(path, "w", newline="\n") as f:
        f.write("x,rho,u,p\n")
        for row in zip(x, *w):
            f.write(",".join(_fmt(v) for v in row) + "\n")


def write_field_csv(fld, gas, path, meta_path=None, case=None, scheme=None):
    """2D field as `i,j,xc,yc,rho,u,v,p,mach` over non-blanked cells.

    The sidecar metadata file is flat key=value text carrying grid
    dimensions, case/scheme identifiers, the final time and the case's
    contour hints (caption notation start:step:end plus a normalized
    start:end:step form).
    """
    grid = fld.grid
    ni, nj = grid.shape
    U = fld.interior()
    w = conserved_to_primitive(U, gas)
    rho, u, v, p = w
    mach = np.sqrt(u**2 + v**2) / np.sqrt(gas.gamma * p / rho)
    live = ~grid.blank
    ii, jj = np.nonzero(live)
    with open(path, "w", newline="\n") as f:
        f.write("i,j,xc,yc,rho,u,v,p,mach\n")
        for i, j in zip(ii, jj):
            row = (i, j, grid.xc[i, j], grid.yc[i, j], rho[i, j], u[i, j],
                   v[i, j], p[i, j], mach[i, j])
            f.write(f"{i},{j}," + ",".join(_fmt(x) for x in row[2:]) + "\n")
    if meta_path is not None:
        lines = [f"ni={ni}", f"nj={nj}", f"time={_fmt(fld.t)}",
                 f"steps={fld.n_step}"]
        if case is not None:
            lines.append(f"case={case.name}")
            for var, (start, end, step) in sorted(case.contour_hints.items()):
                lines.append(f"contour_{var}={start}:{step}:{end}")
                lines.append(f"contour_{var}_normalized={start}:{end}:{step}")
        if scheme is not None:
            lines.append(f"scheme={scheme.value}")
        with open(meta_path, "w", newline="\n") as f:
            f.write("\n".join(lines) + "\n")


def write_history(hist, path):
    """Per-step diagnostics CSV."""
    cols = ("step", "t", "dt", "residual", "total_mass", "total_momentum_x",
            "total_energy", "total_entropy", "min_rho", "min_p")
    with open(path, "w", newline="\n") as f:
        f.write(",".join(cols) + "\n")
        for k in range(len(hist.step)):
            vals = [hist.step[k]] + [
                _fmt(getattr(hist, c)[k]) for c in cols[1:]
            ]
            f.write(",".join(str(v) for v in vals) + "\n")


def write_summary(path, **fields):
    """Machine-readable run summary (sorted-key JSON for determinism)."""
    with open(path, "w", newline="\n") as f:
        json.dump(fields, f, indent=2, sort_keys=True)
        f.write("\n")
