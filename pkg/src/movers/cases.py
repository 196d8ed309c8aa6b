"""Registry of benchmark cases: ICs, grids, boundary conditions, defaults.

1D shock-tube data follow the standard Toro suite; 2D geometries and
free-stream values are stored here as configuration defaults. Case names
are the CLI contract.
"""
from dataclasses import dataclass, field

import numpy as np

from .gas import GasModel
from .grid2d import make_grid
from .riemann import moving_shock_state, normal_shock_from_mach, oblique_shock_state
from .solver1d import BoundaryCondition, Grid1D
from .solver2d import BC2D

GAS = GasModel()


@dataclass(frozen=True)
class CaseSpec:
    name: str
    dim: int
    ic: object  # callable: x -> (3,n) primitives in 1D, (x,y) -> (4,...) in 2D
    t_final: float | None
    steady: bool = False
    # 1D
    x_span: tuple = (0.0, 1.0)
    n_cells: int = 100
    bc_1d: tuple = ()
    x0: float | None = None  # initial discontinuity, for oracle overlays
    left_right: tuple | None = None  # primitive pair for Riemann oracle
    # 2D
    grid_kind: str | None = None
    grid_params: dict = field(default_factory=dict)
    bc_2d: dict = field(default_factory=dict)
    steady_drop: float | None = None
    cfl: float | None = None  # override of the dimensional default
    cfl_ramp_steps: int = 0
    coeff_freeze_step: int = 0  # freeze diffusion coefficients at this step
    contour_hints: dict = field(default_factory=dict)  # var -> (start, end, step)


def _riemann_ic(w_L, w_R, x0):
    w_L = np.asarray(w_L, float)
    w_R = np.asarray(w_R, float)

    def ic(x):
        return np.where(x[None, :] < x0, w_L[:, None], w_R[:, None])

    return ic


def _tube(name, w_L, w_R, x0, t_final, bc=None, n_cells=100, cfl_ramp_steps=0):
    if bc is None:
        bc = (BoundaryCondition.transmissive(), BoundaryCondition.transmissive())
    return CaseSpec(
        name=name, dim=1, ic=_riemann_ic(w_L, w_R, x0), t_final=t_final,
        n_cells=n_cells, bc_1d=bc, x0=x0, left_right=(np.asarray(w_L, float),
                                                      np.asarray(w_R, float)),
        cfl_ramp_steps=cfl_ramp_steps,
    )


def _steady_shock_pair(mach=2.0, gas=GAS):
    a1 = np.sqrt(gas.gamma)  # upstream (1, M*a1, 1)
    up = np.array([1.0, mach * a1, 1.0])
    down = normal_shock_from_mach(mach, up, gas)
    return up, down


def _uniform_ic(w):
    w = np.asarray(w, float)

    def ic(x, y):
        return np.broadcast_to(
            w.reshape((4,) + (1,) * np.ndim(x)), (4,) + np.shape(x)
        ).copy()

    return ic


def _slip_flow_ic(x, y):
    w = np.empty((4,) + np.shape(x))
    w[0] = 1.4
    w[1] = np.where(y > 0.5, 3.0, 2.0)
    w[2] = 0.0
    w[3] = 1.0
    return w


# oblique-shock reflection: inflow and the imposed post-shock top state
OBLIQUE_INFLOW = np.array([1.0, 2.9, 0.0, 1.0 / 1.4])
OBLIQUE_TOP = np.array([1.69997, 2.61934, -0.50633, 1.52819])

# shock diffraction: planar shock of this Mach number moving into still gas
DIFFRACTION_MACH = 5.09


def _diffraction_post_state(gas=GAS):
    ahead = np.array([1.4, 0.0, 1.0])
    rho, u, p = moving_shock_state(DIFFRACTION_MACH, ahead, gas)
    return np.array([rho, u, 0.0, p])


def _diffraction_ic(x, y):
    post = _diffraction_post_state()
    quiet = np.array([1.4, 0.0, 0.0, 1.0])
    return np.where(x[None] < 0.5, post[:, None, None], quiet[:, None, None])


def _cylinder_ic(mach):
    a = np.sqrt(GAS.gamma * 1.0 / 1.4)  # rho=1.4, p=1 -> a=1
    return _uniform_ic([1.4, mach * a, 0.0, 1.0])


def _build_registry():
    cases = {}

    contact_L = np.array([1.0, 0.0, 1.0])
    contact_R = np.array([1.4, 0.0, 1.0])
    cases["steady-contact"] = _tube("steady-contact", contact_L, contact_R,
                                    x0=0.5, t_final=2.0)

    shock_up, shock_down = _steady_shock_pair()
    cases["steady-shock"] = _tube(
        "steady-shock", shock_up, shock_down, x0=0.5, t_final=2.0,
        bc=(BoundaryCondition.inflow(shock_up), BoundaryCondition.transmissive()),
    )

    cases["sod-modified-sonic"] = _tube(
        "sod-modified-sonic", [1.0, 0.75, 1.0], [0.125, 0.0, 0.1],
        x0=0.3, t_final=0.2)
    cases["strong-shock"] = _tube(
        "strong-shock", [1.0, 0.0, 1000.0], [1.0, 0.0, 0.01],
        x0=0.5, t_final=0.012, cfl_ramp_steps=50)
    cases["strong-discontinuities"] = _tube(
        "strong-discontinuities", [5.99924, 19.5975, 460.894],
        [5.99242, -6.19633, 46.0950], x0=0.4, t_final=0.035)
    cases["slow-contact"] = _tube(
        "slow-contact", [1.0, -19.59745, 1000.0], [1.0, -19.59745, 0.01],
        x0=0.8, t_final=0.012)

    cases["slip-flow"] = CaseSpec(
        name="slip-flow", dim=2, ic=_slip_flow_ic, t_final=None, steady=True,
        grid_kind="cartesian",
        grid_params=dict(x_min=0.0, x_max=1.0, y_min=0.0, y_max=1.0,
                         ni=40, nj=40),
        bc_2d={
            "imin": BC2D.inflow(lambda x, y: _slip_flow_ic(x, y)),
            "imax": BC2D.extrapolation(),
            "jmin": BC2D.extrapolation(),
            "jmax": BC2D.extrapolation(),
        },
        steady_drop=None,
        contour_hints={"mach": (2.0, 3.0, 0.05)},
    )

    cases["oblique-reflection"] = CaseSpec(
        name="oblique-reflection", dim=2, ic=_uniform_ic(OBLIQUE_INFLOW),
        t_final=None, steady=True,
        grid_kind="cartesian",
        grid_params=dict(x_min=0.0, x_max=4.0, y_min=0.0, y_max=1.0,
                         ni=240, nj=80),
        bc_2d={
            "imin": BC2D.inflow(OBLIQUE_INFLOW),
            "imax": BC2D.extrapolation(),
            "jmin": BC2D.wall(),
            "jmax": BC2D.inflow(OBLIQUE_TOP),
        },
        steady_drop=1e-6,
        # past the initial transient the captured incident shock feeds a
        # small coefficient limit cycle; freezing breaks it
        coeff_freeze_step=7000,
        contour_hints={"p": (0.7, 2.9, 0.1)},
    )

    cases["ramp-channel"] = CaseSpec(
        name="ramp-channel", dim=2,
        ic=_uniform_ic([1.0, 2.0, 0.0, 1.0 / 1.4]),  # Mach 2, a=1
        t_final=None, steady=True,
        grid_kind="ramp", grid_params=dict(ni=120, nj=40),
        bc_2d={
            "imin": BC2D.inflow([1.0, 2.0, 0.0, 1.0 / 1.4]),
            "imax": BC2D.extrapolation(),
            "jmin": BC2D.wall(),
            "jmax": BC2D.wall(),
        },
        steady_drop=1e-4,
        contour_hints={"p": (0.7, 2.9, 0.1)},
    )

    for mach in (6, 20):
        cases[f"half-cylinder-m{mach}"] = CaseSpec(
            name=f"half-cylinder-m{mach}", dim=2, ic=_cylinder_ic(mach),
            t_final=None, steady=True,
            grid_kind="polar", grid_params=dict(ni=45, nj=45),
            bc_2d={
                "imin": BC2D.extrapolation(),
                "imax": BC2D.extrapolation(),
                "jmin": BC2D.wall(),  # cylinder surface
                "jmax": BC2D.inflow(
                    [1.4, mach * np.sqrt(GAS.gamma / 1.4), 0.0, 1.0]),
            },
            steady_drop=1e-3,
            cfl=0.4, cfl_ramp_steps=300,
            contour_hints={"rho": (2.0, 5.0, 0.2)},
        )

    cases["forward-step"] = CaseSpec(
        name="forward-step", dim=2, ic=_uniform_ic([1.4, 3.0, 0.0, 1.0]),
        t_final=4.0,
        grid_kind="step", grid_params=dict(ni=240, nj=80),
        bc_2d={
            "imin": BC2D.inflow([1.4, 3.0, 0.0, 1.0]),
            "imax": BC2D.extrapolation(),
            "jmin": BC2D.wall(),
            "jmax": BC2D.wall(),
        },
        cfl=0.6,
        contour_hints={"rho": (1.0, 6.5, 0.15)},
    )

    cases["shock-diffraction"] = CaseSpec(
        name="shock-diffraction", dim=2, ic=_diffraction_ic, t_final=0.09,
        grid_kind="corner", grid_params=dict(ni=400, nj=400),
        bc_2d={
            "imin": BC2D.inflow(_diffraction_post_state()),
            "imax": BC2D.extrapolation(),
            "jmin": BC2D.wall(),
            "jmax": BC2D.wall(),
        },
        contour_hints={"rho": (0.5, 7.0, 0.25)},
    )

    return cases


_REGISTRY = _build_registry()


def registry():
    """Names of all registered cases."""
    return list(_REGISTRY)


def lookup(name):
    if name not in _REGISTRY:
        raise KeyError(f"unknown case {name!r}; known: {', '.join(_REGISTRY)}")
    return _REGISTRY[name]


def build_grid_1d(case, n_cells=None):
    return Grid1D(case.x_span[0], case.x_span[1], n_cells or case.n_cells)


def build_grid_2d(case, ni=None, nj=None):
    params = dict(case.grid_params)
    if ni is not None:
        params["ni"] = ni
    if nj is not None:
        params["nj"] = nj
    return make_grid(case.grid_kind, **params)
