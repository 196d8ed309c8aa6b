"""1D semi-discrete finite-volume solver with ghost-cell boundaries.

dU_j/dt = -(F_{j+1/2} - F_{j-1/2})/dx with interface fluxes from
`movers.schemes`. First order uses cell averages and forward Euler; second
order uses minmod-limited MUSCL reconstruction of primitive variables and
two-stage SSP Runge-Kutta.
"""
from dataclasses import dataclass, field

import numpy as np

from . import schemes
from .errors import PositivityError
from .gas import (GasModel, conserved_to_primitive, entropy_density,
                  physical_flux, primitive_to_conserved, sound_speed)
from .schemes import Scheme, SwitchParams

NG = 2  # ghost layers per side


@dataclass(frozen=True)
class Grid1D:
    x_min: float
    x_max: float
    n_cells: int

    def __post_init__(self):
        if self.n_cells < 4:
            raise ValueError("need at least 4 cells")
        if not self.x_max > self.x_min:
            raise ValueError("empty domain")

    @property
    def dx(self):
        return (self.x_max - self.x_min) / self.n_cells

    def centers(self):
        return self.x_min + (np.arange(self.n_cells) + 0.5) * self.dx


@dataclass
class BoundaryCondition:
    kind: str  # "transmissive" | "inflow" | "reflective"
    state: np.ndarray | None = None  # conserved, for inflow

    @classmethod
    def transmissive(cls):
        return cls("transmissive")

    @classmethod
    def inflow(cls, w, gas=GasModel()):
        return cls("inflow", primitive_to_conserved(np.asarray(w, float), gas))

    @classmethod
    def reflective(cls):
        return cls("reflective")


@dataclass
class TimeControls:
    cfl: float = 0.8
    t_final: float | None = None
    max_steps: int = 10**6
    steady_tol: float | None = None  # absolute L2 density residual
    steady_drop: float | None = None  # relative residual drop

    def __post_init__(self):
        if not 0.0 < self.cfl <= 1.0:
            raise ValueError(f"cfl must lie in (0, 1], got {self.cfl}")


@dataclass
class Field1D:
    """Cell-averaged conserved variables with ghost cells."""

    grid: Grid1D
    U: np.ndarray  # (3, n_cells + 2*NG)
    t: float = 0.0
    n_step: int = 0

    @classmethod
    def from_ic(cls, grid, ic, gas=GasModel()):
        """ic maps cell-centre x to a primitive (3, n) array."""
        w = np.asarray(ic(grid.centers()), dtype=float)
        U = np.zeros((3, grid.n_cells + 2 * NG))
        U[:, NG:-NG] = primitive_to_conserved(w, gas)
        return cls(grid=grid, U=U)

    def interior(self):
        return self.U[:, NG:-NG]

    def copy(self):
        return Field1D(self.grid, self.U.copy(), self.t, self.n_step)


def apply_bc(fld, bc_left, bc_right):
    """Fill the ghost layers in place; returns the field."""
    U = fld.U
    for side, bc in ((0, bc_left), (1, bc_right)):
        if side == 0:
            ghost, edge, mirror = slice(0, NG), U[:, NG], U[:, NG:2 * NG][:, ::-1]
        else:
            ghost, edge, mirror = slice(-NG, None), U[:, -NG - 1], U[:, -2 * NG:-NG][:, ::-1]
        if bc.kind == "transmissive":
            U[:, ghost] = edge[:, None]
        elif bc.kind == "inflow":
            U[:, ghost] = bc.state[:, None]
        elif bc.kind == "reflective":
            U[:, ghost] = mirror
            U[1, ghost] = -U[1, ghost]
        else:
            raise ValueError(f"unknown boundary kind {bc.kind!r}")
    return fld


def _minmod_pair(a, b):
    s = np.sign(a)
    return np.where(s * np.sign(b) > 0.0, s * np.minimum(np.abs(a), np.abs(b)), 0.0)


def muscl_reconstruct(fld, gas=GasModel(), order=2):
    """Interface states (U_L, U_R), each (3, n_cells + 1).

    Order 1 returns the adjacent cell averages. Order 2 applies limited
    linear reconstruction of primitive variables and falls back to first
    order at any interface whose reconstructed state loses positivity.
    """
    U = fld.U
    n = fld.grid.n_cells
    if order == 1:
        return U[:, NG - 1:NG + n].copy(), U[:, NG:NG + n + 1].copy()

    w = np.empty_like(U)
    rho = U[0]
    w[0] = rho
    w[1] = U[1] / rho
    w[2] = (gas.gamma - 1.0) * (U[2] - 0.5 * U[1] ** 2 / rho)
    slope = np.zeros_like(w)
    slope[:, 1:-1] = _minmod_pair(w[:, 1:-1] - w[:, :-2], w[:, 2:] - w[:, 1:-1])

    iL = slice(NG - 1, NG + n)
    iR = slice(NG, NG + n + 1)
    wL = w[:, iL] + 0.5 * slope[:, iL]
    wR = w[:, iR] - 0.5 * slope[:, iR]
    bad = ((wL[0] <= 0) | (wL[2] <= 0) | (wR[0] <= 0) | (wR[2] <= 0))
    if np.any(bad):
        wL[:, bad] = w[:, iL][:, bad]
        wR[:, bad] = w[:, iR][:, bad]
    return primitive_to_conserved(wL, gas), primitive_to_conserved(wR, gas)


def _limiter_phi_interfaces(U, n, sw):
    """phi per interface from the cell-average stencil (j-1..j+2)."""
    stencil = [U[:, k:k + n + 1] for k in range(NG - 2, NG + 2)]
    return schemes.limiter_phi(stencil, sw)


def interface_fluxes(fld, scheme, gas, sw, order):
    """Fluxes at the n_cells+1 interfaces, ghost cells already filled."""
    U_L, U_R = muscl_reconstruct(fld, gas, order)
    phi = None
    if scheme in (Scheme.MOVERS_L, Scheme.MOVERS_LE):
        phi = _limiter_phi_interfaces(fld.U, fld.grid.n_cells, sw)
    try:
        alpha = schemes.blended_alpha(scheme, U_L, U_R, gas, sw, phi)
        return schemes.interface_flux(U_L, U_R, alpha, gas)
    except PositivityError as err:
        raise PositivityError(
            "invalid interface state", cell=err.cell, time=fld.t
        ) from err


def compute_rhs(fld, scheme, gas=GasModel(), sw=SwitchParams(), order=1):
    """Semi-discrete time derivative and the two boundary fluxes."""
    F = interface_fluxes(fld, scheme, gas, sw, order)
    rhs = -(F[:, 1:] - F[:, :-1]) / fld.grid.dx
    return rhs, (F[:, 0].copy(), F[:, -1].copy())


def stable_dt(fld, cfl, gas=GasModel(), t_final=None):
    """CFL time step, capped so t never overshoots t_final."""
    w = conserved_to_primitive(fld.interior(), gas)
    sr = np.abs(w[1]) + sound_speed(w, gas)
    dt = cfl * fld.grid.dx / np.max(sr)
    if t_final is not None:
        dt = min(dt, t_final - fld.t)
    return dt


def step(fld, scheme, controls, order=1, gas=GasModel(), sw=SwitchParams(),
         bcs=None, dt=None):
    """Advance one step in place; returns (residual, boundary_tally).

    Forward Euler at order 1, two-stage SSP-RK at order 2. The boundary
    tally is the effective (F_left, F_right) such that
    sum(U_new)*dx = sum(U_old)*dx - dt*(F_right - F_left) exactly.
    """
    if bcs is None:
        bcs = (BoundaryCondition.transmissive(), BoundaryCondition.transmissive())
    apply_bc(fld, *bcs)
    if dt is None:
        dt = stable_dt(fld, controls.cfl, gas, controls.t_final)
    U = fld.interior()
    rhs, tally = compute_rhs(fld, scheme, gas, sw, order)
    if order == 1:
        U += dt * rhs
    else:
        stage = fld.copy()
        stage.U[:, NG:-NG] = U + dt * rhs
        stage.t += dt
        _check_positivity(stage, gas)
        apply_bc(stage, *bcs)
        rhs2, tally2 = compute_rhs(stage, scheme, gas, sw, order)
        U += 0.5 * dt * (rhs + rhs2)
        tally = tuple(0.5 * (a + b) for a, b in zip(tally, tally2))
        rhs = 0.5 * (rhs + rhs2)
    _check_positivity(fld, gas)
    fld.t += dt
    fld.n_step += 1
    residual = np.sqrt(np.sum(rhs[0] ** 2) * fld.grid.dx)
    return dt, residual, tally


def _check_positivity(fld, gas):
    U = fld.interior()
    rho = U[0]
    p = (gas.gamma - 1.0) * (U[2] - 0.5 * U[1] ** 2 / rho)
    bad = ~((rho > 0.0) & (p > 0.0) & np.isfinite(rho) & np.isfinite(p))
    if np.any(bad):
        raise PositivityError(
            "positivity lost", cell=int(np.argmax(bad)), time=fld.t
        )


@dataclass
class History:
    """Per-step diagnostics of a run."""

    step: list = field(default_factory=list)
    t: list = field(default_factory=list)
    dt: list = field(default_factory=list)
    residual: list = field(default_factory=list)
    total_mass: list = field(default_factory=list)
    total_momentum_x: list = field(default_factory=list)
    total_energy: list = field(default_factory=list)
    total_entropy: list = field(default_factory=list)
    min_rho: list = field(default_factory=list)
    min_p: list = field(default_factory=list)
    boundary_tallies: list = field(default_factory=list)

    def record(self, fld, dt, residual, tally, gas, measure):
        w = conserved_to_primitive(fld.interior(), gas)
        totals = np.sum(fld.interior(), axis=1) * measure
        self.step.append(fld.n_step)
        self.t.append(fld.t)
        self.dt.append(dt)
        self.residual.append(residual)
        self.total_mass.append(totals[0])
        self.total_momentum_x.append(totals[1])
        self.total_energy.append(totals[-1])
        self.total_entropy.append(np.sum(entropy_density(w, gas)) * measure)
        self.min_rho.append(np.min(w[0]))
        self.min_p.append(np.min(w[-1]))
        self.boundary_tallies.append(tally)


def run(grid, ic, scheme, controls, order=1, gas=GasModel(), sw=SwitchParams(),
        bcs=None, cfl_ramp_steps=0):
    """Advance from the initial condition to t_final or steady state.

    cfl_ramp_steps > 0 starts at a hundredth of the CFL and ramps linearly,
    easing the impulsive breakup of strong initial discontinuities.
    """
    fld = Field1D.from_ic(grid, ic, gas)
    hist = History()
    ref_residual = None
    base_cfl = controls.cfl
    while fld.n_step < controls.max_steps:
        if controls.t_final is not None and fld.t >= controls.t_final - 1e-14:
            break
        if cfl_ramp_steps and fld.n_step < cfl_ramp_steps:
            frac = (fld.n_step + 1) / cfl_ramp_steps
            cfl = base_cfl * 0.01 ** (1.0 - frac)
        else:
            cfl = base_cfl
        if bcs is not None:
            apply_bc(fld, *bcs)
        else:
            apply_bc(fld, BoundaryCondition.transmissive(),
                     BoundaryCondition.transmissive())
        dt = stable_dt(fld, cfl, gas, controls.t_final)
        dt, residual, tally = step(fld, scheme, controls, order, gas, sw, bcs,
                                   dt=dt)
        hist.record(fld, dt, residual, tally, gas, fld.grid.dx)
        if ref_residual is None and residual > 0.0:
            ref_residual = residual
        if controls.steady_tol is not None and residual < controls.steady_tol:
            break
        if (controls.steady_drop is not None and ref_residual is not None
                and residual < controls.steady_drop * ref_residual):
            break
    return fld, hist
