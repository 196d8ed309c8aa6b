"""2D finite-volume solver on structured quadrilateral grids.

Fluxes are evaluated face by face in the face-normal frame: both states
are rotated so the velocity splits into (normal, tangential) components,
the 4-component diffusion vector and the central flux are formed there,
and the momentum flux is rotated back. Blanked (solid) cells get slip-wall
fluxes on the faces they share with live cells.
"""
from dataclasses import dataclass

import numpy as np

from . import schemes
from .errors import PositivityError
from .gas import (GasModel, entropy_density, primitive_to_conserved,
                  sound_speed)
from .schemes import Scheme, SwitchParams
from .solver1d import History, TimeControls  # shared containers

NG = 2


@dataclass
class BC2D:
    kind: str  # "inflow" | "extrapolation" | "wall"
    state: object = None  # primitive 4-vector or callable (x, y) -> (4, ...)

    @classmethod
    def inflow(cls, state):
        return cls("inflow", state)

    @classmethod
    def extrapolation(cls):
        return cls("extrapolation")

    @classmethod
    def wall(cls):
        return cls("wall")


@dataclass
class Field2D:
    grid: object
    U: np.ndarray  # (4, ni + 2*NG, nj + 2*NG)
    t: float = 0.0
    n_step: int = 0

    @classmethod
    def from_ic(cls, grid, ic, gas=GasModel()):
        ni, nj = grid.shape
        w = np.asarray(ic(grid.xc, grid.yc), dtype=float)
        # quiet placeholder state in ghost and blanked cells keeps the
        # vectorized primitive conversions finite everywhere
        quiet = primitive_to_conserved(np.array([1.0, 0.0, 0.0, 1.0]), gas)
        U = np.tile(quiet[:, None, None], (1, ni + 2 * NG, nj + 2 * NG))
        U[:, NG:-NG, NG:-NG] = primitive_to_conserved(w, gas)
        U[:, NG:-NG, NG:-NG][:, grid.blank] = quiet[:, None]
        return cls(grid=grid, U=U)

    def interior(self):
        return self.U[:, NG:-NG, NG:-NG]

    def copy(self):
        return Field2D(self.grid, self.U.copy(), self.t, self.n_step)


def _mirror(U, nx, ny):
    """Reflect the velocity of conserved states across a unit normal."""
    out = U.copy()
    mn = U[1] * nx + U[2] * ny
    out[1] -= 2.0 * mn * nx
    out[2] -= 2.0 * mn * ny
    return out


def apply_bc_2d(fld, bcs, gas=GasModel()):
    """Fill ghost layers per side; bcs maps side name to a BC2D.

    Sides are "imin", "imax", "jmin", "jmax". Wall ghosts mirror the
    interior across the boundary face normal.
    """
    U = fld.U
    grid = fld.grid
    ni, nj = grid.shape
    interior = slice(NG, -NG)
    for side in ("imin", "imax", "jmin", "jmax"):
        bc = bcs[side]
        along_i = side[0] == "i"
        low = side.endswith("min")
        if along_i:
            face_n = grid.iface_n[:, 0 if low else ni, :]  # (2, nj)
            edge_xc = grid.xc[0 if low else -1, :]
            edge_yc = grid.yc[0 if low else -1, :]

            def put(layer, values):
                idx = NG - 1 - layer if low else NG + ni + layer
                U[:, idx, interior] = values

            def interior_layer(layer):
                idx = NG + layer if low else NG + ni - 1 - layer
                return U[:, idx, interior]
        else:
            face_n = grid.jface_n[:, :, 0 if low else nj]  # (2, ni)
            edge_xc = grid.xc[:, 0 if low else -1]
            edge_yc = grid.yc[:, 0 if low else -1]

            def put(layer, values):
                idx = NG - 1 - layer if low else NG + nj + layer
                U[:, interior, idx] = values

            def interior_layer(layer):
                idx = NG + layer if low else NG + nj - 1 - layer
                return U[:, interior, idx]

        if bc.kind == "extrapolation":
            for layer in range(NG):
                put(layer, interior_layer(0))
        elif bc.kind == "inflow":
            state = bc.state
            if callable(state):
                w = np.asarray(state(edge_xc, edge_yc), dtype=float)
            else:
                w = np.broadcast_to(
                    np.asarray(state, dtype=float)[:, None], (4, edge_xc.size)
                )
            Uin = primitive_to_conserved(w, gas)
            for layer in range(NG):
                put(layer, Uin)
        elif bc.kind == "wall":
            for layer in range(NG):
                put(layer, _mirror(interior_layer(layer), face_n[0], face_n[1]))
        else:
            raise ValueError(f"unknown boundary kind {bc.kind!r}")
    return fld


def _rotate_in(U, nx, ny):
    out = np.empty_like(U)
    out[0] = U[0]
    out[1] = U[1] * nx + U[2] * ny
    out[2] = -U[1] * ny + U[2] * nx
    out[3] = U[3]
    return out


def _rotate_flux_out(F, nx, ny):
    out = np.empty_like(F)
    out[0] = F[0]
    out[1] = F[1] * nx - F[2] * ny
    out[2] = F[1] * ny + F[2] * nx
    out[3] = F[3]
    return out


def _minmod_pair(a, b):
    s = np.sign(a)
    return np.where(s * np.sign(b) > 0.0, s * np.minimum(np.abs(a), np.abs(b)), 0.0)


def _primitives(U, gas):
    w = np.empty_like(U)
    w[0] = U[0]
    w[1] = U[1] / U[0]
    w[2] = U[2] / U[0]
    w[3] = (gas.gamma - 1.0) * (U[3] - 0.5 * (U[1] ** 2 + U[2] ** 2) / U[0])
    return w


def _blank_ext(grid):
    ni, nj = grid.shape
    ext = np.zeros((ni + 2 * NG, nj + 2 * NG), dtype=bool)
    ext[NG:-NG, NG:-NG] = grid.blank
    return ext


def _slopes(w, blank_ext, axis):
    """Limited slopes of primitives along one grid direction.

    Slopes are zeroed wherever the 3-cell stencil touches a blanked cell,
    falling back to first order next to solid walls.
    """
    slope = np.zeros_like(w)
    core = [slice(None)] * 3
    lo = [slice(None)] * 3
    hi = [slice(None)] * 3
    core[1 + axis] = slice(1, -1)
    lo[1 + axis] = slice(None, -2)
    hi[1 + axis] = slice(2, None)
    slope[tuple(core)] = _minmod_pair(
        w[tuple(core)] - w[tuple(lo)], w[tuple(hi)] - w[tuple(core)]
    )
    near = blank_ext[tuple(core[1:])] | blank_ext[tuple(lo[1:])] | blank_ext[tuple(hi[1:])]
    slope[(slice(None),) + tuple(core[1:])][:, near] = 0.0
    return slope


def face_flux(U_L, U_R, normal, scheme, gas=GasModel(), sw=SwitchParams(),
              phi=None):
    """Flux through a face with unit `normal`, per unit face length.

    Rotates into the face frame, forms the scheme's 4-component diffusion
    vector and the central flux there, and rotates the momentum components
    back. phi defaults to 1 (the stencil-less fallback) for the blended
    schemes.
    """
    nx, ny = np.asarray(normal, dtype=float)
    UL = _rotate_in(np.asarray(U_L, dtype=float), nx, ny)
    UR = _rotate_in(np.asarray(U_R, dtype=float), nx, ny)
    alpha = schemes.blended_alpha(scheme, UL, UR, gas, sw, phi)
    F = schemes.interface_flux(UL, UR, alpha, gas)
    return _rotate_flux_out(F, nx, ny)


def _face_states(w, slope, Ucells, axis, n_face, gas, order):
    """Left/right conserved interface states along one direction."""
    ndim = [slice(None)] * 3
    L = list(ndim)
    R = list(ndim)
    L[1 + axis] = slice(NG - 1, NG - 1 + n_face)
    R[1 + axis] = slice(NG, NG + n_face)
    other = 2 - axis  # the non-face axis index in (1, 2)
    L[other] = slice(NG, -NG)
    R[other] = slice(NG, -NG)
    if order == 1:
        return Ucells[tuple(L)], Ucells[tuple(R)]
    wL = w[tuple(L)] + 0.5 * slope[tuple(L)]
    wR = w[tuple(R)] - 0.5 * slope[tuple(R)]
    bad = (wL[0] <= 0) | (wL[3] <= 0) | (wR[0] <= 0) | (wR[3] <= 0)
    if np.any(bad):
        wL[:, bad] = _primitives(Ucells[tuple(L)], gas)[:, bad]
        wR[:, bad] = _primitives(Ucells[tuple(R)], gas)[:, bad]
    return primitive_to_conserved(wL, gas), primitive_to_conserved(wR, gas)


def _direction_fluxes(fld, grid, scheme, gas, sw, order, axis, w, slopes,
                      blank_ext, wall_bc=(False, False), coeff_cache=None):
    """Length-weighted fluxes for all faces of one grid direction."""
    ni, nj = grid.shape
    n_face = (ni if axis == 0 else nj) + 1
    normals = grid.iface_n if axis == 0 else grid.jface_n
    lengths = grid.iface_len if axis == 0 else grid.jface_len
    nx, ny = normals[0], normals[1]

    U_L, U_R = _face_states(w, slopes, fld.U, axis, n_face, gas, order)
    UL = _rotate_in(U_L, nx, ny)
    UR = _rotate_in(U_R, nx, ny)

    phi = None
    if scheme in (Scheme.MOVERS_L, Scheme.MOVERS_LE):
        stencil = []
        valid = np.ones(UL.shape[1:], dtype=bool)
        for k in range(4):
            idx = [slice(None)] * 3
            idx[1 + axis] = slice(NG - 2 + k, NG - 2 + k + n_face)
            idx[2 - axis] = slice(NG, -NG)
            stencil.append(_rotate_in(fld.U[tuple(idx)], nx, ny))
            valid &= ~blank_ext[tuple(idx[1:])]
        phi = schemes.limiter_phi(stencil, sw)
        phi = np.where(valid, phi, 1.0)

    if coeff_cache is not None and ("alpha", axis) in coeff_cache:
        alpha = coeff_cache[("alpha", axis)]
    else:
        alpha = schemes.blended_alpha(scheme, UL, UR, gas, sw, phi)
        if coeff_cache is not None:
            coeff_cache[("alpha", axis)] = alpha
    F = schemes.interface_flux(UL, UR, alpha, gas)

    # slip-wall treatment at faces between a live and a blanked cell, and
    # at domain-boundary wall faces: first-order mirror states with the
    # LLF coefficient. The full-spectrum diffusion matters here: with the
    # low-diffusion coefficients the mirror pair produces a pure-pressure
    # momentum flux with no damping of the wall-normal velocity, and
    # impulsive hypersonic starts then drain wall cells to vacuum.
    bL = [slice(None)] * 2
    bL[axis] = slice(NG - 1, NG - 1 + n_face)
    bL[1 - axis] = slice(NG, -NG)
    bR = list(bL)
    bR[axis] = slice(NG, NG + n_face)
    left_blank = blank_ext[tuple(bL)].copy()
    right_blank = blank_ext[tuple(bR)].copy()
    lo_idx = (0,) if axis == 0 else (slice(None), 0)
    hi_idx = (-1,) if axis == 0 else (slice(None), -1)
    if wall_bc[0]:
        left_blank[lo_idx] = True
    if wall_bc[1]:
        right_blank[hi_idx] = True
    wall = left_blank ^ right_blank
    if np.any(wall):
        live = np.where(left_blank[wall], UR[:, wall], UL[:, wall])
        ghost = live.copy()
        ghost[1] = -ghost[1]
        wl = np.where(left_blank[wall], ghost, live)
        wr = np.where(left_blank[wall], live, ghost)
        if coeff_cache is not None and ("wall", axis) in coeff_cache:
            a_w = coeff_cache[("wall", axis)]
        else:
            a_w = schemes.alpha_llf(wl, wr, gas)
            if coeff_cache is not None:
                coeff_cache[("wall", axis)] = a_w
        F[:, wall] = schemes.interface_flux(wl, wr, a_w, gas)
    both = left_blank & right_blank
    F[:, both] = 0.0

    F = _rotate_flux_out(F, nx, ny)
    return F * lengths, wall, left_blank


def compute_rhs_2d(fld, scheme, gas=GasModel(), sw=SwitchParams(), order=1,
                   bcs=None, coeff_cache=None):
    """Per-cell time derivative and the live-region boundary-flux tally.

    Ghost cells must already be filled. bcs, when given, marks domain
    boundary sides whose faces get the slip-wall flux treatment. The tally
    is the net outward flux integral over the live region's boundary
    (domain faces of live cells plus wall faces), so that
    sum(rhs * area) = -tally identically.

    coeff_cache, when given, is a dict the diffusion coefficients are read
    from when present and recorded into when absent. Passing an empty dict
    records the coefficients of this evaluation; passing it again reuses
    them, which makes the update linear in the state. Freezing the
    coefficients this way near a steady state removes the limit cycle the
    nonlinear coefficient feedback can sustain across captured shocks.
    """
    grid = fld.grid
    ni, nj = grid.shape
    blank_ext = _blank_ext(grid)
    w = slopes_i = slopes_j = None
    if order == 2:
        w = _primitives(fld.U, gas)
        slopes_i = _slopes(w, blank_ext, axis=0)
        slopes_j = _slopes(w, blank_ext, axis=1)

    def _is_wall(side):
        return bcs is not None and bcs[side].kind == "wall"

    Fi, wall_i, lblank_i = _direction_fluxes(
        fld, grid, scheme, gas, sw, order, 0, w, slopes_i, blank_ext,
        (_is_wall("imin"), _is_wall("imax")), coeff_cache)
    Fj, wall_j, lblank_j = _direction_fluxes(
        fld, grid, scheme, gas, sw, order, 1, w, slopes_j, blank_ext,
        (_is_wall("jmin"), _is_wall("jmax")), coeff_cache)

    rhs = -(Fi[:, 1:, :] - Fi[:, :-1, :] + Fj[:, :, 1:] - Fj[:, :, :-1]) / grid.area
    rhs[:, grid.blank] = 0.0

    # boundary of the live region: faces with exactly one live interior
    # neighbour, signed outward; telescoping gives sum(rhs*area) = -tally
    liveP = np.zeros((ni + 2, nj + 2), dtype=float)
    liveP[1:-1, 1:-1] = ~grid.blank
    sign_i = liveP[:-1, 1:-1] - liveP[1:, 1:-1]
    sign_j = liveP[1:-1, :-1] - liveP[1:-1, 1:]
    tally = (np.sum(Fi * sign_i, axis=(1, 2))
             + np.sum(Fj * sign_j, axis=(1, 2)))
    return rhs, tally


def stable_dt_2d(fld, cfl, gas=GasModel(), t_final=None):
    """cfl * min(area / sum_faces(|u.n| + a) * length) over live cells."""
    grid = fld.grid
    U = fld.interior()
    w = _primitives(U, gas)
    with np.errstate(invalid="ignore"):
        # invalid states produce a NaN dt; the positivity check after the
        # step turns that into a proper diagnostic
        a = np.sqrt(gas.gamma * w[3] / w[0])
    wave = np.zeros(grid.shape)
    for normals, lengths in (
        (grid.iface_n[:, :-1, :], grid.iface_len[:-1, :]),
        (grid.iface_n[:, 1:, :], grid.iface_len[1:, :]),
        (grid.jface_n[:, :, :-1], grid.jface_len[:, :-1]),
        (grid.jface_n[:, :, 1:], grid.jface_len[:, 1:]),
    ):
        un = w[1] * normals[0] + w[2] * normals[1]
        wave += (np.abs(un) + a) * lengths
    live = ~grid.blank
    dt = cfl * np.min(grid.area[live] / wave[live])
    if t_final is not None:
        dt = min(dt, t_final - fld.t)
    return dt


def _check_positivity_2d(fld, gas):
    U = fld.interior()
    rho = U[0]
    p = (gas.gamma - 1.0) * (U[3] - 0.5 * (U[1] ** 2 + U[2] ** 2) / rho)
    live = ~fld.grid.blank
    bad = live & ~((rho > 0.0) & (p > 0.0) & np.isfinite(rho) & np.isfinite(p))
    if np.any(bad):
        cell = tuple(np.argwhere(bad)[0])
        raise PositivityError("positivity lost", cell=cell, time=fld.t)


def step_2d(fld, scheme, controls, bcs, order=1, gas=GasModel(),
            sw=SwitchParams(), dt=None, coeff_cache=None):
    """Advance one step in place; returns (dt, residual, tally).

    coeff_cache is forwarded to compute_rhs_2d; with order 2 both stages
    share the same cached coefficients.
    """
    apply_bc_2d(fld, bcs, gas)
    if dt is None:
        dt = stable_dt_2d(fld, controls.cfl, gas, controls.t_final)
    U = fld.interior()
    rhs, tally = compute_rhs_2d(fld, scheme, gas, sw, order, bcs, coeff_cache)
    if order == 1:
        U += dt * rhs
    else:
        stage = fld.copy()
        stage.U[:, NG:-NG, NG:-NG] = U + dt * rhs
        apply_bc_2d(stage, bcs, gas)
        rhs2, tally2 = compute_rhs_2d(stage, scheme, gas, sw, order, bcs,
                                      coeff_cache)
        U += 0.5 * dt * (rhs + rhs2)
        tally = 0.5 * (tally + tally2)
        rhs = 0.5 * (rhs + rhs2)
    _check_positivity_2d(fld, gas)
    fld.t += dt
    fld.n_step += 1
    live = ~fld.grid.blank
    residual = np.sqrt(np.sum((rhs[0][live]) ** 2 * fld.grid.area[live]))
    return dt, residual, tally


def run_2d(grid, ic, scheme, controls, bcs, order=1, gas=GasModel(),
           sw=SwitchParams(), cfl_ramp_steps=0, coeff_freeze_step=0,
           callback=None):
    """Advance a 2D case to t_final or to the steady-residual target.

    cfl_ramp_steps > 0 ramps the CFL linearly from a tenth of its value
    over that many steps (impulsive hypersonic starts).

    coeff_freeze_step > 0 freezes the diffusion coefficients at that step:
    steady runs with captured shocks can otherwise stall in a small limit
    cycle fed by the coefficients' nonlinear response to the shock cells.
    """
    fld = Field2D.from_ic(grid, ic, gas)
    hist = History()
    live = ~grid.blank
    ref_residual = None
    base_cfl = controls.cfl
    coeff_cache = None
    while fld.n_step < controls.max_steps:
        if controls.t_final is not None and fld.t >= controls.t_final - 1e-14:
            break
        if cfl_ramp_steps and fld.n_step < cfl_ramp_steps:
            frac = (fld.n_step + 1) / cfl_ramp_steps
            cfl = base_cfl * (0.1 + 0.9 * frac)
        else:
            cfl = base_cfl
        if coeff_freeze_step and fld.n_step == coeff_freeze_step:
            coeff_cache = {}
        dt = stable_dt_2d(fld, cfl, gas, controls.t_final)
        dt, residual, tally = step_2d(
            fld, scheme, controls, bcs, order, gas, sw, dt=dt,
            coeff_cache=coeff_cache)
        _record_2d(hist, fld, dt, residual, tally, gas, live)
        if callback is not None:
            callback(fld, hist)
        if ref_residual is None and residual > 0.0:
            ref_residual = residual
        ref_residual = max(ref_residual or 0.0,
                           residual if fld.n_step <= 10 else 0.0)
        if controls.steady_tol is not None and residual < controls.steady_tol:
            break
        if (controls.steady_drop is not None and ref_residual
                and residual < controls.steady_drop * ref_residual):
            break
    return fld, hist


def _record_2d(hist, fld, dt, residual, tally, gas, live):
    U = fld.interior()
    w = _primitives(U, gas)
    area = fld.grid.area
    totals = np.sum(U[:, live] * area[live], axis=1)
    hist.step.append(fld.n_step)
    hist.t.append(fld.t)
    hist.dt.append(dt)
    hist.residual.append(residual)
    hist.total_mass.append(totals[0])
    hist.total_momentum_x.append(totals[1])
    hist.total_energy.append(totals[3])
    S = gas.c_v * (np.log(w[3][live]) - gas.gamma * np.log(w[0][live]))
    hist.total_entropy.append(np.sum(w[0][live] * S * area[live]))
    hist.min_rho.append(np.min(w[0][live]))
    hist.min_p.append(np.min(w[3][live]))
    hist.boundary_tallies.append(tally)


__all__ = [
    "BC2D", "Field2D", "TimeControls", "apply_bc_2d", "compute_rhs_2d",
    "face_flux", "run_2d", "stable_dt_2d", "step_2d",
]
