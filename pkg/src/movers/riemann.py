"""Exact 1D Riemann solver and shock-relation evaluators.

These are ground-truth generators used for validation and error
measurement only; the finite-volume solvers never call in here.
"""
from dataclasses import dataclass

import numpy as np

from .errors import VacuumError
from .gas import GasModel, sound_speed

_NEWTON_TOL = 1e-12
_MAX_ITER = 100


def _f_side(p, rho_k, p_k, a_k, gas):
    """Toro's pressure function for one side and its derivative."""
    g = gas.gamma
    if p > p_k:  # shock
        A = 2.0 / ((g + 1.0) * rho_k)
        B = (g - 1.0) / (g + 1.0) * p_k
        root = np.sqrt(A / (p + B))
        f = (p - p_k) * root
        df = root * (1.0 - 0.5 * (p - p_k) / (p + B))
    else:  # rarefaction
        f = 2.0 * a_k / (g - 1.0) * ((p / p_k) ** ((g - 1.0) / (2.0 * g)) - 1.0)
        df = (p / p_k) ** (-(g + 1.0) / (2.0 * g)) / (rho_k * a_k)
    return f, df


@dataclass
class RiemannSolution:
    """Star-region state and wave structure of a 1D Riemann problem."""

    w_L: np.ndarray
    w_R: np.ndarray
    gas: GasModel
    p_star: float
    u_star: float
    left_wave: str  # "shock" | "rarefaction"
    right_wave: str

    def sample(self, xi):
        """Self-similar state at speeds xi = x/t; returns (rho, u, p) arrays."""
        xi = np.atleast_1d(np.asarray(xi, dtype=float))
        g = self.gas.gamma
        rhoL, uL, pL = self.w_L
        rhoR, uR, pR = self.w_R
        aL = float(sound_speed(self.w_L, self.gas))
        aR = float(sound_speed(self.w_R, self.gas))
        ps, us = self.p_star, self.u_star

        rho = np.empty_like(xi)
        u = np.empty_like(xi)
        p = np.empty_like(xi)

        left_of_contact = xi < us

        # left side
        if self.left_wave == "shock":
            rho_sL = rhoL * ((ps / pL + (g - 1) / (g + 1))
                             / ((g - 1) / (g + 1) * ps / pL + 1))
            s_L = uL - aL * np.sqrt((g + 1) / (2 * g) * ps / pL + (g - 1) / (2 * g))
            in_L = xi < s_L
            in_star = left_of_contact & ~in_L
            for arr, vL, vS in ((rho, rhoL, rho_sL), (u, uL, us), (p, pL, ps)):
                arr[in_L] = vL
                arr[in_star] = vS
        else:
            a_sL = aL * (ps / pL) ** ((g - 1) / (2 * g))
            rho_sL = rhoL * (ps / pL) ** (1 / g)
            head = uL - aL
            tail = us - a_sL
            in_L = xi < head
            in_fan = left_of_contact & (xi >= head) & (xi < tail)
            in_star = left_of_contact & (xi >= tail)
            for arr, vL, vS in ((rho, rhoL, rho_sL), (u, uL, us), (p, pL, ps)):
                arr[in_L] = vL
                arr[in_star] = vS
            a_fan = (2 / (g + 1)) * (aL + 0.5 * (g - 1) * (uL - xi[in_fan]))
            u[in_fan] = (2 / (g + 1)) * (aL + 0.5 * (g - 1) * uL + xi[in_fan])
            rho[in_fan] = rhoL * (a_fan / aL) ** (2 / (g - 1))
            p[in_fan] = pL * (a_fan / aL) ** (2 * g / (g - 1))

        # right side
        right = ~left_of_contact
        if self.right_wave == "shock":
            rho_sR = rhoR * ((ps / pR + (g - 1) / (g + 1))
                             / ((g - 1) / (g + 1) * ps / pR + 1))
            s_R = uR + aR * np.sqrt((g + 1) / (2 * g) * ps / pR + (g - 1) / (2 * g))
            in_R = xi >= s_R
            in_star = right & ~in_R
            for arr, vR, vS in ((rho, rhoR, rho_sR), (u, uR, us), (p, pR, ps)):
                arr[in_R] = vR
                arr[in_star] = vS
        else:
            a_sR = aR * (ps / pR) ** ((g - 1) / (2 * g))
            rho_sR = rhoR * (ps / pR) ** (1 / g)
            head = uR + aR
            tail = us + a_sR
            in_R = xi >= head
            in_fan = right & (xi >= tail) & (xi < head)
            in_star = right & (xi < tail)
            for arr, vR, vS in ((rho, rhoR, rho_sR), (u, uR, us), (p, pR, ps)):
                arr[in_R] = vR
                arr[in_star] = vS
            a_fan = (2 / (g + 1)) * (aR - 0.5 * (g - 1) * (uR - xi[in_fan]))
            u[in_fan] = (2 / (g + 1)) * (-aR + 0.5 * (g - 1) * uR + xi[in_fan])
            rho[in_fan] = rhoR * (a_fan / aR) ** (2 / (g - 1))
            p[in_fan] = pR * (a_fan / aR) ** (2 * g / (g - 1))

        return np.stack([rho, u, p])


def exact_riemann(w_L, w_R, gas=GasModel()):
    """Solve the 1D Riemann problem by Newton iteration on the star pressure.

    Two-rarefaction initial guess, tolerance 1e-12, bisection fallback.
    """
    w_L = np.asarray(w_L, dtype=float)
    w_R = np.asarray(w_R, dtype=float)
    g = gas.gamma
    rhoL, uL, pL = w_L
    rhoR, uR, pR = w_R
    aL = float(sound_speed(w_L, gas))
    aR = float(sound_speed(w_R, gas))

    if 2.0 * (aL + aR) / (g - 1.0) <= uR - uL:
        raise VacuumError("pressure positivity condition violated (vacuum)")

    # two-rarefaction guess
    z = (g - 1.0) / (2.0 * g)
    p = ((aL + aR - 0.5 * (g - 1.0) * (uR - uL))
         / (aL / pL**z + aR / pR**z)) ** (1.0 / z)
    p = max(p, 1e-12 * min(pL, pR))

    lo, hi = 0.0, None
    converged = False
    for _ in range(_MAX_ITER):
        fL, dfL = _f_side(p, rhoL, pL, aL, gas)
        fR, dfR = _f_side(p, rhoR, pR, aR, gas)
        residual = fL + fR + (uR - uL)
        if residual > 0.0:
            hi = p if hi is None else min(hi, p)
        else:
            lo = max(lo, p)
        step = residual / (dfL + dfR)
        p_new = p - step
        if p_new <= lo or (hi is not None and p_new >= hi):
            p_new = 0.5 * (lo + hi) if hi is not None else 0.5 * (lo + p)
        if abs(p_new - p) <= _NEWTON_TOL * max(p, 1.0) and abs(residual) < 1e-10:
            p = p_new
            converged = True
            break
        p = p_new
    if not converged:
        fL, _ = _f_side(p, rhoL, pL, aL, gas)
        fR, _ = _f_side(p, rhoR, pR, aR, gas)
        if abs(fL + fR + (uR - uL)) > 1e-8:
            raise RuntimeError("star-pressure iteration failed to converge")

    fL, _ = _f_side(p, rhoL, pL, aL, gas)
    fR, _ = _f_side(p, rhoR, pR, aR, gas)
    u_star = 0.5 * (uL + uR) + 0.5 * (fR - fL)
    return RiemannSolution(
        w_L=w_L,
        w_R=w_R,
        gas=gas,
        p_star=float(p),
        u_star=float(u_star),
        left_wave="shock" if p > pL else "rarefaction",
        right_wave="shock" if p > pR else "rarefaction",
    )


def normal_shock_from_mach(mach, upstream, gas=GasModel()):
    """Downstream state of a stationary normal shock of Mach `mach`.

    `upstream` is a primitive (rho, u, p) in the shock frame; for the
    constructed pair to satisfy dF = 0 the upstream velocity should be
    mach * a(upstream) (sign gives the flow direction).
    """
    if not mach > 1.0:
        raise ValueError(f"shock Mach number must exceed 1, got {mach}")
    g = gas.gamma
    rho1, u1, p1 = np.asarray(upstream, dtype=float)
    m2 = mach * mach
    rho_ratio = (g + 1.0) * m2 / ((g - 1.0) * m2 + 2.0)
    p_ratio = 1.0 + 2.0 * g / (g + 1.0) * (m2 - 1.0)
    return np.array([rho1 * rho_ratio, u1 / rho_ratio, p1 * p_ratio])


def moving_shock_state(mach, ahead, gas=GasModel()):
    """State behind a planar shock of Mach `mach` moving into `ahead` (+x).

    `ahead` is a primitive (rho, u, p) with u the ahead flow speed
    (typically 0 for a quiescent gas).
    """
    rho1, u1, p1 = np.asarray(ahead, dtype=float)
    a1 = float(sound_speed(np.array([rho1, u1, p1]), gas))
    W = u1 + mach * a1  # lab-frame shock speed
    # transform to shock frame, apply steady relations, transform back
    up = np.array([rho1, u1 - W, p1])
    down = normal_shock_from_mach(mach, up, gas)
    down[1] += W
    return down


def oblique_shock_state(upstream, beta, gas=GasModel(), turn=-1.0):
    """Downstream state of an oblique shock at wave angle `beta`.

    `upstream` is a 2D primitive (rho, u, v, p); beta is measured from the
    upstream flow direction. turn=+1 deflects the flow clockwise (shock
    normal below the flow direction), turn=-1 counter-clockwise.
    Tangential velocity is preserved; the normal component obeys the
    stationary normal-shock relations.
    """
    rho1, u1, v1, p1 = np.asarray(upstream, dtype=float)
    q = np.hypot(u1, v1)
    a1 = np.sqrt(gas.gamma * p1 / rho1)
    mn1 = q * np.sin(beta) / a1
    if not mn1 > 1.0:
        raise ValueError(f"normal Mach {mn1:.4f} is not supersonic")
    d = np.array([u1, v1]) / q
    # normal = flow direction rotated by turn*(pi/2 - beta)
    ang = turn * (np.pi / 2.0 - beta)
    n = np.array([d[0] * np.cos(ang) - d[1] * np.sin(ang),
                  d[0] * np.sin(ang) + d[1] * np.cos(ang)])
    un1 = u1 * n[0] + v1 * n[1]
    down = normal_shock_from_mach(mn1, np.array([rho1, un1, p1]), gas)
    rho2, un2, p2 = down
    vel2 = np.array([u1, v1]) - (un1 - un2) * n
    return np.array([rho2, vel2[0], vel2[1], p2])


def oblique_shock_deflection(mach, beta, gas=GasModel()):
    """Flow deflection angle theta for wave angle beta at Mach `mach`."""
    g = gas.gamma
    m2 = mach * mach
    tan_theta = 2.0 / np.tan(beta) * (m2 * np.sin(beta) ** 2 - 1.0) / (
        m2 * (g + np.cos(2.0 * beta)) + 2.0
    )
    return np.arctan(tan_theta)


def shock_angle_from_deflection(mach, theta, gas=GasModel()):
    """Weak-branch wave angle beta producing deflection theta at Mach `mach`."""
    from scipy.optimize import brentq, minimize_scalar

    mu = np.arcsin(1.0 / mach)
    res = minimize_scalar(
        lambda b: -oblique_shock_deflection(mach, b, gas),
        bounds=(mu + 1e-10, np.pi / 2.0 - 1e-10),
        method="bounded",
    )
    beta_max = res.x
    if theta > -res.fun:
        raise ValueError("deflection exceeds the maximum attached-shock angle")
    return brentq(
        lambda b: oblique_shock_deflection(mach, b, gas) - theta,
        mu + 1e-12,
        beta_max,
        xtol=1e-14,
    )


def l1_error(x, w_num, sol, t, x0):
    """Per-variable L1 error of a 1D field against the sampled exact solution.

    x are cell centres, w_num the primitive field (3, n), sol a
    RiemannSolution centred at x0 evaluated at time t > 0.
    """
    if not t > 0.0:
        raise ValueError("l1_error requires t > 0")
    x = np.asarray(x, dtype=float)
    dx = x[1] - x[0]
    w_exact = sol.sample((x - x0) / t)
    err = dx * np.sum(np.abs(np.asarray(w_num) - w_exact), axis=1)
    return {"rho": err[0], "u": err[1], "p": err[2]}
