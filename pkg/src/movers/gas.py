"""Gas-dynamics primitives for a calorically perfect gas.

State layout (component-first numpy arrays, any trailing shape):

    primitive  w = (rho, u[, v], p)
    conserved  U = (rho, rho*u[, rho*v], rho*E)

Three components in 1D, four in 2D. All functions are pure and vectorised
over the trailing axes.
"""
from dataclasses import dataclass

import numpy as np

from .errors import InvalidStateError, PositivityError


@dataclass(frozen=True)
class GasModel:
    """Perfect-gas model: ratio of specific heats and c_v for the entropy.

    c_v only enters the entropy functional S = c_v*log(p/rho^gamma); the
    additive entropy constant is taken as zero.
    """

    gamma: float = 1.4
    c_v: float = 2.5

    def __post_init__(self):
        if not self.gamma > 1.0:
            raise ValueError(f"gamma must exceed 1, got {self.gamma}")
        if not self.c_v > 0.0:
            raise ValueError(f"c_v must be positive, got {self.c_v}")


def _require_valid(rho, p):
    if np.any(rho <= 0.0) or np.any(p <= 0.0) or not (
        np.all(np.isfinite(rho)) and np.all(np.isfinite(p))
    ):
        raise InvalidStateError("non-positive or non-finite density/pressure")


def primitive_to_conserved(w, gas):
    """Map (rho, u[, v], p) to (rho, rho*u[, rho*v], rho*E)."""
    w = np.asarray(w, dtype=float)
    rho, p = w[0], w[-1]
    _require_valid(rho, p)
    vel = w[1:-1]
    kinetic = 0.5 * rho * np.sum(vel * vel, axis=0)
    total_energy = p / (gas.gamma - 1.0) + kinetic
    U = np.empty_like(w)
    U[0] = rho
    U[1:-1] = rho * vel
    U[-1] = total_energy
    return U


def conserved_to_primitive(U, gas):
    """Invert primitive_to_conserved; raises PositivityError on bad states."""
    U = np.asarray(U, dtype=float)
    rho = U[0]
    if np.any(rho <= 0.0) or not np.all(np.isfinite(U)):
        bad = np.argwhere(~((rho > 0.0) & np.all(np.isfinite(U), axis=0)))
        cell = tuple(bad[0]) if bad.size else None
        raise PositivityError("non-positive density recovered", cell=cell)
    vel = U[1:-1] / rho
    kinetic = 0.5 * rho * np.sum(vel * vel, axis=0)
    p = (gas.gamma - 1.0) * (U[-1] - kinetic)
    if np.any(p <= 0.0):
        bad = np.argwhere(~(p > 0.0))
        cell = tuple(bad[0]) if bad.size else None
        raise PositivityError("non-positive pressure recovered", cell=cell)
    w = np.empty_like(U)
    w[0] = rho
    w[1:-1] = vel
    w[-1] = p
    return w


def physical_flux(U, gas, axis=0):
    """Inviscid flux of the conserved state along coordinate `axis`.

    axis=0 gives the x-flux, axis=1 the y-flux (4-component states only).
    """
    U = np.asarray(U, dtype=float)
    rho = U[0]
    vel = U[1:-1] / rho
    kinetic = 0.5 * rho * np.sum(vel * vel, axis=0)
    p = (gas.gamma - 1.0) * (U[-1] - kinetic)
    un = vel[axis]
    F = un * U
    F[1 + axis] += p
    F[-1] += un * p
    return F


def sound_speed(w, gas):
    w = np.asarray(w, dtype=float)
    _require_valid(w[0], w[-1])
    return np.sqrt(gas.gamma * w[-1] / w[0])


def _normal_velocity(w, normal):
    vel = w[1:-1]
    if normal is None:
        return vel[0]
    normal = np.asarray(normal, dtype=float)
    return sum(n * v for n, v in zip(normal, vel))


def eigenvalues(w, gas, normal=None):
    """Sorted eigenvalues (un-a, un[, un], un+a) along `normal`."""
    w = np.asarray(w, dtype=float)
    a = sound_speed(w, gas)
    un = _normal_velocity(w, normal)
    parts = [un - a] + [un + 0.0 * a] * (w.shape[0] - 2) + [un + a]
    return np.stack(parts, axis=0)


def spectral_radius(w, gas, normal=None):
    """|un| + a, the largest eigenvalue magnitude of the flux Jacobian."""
    w = np.asarray(w, dtype=float)
    return np.abs(_normal_velocity(w, normal)) + sound_speed(w, gas)


def entropy_density(w, gas):
    """rho*S with S = c_v*log(p/rho^gamma), additive constant zero."""
    w = np.asarray(w, dtype=float)
    _require_valid(w[0], w[-1])
    S = gas.c_v * (np.log(w[-1]) - gas.gamma * np.log(w[0]))
    return w[0] * S
