"""Structured quadrilateral grids with per-face metrics.

Node coordinates are (ni+1, nj+1) arrays. i-faces separate cells (i-1,j)
and (i,j) and carry unit normals pointing towards increasing i; j-faces
point towards increasing j. An optional blanking mask marks solid cells
(the forward-facing step); their faces are treated as slip walls by the
solver.
"""
from dataclasses import dataclass

import numpy as np


@dataclass
class StructuredGrid2D:
    X: np.ndarray  # (ni+1, nj+1) node x
    Y: np.ndarray  # node y
    blank: np.ndarray | None = None  # (ni, nj) bool, True = solid

    def __post_init__(self):
        ni, nj = self.shape
        if self.blank is None:
            self.blank = np.zeros((ni, nj), dtype=bool)

        # i-faces: node (i, j) -> (i, j+1); normal = (dy, -dx)/len
        dx = self.X[:, 1:] - self.X[:, :-1]
        dy = self.Y[:, 1:] - self.Y[:, :-1]
        self.iface_len = np.hypot(dx, dy)
        self.iface_n = np.stack([dy, -dx]) / self.iface_len

        # j-faces: node (i, j) -> (i+1, j); normal = (-dy, dx)/len
        dx = self.X[1:, :] - self.X[:-1, :]
        dy = self.Y[1:, :] - self.Y[:-1, :]
        self.jface_len = np.hypot(dx, dy)
        self.jface_n = np.stack([-dy, dx]) / self.jface_len

        # shoelace area of each quad (counter-clockwise node order)
        xa, ya = self.X[:-1, :-1], self.Y[:-1, :-1]
        xb, yb = self.X[1:, :-1], self.Y[1:, :-1]
        xc, yc = self.X[1:, 1:], self.Y[1:, 1:]
        xd, yd = self.X[:-1, 1:], self.Y[:-1, 1:]
        self.area = 0.5 * np.abs(
            (xa * yb - xb * ya) + (xb * yc - xc * yb)
            + (xc * yd - xd * yc) + (xd * ya - xa * yd)
        )
        if np.any(self.area <= 0.0):
            raise ValueError("degenerate cell (non-positive area)")

        self.xc = 0.25 * (xa + xb + xc + xd)
        self.yc = 0.25 * (ya + yb + yc + yd)

        # orient normals towards increasing cell index (grid handedness may
        # put the raw (dy,-dx) normal the other way, e.g. on polar grids)
        self._orient(self.iface_n, self.xc, self.yc, axis=0)
        self._orient(self.jface_n, self.xc, self.yc, axis=1)

    @staticmethod
    def _orient(normals, xc, yc, axis):
        tx = np.diff(xc, axis=axis)
        ty = np.diff(yc, axis=axis)
        pad = [(0, 0), (0, 0)]
        pad[axis] = (1, 1)
        tx = np.pad(tx, pad, mode="edge")
        ty = np.pad(ty, pad, mode="edge")
        flip = normals[0] * tx + normals[1] * ty < 0.0
        normals[:, flip] *= -1.0

    @property
    def shape(self):
        return self.X.shape[0] - 1, self.X.shape[1] - 1


def make_cartesian(x_min, x_max, y_min, y_max, ni, nj, blank=None):
    x = np.linspace(x_min, x_max, ni + 1)
    y = np.linspace(y_min, y_max, nj + 1)
    X, Y = np.meshgrid(x, y, indexing="ij")
    return StructuredGrid2D(X, Y, blank)


def make_step_grid(x_max=3.0, y_max=1.0, ni=240, nj=80,
                   step_x=0.6, step_y=0.2):
    """Cartesian channel with the cells inside the step blanked."""
    grid = make_cartesian(0.0, x_max, 0.0, y_max, ni, nj)
    blank = (grid.xc >= step_x) & (grid.yc <= step_y)
    return StructuredGrid2D(grid.X, grid.Y, blank)


def make_corner_grid(ni=400, nj=400, corner_x=0.5, corner_y=0.5):
    """Unit square with the lower-left block blanked (diffraction corner)."""
    grid = make_cartesian(0.0, 1.0, 0.0, 1.0, ni, nj)
    blank = (grid.xc <= corner_x) & (grid.yc <= corner_y)
    return StructuredGrid2D(grid.X, grid.Y, blank)


def make_ramp_grid(length=3.0, height=1.0, ramp_start=0.5, ramp_end=1.5,
                   ramp_angle=np.deg2rad(15.0), ni=120, nj=40):
    """Channel with an inclined lower-wall ramp, body-fitted in y.

    The lower wall rises at `ramp_angle` between ramp_start and ramp_end
    and stays flat after; the upper wall is y = height.
    """
    x = np.linspace(0.0, length, ni + 1)
    y_bottom = np.clip(x - ramp_start, 0.0, ramp_end - ramp_start) * np.tan(ramp_angle)
    if np.any(y_bottom >= height):
        raise ValueError("ramp reaches the channel roof")
    eta = np.linspace(0.0, 1.0, nj + 1)
    X = np.repeat(x[:, None], nj + 1, axis=1)
    Y = y_bottom[:, None] + eta[None, :] * (height - y_bottom[:, None])
    return StructuredGrid2D(X, Y)


def make_polar_grid(r_inner=1.0, r_outer=3.0, ni=45, nj=45):
    """Half annulus on the windward side of a cylinder at the origin.

    i runs circumferentially from the top (x=0, y=+r) through the
    stagnation direction (-x) to the bottom; j runs radially outward from
    the cylinder. Node y-coordinates are built by mirroring the upper half
    so the grid is symmetric about y=0 to the last bit.
    """
    r = np.linspace(r_inner, r_outer, nj + 1)
    half = (ni + 1) / 2.0 - 0.5
    # angle from the -x axis, antisymmetric in the node index
    phi = (half - np.arange(ni + 1)) * (np.pi / ni)
    cx = -np.cos(phi)
    cy = np.sin(phi)
    # exact mirror symmetry: second half reflected from the first
    cy = np.where(np.arange(ni + 1) > half, -cy[::-1], cy)
    cx = np.where(np.arange(ni + 1) > half, cx[::-1], cx)
    X = cx[:, None] * r[None, :]
    Y = cy[:, None] * r[None, :]
    return StructuredGrid2D(X, Y)


def make_grid(kind, **params):
    builders = {
        "cartesian": make_cartesian,
        "ramp": make_ramp_grid,
        "polar": make_polar_grid,
        "step": make_step_grid,
        "corner": make_corner_grid,
    }
    if kind not in builders:
        raise ValueError(f"unknown grid kind {kind!r}")
    return builders[kind](**params)
