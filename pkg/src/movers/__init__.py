"""Finite-volume central solvers for the compressible Euler equations.

Implements the LLF (Rusanov) baseline and the MOVERS family of
Rankine-Hugoniot based low-diffusion central schemes, including the
entropy-stable limiter blends, on 1D intervals and 2D structured grids.
"""
from .gas import GasModel
from .schemes import Scheme, SwitchParams
from .solver1d import BoundaryCondition, Field1D, Grid1D, TimeControls, run
from .solver2d import BC2D, Field2D, run_2d

__all__ = [
    "BC2D", "BoundaryCondition", "Field1D", "Field2D", "GasModel", "Grid1D",
    "Scheme", "SwitchParams", "TimeControls", "run", "run_2d",
]
