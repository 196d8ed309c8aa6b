"""Structured errors raised by the solvers.

Positivity failures carry the offending cell location and time so that
robustness claims can be checked instead of silently clamped away.
"""


class InvalidStateError(ValueError):
    """A gas state with non-positive density or pressure was supplied."""


class PositivityError(RuntimeError):
    """Density or pressure became non-positive during a computation."""

    def __init__(self, message, cell=None, time=None):
        self.cell = cell
        self.time = time
        where = ""
        if cell is not None:
            where += f" at cell {cell}"
        if time is not None:
            where += f" at t={time:.6g}"
        super().__init__(message + where)


class VacuumError(ValueError):
    """The Riemann problem generates vacuum; no solution is returned."""
