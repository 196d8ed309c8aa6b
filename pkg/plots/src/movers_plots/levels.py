"""Exact arithmetic-sequence contour levels.

Levels are generated from integer multiples of the step so that the list
matches the closed-form sequence start, start+step, ..., end with no
floating-point drift duplicates or dropped endpoints.
"""
import numpy as np


def contour_levels(start, end, step):
    """Levels start + k*step for k = 0 .. round((end-start)/step)."""
    if step <= 0.0:
        raise ValueError(f"contour step must be positive, got {step}")
    if end < start:
        raise ValueError("end must not precede start")
    n = int(round((end - start) / step))
    if abs(start + n * step - end) > 1e-9 * max(1.0, abs(end)):
        # end is not on the lattice; keep every level not exceeding end
        n = int(np.floor((end - start) / step + 1e-12))
    return start + step * np.arange(n + 1)


def parse_levels(text):
    """Parse a 'start:end:step' triple into a level array."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"expected start:end:step, got {text!r}")
    start, end, step = (float(p) for p in parts)
    return contour_levels(start, end, step)
