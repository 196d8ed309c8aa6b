"""Plotting front end for solver CSV outputs: 1D line plots with optional
exact-solution overlays and 2D contour plots at caption-specified levels."""
from .levels import contour_levels, parse_levels

__all__ = ["contour_levels", "parse_levels"]
