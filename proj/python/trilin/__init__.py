"""Weighted squared-distance extrema over a triangle's plane."""

from ._core import (
    Error,
    Triangle,
    center,
    classify,
    eval_f,
    inequality,
    isogonal,
    mass_vector_identity,
    render_svg,
    set_tolerance,
    solve,
    tolerance,
    verify,
)

__all__ = [
    "Error",
    "Triangle",
    "center",
    "classify",
    "eval_f",
    "inequality",
    "isogonal",
    "mass_vector_identity",
    "render_svg",
    "set_tolerance",
    "solve",
    "tolerance",
    "verify",
]
