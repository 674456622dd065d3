"""Bottleneck non-crossing perfect matchings of points in convex position."""

from ._core import (
    BnmError,
    SolveReport,
    __version__,
    cascades,
    catalan_count,
    cubic_solve,
    generate,
    oracle_solve,
    render_svg,
    solve,
    turning_angle,
    verify,
)

__all__ = [
    "BnmError",
    "SolveReport",
    "__version__",
    "cascades",
    "catalan_count",
    "cubic_solve",
    "generate",
    "oracle_solve",
    "render_svg",
    "solve",
    "turning_angle",
    "verify",
]
