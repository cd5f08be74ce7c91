"""List coloring of plane and near-planar graphs.

Instances are passed around as text in the line format read by the CLI.
"""

from ._fivelist import (
    InfeasibleSpec,
    LimitError,
    ParseError,
    StructuralError,
    canonical,
    check,
    generate,
    is_choosable,
    render_svg,
    solve,
    solve_exact,
)

__all__ = [
    "InfeasibleSpec",
    "LimitError",
    "ParseError",
    "StructuralError",
    "canonical",
    "check",
    "generate",
    "is_choosable",
    "render_svg",
    "solve",
    "solve_exact",
]
