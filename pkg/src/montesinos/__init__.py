"""Exact computation of boundary slopes and Euler characteristics of
candidate essential surfaces in Montesinos knot exteriors, via edgepath
systems in the Hatcher-Oertel diagram."""

from .knots import (
    KnotError,
    MontesinosKnot,
    canonical_form,
    format_knot,
    is_hyperbolic,
    is_one_one,
    parse,
    pretzel_torus_check,
    to_pretzel,
)
from .enumeration import SeifertUnavailable, seifert_system, solve_systems
from .surface import (
    CandidateSurface,
    SlopeReport,
    boundary_slope,
    candidate_surfaces,
    euler_characteristic,
    incompressibility_status,
    slope_report,
    twist,
)

__version__ = "0.1.0"

__all__ = [
    "KnotError",
    "MontesinosKnot",
    "SeifertUnavailable",
    "CandidateSurface",
    "SlopeReport",
    "parse",
    "format_knot",
    "canonical_form",
    "to_pretzel",
    "pretzel_torus_check",
    "is_hyperbolic",
    "is_one_one",
    "solve_systems",
    "seifert_system",
    "twist",
    "boundary_slope",
    "euler_characteristic",
    "incompressibility_status",
    "candidate_surfaces",
    "slope_report",
    "__version__",
]
