"""Candidate-surface invariants: twist, boundary slope, Euler characteristic,
and the r-cycle incompressibility filter."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .edgepath import (
    DOWNWARD,
    UPWARD,
    Edgepath,
    EdgepathSystem,
    final_r_value,
    path_length,
    r_cycle,
    system_sort_key,
)
from .diagram import NONHORIZONTAL, VERTICAL
from .enumeration import SeifertUnavailable, seifert_system, solve_systems
from .knots import MontesinosKnot

__all__ = [
    "GUARANTEED",
    "UNKNOWN",
    "CandidateSurface",
    "SlopeReport",
    "twist",
    "boundary_slope",
    "euler_characteristic",
    "incompressibility_status",
    "sheet_count",
    "slope_report",
    "candidate_surfaces",
]

GUARANTEED = "guaranteed"
UNKNOWN = "unknown"

INTERIOR = "interior"
INFINITY_TYPE = "infinity-type"

EULER_CONVENTION = "sheet-weighted"


def twist(sys: EdgepathSystem) -> Fraction:
    """Twist number 2(e- - e+): signed traversed edge length.

    e+ (e-) totals the upward (downward) traversed length over
    non-horizontal and vertical segments; infinity edges do not count.
    Partial segments contribute their fraction.
    """
    e_plus = Fraction(0)
    e_minus = Fraction(0)
    for path in sys.paths:
        for seg in path.segments:
            if seg.edge.kind not in (NONHORIZONTAL, VERTICAL):
                continue
            if seg.direction == DOWNWARD:
                e_minus += seg.length
            elif seg.direction == UPWARD:
                e_plus += seg.length
    return 2 * (e_minus - e_plus)


def boundary_slope(sys: EdgepathSystem, seifert_twist: Fraction) -> Fraction:
    """Boundary slope relative to the Seifert baseline: twist(sys) - twist(Seifert)."""
    return twist(sys) - Fraction(seifert_twist)


def sheet_count(sys: EdgepathSystem) -> int:
    """Least m with every m * |path length| integral (the sheet number)."""
    return lcm(*(path_length(p).denominator for p in sys.paths))


def euler_characteristic(sys: EdgepathSystem) -> int:
    """Euler characteristic of the candidate surface of a 3-tangle system.

    With lengths L_i and m the lcm of their denominators (the sheet
    count), the value is sum_i m(2 - L_i) - 4a - b, where [a, b] are
    the absolute ending curve-system weights of the m-sheeted surface:
    a = m and b = m u/(1-u) for the common ending u = b/(a+b).  (An
    m-sheeted surface ends on k copies of the far vertex's system and
    m-k of the near one, each carrying weight 1 in the a-slot, so
    a = m; b is forced by u.  This reduces to the worked family values
    a = n, b = n-1 at u = (n-1)/(2n-1).)  Defined for three
    non-constant paths ending at 0 <= u < 1.
    """
    if len(sys.paths) != 3:
        raise ValueError("Euler characteristic is defined for 3-tangle knots only")
    if any(p.constant for p in sys.paths):
        raise ValueError("Euler characteristic undefined with a constant path")
    if not 0 <= sys.common_u < 1:
        raise ValueError("Euler characteristic undefined for u outside [0, 1)")
    lengths = [path_length(p) for p in sys.paths]
    m = lcm(*(length.denominator for length in lengths))
    chi_paths = sum(m * (2 - length) for length in lengths)
    b = m * sys.common_u / (1 - sys.common_u)
    if b.denominator != 1:  # each path's ending forces den | m, so b is whole
        raise AssertionError(f"non-integral ending weight {b}")
    return int(chi_paths - 4 * m - b)


def incompressibility_status(rc) -> str:
    """Incompressibility filter on the cycle of final r-values.

    The candidate surface is guaranteed incompressible unless the cycle
    matches, up to rotation and reversal, one of: (0, r2, ..., rn),
    (1, ..., 1, rn), or (1, ..., 1, 2, rn).
    """
    rc = tuple(rc)
    if 0 in rc:
        return UNKNOWN
    non_ones = [i for i, r in enumerate(rc) if r != 1]
    if len(non_ones) <= 1:
        return UNKNOWN
    if len(non_ones) == 2:
        i, j = non_ones
        adjacent = j - i == 1 or (i == 0 and j == len(rc) - 1)
        if adjacent and 2 in (rc[i], rc[j]):
            return UNKNOWN
    return GUARANTEED


@dataclass(frozen=True)
class CandidateSurface:
    """Invariant bundle of one admissible edgepath system."""

    system: EdgepathSystem
    twist: Fraction
    slope: Fraction | None  # None when the knot has no Seifert baseline
    euler: int | None
    euler_convention: str | None
    r_cycle: tuple[int, ...] | None
    incompressibility: str
    seifert: bool
    sheets: int
    kind: str  # "interior" or "infinity-type"


@dataclass(frozen=True)
class SlopeReport:
    knot: MontesinosKnot
    surfaces: tuple[CandidateSurface, ...]
    seifert_twist: Fraction | None
    seifert_note: str | None  # why the baseline is missing, if it is


def _build_surface(
    sys: EdgepathSystem,
    seifert_twist: Fraction | None,
    seifert_sys: EdgepathSystem | None,
) -> CandidateSurface:
    tw = twist(sys)
    slope = tw - seifert_twist if seifert_twist is not None else None
    try:
        rc = r_cycle(sys)
    except ValueError:
        rc = None
    try:
        chi = euler_characteristic(sys)
    except ValueError:
        chi = None
    return CandidateSurface(
        system=sys,
        twist=tw,
        slope=slope,
        euler=chi,
        euler_convention=EULER_CONVENTION if chi is not None else None,
        r_cycle=rc,
        incompressibility=incompressibility_status(rc) if rc is not None else UNKNOWN,
        seifert=sys == seifert_sys,
        sheets=sheet_count(sys),
        kind=INFINITY_TYPE if sys.common_u < 0 else INTERIOR,
    )


def _surface_sort_key(surface: CandidateSurface) -> tuple:
    primary = surface.slope if surface.slope is not None else surface.twist
    return (primary, system_sort_key(surface.system))


def slope_report(knot) -> SlopeReport:
    """Run the full pipeline: enumerate systems and bundle their invariants.

    ``knot`` may be a MontesinosKnot or a sequence of tangle slopes
    (validated, so link input is rejected with a parity diagnosis).
    Surfaces are sorted by slope (by twist when there is no Seifert
    baseline, in which case the slope fields are None).
    """
    if not isinstance(knot, MontesinosKnot):
        knot = MontesinosKnot(tuple(Fraction(t) for t in knot))
    systems = solve_systems(knot.tangles)
    try:
        seifert_sys, seifert_tw = seifert_system(knot.tangles)
        note = None
    except SeifertUnavailable as exc:
        seifert_sys, seifert_tw = None, None
        note = str(exc)
    surfaces = tuple(
        sorted(
            (_build_surface(sys, seifert_tw, seifert_sys) for sys in systems),
            key=_surface_sort_key,
        )
    )
    return SlopeReport(knot, surfaces, seifert_tw, note)


def candidate_surfaces(knot) -> list[CandidateSurface]:
    """The sorted candidate surfaces of a Montesinos knot."""
    return list(slope_report(knot).surfaces)
