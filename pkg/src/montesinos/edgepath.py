"""Edgepaths, edgepath systems, admissibility and final r-values.

An edgepath is one tangle's monotone leftward walk through the graph:
an ordered run of segments, each a full or partial traversal of one
edge.  A segment is parametrized by the fraction of the edge already
covered, measured toward the vertex being approached, so a full
traversal is (0, 1) and a final stop mid-edge is (0, t).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import (
    HORIZONTAL,
    NONHORIZONTAL,
    Edge,
    UVPoint,
    Vertex,
    interpolate,
    tangle_vertex,
    uv_of_vertex,
    vertex_sort_key,
    vertices_adjacent,
)

__all__ = [
    "Segment",
    "Edgepath",
    "EdgepathSystem",
    "Violation",
    "full_segment",
    "partial_segment",
    "path_length",
    "final_r_value",
    "r_cycle",
    "validate_admissible",
    "path_sort_key",
    "system_sort_key",
]

DOWNWARD = "down"
UPWARD = "up"
LEVEL = "level"


@dataclass(frozen=True)
class Segment:
    """A directed traversal of part of one edge.

    ``toward`` is the edge endpoint being approached; fractions measure
    progress toward it, so ``end_frac`` = 1 means the segment reaches
    that vertex.  ``end_frac > start_frac`` always (zero-length
    segments are never built).
    """

    edge: Edge
    toward: Vertex
    start_frac: Fraction
    end_frac: Fraction

    @property
    def origin(self) -> Vertex:
        return self.edge.right if self.toward == self.edge.left else self.edge.left

    @property
    def length(self) -> Fraction:
        return self.end_frac - self.start_frac

    def point_at(self, t: Fraction) -> UVPoint:
        if self.toward == self.edge.left:
            return interpolate(self.edge, t)
        return interpolate(self.edge, 1 - t)

    @property
    def start_point(self) -> UVPoint:
        return self.point_at(self.start_frac)

    @property
    def end_point(self) -> UVPoint:
        return self.point_at(self.end_frac)

    @property
    def direction(self) -> str:
        """Sign of the v-change traversed: down, up or level."""
        dv = uv_of_vertex(self.toward).v - uv_of_vertex(self.origin).v
        if dv < 0:
            return DOWNWARD
        if dv > 0:
            return UPWARD
        return LEVEL


def full_segment(edge: Edge, toward: Vertex) -> Segment:
    return Segment(edge, toward, Fraction(0), Fraction(1))


def partial_segment(edge: Edge, toward: Vertex, end_frac: Fraction) -> Segment:
    if not 0 < end_frac <= 1:
        raise ValueError("partial segment fraction must lie in (0, 1]")
    return Segment(edge, toward, Fraction(0), Fraction(end_frac))


@dataclass(frozen=True)
class Edgepath:
    """One tangle's edgepath; constant paths have no segments.

    ``ending`` is the point where the path stops.  For a constant path
    it is the resting point on the tangle's horizontal edge.
    """

    tangle: Fraction
    segments: tuple[Segment, ...]
    ending: UVPoint

    @property
    def constant(self) -> bool:
        return not self.segments

    @property
    def start_vertex(self) -> Vertex:
        return tangle_vertex(self.tangle)


@dataclass(frozen=True)
class EdgepathSystem:
    paths: tuple[Edgepath, ...]
    common_u: Fraction

    @property
    def ending_points(self) -> tuple[UVPoint, ...]:
        return tuple(p.ending for p in self.paths)


@dataclass(frozen=True)
class Violation:
    condition: str  # "E1" .. "E4"
    path_index: int | None
    detail: str


def path_length(g: Edgepath) -> Fraction:
    """Total traversed edge length; horizontal segments contribute 0."""
    return sum(
        (s.length for s in g.segments if s.edge.kind != HORIZONTAL),
        Fraction(0),
    )


def final_r_value(g: Edgepath) -> int:
    """Signed denominator of the final edge line's v-value at u = 1.

    The final segment's underlying edge (partial segments are collinear
    with it) is extended rightward to the line u = 1; the result is the
    denominator of the v-coordinate there, negated when the segment
    travels downward.  Defined only for non-horizontal final segments:
    a vertical final edge never meets u = 1, and the level infinity
    edge of <0> has no established sign.
    """
    if g.constant:
        raise ValueError("constant path has no final edge")
    seg = g.segments[-1]
    if seg.edge.kind != NONHORIZONTAL:
        raise ValueError(f"final r-value undefined for {seg.edge.kind} final edge")
    left, right = seg.edge.left.slope, seg.edge.right.slope
    v_at_one = Fraction(
        left.numerator - right.numerator,
        left.denominator - right.denominator,
    )
    r = v_at_one.denominator
    return -r if seg.direction == DOWNWARD else r


def r_cycle(sys: EdgepathSystem) -> tuple[int, ...]:
    """Final r-values in tangle order; raises if any path has none."""
    return tuple(final_r_value(p) for p in sys.paths)


def _check_minimality(path: Edgepath, i: int) -> Violation | None:
    for a, b in zip(path.segments, path.segments[1:]):
        if a.edge == b.edge:
            return Violation("E2", i, f"path retraces edge {a.edge!r}")
        shared = a.toward
        prev_vertex, next_vertex = a.origin, b.toward
        if b.origin != shared:
            return Violation("E2", i, "consecutive segments do not share a vertex")
        if vertices_adjacent(prev_vertex, next_vertex):
            return Violation(
                "E2",
                i,
                f"two sides of triangle {prev_vertex!r},{shared!r},{next_vertex!r}",
            )
    return None


def _check_monotone(path: Edgepath, i: int) -> Violation | None:
    prev_u = None
    for seg in path.segments:
        u0, u1 = seg.start_point.u, seg.end_point.u
        if u1 > u0:
            return Violation("E4", i, "u-coordinate increases along a segment")
        if prev_u is not None and u0 > prev_u:
            return Violation("E4", i, "u-coordinate increases between segments")
        prev_u = u1
    return None


def _check_start(path: Edgepath, tangle: Fraction, i: int) -> Violation | None:
    if path.tangle != tangle:
        return Violation("E1", i, f"path tangle {path.tangle} != knot tangle {tangle}")
    vertex_uv = uv_of_vertex(tangle_vertex(tangle))
    if path.constant:
        # Resting anywhere on the horizontal edge, including the tangle
        # vertex itself (a zero-length path).
        u, v = path.ending
        if v != tangle or not vertex_uv.u <= u <= 1:
            return Violation("E1", i, "constant path not resting on its horizontal edge")
        return None
    first = path.segments[0]
    if first.start_point != vertex_uv:
        return Violation("E1", i, "path does not start at its tangle vertex")
    last = path.segments[-1]
    if last.end_point != path.ending:
        return Violation("E1", i, "recorded ending disagrees with final segment")
    return None


def validate_admissible(sys: EdgepathSystem, knot: list[Fraction]) -> Violation | None:
    """Check admissibility of an edgepath system against its knot.

    E1: each path starts at its tangle vertex (or is a constant path
    resting strictly inside the tangle's horizontal edge).
    E2: minimality (no retraced edge, no two sides of a triangle in
    succession).  E3: common ending u-coordinate with v-sum zero.
    E4: u non-increasing along each path.

    Returns the first violation found (path defects E2/E4 before the
    endpoint conditions, matching how a reversed path is reported) or
    None when the system is admissible.
    """
    if len(sys.paths) != len(knot):
        return Violation("E1", None, "path count differs from tangle count")
    for i, path in enumerate(sys.paths):
        for seg_a, seg_b in zip(path.segments, path.segments[1:]):
            if seg_a.end_point != seg_b.start_point:
                raise ValueError(f"path {i} segments are not contiguous")
    for i, path in enumerate(sys.paths):
        v = _check_minimality(path, i)
        if v:
            return v
    for i, path in enumerate(sys.paths):
        v = _check_monotone(path, i)
        if v:
            return v
    for i, (path, tangle) in enumerate(zip(sys.paths, knot)):
        v = _check_start(path, Fraction(tangle), i)
        if v:
            return v
    endings = sys.ending_points
    if any(pt.u != sys.common_u for pt in endings):
        return Violation("E3", None, "ending points do not share the common u")
    v_sum = sum((pt.v for pt in endings), Fraction(0))
    if v_sum != 0:
        return Violation("E3", None, f"ending v-coordinates sum to {v_sum}, not 0")
    return None


def _segment_sort_key(seg: Segment) -> tuple:
    return (
        vertex_sort_key(seg.origin),
        vertex_sort_key(seg.toward),
        seg.start_frac,
        seg.end_frac,
    )


def path_sort_key(path: Edgepath) -> tuple:
    return (
        path.tangle,
        len(path.segments),
        tuple(_segment_sort_key(s) for s in path.segments),
        path.ending,
    )


def system_sort_key(sys: EdgepathSystem) -> tuple:
    return (sys.common_u, tuple(path_sort_key(p) for p in sys.paths))
