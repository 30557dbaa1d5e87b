"""The infinite planar graph of curve systems in the uv-plane.

Vertices are of three kinds: the infinity vertex at (-1, 0), a circle
vertex <p/q>o at (1, p/q) for every reduced slope, and a tangle vertex
<p/q> at ((q-1)/q, p/q).  Edges are non-horizontal (between tangle
vertices whose slopes are Farey neighbors), vertical (between
consecutive integer tangle vertices, all at u = 0), horizontal (from a
circle vertex to its tangle vertex) and infinity edges (from an integer
tangle vertex to the infinity vertex).

Rational points of the graph carry projective curve-system coordinates
[a, b, c] with u = b/(a+b) and v = c/(a+b).  The graph is never
materialized; neighbors are computed on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple

__all__ = [
    "TANGLE",
    "CIRCLE",
    "INFINITY",
    "NONHORIZONTAL",
    "VERTICAL",
    "HORIZONTAL",
    "INFINITY_EDGE",
    "Vertex",
    "UVPoint",
    "CurveSystem",
    "Edge",
    "tangle_vertex",
    "circle_vertex",
    "INFINITY_VERTEX",
    "uv_of_vertex",
    "vertex_sort_key",
    "is_nonhorizontal_edge",
    "vertices_adjacent",
    "farey_parents",
    "mediant",
    "edge_between",
    "interpolate",
    "fraction_from_u",
    "left_neighbors",
    "locate",
    "curve_system_at",
]

TANGLE = "tangle"
CIRCLE = "circle"
INFINITY = "infinity"

NONHORIZONTAL = "nonhorizontal"
VERTICAL = "vertical"
HORIZONTAL = "horizontal"
INFINITY_EDGE = "infinity"


@dataclass(frozen=True)
class Vertex:
    kind: str
    slope: Fraction | None = None  # None only for the infinity vertex

    def __repr__(self):
        if self.kind == INFINITY:
            return "<inf>"
        if self.kind == CIRCLE:
            return f"<{self.slope}>o"
        return f"<{self.slope}>"


def tangle_vertex(slope) -> Vertex:
    return Vertex(TANGLE, Fraction(slope))


def circle_vertex(slope) -> Vertex:
    return Vertex(CIRCLE, Fraction(slope))


INFINITY_VERTEX = Vertex(INFINITY)

_KIND_RANK = {TANGLE: 0, CIRCLE: 1, INFINITY: 2}


def vertex_sort_key(v: Vertex) -> tuple:
    return (_KIND_RANK[v.kind], v.slope if v.slope is not None else Fraction(0))


class UVPoint(NamedTuple):
    u: Fraction
    v: Fraction


class CurveSystem(NamedTuple):
    """Projective weights [a, b, c] in least terms, scaled so a + b > 0."""

    a: int
    b: int
    c: int


def _normalize_curve_system(a: int, b: int, c: int) -> CurveSystem:
    if a + b == 0:
        raise ValueError("curve system requires a + b != 0")
    g = gcd(gcd(abs(a), abs(b)), abs(c))
    if a + b < 0:
        g = -g
    return CurveSystem(a // g, b // g, c // g)


def uv_of_vertex(v: Vertex) -> UVPoint:
    """uv-coordinates: <inf> at (-1,0), <p/q>o at (1,p/q), <p/q> at ((q-1)/q, p/q)."""
    if v.kind == INFINITY:
        return UVPoint(Fraction(-1), Fraction(0))
    s = v.slope
    if v.kind == CIRCLE:
        return UVPoint(Fraction(1), s)
    return UVPoint(Fraction(s.denominator - 1, s.denominator), s)


def is_nonhorizontal_edge(x: Fraction, y: Fraction) -> bool:
    """Determinant test: reduced slopes x = p/q, y = r/s span an edge iff |ps - qr| = 1."""
    return abs(x.numerator * y.denominator - x.denominator * y.numerator) == 1


def vertices_adjacent(a: Vertex, b: Vertex) -> bool:
    """Whether two vertices are joined by an edge of the graph.

    Tangle-tangle adjacency is the determinant test (which covers the
    vertical edges between consecutive integers); the infinity vertex is
    adjacent exactly to the integer tangle vertices; a circle vertex is
    adjacent only to the tangle vertex of the same slope.
    """
    if a == b:
        return False
    kinds = {a.kind, b.kind}
    if kinds == {TANGLE}:
        return is_nonhorizontal_edge(a.slope, b.slope)
    if kinds == {TANGLE, INFINITY}:
        t = a if a.kind == TANGLE else b
        return t.slope.denominator == 1
    if kinds == {TANGLE, CIRCLE}:
        return a.slope == b.slope
    return False


def farey_parents(slope: Fraction) -> tuple[Fraction, Fraction]:
    """The two Farey neighbors of p/q with smaller denominator, q >= 2.

    Returned in increasing order.  These are exactly the left endpoints
    of the two non-horizontal edges leaving <p/q> leftward.
    """
    p, q = slope.numerator, slope.denominator
    if q < 2:
        raise ValueError("integer vertices have no Farey parents")
    s1 = pow(p, -1, q)  # p*s1 = 1 mod q, 1 <= s1 <= q-1
    r1 = (p * s1 - 1) // q
    a = Fraction(r1, s1)
    b = Fraction(p - r1, q - s1)
    return (a, b) if a < b else (b, a)


def mediant(x: Fraction, y: Fraction) -> Fraction:
    return Fraction(x.numerator + y.numerator, x.denominator + y.denominator)


@dataclass(frozen=True)
class Edge:
    """An edge with canonically ordered endpoints.

    For non-horizontal edges ``left`` has the smaller u-coordinate
    (smaller denominator); paths traverse from right to left.  For
    vertical edges ``left`` is the lower integer vertex and ``right``
    the upper (both at u = 0).  For infinity edges ``left`` is the
    infinity vertex.  For horizontal edges ``left`` is the tangle
    vertex, ``right`` the circle vertex.
    """

    kind: str
    left: Vertex
    right: Vertex

    def uv_endpoints(self) -> tuple[UVPoint, UVPoint]:
        return uv_of_vertex(self.left), uv_of_vertex(self.right)

    def u_span(self) -> tuple[Fraction, Fraction]:
        """(u_left, u_right); degenerate for vertical edges."""
        return uv_of_vertex(self.left).u, uv_of_vertex(self.right).u

    def __repr__(self):
        return f"[{self.left!r},{self.right!r}]"


def edge_between(a: Vertex, b: Vertex) -> Edge:
    """The edge joining two adjacent vertices, canonically oriented."""
    if not vertices_adjacent(a, b):
        raise ValueError(f"{a!r} and {b!r} are not adjacent")
    kinds = {a.kind, b.kind}
    if kinds == {TANGLE, INFINITY}:
        t = a if a.kind == TANGLE else b
        return Edge(INFINITY_EDGE, INFINITY_VERTEX, t)
    if kinds == {TANGLE, CIRCLE}:
        t = a if a.kind == TANGLE else b
        c = b if a.kind == TANGLE else a
        return Edge(HORIZONTAL, t, c)
    # Tangle-tangle: vertical when both slopes are integers.
    if a.slope.denominator == 1 and b.slope.denominator == 1:
        lo, hi = (a, b) if a.slope < b.slope else (b, a)
        return Edge(VERTICAL, lo, hi)
    lo, hi = (a, b) if a.slope.denominator < b.slope.denominator else (b, a)
    return Edge(NONHORIZONTAL, lo, hi)


def interpolate(edge: Edge, frac: Fraction) -> UVPoint:
    """Point at fraction ``frac`` along an edge, measured toward ``left``.

    frac = 0 is the right endpoint, frac = 1 the left.  Non-horizontal
    edges use the projective barycentric parametrization (weight frac on
    the left vertex's curve system); the other kinds interpolate
    linearly in uv-coordinates, which agrees with the projective rule
    where both apply.
    """
    t = Fraction(frac)
    if not 0 <= t <= 1:
        raise ValueError("fraction must lie in [0, 1]")
    if edge.kind == NONHORIZONTAL:
        p, q = edge.left.slope.numerator, edge.left.slope.denominator
        r, s = edge.right.slope.numerator, edge.right.slope.denominator
        den = t * (q - s) + s
        return UVPoint((t * (q - s) + (s - 1)) / den, (t * (p - r) + r) / den)
    if edge.kind == VERTICAL:
        upper = edge.right.slope
        return UVPoint(Fraction(0), upper - t)
    if edge.kind == INFINITY_EDGE:
        m = edge.right.slope
        return UVPoint(-t, m * (1 - t))
    # Horizontal: u from 1 down to (q-1)/q at constant v.
    slope = edge.left.slope
    return UVPoint(1 - t / slope.denominator, slope)


def fraction_from_u(edge: Edge, u: Fraction) -> Fraction:
    """Invert ``interpolate`` in the u-coordinate.

    Returns the fraction t in [0, 1] with interpolate(edge, t).u == u.
    Vertical edges have no u-span and are rejected.
    """
    u = Fraction(u)
    if edge.kind == VERTICAL:
        raise ValueError("vertical edges are not parametrized by u")
    lo, hi = edge.u_span()
    if not lo <= u <= hi:
        raise ValueError(f"u = {u} outside edge span [{lo}, {hi}]")
    if edge.kind == NONHORIZONTAL:
        q = edge.left.slope.denominator
        s = edge.right.slope.denominator
        return (s * u - s + 1) / ((q - s) * (1 - u))
    if edge.kind == INFINITY_EDGE:
        return -u
    return (1 - u) * edge.left.slope.denominator


def left_neighbors(v: Vertex) -> list[Edge]:
    """Edges leaving a tangle vertex leftward (non-increasing u).

    A vertex <p/q> with q >= 2 has exactly its two Farey-parent edges.
    An integer vertex <m> has the two vertical edges and its infinity
    edge (u unchanged or decreasing).
    """
    if v.kind != TANGLE:
        raise ValueError("left_neighbors is defined for tangle vertices")
    s = v.slope
    if s.denominator == 1:
        m = s.numerator
        return [
            edge_between(tangle_vertex(m - 1), v),
            edge_between(v, tangle_vertex(m + 1)),
            edge_between(v, INFINITY_VERTEX),
        ]
    return [edge_between(tangle_vertex(parent), v) for parent in farey_parents(s)]


def locate(point: UVPoint) -> Vertex | Edge | None:
    """Find the vertex or edge of the graph containing a rational point.

    Returns None when the point does not lie on the graph.  Points in
    the open band 0 < u < 1 are located exactly: the left endpoint
    denominator is bounded by 1/(1-u), and for each candidate left
    vertex the collinearity slope determines the right endpoint by a
    unit-determinant divisibility test.
    """
    u, v = Fraction(point[0]), Fraction(point[1])
    if u < -1 or u > 1:
        return None
    if u == 1:
        return circle_vertex(v)
    if u == -1:
        return INFINITY_VERTEX if v == 0 else None
    if u < 0:
        # On an infinity edge iff v = m(1+u) for an integer m.
        m = v / (1 + u)
        if m.denominator != 1:
            return None
        return edge_between(INFINITY_VERTEX, tangle_vertex(m.numerator))
    if u == 0:
        if v.denominator == 1:
            return tangle_vertex(v)
        lo = v.numerator // v.denominator
        return edge_between(tangle_vertex(lo), tangle_vertex(lo + 1))
    # 0 < u < 1.  Vertex?
    one_minus = 1 - u
    if one_minus.numerator == 1:
        q = one_minus.denominator
        if v.denominator == q:
            return tangle_vertex(v)
    # Scan candidate left endpoints <p/q> with (q-1)/q < u.
    q_cap = (1 / one_minus).__ceil__()
    for q in range(1, q_cap + 1):
        if Fraction(q - 1, q) >= u:
            break
        for p in {(q * v).__floor__(), (q * v).__ceil__()}:
            if gcd(p, q) != 1:
                continue
            left_slope = Fraction(p, q)
            sigma = (v - left_slope) / (u - Fraction(q - 1, q))
            if sigma == 0:
                continue  # no level non-horizontal edges exist
            for eps in (1, -1):
                d = eps / sigma  # = q - s on a genuine edge
                if d.denominator != 1 or d >= 0:
                    continue
                s = q - d.numerator
                r, rem = divmod(p * s - eps, q)
                if rem != 0:
                    continue
                if u >= Fraction(s - 1, s):
                    continue
                return edge_between(tangle_vertex(left_slope), tangle_vertex(Fraction(r, s)))
    # Interior of a horizontal edge: constant v strictly right of <v>.
    if u > Fraction(v.denominator - 1, v.denominator):
        return edge_between(tangle_vertex(v), circle_vertex(v))
    return None


def curve_system_at(point: UVPoint) -> CurveSystem:
    """Projective curve system [s(q-p), sp, rq] of a rational point (p/q, r/s).

    The point must lie on the graph; vertices reproduce [0, q, p] for
    circles and [1, q-1, p] for tangles.
    """
    u, v = Fraction(point[0]), Fraction(point[1])
    if locate((u, v)) is None:
        raise ValueError(f"({u}, {v}) is not a point of the graph")
    p, q = u.numerator, u.denominator
    r, s = v.numerator, v.denominator
    return _normalize_curve_system(s * (q - p), s * p, r * q)
