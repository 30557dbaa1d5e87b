"""Enumeration of admissible edgepath systems for a Montesinos knot.

Per tangle, the monotone leftward walks through the graph are organized
around maximal chains: strictly u-decreasing runs of Farey-parent steps
from the tangle vertex down to an integer vertex, pruned by minimality
(no two sides of a triangle in succession).  Chains always reach an
integer vertex, after which a walk may append a bounded monotone run of
vertical edges or a single infinity edge; both kinds of continuation
are terminal.

Systems are found in three regimes of the common ending u-coordinate:

* 0 < u < 1: every path ends part-way along a chain.  The v-coordinate
  of each chain is piecewise linear in u, so the ending condition
  (equal u, v-sum zero) reduces to exact linear root-finding between
  merged breakpoints.  A constant path resting on its horizontal edge
  is allowed whenever the common u is at least its tangle vertex's;
  at equality the path degenerates to the vertex point itself, the
  canonical representative of a zero-length path.  (These vertex-point
  paths are required for completeness: the cable annulus of a torus
  pretzel only arises from a system whose middle path is a single
  vertex.)
* u = 0: every path ends exactly at an integer vertex (its chain's end,
  possibly continued by a fully traversed vertical run); the ending
  integers must sum to zero.
* u < 0: every path continues along its infinity edge.  The system
  where all paths reach the infinity vertex (u = -1) is always
  admissible.  When the arrival integers sum to zero the v-sum vanishes
  identically on -1 < u < 0 and one mid-edge representative at
  u = -1/2 stands in for the whole family (the twist number ignores
  infinity edges, so every member has the same invariants).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil

from .diagram import (
    INFINITY,
    INFINITY_VERTEX,
    TANGLE,
    Edge,
    UVPoint,
    Vertex,
    edge_between,
    farey_parents,
    fraction_from_u,
    tangle_vertex,
    uv_of_vertex,
    vertex_sort_key,
    vertices_adjacent,
)
from .edgepath import (
    Edgepath,
    EdgepathSystem,
    full_segment,
    partial_segment,
    system_sort_key,
)

__all__ = [
    "Skeleton",
    "SeifertUnavailable",
    "minimal_skeletons",
    "v_profile",
    "profile_v_at",
    "solve_systems",
    "seifert_system",
    "vertical_bound",
]

MAX_TANGLES = 6


class SeifertUnavailable(Exception):
    """No Seifert baseline exists for this knot (no even denominator)."""


@dataclass(frozen=True)
class Skeleton:
    """A maximal minimal-walk skeleton: tangle vertex leftward.

    ``vertices`` is the walk in traversal order.  A realized edgepath
    ends somewhere along the skeleton; ``u_span`` is the reachable
    interval of ending u-coordinates.
    """

    tangle: Fraction
    vertices: tuple[Vertex, ...]

    @property
    def kind(self) -> str:
        last = self.vertices[-1]
        if last.kind == INFINITY:
            return "infinity"
        if self._chain_end() < len(self.vertices) - 1:
            return "vertical"
        return "chain"

    def _chain_end(self) -> int:
        for i, v in enumerate(self.vertices):
            if v.kind == TANGLE and v.slope.denominator == 1:
                return i
        raise ValueError("skeleton never reaches an integer vertex")

    @property
    def final_edge(self) -> Edge:
        return edge_between(self.vertices[-2], self.vertices[-1])

    @property
    def u_span(self) -> tuple[Fraction, Fraction]:
        kind = self.kind
        if kind == "chain":
            return Fraction(0), uv_of_vertex(self.vertices[0]).u
        if kind == "vertical":
            return Fraction(0), Fraction(0)
        return Fraction(-1), Fraction(0)

    def _key(self) -> tuple:
        return tuple(vertex_sort_key(v) for v in self.vertices)


def vertical_bound(tangles: list[Fraction]) -> int:
    """Safe cap on consecutive vertical edges in one path.

    A path whose ending v exceeds the total variation available to the
    other paths can never satisfy a zero v-sum; ceil(sum |tangles|) + 2
    over-approximates that reach.
    """
    return ceil(sum(abs(Fraction(t)) for t in tangles)) + 2


def _validated_tangles(knot) -> list[Fraction]:
    tangles = [Fraction(t) for t in knot]
    if len(tangles) < 3:
        raise ValueError("a Montesinos knot needs at least 3 tangles")
    if len(tangles) > MAX_TANGLES:
        raise ValueError(f"enumeration supports at most {MAX_TANGLES} tangles")
    for t in tangles:
        if t.denominator < 2:
            raise ValueError(f"tangle slope {t} is integral")
    return tangles


@dataclass(frozen=True)
class _Chain:
    """A maximal chain with its uv breakpoints precomputed."""

    vertices: tuple[Vertex, ...]
    us: tuple[Fraction, ...]
    vs: tuple[Fraction, ...]


def _chains(tangle: Fraction) -> list[_Chain]:
    """All minimal strictly-leftward chains from <tangle> to an integer vertex.

    At each vertex the two Farey parents are candidate steps; a step
    closing a triangle with the previous vertex is discarded.  At least
    one parent always survives, so every chain terminates at u = 0.
    """
    start = tangle_vertex(tangle)
    done: list[tuple[Vertex, ...]] = []
    stack: list[tuple[Vertex, ...]] = [(start,)]
    while stack:
        seq = stack.pop()
        last = seq[-1]
        if last.slope.denominator == 1:
            done.append(seq)
            continue
        prev = seq[-2] if len(seq) > 1 else None
        for parent in farey_parents(last.slope):
            pv = tangle_vertex(parent)
            if prev is not None and vertices_adjacent(prev, pv):
                continue
            stack.append(seq + (pv,))
    done.sort(key=lambda seq: tuple(vertex_sort_key(v) for v in seq))
    out = []
    for seq in done:
        pts = [uv_of_vertex(v) for v in seq]
        out.append(_Chain(seq, tuple(p.u for p in pts), tuple(p.v for p in pts)))
    return out


def _vertical_first_step_allowed(chain: _Chain, step: int) -> bool:
    # The vertical edge from <m> to <m+step> closes a triangle with the
    # arrival edge exactly when the penultimate vertex is (2m+step)/2.
    m = chain.vertices[-1].slope
    prev = chain.vertices[-2]
    return prev.slope != Fraction(2 * m.numerator + step, 2)


def minimal_skeletons(
    tangle: Fraction,
    u_floor: Fraction = Fraction(-1),
    max_vertical: int = 4,
) -> list[Skeleton]:
    """All skeletons from <tangle> whose final edge's u-span meets [u_floor, 1)."""
    tangle = Fraction(tangle)
    u_floor = Fraction(u_floor)
    skels: list[Skeleton] = []
    for chain in _chains(tangle):
        # Chain: final edge spans [0, u of penultimate vertex).
        if u_floor < chain.us[-2]:
            skels.append(Skeleton(tangle, chain.vertices))
        if u_floor <= 0:
            m = chain.vertices[-1].slope
            for step in (1, -1):
                if not _vertical_first_step_allowed(chain, step):
                    continue
                seq = chain.vertices
                for length in range(1, max_vertical + 1):
                    seq = seq + (tangle_vertex(m + step * length),)
                    skels.append(Skeleton(tangle, seq))
        if u_floor < 0:
            skels.append(Skeleton(tangle, chain.vertices + (INFINITY_VERTEX,)))
    skels.sort(key=Skeleton._key)
    return skels


def v_profile(s: Skeleton) -> tuple[UVPoint, ...]:
    """Breakpoints (u, v) of the skeleton's v(u) graph, u strictly decreasing.

    Vertical runs stall at u = 0 and are excluded; the infinity vertex
    contributes the final breakpoint (-1, 0).
    """
    if s.kind == "vertical":
        vertices = s.vertices[: s._chain_end() + 1]
    else:
        vertices = s.vertices
    return tuple(uv_of_vertex(v) for v in vertices)


def profile_v_at(profile: tuple[UVPoint, ...], u: Fraction) -> Fraction:
    """Evaluate a piecewise-linear profile at u (within its span)."""
    u = Fraction(u)
    for (u1, v1), (u2, v2) in zip(profile, profile[1:]):
        if u2 <= u <= u1:
            return v2 + (u - u2) * (v1 - v2) / (u1 - u2)
    raise ValueError(f"u = {u} outside profile span")


# ---------------------------------------------------------------------------
# Path materialization


def _full_path(vertices: tuple[Vertex, ...], tangle: Fraction) -> Edgepath:
    segs = tuple(
        full_segment(edge_between(a, b), b) for a, b in zip(vertices, vertices[1:])
    )
    return Edgepath(tangle, segs, uv_of_vertex(vertices[-1]))


def _truncated_path(chain: _Chain, tangle: Fraction, u_star: Fraction) -> Edgepath:
    """The chain's edgepath stopped at u-coordinate u_star in (0, start)."""
    segs = []
    for j in range(1, len(chain.vertices)):
        edge = edge_between(chain.vertices[j - 1], chain.vertices[j])
        if chain.us[j] <= u_star:
            t = fraction_from_u(edge, u_star)
            segs.append(partial_segment(edge, chain.vertices[j], t))
            return Edgepath(tangle, tuple(segs), segs[-1].end_point)
        segs.append(full_segment(edge, chain.vertices[j]))
    raise AssertionError("u_star below the chain's reach")


def _infinity_path(chain: _Chain, tangle: Fraction, t: Fraction) -> Edgepath:
    segs = [
        full_segment(edge_between(a, b), b)
        for a, b in zip(chain.vertices, chain.vertices[1:])
    ]
    edge = edge_between(chain.vertices[-1], INFINITY_VERTEX)
    segs.append(partial_segment(edge, INFINITY_VERTEX, t))
    return Edgepath(tangle, tuple(segs), segs[-1].end_point)


def _constant_path(tangle: Fraction, u_star: Fraction) -> Edgepath:
    return Edgepath(tangle, (), UVPoint(u_star, tangle))


# ---------------------------------------------------------------------------
# Root solving


def _linear_at(chain: _Chain, probe: Fraction) -> tuple[Fraction, Fraction]:
    """(intercept, slope) of the chain's v(u) on the piece containing probe."""
    us, vs = chain.us, chain.vs
    for i in range(1, len(us)):
        if us[i] <= probe:
            slope = (vs[i - 1] - vs[i]) / (us[i - 1] - us[i])
            return vs[i] - us[i] * slope, slope
    raise AssertionError("probe outside chain span")


def _solve_interior(tangles, per_chains, found) -> None:
    """Roots of the v-sum with common u in (0, 1)."""

    def emit(combo, u_star):
        paths = []
        for option, tangle in zip(combo, tangles):
            if option is None:
                paths.append(_constant_path(tangle, u_star))
            else:
                paths.append(_truncated_path(option, tangle, u_star))
        found.add(EdgepathSystem(tuple(paths), u_star))

    per_options = [[*chains, None] for chains in per_chains]
    for combo in product(*per_options):
        # Intersect ending domains: chains cover (0, start u) open (u = 0
        # belongs to the at-zero regime, fraction 0 to the shorter path);
        # constants cover [(q-1)/q, 1), closed where they degenerate to
        # the vertex point.
        lo, hi = Fraction(0), Fraction(1)
        lo_attainable = False
        for option, tangle in zip(combo, tangles):
            if option is None:
                q = tangle.denominator
                olo, attainable = Fraction(q - 1, q), True
            else:
                olo, attainable = Fraction(0), False
                hi = min(hi, option.us[0])
            if olo > lo:
                lo, lo_attainable = olo, attainable
            elif olo == lo:
                lo_attainable = lo_attainable and attainable
        if lo >= hi:
            continue

        def valid(x):
            return (lo < x or (x == lo and lo_attainable)) and x < hi

        cuts = {lo, hi}
        for option in combo:
            if option is not None:
                cuts.update(u for u in option.us if lo < u < hi)
        breaks = sorted(cuts)
        for a, b in zip(breaks, breaks[1:]):
            probe = (a + b) / 2
            intercept, coeff = Fraction(0), Fraction(0)
            for option, tangle in zip(combo, tangles):
                if option is None:
                    intercept += tangle
                else:
                    i0, c0 = _linear_at(option, probe)
                    intercept += i0
                    coeff += c0
            if coeff != 0:
                u_star = -intercept / coeff
                if a <= u_star <= b and valid(u_star):
                    emit(combo, u_star)
            elif intercept == 0:
                # v-sum vanishes identically on (a, b): same twist for the
                # whole family, so attainable endpoints + midpoint suffice.
                emit(combo, probe)
                for end in (a, b):
                    if valid(end):
                        emit(combo, end)


def _zero_end_paths(tangle, chains, max_vertical) -> dict[int, list[Edgepath]]:
    """Fully traversed paths ending at an integer vertex, keyed by ending v."""
    by_end: dict[int, list[Edgepath]] = {}
    for chain in chains:
        m = int(chain.vertices[-1].slope)
        by_end.setdefault(m, []).append(_full_path(chain.vertices, tangle))
        for step in (1, -1):
            if not _vertical_first_step_allowed(chain, step):
                continue
            seq = chain.vertices
            for length in range(1, max_vertical + 1):
                seq = seq + (tangle_vertex(m + step * length),)
                by_end.setdefault(m + step * length, []).append(
                    _full_path(seq, tangle)
                )
    return by_end


def _solve_at_zero(tangles, per_chains, max_vertical, found) -> None:
    """Systems with common u = 0: ending integers must sum to zero."""
    maps = [
        _zero_end_paths(t, chains, max_vertical)
        for t, chains in zip(tangles, per_chains)
    ]
    keys = [sorted(m) for m in maps]
    n = len(maps)
    rem_min = [0] * (n + 1)
    rem_max = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        rem_min[i] = rem_min[i + 1] + keys[i][0]
        rem_max[i] = rem_max[i + 1] + keys[i][-1]

    def recurse(i: int, acc: int, chosen: list[list[Edgepath]]) -> None:
        if i == n:
            if acc == 0:
                for path_combo in product(*chosen):
                    found.add(EdgepathSystem(tuple(path_combo), Fraction(0)))
            return
        for k in keys[i]:
            s = acc + k
            if s + rem_min[i + 1] > 0 or s + rem_max[i + 1] < 0:
                continue
            chosen.append(maps[i][k])
            recurse(i + 1, s, chosen)
            chosen.pop()

    recurse(0, 0, [])


def _solve_infinity(tangles, per_chains, found) -> None:
    """Systems ending on infinity edges: u = -1 always, u = -1/2 families."""
    per = []
    for tangle, chains in zip(tangles, per_chains):
        per.append(
            [
                (
                    int(chain.vertices[-1].slope),
                    _infinity_path(chain, tangle, Fraction(1)),
                    _infinity_path(chain, tangle, Fraction(1, 2)),
                )
                for chain in chains
            ]
        )
    for combo in product(*per):
        found.add(EdgepathSystem(tuple(entry[1] for entry in combo), Fraction(-1)))
        if sum(entry[0] for entry in combo) == 0:
            found.add(
                EdgepathSystem(tuple(entry[2] for entry in combo), Fraction(-1, 2))
            )


def solve_systems(knot, max_vertical: int | None = None) -> list[EdgepathSystem]:
    """All admissible edgepath systems for the knot, canonically sorted.

    Deduplicated; sorted by common u then path structure, so the result
    is deterministic regardless of enumeration order.
    """
    tangles = _validated_tangles(knot)
    if max_vertical is None:
        max_vertical = vertical_bound(tangles)
    per_chains = [_chains(t) for t in tangles]
    found: set[EdgepathSystem] = set()
    _solve_interior(tangles, per_chains, found)
    _solve_at_zero(tangles, per_chains, max_vertical, found)
    _solve_infinity(tangles, per_chains, found)
    return sorted(found, key=system_sort_key)


# ---------------------------------------------------------------------------
# Seifert baseline


def _mod2_class(v: Vertex) -> tuple[int, int]:
    if v.kind == INFINITY:
        return (1, 0)
    return (v.slope.numerator % 2, v.slope.denominator % 2)


def _uses_one_mod2_edge(vertices: tuple[Vertex, ...]) -> bool:
    classes = [_mod2_class(v) for v in vertices]
    edges = {frozenset(pair) for pair in zip(classes, classes[1:])}
    return len(edges) == 1


def seifert_system(knot) -> tuple[EdgepathSystem, Fraction]:
    """The Seifert-surface edgepath system and its twist number.

    Requires exactly one even tangle denominator.  Each path must run
    from its tangle vertex to the infinity vertex with a mod-2
    reduction that bounces along a single edge of the mod-2 triangle,
    and the number of odd penultimate (integer) vertices must be even.
    When several combinations qualify the canonically least system is
    returned; qualifying systems share their twist on all tested knots.
    """
    tangles = _validated_tangles(knot)
    if sum(1 for t in tangles if t.denominator % 2 == 0) != 1:
        raise SeifertUnavailable(
            "Seifert baseline needs exactly one even tangle denominator"
        )
    per: list[list[_Chain]] = []
    for tangle in tangles:
        qualifying = [
            chain
            for chain in _chains(tangle)
            if _uses_one_mod2_edge(chain.vertices + (INFINITY_VERTEX,))
        ]
        if not qualifying:
            raise SeifertUnavailable(
                f"no single-mod-2-edge path to infinity for tangle {tangle}"
            )
        per.append(qualifying)
    best: EdgepathSystem | None = None
    for combo in product(*per):
        odd_penultimates = sum(
            1 for chain in combo if chain.vertices[-1].slope.numerator % 2 != 0
        )
        if odd_penultimates % 2 != 0:
            continue
        paths = tuple(
            _infinity_path(chain, tangle, Fraction(1))
            for chain, tangle in zip(combo, tangles)
        )
        system = EdgepathSystem(paths, Fraction(-1))
        if best is None or system_sort_key(system) < system_sort_key(best):
            best = system
    if best is None:
        raise SeifertUnavailable("no path combination has even odd-penultimate count")
    from .surface import twist  # deferred: surface builds on this module

    return best, twist(best)
