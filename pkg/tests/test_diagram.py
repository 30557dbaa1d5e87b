"""Tests for the uv-plane graph: coordinates, curve systems, edges."""

import random
from fractions import Fraction
from math import gcd

import pytest

from montesinos.diagram import (
    INFINITY_VERTEX,
    CurveSystem,
    UVPoint,
    circle_vertex,
    curve_system_at,
    edge_between,
    farey_parents,
    fraction_from_u,
    interpolate,
    is_nonhorizontal_edge,
    left_neighbors,
    locate,
    mediant,
    tangle_vertex,
    uv_of_vertex,
    vertices_adjacent,
)

F = Fraction


def test_uv_of_vertex():
    assert uv_of_vertex(INFINITY_VERTEX) == (-1, 0)
    assert uv_of_vertex(tangle_vertex(F(1, 2))) == (F(1, 2), F(1, 2))
    assert uv_of_vertex(tangle_vertex(F(0))) == (0, 0)
    assert uv_of_vertex(tangle_vertex(F(1, 5))) == (F(4, 5), F(1, 5))
    assert uv_of_vertex(circle_vertex(F(2, 3))) == (1, F(2, 3))
    assert uv_of_vertex(tangle_vertex(F(-1, 2))) == (F(1, 2), F(-1, 2))


def test_curve_system_at_vertices():
    assert curve_system_at(UVPoint(F(1), F(2, 3))) == CurveSystem(0, 3, 2)
    assert curve_system_at(uv_of_vertex(tangle_vertex(F(1, 2)))) == CurveSystem(1, 1, 1)
    assert curve_system_at(UVPoint(F(4, 9), F(1, 9))) == CurveSystem(5, 4, 1)


def test_curve_system_rejects_points_off_the_graph():
    for bad in [(F(1, 2), F(1, 5)), (F(2, 3), F(5, 12)), (F(-1), F(1, 3)), (F(3, 2), F(0))]:
        with pytest.raises(ValueError):
            curve_system_at(UVPoint(*bad))
    # (1/2, 0) and (2/3, 1/2) sit on horizontal edges, hence on the graph.
    assert curve_system_at(UVPoint(F(1, 2), F(0))) == CurveSystem(1, 1, 0)
    assert locate(UVPoint(F(2, 3), F(1, 2))).kind == "horizontal"


def test_locate_special_points():
    # Vertical edges carry every rational v at u = 0.
    edge = locate(UVPoint(F(0), F(1, 2)))
    assert edge.kind == "vertical"
    assert {edge.left.slope, edge.right.slope} == {F(0), F(1)}
    # Infinity edges: v = m(1+u).
    edge = locate(UVPoint(F(-1, 2), F(3, 2)))
    assert edge.kind == "infinity"
    assert edge.right.slope == 3
    assert locate(UVPoint(F(-1, 2), F(1, 3))) is None
    assert locate(UVPoint(F(-1), F(0))) == INFINITY_VERTEX
    # Mid-edge point on the edge between <0> and <1/3>.
    edge = locate(UVPoint(F(1, 2), F(1, 4)))
    assert edge.kind == "nonhorizontal"
    assert {edge.left.slope, edge.right.slope} == {F(0), F(1, 3)}


def test_is_nonhorizontal_edge():
    assert is_nonhorizontal_edge(F(1, 2), F(2, 3))
    for n in (1, 2, 5, 9):
        assert is_nonhorizontal_edge(F(0), F(1, n))
    assert not is_nonhorizontal_edge(F(1, 3), F(2, 3))


def test_interpolate_endpoint_collapse():
    e = edge_between(tangle_vertex(F(1, 2)), tangle_vertex(F(2, 3)))
    assert interpolate(e, F(0)) == uv_of_vertex(e.right)
    assert interpolate(e, F(1)) == uv_of_vertex(e.left)


def test_interpolate_known_family_point():
    for n in (3, 5, 7):
        e = edge_between(tangle_vertex(F(0)), tangle_vertex(F(1, n)))
        pt = interpolate(e, F(n - 1, n))
        assert pt == (F(n - 1, 2 * n - 1), F(1, 2 * n - 1))
    assert interpolate(
        edge_between(tangle_vertex(F(0)), tangle_vertex(F(1, 5))), F(4, 5)
    ) == (F(4, 9), F(1, 9))


def test_fraction_from_u_resolved_examples():
    # At u = 4/9 on the edge {<0>, <1/5>} the weight on <1/5> is 1/5,
    # i.e. 4/5 of the edge has been traversed from <1/5> toward <0>.
    e = edge_between(tangle_vertex(F(0)), tangle_vertex(F(1, 5)))
    assert fraction_from_u(e, F(4, 9)) == F(4, 5)
    assert 1 - fraction_from_u(e, F(4, 9)) == F(1, 5)
    # At u = 4/9 on the edge {<0>, <1/2>} the weight on <1/2> is 4/5.
    e2 = edge_between(tangle_vertex(F(0)), tangle_vertex(F(1, 2)))
    assert fraction_from_u(e2, F(4, 9)) == F(1, 5)
    assert 1 - fraction_from_u(e2, F(4, 9)) == F(4, 5)
    # The right endpoint is at fraction 0.
    assert fraction_from_u(e2, uv_of_vertex(e2.right).u) == 0
    with pytest.raises(ValueError):
        fraction_from_u(e2, F(3, 5))


def _random_edge(rng):
    while True:
        q = rng.randint(1, 30)
        p = rng.randint(-30, 30)
        if gcd(abs(p), q) == 1:
            break
    slope = F(p, q)
    if q == 1:
        other = slope + rng.choice([1, -1])
    else:
        other = rng.choice(farey_parents(slope))
    return edge_between(tangle_vertex(slope), tangle_vertex(other))


def test_interpolate_fraction_roundtrip():
    rng = random.Random(404)
    for _ in range(2_000):
        e = _random_edge(rng)
        if e.kind != "nonhorizontal":
            continue
        t = F(rng.randint(0, 24), 24)
        pt = interpolate(e, t)
        assert fraction_from_u(e, pt.u) == t
        assert interpolate(e, fraction_from_u(e, pt.u)) == pt


def test_coordinate_consistency_on_random_edge_points():
    rng = random.Random(505)
    for _ in range(2_000):
        e = _random_edge(rng)
        t = F(rng.randint(0, 12), 12)
        u, v = interpolate(e, t)
        a, b, c = curve_system_at(UVPoint(u, v))
        assert u == F(b, a + b)
        assert v == F(c, a + b)


def test_farey_triangle_closure():
    # The mediant of any edge's endpoints is adjacent to both.
    for q in range(1, 51):
        for p in range(0, q + 1):
            if gcd(p, q) != 1:
                continue
            slope = F(p, q)
            if q > 1:
                for parent in farey_parents(slope):
                    m = mediant(parent, slope)
                    assert is_nonhorizontal_edge(m, parent)
                    assert is_nonhorizontal_edge(m, slope)


def _brute_left_neighbors(slope):
    p, q = slope.numerator, slope.denominator
    out = set()
    for s in range(1, q):
        for r in range(-abs(p) - s - 2, abs(p) + s + 3):
            fr = F(r, s)
            if fr.denominator == s and abs(p * s - q * r) == 1:
                out.add(fr)
    return out


def test_left_neighbors_against_brute_force():
    checked = 0
    for q in range(2, 51):
        for p in range(0, q):
            if gcd(p, q) != 1:
                continue
            slope = F(p, q)
            got = {
                e.left.slope
                for e in left_neighbors(tangle_vertex(slope))
            }
            assert got == _brute_left_neighbors(slope)
            assert len(got) == 2
            checked += 1
    assert checked > 700
    # Negative slopes look the same, on a smaller box.
    for q in range(2, 13):
        for p in range(-2 * q, 2 * q):
            if gcd(abs(p), q) != 1:
                continue
            slope = F(p, q)
            got = {e.left.slope for e in left_neighbors(tangle_vertex(slope))}
            assert got == _brute_left_neighbors(slope)


def test_left_neighbors_examples():
    got = {e.left.slope for e in left_neighbors(tangle_vertex(F(1, 3)))}
    assert got == {F(0), F(1, 2)}
    got = {e.left.slope for e in left_neighbors(tangle_vertex(F(2, 3)))}
    assert got == {F(1, 2), F(1)}
    edges = left_neighbors(tangle_vertex(F(0)))
    kinds = [e.kind for e in edges]
    assert kinds.count("vertical") == 2
    assert kinds.count("infinity") == 1
    spans = {(e.left.slope, e.right.slope) for e in edges if e.kind == "vertical"}
    assert spans == {(F(-1), F(0)), (F(0), F(1))}


def test_vertices_adjacent():
    assert vertices_adjacent(tangle_vertex(F(0)), tangle_vertex(F(1)))
    assert vertices_adjacent(tangle_vertex(F(3)), INFINITY_VERTEX)
    assert not vertices_adjacent(tangle_vertex(F(1, 2)), INFINITY_VERTEX)
    assert vertices_adjacent(tangle_vertex(F(1, 2)), circle_vertex(F(1, 2)))
    assert not vertices_adjacent(tangle_vertex(F(1, 2)), circle_vertex(F(1, 3)))
    assert not vertices_adjacent(tangle_vertex(F(0)), tangle_vertex(F(2)))


def test_interpolate_vertical_and_infinity_edges():
    e = edge_between(tangle_vertex(F(0)), tangle_vertex(F(1)))
    assert e.kind == "vertical"
    assert interpolate(e, F(0)) == (0, 1)
    assert interpolate(e, F(1)) == (0, 0)
    assert interpolate(e, F(1, 3)) == (0, F(2, 3))
    with pytest.raises(ValueError):
        fraction_from_u(e, F(0))
    e = edge_between(tangle_vertex(F(3)), INFINITY_VERTEX)
    assert e.kind == "infinity"
    assert interpolate(e, F(0)) == (0, 3)
    assert interpolate(e, F(1)) == (-1, 0)
    assert interpolate(e, F(1, 2)) == (F(-1, 2), F(3, 2))
    assert fraction_from_u(e, F(-1, 2)) == F(1, 2)


def test_interpolate_horizontal_edge():
    e = edge_between(tangle_vertex(F(2, 3)), circle_vertex(F(2, 3)))
    assert e.kind == "horizontal"
    assert interpolate(e, F(0)) == (1, F(2, 3))
    assert interpolate(e, F(1)) == (F(2, 3), F(2, 3))
    assert interpolate(e, F(1, 2)) == (F(5, 6), F(2, 3))
    assert fraction_from_u(e, F(5, 6)) == F(1, 2)


def test_locate_horizontal_edge_points():
    edge = locate(UVPoint(F(5, 6), F(2, 3)))
    assert edge.kind == "horizontal"
    assert edge.left.slope == F(2, 3)
    a, b, c = curve_system_at(UVPoint(F(5, 6), F(2, 3)))
    assert F(b, a + b) == F(5, 6) and F(c, a + b) == F(2, 3)
    # Same v but left of the tangle vertex: not on the horizontal edge.
    assert locate(UVPoint(F(1, 2), F(2, 3))) is None


def test_locate_roundtrip_on_edges():
    rng = random.Random(909)
    for _ in range(500):
        e = _random_edge(rng)
        t = F(rng.randint(0, 8), 8)
        pt = interpolate(e, t)
        found = locate(pt)
        if t == 1:
            assert found == e.left
        elif t == 0:
            assert found == e.right
        else:
            assert found == e
