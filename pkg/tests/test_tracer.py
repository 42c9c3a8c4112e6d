import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from geokgon.surface import DiskSurface, EdgeLocation, Face, PolygonSurface
from geokgon.tracer import (
    canonicalize_to_midpoint,
    make_disk_geodesic,
    make_special,
    path_from_json,
    path_to_json,
    skip_numbers,
    trace,
    vertex_ratios,
    winding,
)


def vshape_angle(n: int) -> float:
    return math.pi * (n - 2) / (2.0 * n)


def test_vshape_trace_pentagon():
    s = PolygonSurface.with_inradius(5)
    path = trace(s, EdgeLocation(0, 0.5), vshape_angle(5), 8)
    assert path.closed
    assert path.period == 4
    assert path.length == pytest.approx(4.0 * (math.sin(vshape_angle(5)) + 1.0))
    assert sorted(skip_numbers(path)) == [2, 2, 3, 3]


def test_vshape_triangle_length_six():
    s = PolygonSurface.with_inradius(3)
    path = make_special(s, "vshape")
    assert path.length == pytest.approx(6.0, abs=1e-12)


def test_faces_alternate():
    s = PolygonSurface.with_inradius(7)
    path = trace(s, EdgeLocation(0, 0.37), 1.1, 10)
    for i in range(path.num_segments):
        expected = Face.FRONT if i % 2 == 0 else Face.BACK
        assert path.segment_face(i) is expected


def test_reflection_law():
    # outgoing angle at a hit equals the angle the incoming segment makes
    # with the same edge, measured on the other side
    s = PolygonSurface.with_inradius(6)
    path = trace(s, EdgeLocation(0, 0.41), 0.83, 10)
    pts = path.positions
    for i in range(1, len(pts) - 1):
        h = path.hits[i]
        ex, ey = s.edge_direction(h.edge)
        ix, iy = pts[i][0] - pts[i - 1][0], pts[i][1] - pts[i - 1][1]
        ox, oy = pts[i + 1][0] - pts[i][0], pts[i + 1][1] - pts[i][1]
        inc = math.acos(
            max(-1.0, min(1.0, (ix * ex + iy * ey) / math.hypot(ix, iy)))
        )
        out = math.acos(
            max(-1.0, min(1.0, (ox * ex + oy * ey) / math.hypot(ox, oy)))
        )
        assert out == pytest.approx(inc, abs=1e-9)
        assert h.angle == pytest.approx(out, abs=1e-9)


def test_closed_paths_have_even_period():
    s = PolygonSurface.with_inradius(5)
    for kind in ("vshape", "over_under"):
        path = make_special(s, kind)
        assert path.closed
        assert path.period % 2 == 0


def test_skip_sum_multiple_of_n():
    for n in (3, 5, 7, 9):
        s = PolygonSurface.with_inradius(n)
        for path in (make_special(s, "vshape"), make_special(s, "over_under")):
            assert sum(skip_numbers(path)) % n == 0


def test_vertex_ratios_in_open_interval():
    s = PolygonSurface.with_inradius(7)
    path = make_special(s, "vshape")
    for v in vertex_ratios(path):
        assert 0.0 < v < 1.0


def test_vshape_winding_two():
    s = PolygonSurface.with_inradius(5)
    assert winding(make_special(s, "vshape")) == 2


def test_half_geodesic_and_star():
    s4 = PolygonSurface.with_inradius(4)
    half = make_special(s4, "half_geodesic")
    assert half.period == 2
    assert half.length == pytest.approx(4.0 * s4.apothem)

    s9 = PolygonSurface.with_inradius(9)
    star = make_special(s9, "midpoint_star", 3)
    assert star.closed
    assert star.period == 6  # 3-cycle of midpoints traversed twice

    with pytest.raises(ValueError):
        make_special(s4, "vshape")
    with pytest.raises(ValueError):
        make_special(s9, "half_geodesic")


def test_disk_geodesics():
    disk = DiskSurface(1.0)
    square = make_disk_geodesic(disk, 4, 1, 1)
    assert square.period == 4
    assert square.chord_length == pytest.approx(2.0 * math.sin(math.pi / 4))
    assert square.length == pytest.approx(4.0 * math.sqrt(2.0))

    star = make_disk_geodesic(disk, 5, 2, 2)
    assert star.period == 10
    assert star.chord_length == pytest.approx(2.0 * math.sin(2.0 * math.pi / 5))

    diam = make_disk_geodesic(disk, 2, 1, 2)
    assert diam.length == pytest.approx(8.0)

    with pytest.raises(ValueError):
        make_disk_geodesic(disk, 4, 2, 1)  # not coprime
    with pytest.raises(ValueError):
        make_disk_geodesic(disk, 3, 1, 1)  # odd segment count


def test_point_at_consistency():
    s = PolygonSurface.with_inradius(5)
    path = make_special(s, "vshape")
    L = path.length
    p0 = path.point_at(0.0)
    p_wrap = path.point_at(L)
    assert math.hypot(p0.x - p_wrap.x, p0.y - p_wrap.y) < 1e-9


def test_json_roundtrip_polygon():
    s = PolygonSurface.with_inradius(5)
    path = make_special(s, "vshape")
    data = path_to_json(path)
    back = path_from_json(data)
    assert back.closed == path.closed
    assert skip_numbers(back) == skip_numbers(path)
    assert back.length == pytest.approx(path.length, rel=1e-12)


def test_json_roundtrip_disk():
    disk = DiskSurface(1.0)
    g = make_disk_geodesic(disk, 5, 2, 2)
    back = path_from_json(path_to_json(g))
    assert back.period == g.period
    assert back.length == pytest.approx(g.length, rel=1e-12)


def test_canonicalize_to_midpoint():
    s = PolygonSurface.with_inradius(5)
    # start the V-shape away from the midpoint and recover it
    original = make_special(s, "vshape")
    shifted = trace(s, EdgeLocation(0, 0.5), vshape_angle(5), 8)
    canon = canonicalize_to_midpoint(shifted)
    assert canon.hits[0].u == pytest.approx(0.5, abs=1e-9)
    assert canon.length == pytest.approx(original.length, rel=1e-12)


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(min_value=3, max_value=10),
    u=st.floats(min_value=0.06, max_value=0.94),
    theta=st.floats(min_value=0.12, max_value=math.pi - 0.12),
)
def test_traced_invariants(n, u, theta):
    s = PolygonSurface.with_inradius(n)
    path = trace(s, EdgeLocation(0, u), theta, 10)
    if path.vertex_collision:
        return
    skips = skip_numbers(path)
    for a, b in zip(skips, skips[1:]):
        assert abs(a - b) <= 1
    for h in path.hits:
        assert 0.0 <= h.u <= 1.0
        assert 0.0 < h.angle < math.pi
