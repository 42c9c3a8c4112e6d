import math

import pytest

from geokgon.minind import (
    analytic_bounds,
    converge_bound,
    is_minimizing_arc,
    max_uniform_arc,
    minimizing_index,
    vshape_bound,
)
from geokgon.surface import DiskSurface, PolygonSurface
from geokgon.tracer import make_disk_geodesic, make_special


def test_over_under_triangle_index_six(triangle):
    path = make_special(triangle, "over_under")
    report = minimizing_index(path)
    assert report.minind == 6
    assert report.minind >= report.period


def test_over_under_triangle_failing_arc(triangle):
    # arcs slightly longer than L/6 fail when maximally asymmetric about a
    # hit (one endpoint at the hit itself)
    path = make_special(triangle, "over_under")
    L = path.length
    s = L / 6.0 * 1.02
    hits = path.hit_arclengths()
    assert not is_minimizing_arc(path, hits[1] - s, s)
    # while the arc of exactly L/6 minimizes everywhere sampled
    assert is_minimizing_arc(path, hits[1] - L / 6.0, L / 6.0)


def test_half_geodesic_square(square):
    report = minimizing_index(make_special(square, "half_geodesic"))
    assert report.minind == 2
    assert report.s_max == pytest.approx(report.path.length / 2.0, rel=1e-6)


def test_disk_square_index_four(disk):
    report = minimizing_index(make_disk_geodesic(disk, 4, 1, 1))
    assert report.minind == 4
    assert report.minind == report.period


def test_report_invariants(triangle):
    report = minimizing_index(make_special(triangle, "over_under"))
    L = report.path.length
    assert report.minind >= report.bounds["period_bound"]
    assert L / report.minind <= report.s_max + report.tolerance
    if report.minind > 2:
        assert L / (report.minind - 1) > report.s_max - report.tolerance


def test_vshape_bound_values():
    assert vshape_bound(3) == pytest.approx(6.0, abs=1e-9)
    closed_form = lambda n: 2.0 * (1.0 + math.cos(math.pi / n)) / (
        1.0 - math.cos(math.pi / n)
    )
    for n in (5, 7, 21, 101):
        assert vshape_bound(n) == pytest.approx(closed_form(n), rel=1e-12)
    with pytest.raises(ValueError):
        vshape_bound(4)


def test_vshape_triangle_index_matches_bound(triangle):
    report = minimizing_index(make_special(triangle, "vshape"))
    assert report.minind == 6
    assert report.minind >= vshape_bound(3) - 1e-9


def test_converge_bound_is_a_lower_bound(pentagon):
    path = make_special(pentagon, "vshape")
    bound = converge_bound(path)
    assert bound == pytest.approx(vshape_bound(5), rel=1e-9)
    bounds = analytic_bounds(path)
    assert bounds["period_bound"] == 4
    assert "vshape_bound" in bounds


def test_max_uniform_arc_over_under(triangle):
    path = make_special(triangle, "over_under")
    s_max, witness = max_uniform_arc(path)
    assert s_max == pytest.approx(path.length / 6.0, rel=1e-5)
    assert witness is not None


def test_open_path_rejected(pentagon):
    from geokgon.tracer import trace
    from geokgon.surface import EdgeLocation

    path = trace(pentagon, EdgeLocation(0, 0.37), 1.0, 5)
    if not path.closed:
        with pytest.raises(ValueError):
            minimizing_index(path)
