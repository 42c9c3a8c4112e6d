import math

import pytest

from geokgon.spectra import (
    SearchConfig,
    find_closed_geodesics,
    ratio_table,
    shortest_closed_geodesic,
    winding_profile,
)
from geokgon.surface import PolygonSurface
from geokgon.tracer import make_disk_geodesic, make_special

FAST = SearchConfig(grid=4000, max_bounces=8, max_length=12.0)


def test_search_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(grid=0)
    with pytest.raises(ValueError):
        SearchConfig(closure_tol=1e-3, dedup_tol=1e-6)


def test_triangle_spectrum(triangle):
    entries = find_closed_geodesics(triangle, FAST)
    lengths = [e.length for e in entries]
    assert lengths == sorted(lengths)
    assert lengths[0] == pytest.approx(6.0, abs=1e-6)
    assert entries[0].period == 4
    assert sorted(entries[0].skips) == [1, 1, 2, 2]
    # the over-under curve through all six midpoints
    over_under = [e for e in entries if e.period == 6]
    assert over_under
    assert over_under[0].length == pytest.approx(6.0 * math.sqrt(3.0), abs=1e-6)


def test_square_spectrum(square):
    entries = find_closed_geodesics(square, FAST)
    assert entries[0].period == 2  # half geodesic across opposite edges
    assert entries[0].length == pytest.approx(4.0, abs=1e-6)
    assert entries[1].length == pytest.approx(4.0 * math.sqrt(2.0), abs=1e-6)
    assert entries[1].skips == (1, 1, 1, 1)


def test_pentagon_shortest_is_vshape(pentagon):
    entry = shortest_closed_geodesic(pentagon, FAST)
    theta = math.pi * 3.0 / 10.0
    assert entry.length == pytest.approx(4.0 * (math.sin(theta) + 1.0), abs=1e-6)
    assert entry.period == 4
    assert sorted(entry.skips) == [2, 2, 3, 3]


def test_spectrum_dedup(triangle):
    entries = find_closed_geodesics(triangle, FAST)
    seen = set()
    for e in entries:
        key = (round(e.length / FAST.dedup_tol), tuple(sorted(e.skips)))
        assert key not in seen
        seen.add(key)


def test_winding_profiles(pentagon, disk):
    v = winding_profile(make_special(pentagon, "vshape"))
    assert v["winding"] == 2
    assert v["winding_raw"] == pytest.approx(2.0, abs=1e-9)
    # winding equals the traversal count l = sum(skips) / n
    ou = winding_profile(make_special(pentagon, "over_under"))
    assert ou["winding"] == 2

    square = winding_profile(make_disk_geodesic(disk, 4, 1, 1))
    assert square["winding"] == 1
    assert all(a == pytest.approx(math.pi / 2.0) for a in square["arcs"])


def test_ratio_table(triangle):
    rows = ratio_table([3], FAST)
    assert rows[0]["n"] == 3
    assert rows[0]["L_over_diam"] == pytest.approx(math.sqrt(3.0), abs=1e-5)
    disk_row = rows[-1]
    assert disk_row["n"] == math.inf
    assert disk_row["L"] == pytest.approx(8.0)
    assert disk_row["L_over_diam"] == pytest.approx(4.0)
    with pytest.raises(ValueError):
        ratio_table([4], FAST)
