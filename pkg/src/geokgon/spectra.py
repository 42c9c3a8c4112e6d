"""Closed-geodesic search on doubled polygons and length-ratio tables.

Every closed geodesic on the doubled polygon can be translated to pass
through an edge midpoint, and by mirror symmetry its arc-midpoint returns
to an edge midpoint.  That collapses the search space to one dimension:
shoot from the midpoint of edge 0 over a grid of launch angles, watch the
signed midpoint offset of each successive hit, and bisect sign changes.
Candidates are verified by a full re-trace, so the symmetry reduction only
guides the search and never vouches for a result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .metric import diameter
from .surface import DiskSurface, EdgeLocation, PolygonSurface, metrics
from .tracer import (
    DiskGeodesic,
    GeodesicPath,
    TraceError,
    make_disk_geodesic,
    skip_numbers,
    trace,
)


@dataclass(frozen=True)
class SearchConfig:
    grid: int = 10_000
    max_bounces: int = 12
    max_length: float = 12.0
    closure_tol: float = 1e-9
    dedup_tol: float = 1e-6

    def __post_init__(self):
        if min(self.grid, self.max_bounces) <= 0 or self.max_length <= 0:
            raise ValueError("search budget fields must be positive")
        if not 0 < self.closure_tol <= self.dedup_tol:
            raise ValueError("closure tolerance must not exceed dedup tolerance")


@dataclass
class SpectrumEntry:
    path: GeodesicPath
    length: float
    period: int
    skips: tuple[int, ...]
    multiplicity: int = 1


def _canonical_skips(skips: list[int]) -> tuple[int, ...]:
    """Lexicographically smallest palindromic rotation (fallback: smallest)."""
    m = len(skips)
    rotations = [tuple(skips[r:] + skips[:r]) for r in range(m)]
    palindromic = [
        rot for rot in rotations if all(rot[i] == rot[m - 1 - i] for i in range(m))
    ]
    return min(palindromic or rotations)


def _hit_offsets(surface: PolygonSurface, theta: float, max_bounces: int):
    """[(edge, u - 1/2)] of successive hits from the edge-0 midpoint, or None."""
    try:
        path = trace(surface, EdgeLocation(0, 0.5), theta, max_bounces)
    except TraceError:
        return None
    if path.vertex_collision:
        return [(h.edge, h.u - 0.5) for h in path.hits[1:]]
    return [(h.edge, h.u - 0.5) for h in path.hits[1:]]


def _bisect_root(surface, j, edge, lo, hi, flo, max_bounces, tol=1e-12):
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if hi - lo < tol:
            return mid
        offs = _hit_offsets(surface, mid, max_bounces)
        if offs is None or len(offs) <= j or offs[j][0] != edge:
            return None
        fm = offs[j][1]
        if fm == 0.0:
            return mid
        if (flo < 0.0) != (fm < 0.0):
            hi = mid
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


def find_closed_geodesics(surface: PolygonSurface, config: SearchConfig | None = None) -> list[SpectrumEntry]:
    """Midpoint-shooting search for closed geodesics, deduped and sorted."""
    if config is None:
        config = SearchConfig()
    thetas = [math.pi / 2.0 * (i + 1) / config.grid for i in range(config.grid)]
    offsets = [_hit_offsets(surface, t, config.max_bounces) for t in thetas]

    candidates: list[float] = []
    for i in range(len(thetas)):
        offs = offsets[i]
        if offs is None:
            continue
        for j, (edge, f) in enumerate(offs):
            if abs(f) < 1e-13:
                candidates.append(thetas[i])
                continue
            if i + 1 >= len(thetas):
                continue
            nxt = offsets[i + 1]
            if nxt is None or len(nxt) <= j or nxt[j][0] != edge:
                continue
            f2 = nxt[j][1]
            if (f < 0.0) != (f2 < 0.0):
                root = _bisect_root(
                    surface, j, edge, thetas[i], thetas[i + 1], f, config.max_bounces
                )
                if root is not None:
                    candidates.append(root)

    by_key: dict[tuple, SpectrumEntry] = {}
    for theta in candidates:
        try:
            path = trace(surface, EdgeLocation(0, 0.5), theta, 2 * config.max_bounces)
        except TraceError:
            continue
        if not path.closed or path.vertex_collision:
            continue
        length = path.length
        if length > config.max_length:
            continue
        skips = _canonical_skips(skip_numbers(path))
        key = (round(length / config.dedup_tol), tuple(sorted(skips)))
        if key in by_key:
            by_key[key].multiplicity += 1
        else:
            by_key[key] = SpectrumEntry(path, length, path.period, skips)
    entries = sorted(by_key.values(), key=lambda e: (e.length, e.skips))
    return entries


def shortest_closed_geodesic(surface: PolygonSurface, config: SearchConfig | None = None) -> SpectrumEntry:
    entries = find_closed_geodesics(surface, config)
    if not entries:
        raise RuntimeError("search produced no closed geodesics within budget")
    return entries[0]


def winding_profile(path: GeodesicPath | DiskGeodesic) -> dict:
    """Arc angles of the hits projected radially onto the inscribed circle.

    The sum of the counterclockwise arcs between successive projected hit
    points is 2*pi*m for an integer winding count m >= 1.
    """
    if isinstance(path, DiskGeodesic):
        points = [path.hit_position(i) for i in range(len(path.vertex_angles))]
    else:
        points = path.positions
    angles = [math.atan2(p[1], p[0]) for p in points]
    arcs = []
    for i in range(len(angles) - 1):
        step = (angles[i + 1] - angles[i]) % (2.0 * math.pi)
        arcs.append(step)
    total = sum(arcs)
    m = total / (2.0 * math.pi)
    return {"arcs": arcs, "winding": round(m), "winding_raw": m}


def ratio_table(n_list: list[int], config: SearchConfig | None = None, grid: int = 48) -> list[dict]:
    """Shortest-length ratios L/diam and L/sqrt(area), with a disk limit row."""
    rows = []
    for n in n_list:
        if n % 2 == 0:
            raise ValueError("ratio table rows require odd n")
        surface = PolygonSurface.with_inradius(n)
        entry = shortest_closed_geodesic(surface, config)
        diam = diameter(surface, grid)["diam"]
        area = metrics(surface).doubled_area
        rows.append(
            {
                "n": n,
                "L": entry.length,
                "diam": diam,
                "doubled_area": area,
                "L_over_diam": entry.length / diam,
                "L_over_sqrt_area": entry.length / math.sqrt(area),
            }
        )
    disk = DiskSurface(1.0)
    L = make_disk_geodesic(disk, 2, 1, 2).length
    area = metrics(disk).doubled_area
    rows.append(
        {
            "n": math.inf,
            "L": L,
            "diam": 2.0 * disk.radius,
            "doubled_area": area,
            "L_over_diam": L / (2.0 * disk.radius),
            "L_over_sqrt_area": L / math.sqrt(area),
        }
    )
    return rows
