"""Minimizing index of closed geodesics.

A closed geodesic of length L is a 1/k geodesic when every arc of length
L/k realizes the distance between its endpoints.  The minimizing index is
the smallest k >= 2 with that property.  We estimate the maximal uniform
minimizing arc length s_max by sampling start points (densely near edge
hits, where the arc function has kinks) and bisecting on the arc length,
then convert to the index and re-verify it directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .metric import distance_fast
from .surface import DiskSurface, PolygonSurface
from .tracer import DiskGeodesic, GeodesicPath, skip_numbers, vertex_ratios

ARC_TOL_FACTOR = 1e-7  # default arc-comparison tolerance, relative to length
INFINITE = math.inf


@dataclass
class MinindReport:
    path: GeodesicPath | DiskGeodesic
    s_max: float
    minind: float  # integer >= 2, or math.inf when k_cap was exceeded
    bounds: dict = field(default_factory=dict)
    tolerance: float = 0.0
    witness_t: float | None = None

    @property
    def period(self) -> int:
        return self.path.period


def is_minimizing_arc(path, t0: float, s: float, tol: float | None = None) -> bool:
    """Does the arc [t0, t0+s] realize the distance between its endpoints?"""
    L = path.length
    if tol is None:
        tol = ARC_TOL_FACTOR * L
    if not 0.0 < s <= L / 2.0 + tol:
        raise ValueError("arc length must lie in (0, L/2]")
    a = path.point_at(t0)
    b = path.point_at(t0 + s)
    return distance_fast(path.surface, a, b) >= s - tol


def _sample_starts(path, samples: int | None = None) -> list[float]:
    L = path.length
    period = path.period
    if samples is None:
        samples = 8 * period
    samples = max(samples, 8 * period)
    ts = [L * i / samples for i in range(samples)]
    window = L / 1000.0
    for h in path.hit_arclengths()[:-1]:
        for j in range(8):
            ts.append((h + window * (j - 3.5) / 3.5) % L)
        ts.append(h)
    return sorted(set(ts))


def _check_starts(path, s: float, samples: int | None = None, per_hit: int = 96) -> list[float]:
    """Start points whose arcs of length s can fail.

    An arc inside one face is a straight chord and always minimizes, so a
    failing arc must cross an edge hit: its start lies in [h - s, h] for
    some hit h.  Those intervals are sampled densely, alongside a uniform
    grid honoring the samples contract.
    """
    L = path.length
    ts = _sample_starts(path, samples)
    for h in path.hit_arclengths()[:-1]:
        for j in range(per_hit + 1):
            ts.append((h - s * j / per_hit) % L)
    return ts


def _all_arcs_minimize(path, s: float, tol: float, samples=None, per_hit: int = 96):
    for t0 in _check_starts(path, s, samples, per_hit):
        if not is_minimizing_arc(path, t0, s, tol):
            return False, t0
    return True, None


def max_uniform_arc(path, tol: float | None = None, samples: int | None = None):
    """Largest s such that every arc of length s minimizes.

    Bisects on s (the property is monotone: a subarc of a minimizing arc
    minimizes).  Returns (s_max, witness_t) where witness_t starts a
    failing arc just above s_max, or None when arcs up to L/2 all minimize.
    """
    if not path.closed:
        raise ValueError("path must be closed")
    L = path.length
    if tol is None:
        tol = ARC_TOL_FACTOR * L
    hi = L / 2.0
    ok, witness = _all_arcs_minimize(path, hi, tol, samples)
    if ok:
        return hi, None
    lo = tol
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        ok, t_fail = _all_arcs_minimize(path, mid, tol, samples)
        if ok:
            lo = mid
        else:
            hi = mid
            witness = t_fail
    return lo, witness


def minimizing_index(path, tol: float | None = None, k_cap: int | None = None) -> MinindReport:
    """Smallest k >= 2 such that all sampled arcs of length L/k minimize."""
    if not path.closed:
        raise ValueError("path must be closed")
    L = path.length
    if tol is None:
        tol = ARC_TOL_FACTOR * L
    if k_cap is None:
        k_cap = max(4 * path.period, 64)
    if k_cap < path.period:
        raise ValueError("k_cap must be at least the period")
    s_max, fail_t = max_uniform_arc(path, tol)
    k = max(2, math.ceil(L / (s_max + tol) - 1e-12))
    while k <= k_cap:
        ok, _ = _all_arcs_minimize(path, L / k, tol)
        if ok:
            break
        k += 1
    bounds = analytic_bounds(path)
    if k > k_cap:
        return MinindReport(path, s_max, INFINITE, bounds, tol, fail_t)
    witness = None
    if k > 2:
        s_fail = L / (k - 1)
        if s_fail <= L / 2.0 + tol:
            _, witness = _all_arcs_minimize(path, s_fail, tol)
    return MinindReport(path, s_max, k, bounds, tol, witness)


def _vshape_params(path: GeodesicPath):
    """(n, theta) if the path is a V-shape on an odd-gon, else None."""
    if not isinstance(path, GeodesicPath) or not path.closed:
        return None
    n = path.surface.sides
    if n % 2 == 0 or path.num_segments != 4:
        return None
    m = (n - 1) // 2
    canon = sorted(skip_numbers(path))
    if canon != sorted([m, m, m + 1, m + 1]):
        return None
    return n, math.pi * (n - 2) / (2 * n)


def vshape_bound(n: int) -> float:
    """Analytic lower bound on the V-shape minimizing index on the odd n-gon.

    With h the apex height in side-length units, the bound is
    2 h sin(pi/n) / (1 - h sin(pi/n)), which simplifies to
    2 (1 + cos(pi/n)) / (1 - cos(pi/n)) and evaluates to 6 on the triangle.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("V-shapes live on odd-gons")
    surface = PolygonSurface.with_inradius(n)
    h = (surface.apothem + surface.circumradius) / surface.side_length
    s = h * math.sin(math.pi / n)
    return 2.0 * s / (1.0 - s)


def converge_bound(path: GeodesicPath) -> float:
    """Lower bound L / (2 x csc theta) from the sharpest edge hit.

    x is twice the smaller vertex-ratio part scaled by the apothem (the
    offset from the hit to the vertex angle bisector), theta the hit's
    reflection angle.
    """
    surface = path.surface
    apothem = surface.apothem
    best = 0.0
    ratios = vertex_ratios(path)
    hits = path.hits[: path.num_segments] if path.closed else path.hits
    for h, v in zip(hits, ratios):
        x = 2.0 * min(v, 1.0 - v) * apothem
        theta = min(h.angle, math.pi - h.angle)
        if x <= 0.0:
            continue
        cand = path.length * math.sin(theta) / (2.0 * x)
        best = max(best, cand)
    return best


def analytic_bounds(path) -> dict:
    bounds = {"period_bound": path.period}
    if isinstance(path, GeodesicPath):
        vp = _vshape_params(path)
        if vp is not None:
            bounds["vshape_bound"] = vshape_bound(vp[0])
        bounds["converge_bound"] = converge_bound(path)
    return bounds


def minind_of_surface(n: int, search_budget: dict | None = None) -> dict:
    """Smallest measured minimizing index over searched closed geodesics on X_n.

    An upper estimate: only geodesics found within the budget are tested.
    """
    from .spectra import SearchConfig, find_closed_geodesics

    surface = PolygonSurface.with_inradius(n)
    budget = search_budget or {}
    config = SearchConfig(
        max_bounces=budget.get("max_bounces", 8),
        max_length=budget.get("max_length", 12.0),
        grid=budget.get("grid", 2000),
    )
    entries = find_closed_geodesics(surface, config)
    best = None
    for entry in entries:
        report = minimizing_index(entry.path)
        if best is None or report.minind < best["minind"]:
            best = {"minind": report.minind, "witness": entry.path, "report": report}
    if best is None:
        raise RuntimeError("no closed geodesics found within the search budget")
    best["searched"] = {
        "max_bounces": config.max_bounces,
        "max_length": config.max_length,
        "grid": config.grid,
    }
    return best
