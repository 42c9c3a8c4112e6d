"""Exact geodesic distance on doubled polygons and the doubled disk.

Distance on the doubled polygon is computed by branch and bound over
unfolding chains: reflect the polygon across candidate edges, keep a chain
alive only while the straight segment from the source to the unfolded
target can still thread every crossed-edge window, and prune against the
best length found so far.  On a doubled convex polygon the optimal chain
turns out to be very short (zero or one crossing), so the search
terminates almost immediately; the bound machinery keeps it honest.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.optimize import minimize_scalar

from .surface import (
    DiskSurface,
    Face,
    PolygonSurface,
    Surface,
    SurfacePoint,
    canonical_boundary,
    is_boundary,
)


@dataclass
class UnfoldingChain:
    """Sequence of crossed edges with the windows the straight path threads."""

    edges: list[int] = field(default_factory=list)
    windows: list[tuple[tuple[float, float], tuple[float, float]]] = field(default_factory=list)

    @property
    def depth(self) -> int:
        return len(self.edges)


@dataclass
class DistanceResult:
    distance: float
    witness: list[SurfacePoint]
    chain: UnfoldingChain
    depth: int
    proven_optimal: bool = True
    vertex_grazing: bool = False

    def witness_length(self) -> float:
        return sum(
            math.dist(self.witness[i].pos, self.witness[i + 1].pos)
            for i in range(len(self.witness) - 1)
        )


def _reflect_matrix(w0, w1):
    """Orthogonal affine (A, t) reflecting the plane across the line w0-w1."""
    dx, dy = w1[0] - w0[0], w1[1] - w0[1]
    L2 = dx * dx + dy * dy
    a = (dx * dx - dy * dy) / L2
    b = 2.0 * dx * dy / L2
    A = ((a, b), (b, -a))
    tx = w0[0] - (A[0][0] * w0[0] + A[0][1] * w0[1])
    ty = w0[1] - (A[1][0] * w0[0] + A[1][1] * w0[1])
    return A, (tx, ty)


def _apply(iso, p):
    A, t = iso
    return (A[0][0] * p[0] + A[0][1] * p[1] + t[0], A[1][0] * p[0] + A[1][1] * p[1] + t[1])


def _compose(iso2, iso1):
    """iso2 after iso1."""
    A2, t2 = iso2
    A1, t1 = iso1
    A = (
        (A2[0][0] * A1[0][0] + A2[0][1] * A1[1][0], A2[0][0] * A1[0][1] + A2[0][1] * A1[1][1]),
        (A2[1][0] * A1[0][0] + A2[1][1] * A1[1][0], A2[1][0] * A1[0][1] + A2[1][1] * A1[1][1]),
    )
    t = (
        A2[0][0] * t1[0] + A2[0][1] * t1[1] + t2[0],
        A2[1][0] * t1[0] + A2[1][1] * t1[1] + t2[1],
    )
    return A, t


def _invert(iso):
    A, t = iso
    Ai = ((A[0][0], A[1][0]), (A[0][1], A[1][1]))
    ti = (-(Ai[0][0] * t[0] + Ai[0][1] * t[1]), -(Ai[1][0] * t[0] + Ai[1][1] * t[1]))
    return Ai, ti


_IDENTITY = (((1.0, 0.0), (0.0, 1.0)), (0.0, 0.0))


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def _segment_distance(p, w0, w1):
    dx, dy = w1[0] - w0[0], w1[1] - w0[1]
    L2 = dx * dx + dy * dy
    if L2 < 1e-300:
        return math.hypot(p[0] - w0[0], p[1] - w0[1])
    t = ((p[0] - w0[0]) * dx + (p[1] - w0[1]) * dy) / L2
    t = min(max(t, 0.0), 1.0)
    return math.hypot(p[0] - w0[0] - t * dx, p[1] - w0[1] - t * dy)


def _sector_from_segment(a, w0, w1):
    """Angular sector (lo, hi unit dirs, ccw order) subtended at a by a segment."""
    d0 = (w0[0] - a[0], w0[1] - a[1])
    d1 = (w1[0] - a[0], w1[1] - a[1])
    if _cross(d0[0], d0[1], d1[0], d1[1]) >= 0.0:
        return d0, d1
    return d1, d0


def _clip_sector(cone, lo, hi):
    """Intersect the cone (or None for the full plane) with the sector (lo, hi)."""
    if cone is None:
        return (lo, hi)
    clo, chi = cone
    nlo = lo if _cross(clo[0], clo[1], lo[0], lo[1]) > 0.0 else clo
    nhi = hi if _cross(hi[0], hi[1], chi[0], chi[1]) > 0.0 else chi
    if _cross(nlo[0], nlo[1], nhi[0], nhi[1]) < -1e-15:
        return None
    return (nlo, nhi)


def _in_sector(cone, d, slack=1e-12):
    if cone is None:
        return True
    lo, hi = cone
    scale = math.hypot(d[0], d[1])
    return (
        _cross(lo[0], lo[1], d[0], d[1]) >= -slack * scale
        and _cross(d[0], d[1], hi[0], hi[1]) >= -slack * scale
    )


def _clipped_window_distance(pa, w0, w1, cone):
    """dist from pa to the part of the window visible through the cone."""
    if cone is None:
        return _segment_distance(pa, w0, w1)
    lo_u, hi_u = 0.0, 1.0
    dx, dy = w1[0] - w0[0], w1[1] - w0[1]
    for d, sign in ((cone[0], 1.0), (cone[1], -1.0)):
        # sign * cross(d, w(u) - pa) >= 0, linear in u
        c0 = sign * _cross(d[0], d[1], w0[0] - pa[0], w0[1] - pa[1])
        c1 = sign * _cross(d[0], d[1], dx, dy)
        if abs(c1) < 1e-300:
            if c0 < 0:
                return math.inf
            continue
        u_star = -c0 / c1
        if c1 > 0:
            lo_u = max(lo_u, u_star)
        else:
            hi_u = min(hi_u, u_star)
    if lo_u > hi_u:
        return math.inf
    p0 = (w0[0] + lo_u * dx, w0[1] + lo_u * dy)
    p1 = (w0[0] + hi_u * dx, w0[1] + hi_u * dy)
    return _segment_distance(pa, p0, p1)


def _crossing_params(pa, b_img, windows, tol=1e-9):
    """Per-window (t, u) of the straight segment pa -> b_img, or None if infeasible.

    t is the fraction along the segment, u the fraction along the window;
    crossings must fall inside every window span in increasing order.
    """
    dx, dy = b_img[0] - pa[0], b_img[1] - pa[1]
    out = []
    prev_t = 0.0
    for w0, w1 in windows:
        ex, ey = w1[0] - w0[0], w1[1] - w0[1]
        denom = _cross(dx, dy, ex, ey)
        if abs(denom) < 1e-300:
            return None
        t = _cross(w0[0] - pa[0], w0[1] - pa[1], ex, ey) / denom
        u = _cross(w0[0] - pa[0], w0[1] - pa[1], dx, dy) / denom
        if not (-tol <= u <= 1.0 + tol):
            return None
        if t < prev_t - tol or t > 1.0 + tol:
            return None
        prev_t = t
        out.append((t, u))
    return out


def distance_polygon(
    surface: PolygonSurface,
    a: SurfacePoint,
    b: SurfacePoint,
    max_depth: int | None = None,
) -> DistanceResult:
    """Geodesic distance on the doubled polygon with a witness polyline."""
    if max_depth is None:
        max_depth = 2 * surface.sides
    if max_depth < 1:
        raise ValueError("max_depth must be at least 1")
    a = canonical_boundary(surface, a)
    b = canonical_boundary(surface, b)
    a_boundary = is_boundary(surface, a)
    b_boundary = is_boundary(surface, b)
    same_face = a.face is b.face or a_boundary or b_boundary

    n = surface.sides
    verts = surface.vertices
    scale = surface.side_length
    pa, pb = a.pos, b.pos

    best = math.inf
    best_chain: UnfoldingChain | None = None
    # via-vertex paths are always admissible (vertices lie on the boundary)
    via_vertex = min(
        math.dist(pa, v) + math.dist(v, pb) for v in verts
    )
    best_vertex = via_vertex
    if same_face:
        best = math.dist(pa, pb)
        best_chain = UnfoldingChain()

    incomplete = False

    def expand(copy_verts, iso, last_edge, cone, chain_edges, chain_windows, chain_isos, depth):
        nonlocal best, best_chain, incomplete
        if depth >= max_depth:
            return
        order = []
        for e in range(n):
            if e == last_edge:
                continue
            w0 = copy_verts[e]
            w1 = copy_verts[(e + 1) % n]
            d_win = _segment_distance(pa, w0, w1)
            if d_win >= best:
                continue
            order.append((d_win, e, w0, w1))
        order.sort()
        for d_win, e, w0, w1 in order:
            if d_win >= best:
                continue
            lo, hi = _sector_from_segment(pa, w0, w1)
            new_cone = _clip_sector(cone, lo, hi)
            if new_cone is None:
                continue
            if _clipped_window_distance(pa, w0, w1, new_cone) >= best:
                continue
            refl = _reflect_matrix(w0, w1)
            new_iso = _compose(refl, iso)
            new_verts = tuple(_apply(refl, v) for v in copy_verts)
            new_depth = depth + 1
            edges2 = chain_edges + [e]
            windows2 = chain_windows + [(w0, w1)]
            isos2 = chain_isos + [iso]
            parity_ok = (new_depth % 2 == 0) == same_face
            if parity_ok:
                b_img = _apply(new_iso, pb)
                cand = math.dist(pa, b_img)
                if (
                    cand < best - 1e-12 * scale
                    and _in_sector(new_cone, (b_img[0] - pa[0], b_img[1] - pa[1]))
                    and _crossing_params(pa, b_img, windows2) is not None
                ):
                    best = cand
                    best_chain = UnfoldingChain(list(edges2), list(windows2))
                    best_chain._isos = list(isos2)  # type: ignore[attr-defined]
            if new_depth < max_depth:
                expand(new_verts, new_iso, e, new_cone, edges2, windows2, isos2, new_depth)
            elif d_win < best:
                incomplete = True

    if best > 1e-15 * scale or not same_face:
        expand(tuple(verts), _IDENTITY, None, None, [], [], [], 0)

    grazing = False
    if best_vertex < best - 1e-15:
        # no through-face chain beat the corner path; report it honestly
        w = min(verts, key=lambda v: math.dist(pa, v) + math.dist(v, pb))
        best = best_vertex
        best_chain = UnfoldingChain()
        witness = [a, SurfacePoint(Face.FRONT, w[0], w[1]), b]
        return DistanceResult(best, witness, best_chain, 0, not incomplete, True)
    if abs(best - best_vertex) <= 1e-12 * max(scale, best):
        grazing = True

    assert best_chain is not None
    witness = _fold_witness(surface, a, b, pa, pb, best_chain)
    return DistanceResult(best, witness, best_chain, best_chain.depth, not incomplete, grazing)


def _fold_witness(surface, a, b, pa, pb, chain: UnfoldingChain) -> list[SurfacePoint]:
    if chain.depth == 0:
        return [a, b]
    isos = chain._isos  # type: ignore[attr-defined]
    last_iso = _compose(_reflect_matrix(*chain.windows[-1]), isos[-1])
    b_img = _apply(last_iso, pb)
    params = _crossing_params(pa, b_img, chain.windows)
    witness = [a]
    dx, dy = b_img[0] - pa[0], b_img[1] - pa[1]
    for j, (t, _) in enumerate(params):
        x = (pa[0] + t * dx, pa[1] + t * dy)
        actual = _apply(_invert(isos[j]), x)
        witness.append(SurfacePoint(Face.FRONT, actual[0], actual[1]))
    witness.append(b)
    return witness


def distance_disk(disk: DiskSurface, a: SurfacePoint, b: SurfacePoint) -> DistanceResult:
    """Geodesic distance on the doubled disk."""
    a = canonical_boundary(disk, a)
    b = canonical_boundary(disk, b)
    pa, pb = a.pos, b.pos
    r = disk.radius
    same_face = a.face is b.face or disk.on_boundary(*pa) or disk.on_boundary(*pb)
    if same_face:
        d = math.dist(pa, pb)
        return DistanceResult(d, [a, b], UnfoldingChain(), 0)

    def objective(phi):
        z = (r * math.cos(phi), r * math.sin(phi))
        return math.dist(pa, z) + math.dist(z, pb)

    samples = 720
    phis = [2.0 * math.pi * i / samples for i in range(samples)]
    vals = [objective(p) for p in phis]
    best = math.inf
    best_phi = 0.0
    for i in range(samples):
        if vals[i] <= vals[(i - 1) % samples] and vals[i] <= vals[(i + 1) % samples]:
            lo = phis[i] - 2.0 * math.pi / samples
            hi = phis[i] + 2.0 * math.pi / samples
            res = minimize_scalar(
                objective, bounds=(lo, hi), method="bounded",
                options={"xatol": 1e-14},
            )
            if res.fun < best:
                best, best_phi = res.fun, res.x
    z = SurfacePoint(Face.FRONT, r * math.cos(best_phi), r * math.sin(best_phi))
    return DistanceResult(best, [a, z, b], UnfoldingChain(), 1)


def distance(surface: Surface, a: SurfacePoint, b: SurfacePoint) -> DistanceResult:
    if isinstance(surface, DiskSurface):
        return distance_disk(surface, a, b)
    return distance_polygon(surface, a, b)


def _fast_polygon_distances(surface, pa, fa_front, B, b_front):
    """Vectorized distances from one point to arrays of points (diameter helper).

    B: (m, 2) planar coords; b_front: (m,) bool face flags.  Exactness rests
    on shortest paths crossing the boundary at most once on a doubled
    convex polygon.
    """
    n = surface.sides
    verts = np.array(surface.vertices)
    a = np.asarray(pa)
    tol = 1e-9 * surface.side_length
    normals = np.array([surface.edge_inward_normal(e) for e in range(n)])
    offs_b = np.min(
        (B[:, None, 0] - verts[None, :, 0]) * normals[None, :, 0]
        + (B[:, None, 1] - verts[None, :, 1]) * normals[None, :, 1],
        axis=1,
    )
    a_bdry = min(
        (a[0] - verts[e][0]) * normals[e][0] + (a[1] - verts[e][1]) * normals[e][1]
        for e in range(n)
    ) <= tol
    # boundary points belong to both faces, so the straight chord applies
    same = (b_front == fa_front) | a_bdry | (offs_b <= tol)
    direct = np.hypot(B[:, 0] - a[0], B[:, 1] - a[1])
    # via-vertex bound, valid for any face combination
    via = np.min(
        np.hypot(verts[:, 0] - a[0], verts[:, 1] - a[1])[:, None]
        + np.hypot(B[None, :, 0] - verts[:, 0, None], B[None, :, 1] - verts[:, 1, None]),
        axis=0,
    )
    opp = via.copy()
    for e in range(n):
        w0 = verts[e]
        w1 = verts[(e + 1) % n]
        A, t = _reflect_matrix(tuple(w0), tuple(w1))
        A = np.array(A)
        t = np.array(t)
        Br = B @ A.T + t
        d = np.hypot(Br[:, 0] - a[0], Br[:, 1] - a[1])
        # does the straight segment a -> reflected b cross within the edge span?
        dx, dy = Br[:, 0] - a[0], Br[:, 1] - a[1]
        ex, ey = w1[0] - w0[0], w1[1] - w0[1]
        denom = dx * ey - dy * ex
        with np.errstate(divide="ignore", invalid="ignore"):
            tpar = ((w0[0] - a[0]) * ey - (w0[1] - a[1]) * ex) / denom
            upar = ((w0[0] - a[0]) * dy - (w0[1] - a[1]) * dx) / denom
        ok = (denom != 0) & (tpar > 0) & (tpar < 1) & (upar >= 0) & (upar <= 1)
        opp = np.where(ok, np.minimum(opp, d), opp)
    return np.where(same, direct, opp)


def _polygon_grid(surface: PolygonSurface, g: int) -> np.ndarray:
    R = surface.circumradius
    xs = np.linspace(-R, R, g)
    X, Y = np.meshgrid(xs, xs)
    pts = np.column_stack([X.ravel(), Y.ravel()])
    keep = np.array([surface.contains(x, y, tol=-1e-9) for x, y in pts])
    inner = pts[keep]
    rim = []
    for e in range(surface.sides):
        (ax, ay), (bx, by) = surface.edge_endpoints(e)
        for u in np.linspace(0.0, 1.0, g, endpoint=False):
            rim.append((ax + u * (bx - ax), ay + u * (by - ay)))
    return np.vstack([inner, np.array(rim)])


def _wedge_samples(surface: PolygonSurface, g: int) -> np.ndarray:
    """Barycentric grid over the fundamental triangle center / V_0 / mid-edge-0."""
    c = np.zeros(2)
    v = np.array(surface.vertex(0))
    (ax, ay), (bx, by) = surface.edge_endpoints(0)
    m = np.array([(ax + bx) / 2.0, (ay + by) / 2.0])
    pts = []
    for i in range(g + 1):
        for j in range(g + 1 - i):
            k = g - i - j
            pts.append((i * c + j * v + k * m) / g)
    return np.array(pts)


def diameter(surface: Surface, grid: int = 48) -> dict:
    """Metric diameter with an argmax pair, refined to 1e-6 relative."""
    if grid < 32:
        raise ValueError("grid must be at least 32")
    if isinstance(surface, DiskSurface):
        c_front = SurfacePoint(Face.FRONT, 0.0, 0.0)
        c_back = SurfacePoint(Face.BACK, 0.0, 0.0)
        return {"diam": 2.0 * surface.radius, "pair": (c_front, c_back)}

    A = _wedge_samples(surface, max(grid // 3, 12))
    A = np.vstack([A, np.array([surface.vertex(0)])])
    B = _polygon_grid(surface, grid)
    B = np.vstack([B, np.array(surface.vertices)])
    best = -1.0
    best_pair = None
    for fb_front in (True, False):
        flags = np.full(len(B), fb_front)
        for pa in A:
            d = _fast_polygon_distances(surface, pa, True, B, flags)
            i = int(np.argmax(d))
            if d[i] > best:
                best = float(d[i])
                best_pair = (tuple(pa), True, tuple(B[i]), fb_front)

    pa, _, pb, fb_front = best_pair
    best, pa, pb = _pattern_refine(surface, pa, pb, fb_front, best)
    a_pt = SurfacePoint(Face.FRONT, pa[0], pa[1])
    b_pt = SurfacePoint(Face.FRONT if fb_front else Face.BACK, pb[0], pb[1])
    return {"diam": best, "pair": (a_pt, b_pt)}


def _pattern_refine(surface, pa, pb, fb_front, best):
    step = surface.side_length / 16.0
    flag = np.array([fb_front])
    while step > 2.5e-7 * surface.side_length:
        improved = False
        for which in (0, 1):
            base = pa if which == 0 else pb
            for dx, dy in ((step, 0), (-step, 0), (0, step), (0, -step)):
                cand = (base[0] + dx, base[1] + dy)
                if not surface.contains(cand[0], cand[1], tol=1e-12):
                    continue
                qa, qb = (cand, pb) if which == 0 else (pa, cand)
                d = float(
                    _fast_polygon_distances(
                        surface, qa, True, np.array([qb]), flag
                    )[0]
                )
                if d > best + 1e-15:
                    best, pa, pb = d, qa, qb
                    improved = True
        if not improved:
            step /= 2.0
    return best, pa, pb


@lru_cache(maxsize=64)
def _poly_cache(surface: PolygonSurface):
    n = surface.sides
    verts = surface.vertices
    normals = tuple(surface.edge_inward_normal(e) for e in range(n))
    refls = tuple(
        _reflect_matrix(verts[e], verts[(e + 1) % n]) for e in range(n)
    )
    return verts, normals, refls


def distance_fast(surface: Surface, a: SurfacePoint, b: SurfacePoint) -> float:
    """Scalar fast distance; agrees with the DistanceResult machinery."""
    if isinstance(surface, DiskSurface):
        return _disk_distance_fast(surface, a, b)
    verts, normals, refls = _poly_cache(surface)
    n = surface.sides
    tol = 1e-9 * surface.side_length
    pa, pb = a.pos, b.pos
    off_a = min(
        (pa[0] - verts[e][0]) * normals[e][0] + (pa[1] - verts[e][1]) * normals[e][1]
        for e in range(n)
    )
    off_b = min(
        (pb[0] - verts[e][0]) * normals[e][0] + (pb[1] - verts[e][1]) * normals[e][1]
        for e in range(n)
    )
    if a.face is b.face or off_a <= tol or off_b <= tol:
        return math.dist(pa, pb)
    best = min(math.dist(pa, v) + math.dist(v, pb) for v in verts)
    for e in range(n):
        br = _apply(refls[e], pb)
        w0, w1 = verts[e], verts[(e + 1) % n]
        dx, dy = br[0] - pa[0], br[1] - pa[1]
        ex, ey = w1[0] - w0[0], w1[1] - w0[1]
        denom = dx * ey - dy * ex
        if denom == 0.0:
            continue
        t = ((w0[0] - pa[0]) * ey - (w0[1] - pa[1]) * ex) / denom
        u = ((w0[0] - pa[0]) * dy - (w0[1] - pa[1]) * dx) / denom
        if 0.0 < t < 1.0 and 0.0 <= u <= 1.0:
            best = min(best, math.hypot(dx, dy))
    return best


def _disk_distance_fast(disk: DiskSurface, a: SurfacePoint, b: SurfacePoint) -> float:
    pa, pb = a.pos, b.pos
    r = disk.radius
    tol = 1e-9 * r
    if (
        a.face is b.face
        or abs(math.hypot(*pa) - r) <= tol
        or abs(math.hypot(*pb) - r) <= tol
    ):
        return math.dist(pa, pb)
    phis = np.linspace(0.0, 2.0 * math.pi, 1024, endpoint=False)
    zx, zy = r * np.cos(phis), r * np.sin(phis)
    f = np.hypot(zx - pa[0], zy - pa[1]) + np.hypot(zx - pb[0], zy - pb[1])
    i = int(np.argmin(f))
    step = 2.0 * math.pi / 1024

    def objective(phi):
        z = (r * math.cos(phi), r * math.sin(phi))
        return math.dist(pa, z) + math.dist(z, pb)

    res = minimize_scalar(
        objective,
        bounds=(phis[i] - step, phis[i] + step),
        method="bounded",
        options={"xatol": 1e-14},
    )
    return float(res.fun)


def distance_many(surface: Surface, pairs: list[tuple[SurfacePoint, SurfacePoint]]) -> list[float]:
    """Batch distances via the one-crossing closed form (polygons) or the scan.

    Agrees with distance_polygon to machine precision on doubled convex
    polygons, where shortest paths cross the boundary at most once; the
    test suite cross-validates the two on random pairs.
    """
    if isinstance(surface, DiskSurface):
        return [distance_disk(surface, a, b).distance for a, b in pairs]
    out = []
    for a, b in pairs:
        d = _fast_polygon_distances(
            surface,
            a.pos,
            a.face is Face.FRONT,
            np.array([b.pos]),
            np.array([b.face is Face.FRONT]),
        )
        out.append(float(d[0]))
    return out


@lru_cache(maxsize=16)
def _boundary_samples(surface: Surface, resolution: int) -> tuple:
    pts = []
    if isinstance(surface, DiskSurface):
        m = 6 * resolution
        r = surface.radius
        for i in range(m):
            phi = 2.0 * math.pi * i / m
            pts.append((r * math.cos(phi), r * math.sin(phi)))
    else:
        for e in range(surface.sides):
            (ax, ay), (bx, by) = surface.edge_endpoints(e)
            for i in range(resolution):
                u = i / resolution
                pts.append((ax + u * (bx - ax), ay + u * (by - ay)))
    return tuple(pts)


def mesh_oracle(surface: Surface, resolution: int, a: SurfacePoint, b: SurfacePoint) -> float:
    """Approximate distance from a boundary-sample graph, for cross-checks.

    Nodes are boundary samples plus the two query points; every chord
    between boundary nodes stays inside the convex region on either face,
    so boundary-to-boundary edges need no face tag.  By the planar triangle
    inequality the shortest path uses at most one intermediate node, which
    collapses the graph search to a vectorized minimum.
    """
    if resolution < 20:
        raise ValueError("resolution must be at least 20")
    a = canonical_boundary(surface, a)
    b = canonical_boundary(surface, b)
    Z = np.array(_boundary_samples(surface, resolution))
    pa, pb = a.pos, b.pos
    da = np.hypot(Z[:, 0] - pa[0], Z[:, 1] - pa[1])
    db = np.hypot(Z[:, 0] - pb[0], Z[:, 1] - pb[1])
    best = float(np.min(da + db))
    same_face = (
        a.face is b.face or is_boundary(surface, a) or is_boundary(surface, b)
    )
    if same_face:
        best = min(best, math.dist(pa, pb))
    return best
