"""Geodesic tracing on doubled polygons and the doubled disk.

A geodesic on the doubled polygon projects to a billiard trajectory in the
polygon: at each edge hit the planar direction reflects across the edge
while the curve passes to the other face.  Faces therefore strictly
alternate along a traced path, starting from Front.

Angles at a hit are measured from the edge's counterclockwise direction and
lie in (0, pi) for the outgoing segment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import gcd

from .surface import (
    DiskSurface,
    EdgeLocation,
    Face,
    PolygonSurface,
    SurfacePoint,
    edge_point,
)

VERTEX_EPSILON = 1e-9      # times side_length; hits closer to a vertex abort the trace
CLOSURE_POS_TOL = 1e-9     # times side_length
CLOSURE_ANGLE_TOL = 1e-9   # radians


@dataclass(frozen=True)
class Hit:
    """One boundary hit: edge, ccw parameter u, outgoing angle from the edge."""

    edge: int
    u: float
    angle: float


@dataclass
class GeodesicPath:
    surface: PolygonSurface
    hits: list[Hit]
    closed: bool = False
    vertex_collision: bool = False
    _positions: list[tuple[float, float]] | None = field(default=None, repr=False)

    @property
    def num_segments(self) -> int:
        return len(self.hits) - 1

    @property
    def period(self) -> int:
        if not self.closed:
            raise ValueError("period is defined only for closed paths")
        return self.num_segments

    @property
    def start_angle(self) -> float:
        return self.hits[0].angle

    @property
    def positions(self) -> list[tuple[float, float]]:
        if self._positions is None:
            self._positions = [
                edge_point(self.surface, EdgeLocation(h.edge, h.u)).pos for h in self.hits
            ]
        return self._positions

    @property
    def segment_lengths(self) -> list[float]:
        pos = self.positions
        return [math.dist(pos[i], pos[i + 1]) for i in range(self.num_segments)]

    @property
    def length(self) -> float:
        return sum(self.segment_lengths)

    def segment_face(self, i: int) -> Face:
        return Face.FRONT if i % 2 == 0 else Face.BACK

    def point_at(self, t: float) -> SurfacePoint:
        """Point at arclength t from the start (t taken mod length if closed)."""
        total = self.length
        if self.closed:
            t = t % total
        if t < 0 or t > total + 1e-9 * total:
            raise ValueError("arclength outside the path")
        pos = self.positions
        for i, seg_len in enumerate(self.segment_lengths):
            if t <= seg_len or i == self.num_segments - 1:
                f = t / seg_len
                x = pos[i][0] + f * (pos[i + 1][0] - pos[i][0])
                y = pos[i][1] + f * (pos[i + 1][1] - pos[i][1])
                if f <= 1e-12:
                    return SurfacePoint(Face.FRONT, pos[i][0], pos[i][1])
                if f >= 1.0 - 1e-12:
                    return SurfacePoint(Face.FRONT, pos[i + 1][0], pos[i + 1][1])
                return SurfacePoint(self.segment_face(i), x, y)
            t -= seg_len
        raise AssertionError("unreachable")

    def hit_arclengths(self) -> list[float]:
        out = [0.0]
        for seg_len in self.segment_lengths:
            out.append(out[-1] + seg_len)
        return out


@dataclass
class DiskGeodesic:
    """Closed geodesic on the doubled disk: inscribed polygon or star."""

    surface: DiskSurface
    vertex_angles: list[float]   # boundary angles of the m*t + 1 hits (last repeats first)
    closed: bool = True

    @property
    def num_segments(self) -> int:
        return len(self.vertex_angles) - 1

    @property
    def period(self) -> int:
        return self.num_segments

    @property
    def chord_length(self) -> float:
        r = self.surface.radius
        a0, a1 = self.vertex_angles[0], self.vertex_angles[1]
        return 2.0 * r * abs(math.sin((a1 - a0) / 2.0))

    @property
    def length(self) -> float:
        return self.chord_length * self.num_segments

    def hit_position(self, i: int) -> tuple[float, float]:
        r = self.surface.radius
        a = self.vertex_angles[i]
        return (r * math.cos(a), r * math.sin(a))

    def segment_face(self, i: int) -> Face:
        return Face.FRONT if i % 2 == 0 else Face.BACK

    def point_at(self, t: float) -> SurfacePoint:
        total = self.length
        if self.closed:
            t = t % total
        chord = self.chord_length
        i = min(int(t / chord), self.num_segments - 1)
        f = (t - i * chord) / chord
        p, q = self.hit_position(i), self.hit_position(i + 1)
        if f <= 1e-12:
            return SurfacePoint(Face.FRONT, p[0], p[1])
        if f >= 1.0 - 1e-12:
            return SurfacePoint(Face.FRONT, q[0], q[1])
        return SurfacePoint(self.segment_face(i), p[0] + f * (q[0] - p[0]), p[1] + f * (q[1] - p[1]))

    def hit_arclengths(self) -> list[float]:
        chord = self.chord_length
        return [i * chord for i in range(len(self.vertex_angles))]


class TraceError(Exception):
    pass


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def _next_hit(surface: PolygonSurface, px, py, vx, vy, current_edge):
    """Intersect the ray (p, v) with the polygon boundary, skipping current_edge."""
    n = surface.sides
    verts = surface.vertices
    best = None
    eps = 1e-12 * surface.side_length
    for e in range(n):
        if e == current_edge:
            continue
        ax, ay = verts[e]
        bx, by = verts[(e + 1) % n]
        dx, dy = bx - ax, by - ay
        denom = _cross(vx, vy, dx, dy)
        if abs(denom) < 1e-300:
            continue
        wx, wy = ax - px, ay - py
        t = _cross(wx, wy, dx, dy) / denom
        u = _cross(wx, wy, vx, vy) / denom
        if t > eps and -1e-9 <= u <= 1.0 + 1e-9:
            if best is None or t < best[0]:
                best = (t, e, u)
    return best


def trace(
    surface: PolygonSurface,
    start: EdgeLocation,
    angle: float,
    max_bounces: int,
) -> GeodesicPath:
    """Trace a geodesic from a boundary point at the given launch angle.

    The angle is measured from the start edge's counterclockwise direction
    and must lie strictly inside (0, pi).  The trace stops early with the
    vertex_collision flag if any hit comes within VERTEX_EPSILON of a
    vertex, and truncates to the first closure if one occurs.
    """
    if not 0.0 < start.u < 1.0:
        raise TraceError("start parameter must lie strictly inside the edge")
    if not 1e-12 < angle < math.pi - 1e-12:
        raise TraceError("degenerate launch angle")

    n = surface.sides
    p0 = edge_point(surface, start)
    dx, dy = surface.edge_direction(start.edge)
    nx, ny = surface.edge_inward_normal(start.edge)
    vx = math.cos(angle) * dx + math.sin(angle) * nx
    vy = math.cos(angle) * dy + math.sin(angle) * ny

    hits = [Hit(start.edge, start.u, angle)]
    px, py = p0.pos
    edge = start.edge
    collided = False
    for bounce in range(1, max_bounces + 1):
        found = _next_hit(surface, px, py, vx, vy, edge)
        if found is None:
            raise TraceError("ray escaped the polygon (numerical failure)")
        _, edge, u = found
        if min(u, 1.0 - u) < VERTEX_EPSILON:
            collided = True
            break
        ax, ay = surface.vertices[edge]
        bx, by = surface.vertices[(edge + 1) % n]
        px, py = ax + u * (bx - ax), ay + u * (by - ay)
        # reflect across the edge line; tangential component is preserved
        ex, ey = surface.edge_direction(edge)
        nx, ny = -ey, ex
        dot = vx * nx + vy * ny
        vx, vy = vx - 2.0 * dot * nx, vy - 2.0 * dot * ny
        out_angle = math.atan2(vx * nx + vy * ny, vx * ex + vy * ey)
        hits.append(Hit(edge, u, out_angle))
        if bounce % 2 == 0 and _closes(surface, hits):
            return GeodesicPath(surface, hits, closed=True)
    return GeodesicPath(surface, hits, closed=False, vertex_collision=collided)


def _closes(surface: PolygonSurface, hits: list[Hit]) -> bool:
    first, last = hits[0], hits[-1]
    if first.edge != last.edge:
        return False
    # the circumradius term keeps the test meaningful on many-sided polygons
    # where a single side is far smaller than the surface itself
    pos_tol = CLOSURE_POS_TOL * surface.side_length + 1e-11 * surface.circumradius
    return (
        abs(first.u - last.u) * surface.side_length <= pos_tol
        and abs(first.angle - last.angle) <= CLOSURE_ANGLE_TOL
    )


def skip_numbers(path: GeodesicPath) -> list[int]:
    """Counterclockwise vertex counts (end_edge - start_edge) mod n per segment."""
    n = path.surface.sides
    return [
        (path.hits[i + 1].edge - path.hits[i].edge) % n for i in range(path.num_segments)
    ]


def vertex_ratios(path: GeodesicPath) -> list[float]:
    """Per-hit split ratio a/(a+b), a toward the clockwise-adjacent vertex.

    With counterclockwise vertex order the clockwise-adjacent vertex of a
    hit on edge e is vertex e, so the ratio equals the edge parameter u.
    A reversed traversal maps v to 1-v.
    """
    hits = path.hits[:-1] if path.closed else path.hits
    return [h.u for h in hits]


def winding(path: GeodesicPath) -> int:
    n = path.surface.sides
    total = sum(skip_numbers(path))
    if total % n != 0:
        raise ValueError("skip numbers of a closed path must sum to a multiple of n")
    return total // n


def _midpoint_hop_path(surface: PolygonSurface, step: int, traversals: int) -> GeodesicPath:
    """Closed path through every step-th edge midpoint, traversed t times."""
    n = surface.sides
    cycle = n // gcd(n, step)
    count = cycle * traversals
    edges = [(i * step) % n for i in range(count + 1)]
    hits = []
    for i in range(count + 1):
        e = edges[i]
        e_next = edges[(i + 1) % (count + 1)] if i < count else edges[1]
        p = edge_point(surface, EdgeLocation(e, 0.5)).pos
        q = edge_point(surface, EdgeLocation(e_next, 0.5)).pos
        ex, ey = surface.edge_direction(e)
        nx, ny = -ey, ex
        wx, wy = q[0] - p[0], q[1] - p[1]
        norm = math.hypot(wx, wy)
        ang = math.atan2((wx * nx + wy * ny) / norm, (wx * ex + wy * ey) / norm)
        hits.append(Hit(e, 0.5, ang))
    return GeodesicPath(surface, hits, closed=True)


def make_special(surface: PolygonSurface, kind: str, param: int | None = None) -> GeodesicPath:
    """Construct one of the named closed geodesics.

    kind is one of "vshape", "over_under", "midpoint_star" (param = step),
    "half_geodesic" (param = edge index, even n only).
    """
    n = surface.sides
    if kind == "vshape":
        if n % 2 == 0 or n < 3:
            raise ValueError("vshape requires an odd-gon")
        theta = math.pi * (n - 2) / (2 * n)
        path = trace(surface, EdgeLocation(0, 0.5), theta, 4)
        if not path.closed or path.period != 4:
            raise ValueError("vshape construction failed to close")
        return path
    if kind == "over_under":
        if n % 2 == 1:
            return _midpoint_hop_path(surface, 1, 2)
        return _midpoint_hop_path(surface, 1, 1)
    if kind == "midpoint_star":
        if param is None:
            raise ValueError("midpoint_star requires a step parameter")
        cycle = n // gcd(n, param)
        if cycle < 3:
            raise ValueError("step leaves fewer than 3 distinct midpoints")
        traversals = 2 if cycle % 2 == 1 else 1
        return _midpoint_hop_path(surface, param, traversals)
    if kind == "half_geodesic":
        if n % 2 == 1:
            raise ValueError("half geodesics exist only on even-gons")
        e = 0 if param is None else param % n
        opposite = (e + n // 2) % n
        half = math.pi / 2.0
        hits = [Hit(e, 0.5, half), Hit(opposite, 0.5, half), Hit(e, 0.5, half)]
        return GeodesicPath(surface, hits, closed=True)
    raise ValueError(f"unknown special geodesic kind: {kind}")


def make_disk_geodesic(disk: DiskSurface, m: int, q: int, t: int) -> DiskGeodesic:
    """Inscribed regular m-gon (q=1) or {m/q} star, traversed t times."""
    if m < 2 or q < 1:
        raise ValueError("need m >= 2 and q >= 1")
    if gcd(m, q) != 1:
        raise ValueError("m and q must be coprime")
    if not (q < m / 2 or (m == 2 and q == 1)):
        raise ValueError("need q < m/2 (or the doubled diameter m=2, q=1)")
    count = m * t
    if count % 2 != 0:
        raise ValueError("total segment count m*t must be even (faces alternate)")
    step = 2.0 * math.pi * q / m
    start = -math.pi / 2.0
    angles = [start + i * step for i in range(count + 1)]
    return DiskGeodesic(disk, angles)


def _is_palindromic(skips: list[int]) -> bool:
    m = len(skips)
    return all(skips[i] == skips[m - 1 - i] for i in range(m))


def canonicalize_to_midpoint(path: GeodesicPath) -> GeodesicPath:
    """Translate a closed geodesic to pass through an edge midpoint.

    Picks a rotation of the hit sequence whose skip numbers are palindromic
    and re-traces from the midpoint of that hit's edge at the same
    inclination.  Length and skip multiset are preserved.
    """
    if not path.closed:
        raise ValueError("can only canonicalize closed paths")
    if path.vertex_collision:
        raise ValueError("path flagged for vertex collision")
    skips = skip_numbers(path)
    m = len(skips)
    candidates = []
    for r in range(m):
        rotated = skips[r:] + skips[:r]
        if _is_palindromic(rotated):
            candidates.append(r)
    if not candidates:
        raise ValueError("no palindromic rotation found; not a genuine closed geodesic?")
    orig_len = path.length
    orig_multiset = sorted(skips)
    for r in candidates:
        h = path.hits[r]
        try:
            translated = trace(path.surface, EdgeLocation(h.edge, 0.5), h.angle, m)
        except TraceError:
            continue
        if not translated.closed or translated.period != m:
            continue
        if sorted(skip_numbers(translated)) != orig_multiset:
            continue
        if abs(translated.length - orig_len) > 1e-12 * orig_len + 1e-15:
            continue
        return translated
    raise ValueError("midpoint translation failed (hit a vertex or lost closure)")


def path_to_json(path: GeodesicPath | DiskGeodesic) -> dict:
    if isinstance(path, DiskGeodesic):
        return {
            "surface": {"kind": "disk", "radius": path.surface.radius},
            "closed": path.closed,
            "segments": [
                {
                    "face": path.segment_face(i).value,
                    "start": {"angle": path.vertex_angles[i]},
                    "end": {"angle": path.vertex_angles[i + 1]},
                }
                for i in range(path.num_segments)
            ],
            "length": path.length,
        }
    return {
        "surface": {
            "kind": "ngon",
            "n": path.surface.sides,
            "side": path.surface.side_length,
        },
        "closed": path.closed,
        "segments": [
            {
                "face": path.segment_face(i).value,
                "start": {"edge": path.hits[i].edge, "u": path.hits[i].u},
                "end": {"edge": path.hits[i + 1].edge, "u": path.hits[i + 1].u},
            }
            for i in range(path.num_segments)
        ],
        "skips": skip_numbers(path),
        "vertex_ratios": vertex_ratios(path),
        "length": path.length,
    }


def path_from_json(data: dict) -> GeodesicPath | DiskGeodesic:
    surf = data["surface"]
    if surf["kind"] == "disk":
        disk = DiskSurface(surf["radius"])
        angles = [seg["start"]["angle"] for seg in data["segments"]]
        angles.append(data["segments"][-1]["end"]["angle"])
        return DiskGeodesic(disk, angles, closed=data.get("closed", True))
    surface = PolygonSurface(surf["n"], surf["side"])
    segs = data["segments"]
    locs = [(seg["start"]["edge"], seg["start"]["u"]) for seg in segs]
    locs.append((segs[-1]["end"]["edge"], segs[-1]["end"]["u"]))
    hits = []
    for i, (e, u) in enumerate(locs):
        if i < len(segs):
            p = edge_point(surface, EdgeLocation(e, u)).pos
            e2, u2 = locs[i + 1]
            q = edge_point(surface, EdgeLocation(e2, u2)).pos
            ex, ey = surface.edge_direction(e)
            nx, ny = -ey, ex
            wx, wy = q[0] - p[0], q[1] - p[1]
            norm = math.hypot(wx, wy)
            ang = math.atan2((wx * nx + wy * ny) / norm, (wx * ex + wy * ey) / norm)
        else:
            ang = hits[0].angle
        hits.append(Hit(e, u, ang))
    return GeodesicPath(surface, hits, closed=data.get("closed", False))
