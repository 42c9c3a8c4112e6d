"""Immutable models of the doubled regular n-gon and the doubled disk.

Coordinate convention: the polygon is centered at the origin, vertices
counterclockwise, edge 0 horizontal at the bottom (centered on the
negative-y axis).  Edge e runs from vertex e to vertex e+1, so walking
along an edge in the direction of increasing parameter u is walking
counterclockwise around the boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property


class Face(Enum):
    FRONT = "front"
    BACK = "back"

    def flipped(self) -> "Face":
        return Face.BACK if self is Face.FRONT else Face.FRONT


@dataclass(frozen=True)
class EdgeLocation:
    """A boundary point given as (edge index, parameter u in (0,1) ccw)."""

    edge: int
    u: float

    def __post_init__(self):
        if not 0.0 < self.u < 1.0:
            raise ValueError("edge parameter must lie strictly between 0 and 1")


@dataclass(frozen=True)
class SurfacePoint:
    """A point on one face of the doubled surface, in shared planar coords."""

    face: Face
    x: float
    y: float

    @property
    def pos(self) -> tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True)
class PolygonSurface:
    """Doubled regular polygon X_n with n sides of the given length."""

    sides: int
    side_length: float

    def __post_init__(self):
        if self.sides < 3:
            raise ValueError(f"need at least 3 sides, got {self.sides}")
        if self.side_length <= 0:
            raise ValueError("side_length must be positive")

    @classmethod
    def with_side(cls, n: int, side: float = 1.0) -> "PolygonSurface":
        return cls(n, side)

    @classmethod
    def with_inradius(cls, n: int, inradius: float = 1.0) -> "PolygonSurface":
        return cls(n, 2.0 * inradius * math.tan(math.pi / n))

    @property
    def apothem(self) -> float:
        return self.side_length / (2.0 * math.tan(math.pi / self.sides))

    @property
    def circumradius(self) -> float:
        return self.side_length / (2.0 * math.sin(math.pi / self.sides))

    @property
    def perimeter(self) -> float:
        return self.sides * self.side_length

    @cached_property
    def vertices(self) -> tuple[tuple[float, float], ...]:
        n, r = self.sides, self.circumradius
        base = -math.pi / 2.0 - math.pi / n
        return tuple(
            (r * math.cos(base + 2.0 * math.pi * k / n),
             r * math.sin(base + 2.0 * math.pi * k / n))
            for k in range(n)
        )

    def vertex(self, k: int) -> tuple[float, float]:
        return self.vertices[k % self.sides]

    def edge_endpoints(self, e: int) -> tuple[tuple[float, float], tuple[float, float]]:
        return self.vertex(e), self.vertex(e + 1)

    def edge_direction(self, e: int) -> tuple[float, float]:
        """Unit vector along edge e in the counterclockwise direction."""
        a, b = self.edge_endpoints(e)
        return ((b[0] - a[0]) / self.side_length, (b[1] - a[1]) / self.side_length)

    def edge_inward_normal(self, e: int) -> tuple[float, float]:
        dx, dy = self.edge_direction(e)
        return (-dy, dx)

    def contains(self, x: float, y: float, tol: float = 1e-12) -> bool:
        slack = tol * self.side_length
        for e in range(self.sides):
            (ax, ay), _ = self.edge_endpoints(e)
            nx, ny = self.edge_inward_normal(e)
            if (x - ax) * nx + (y - ay) * ny < -slack:
                return False
        return True

    def boundary_location(self, x: float, y: float, tol: float = 1e-9) -> EdgeLocation | None:
        """EdgeLocation of (x, y) if it lies on the boundary, else None."""
        slack = tol * self.side_length
        for e in range(self.sides):
            (ax, ay), (bx, by) = self.edge_endpoints(e)
            dx, dy = bx - ax, by - ay
            u = ((x - ax) * dx + (y - ay) * dy) / (self.side_length ** 2)
            if -tol <= u <= 1.0 + tol:
                px, py = ax + u * dx, ay + u * dy
                if math.hypot(x - px, y - py) <= slack:
                    # clamp just inside the open interval: exact vertices are
                    # excluded from edge coordinates but still nearby queries
                    u = min(max(u, math.nextafter(0.0, 1.0)), math.nextafter(1.0, 0.0))
                    return EdgeLocation(e, u)
        return None


@dataclass(frozen=True)
class DiskSurface:
    """Doubled disk of the given radius, centered at the origin."""

    radius: float

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("radius must be positive")

    def contains(self, x: float, y: float, tol: float = 1e-12) -> bool:
        return math.hypot(x, y) <= self.radius * (1.0 + tol)

    def on_boundary(self, x: float, y: float, tol: float = 1e-9) -> bool:
        return abs(math.hypot(x, y) - self.radius) <= tol * self.radius


Surface = PolygonSurface | DiskSurface


@dataclass(frozen=True)
class SurfaceMetrics:
    apothem: float
    circumradius: float
    perimeter: float
    doubled_area: float
    interior_angle: float


def edge_point(surface: PolygonSurface, loc: EdgeLocation) -> SurfacePoint:
    """Planar point (1-u)*V_e + u*V_{e+1}, tagged Front (canonical boundary)."""
    if not 0 <= loc.edge < surface.sides:
        raise ValueError(f"edge index {loc.edge} out of range for {surface.sides}-gon")
    a, b = surface.edge_endpoints(loc.edge)
    u = loc.u
    return SurfacePoint(Face.FRONT, (1.0 - u) * a[0] + u * b[0], (1.0 - u) * a[1] + u * b[1])


def metrics(surface: Surface) -> SurfaceMetrics:
    if isinstance(surface, DiskSurface):
        r = surface.radius
        return SurfaceMetrics(
            apothem=r,
            circumradius=r,
            perimeter=2.0 * math.pi * r,
            doubled_area=2.0 * math.pi * r * r,
            interior_angle=math.pi,
        )
    return SurfaceMetrics(
        apothem=surface.apothem,
        circumradius=surface.circumradius,
        perimeter=surface.perimeter,
        doubled_area=surface.perimeter * surface.apothem,
        interior_angle=math.pi * (surface.sides - 2) / surface.sides,
    )


def is_boundary(surface: Surface, p: SurfacePoint, tol: float = 1e-9) -> bool:
    if isinstance(surface, DiskSurface):
        return surface.on_boundary(p.x, p.y, tol)
    return surface.boundary_location(p.x, p.y, tol) is not None


def canonical_boundary(surface: Surface, p: SurfacePoint, tol: float = 1e-9) -> SurfacePoint:
    """Normalize boundary points to the Front tag; interior points unchanged."""
    if p.face is Face.BACK and is_boundary(surface, p, tol):
        return SurfacePoint(Face.FRONT, p.x, p.y)
    return p


def points_equal(surface: Surface, p: SurfacePoint, q: SurfacePoint, tol: float = 1e-9) -> bool:
    p = canonical_boundary(surface, p, tol)
    q = canonical_boundary(surface, q, tol)
    scale = surface.radius if isinstance(surface, DiskSurface) else surface.side_length
    return p.face is q.face and math.hypot(p.x - q.x, p.y - q.y) <= tol * scale
