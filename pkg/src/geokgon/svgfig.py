"""Deterministic SVG rendering of surfaces and geodesics.

Front-face segments are drawn solid and back-face segments dashed,
following the usual figure convention for doubled surfaces.  Output is
byte-identical across runs: floats are formatted to fixed precision and
elements are emitted in a stable order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .metric import _reflect_matrix, _apply
from .surface import DiskSurface, PolygonSurface
from .tracer import DiskGeodesic, GeodesicPath

KINDS = ("polygon", "disk", "development", "convergence")


@dataclass(frozen=True)
class RenderSpec:
    out_path: str
    kind: str = "polygon"
    width: int = 480
    height: int = 480
    stroke_width: float = 2.0
    outline_color: str = "#222222"
    front_color: str = "#c0392b"
    back_color: str = "#2980b9"
    dash: str = "7,5"
    show_incircle: bool = True
    marker_radius: float = 3.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown figure kind: {self.kind}")


def _fmt(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _poly_points(vertices) -> str:
    return " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in vertices)


class _Canvas:
    """Accumulates SVG elements in a fixed world box, y flipped upward."""

    def __init__(self, spec: RenderSpec, half_extent: float, panels: int = 1):
        self.spec = spec
        self.elements: list[str] = []
        self.panels = panels
        self.half = half_extent
        self.panel_w = spec.width
        w, h = spec.width * panels, spec.height
        self.header = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
            f'viewBox="0 0 {w} {h}">\n'
            f'<rect width="{w}" height="{h}" fill="#ffffff"/>\n'
        )

    def to_px(self, x: float, y: float, panel: int = 0):
        scale = (self.panel_w * 0.42) / self.half
        cx = self.panel_w * (panel + 0.5)
        cy = self.spec.height * 0.5
        return cx + x * scale, cy - y * scale

    def polyline(self, pts, color, dashed=False, closed=False, width=None, panel=0):
        px = [self.to_px(x, y, panel) for x, y in pts]
        attr = f'stroke="{color}" stroke-width="{_fmt(width or self.spec.stroke_width)}" fill="none"'
        if dashed:
            attr += f' stroke-dasharray="{self.spec.dash}"'
        tag = "polygon" if closed else "polyline"
        self.elements.append(
            f'<{tag} points="{_poly_points(px)}" {attr}/>'
        )

    def circle(self, x, y, r_px, color, fill="none", dashed=False, panel=0):
        px, py = self.to_px(x, y, panel)
        attr = f'cx="{_fmt(px)}" cy="{_fmt(py)}" r="{_fmt(r_px)}"'
        dash = f' stroke-dasharray="{self.spec.dash}"' if dashed else ""
        self.elements.append(
            f'<circle {attr} stroke="{color}" stroke-width="1.000000" fill="{fill}"{dash}/>'
        )

    def world_circle(self, x, y, r, color, dashed=False, panel=0):
        scale = (self.panel_w * 0.42) / self.half
        self.circle(x, y, r * scale, color, dashed=dashed, panel=panel)

    def render(self) -> str:
        return self.header + "\n".join(self.elements) + "\n</svg>\n"


def _draw_surface(canvas: _Canvas, surface, panel=0):
    spec = canvas.spec
    if isinstance(surface, DiskSurface):
        canvas.world_circle(0.0, 0.0, surface.radius, spec.outline_color, panel=panel)
        return
    canvas.polyline(surface.vertices, spec.outline_color, closed=True, panel=panel)
    if spec.show_incircle:
        canvas.world_circle(0.0, 0.0, surface.apothem, "#bbbbbb", dashed=True, panel=panel)


def _draw_path(canvas: _Canvas, path, panel=0):
    spec = canvas.spec
    if isinstance(path, DiskGeodesic):
        pts = [path.hit_position(i) for i in range(len(path.vertex_angles))]
    else:
        pts = path.positions
    for i in range(len(pts) - 1):
        dashed = i % 2 == 1
        color = spec.back_color if dashed else spec.front_color
        canvas.polyline([pts[i], pts[i + 1]], color, dashed=dashed, panel=panel)
    for x, y in pts:
        px, py = canvas.to_px(x, y, panel)
        canvas.elements.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="{_fmt(spec.marker_radius)}" '
            f'stroke="none" fill="{spec.outline_color}"/>'
        )


def _extent(surface) -> float:
    if isinstance(surface, DiskSurface):
        return surface.radius
    return surface.circumradius


def render_svg(spec: RenderSpec, payload: dict) -> str:
    """Render a figure and write it to spec.out_path; returns the SVG text."""
    if spec.kind in ("polygon", "disk"):
        surface = payload["surface"]
        paths = payload.get("paths", [])
        canvas = _Canvas(spec, _extent(surface))
        _draw_surface(canvas, surface)
        for path in paths:
            _draw_path(canvas, path)
    elif spec.kind == "convergence":
        panels = payload["panels"]  # list of {"surface": ..., "paths": [...]}
        if not panels:
            raise ValueError("convergence figure needs at least one panel")
        half = max(_extent(p["surface"]) for p in panels)
        canvas = _Canvas(spec, half, panels=len(panels))
        for i, panel in enumerate(panels):
            _draw_surface(canvas, panel["surface"], panel=i)
            for path in panel.get("paths", []):
                _draw_path(canvas, path, panel=i)
    elif spec.kind == "development":
        canvas = _render_development(spec, payload)
    else:
        raise ValueError(f"unknown figure kind: {spec.kind}")
    text = canvas.render()
    with open(spec.out_path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text


def _render_development(spec: RenderSpec, payload: dict) -> _Canvas:
    """Unroll a polygon path into its chain of reflected copies."""
    path: GeodesicPath = payload["path"]
    surface: PolygonSurface = path.surface
    n = surface.sides
    copies = [tuple(surface.vertices)]
    verts = tuple(surface.vertices)
    for i in range(1, len(path.hits)):
        e = path.hits[i].edge
        w0, w1 = verts[e], verts[(e + 1) % n]
        refl = _reflect_matrix(w0, w1)
        verts = tuple(_apply(refl, v) for v in verts)
        copies.append(verts)
    straight = _unfold_points(path)
    xs = [v[0] for c in copies for v in c] + [p[0] for p in straight]
    ys = [v[1] for c in copies for v in c] + [p[1] for p in straight]
    half = max(
        max(abs(min(xs)), abs(max(xs))), max(abs(min(ys)), abs(max(ys)))
    )
    canvas = _Canvas(spec, half * 1.05)
    mid_x = (min(xs) + max(xs)) / 2.0
    mid_y = (min(ys) + max(ys)) / 2.0
    shifted = lambda pts: [(x - mid_x, y - mid_y) for x, y in pts]
    for c in copies:
        canvas.polyline(shifted(c), spec.outline_color, closed=True, width=1.0)
    canvas.polyline(shifted(straight), spec.front_color)
    return canvas


def _unfold_points(path: GeodesicPath) -> list[tuple[float, float]]:
    """Hit points of the path unrolled to a straight line in the plane."""
    pts = [path.positions[0]]
    lengths = path.segment_lengths
    p0, p1 = path.positions[0], path.positions[1]
    d = math.dist(p0, p1)
    ux, uy = (p1[0] - p0[0]) / d, (p1[1] - p0[1]) / d
    t = 0.0
    for seg_len in lengths:
        t += seg_len
        pts.append((p0[0] + ux * t, p0[1] + uy * t))
    return pts
