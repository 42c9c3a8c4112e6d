#!/usr/bin/env python3
"""Render the standard gallery of SVG figures into an output directory."""

import argparse
import os

from geokgon.surface import DiskSurface, PolygonSurface
from geokgon.svgfig import RenderSpec, render_svg
from geokgon.tracer import make_disk_geodesic, make_special


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="figures")
    args = parser.parse_args()
    os.makedirs(args.out_dir, exist_ok=True)

    def path_for(name):
        return os.path.join(args.out_dir, name)

    pentagon = PolygonSurface.with_inradius(5)
    vshape = make_special(pentagon, "vshape")
    render_svg(
        RenderSpec(path_for("pentagon_vshape.svg"), "polygon"),
        {"surface": pentagon, "paths": [vshape]},
    )
    render_svg(RenderSpec(path_for("pentagon_vshape_development.svg"), "development"), {"path": vshape})

    triangle = PolygonSurface.with_inradius(3)
    render_svg(
        RenderSpec(path_for("triangle_over_under.svg"), "polygon"),
        {"surface": triangle, "paths": [make_special(triangle, "over_under")]},
    )

    disk = DiskSurface(1.0)
    render_svg(
        RenderSpec(path_for("disk_pentagram.svg"), "disk"),
        {"surface": disk, "paths": [make_disk_geodesic(disk, 5, 2, 2)]},
    )

    panels = [
        {"surface": s, "paths": [make_special(s, "vshape")]}
        for s in (PolygonSurface.with_inradius(n) for n in (3, 5, 9, 15))
    ]
    render_svg(RenderSpec(path_for("vshape_convergence.svg"), "convergence"), {"panels": panels})

    print(f"wrote figures to {args.out_dir}/")


if __name__ == "__main__":
    main()
