#!/usr/bin/env python3
"""Convergence of traced V-shape vertex ratios to their exact rational limits.

Traces the V-shape on growing odd polygons and prints each hit's vertex
ratio next to the predicted limit (1/2, 0, 1/2, 1), plus the launch-angle
gap to pi/2 scaled by the side count.
"""

import argparse
import math

from geokgon.asymptotics import VSHAPE_FAMILY, vertex_ratio_limits
from geokgon.surface import PolygonSurface
from geokgon.tracer import make_special, vertex_ratios


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--p", default="5,11,51,101,1009", help="comma-separated odd side counts"
    )
    args = parser.parse_args()

    limits = vertex_ratio_limits(VSHAPE_FAMILY).v_star
    print("limits:", [str(v) for v in limits])
    header = f"{'p':>6}  " + "  ".join(f"{'v_'+str(i):>12}" for i in range(4))
    print(header + f"  {'p*(pi/2-theta)':>15}")
    for p_str in args.p.split(","):
        p = int(p_str)
        path = make_special(PolygonSurface.with_inradius(p), "vshape")
        ratios = vertex_ratios(path)
        gap = p * (math.pi / 2.0 - path.start_angle)
        cells = "  ".join(f"{v:12.8f}" for v in ratios)
        print(f"{p:>6}  {cells}  {gap:15.10f}")


if __name__ == "__main__":
    main()
