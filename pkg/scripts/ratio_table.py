#!/usr/bin/env python3
"""Length ratios of the shortest closed geodesic on doubled odd polygons.

For each odd side count, searches for the shortest closed geodesic and
reports its length against the diameter and the square root of the area,
with the doubled-disk limit as the final row.
"""

import argparse
import math

from geokgon.spectra import SearchConfig, ratio_table


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--n", default="3,5,7,9", help="comma-separated odd side counts"
    )
    parser.add_argument("--grid", type=int, default=4000, help="launch-angle grid size")
    args = parser.parse_args()

    n_list = [int(x) for x in args.n.split(",")]
    config = SearchConfig(grid=args.grid, max_bounces=8, max_length=12.0)
    rows = ratio_table(n_list, config)
    print(f"{'n':>5}  {'L':>10}  {'diam':>8}  {'L/diam':>8}  {'L/sqrt(area)':>12}")
    for row in rows:
        n = "inf" if row["n"] == math.inf else row["n"]
        print(
            f"{n:>5}  {row['L']:10.6f}  {row['diam']:8.5f}  "
            f"{row['L_over_diam']:8.5f}  {row['L_over_sqrt_area']:12.5f}"
        )


if __name__ == "__main__":
    main()
