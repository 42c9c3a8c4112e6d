#!/usr/bin/env python3
"""Tabulate the V-shape index lower bound as the side count grows.

The bound is measured directly for small polygons and printed alongside
its analytic value; the final row is the doubled-disk limit.
"""

import argparse
import math

from geokgon.asymptotics import divergence_experiment


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=51, help="largest odd side count")
    parser.add_argument(
        "--measure-upto",
        type=int,
        default=7,
        help="measure the index directly for side counts up to this value",
    )
    args = parser.parse_args()

    rows = divergence_experiment(
        list(range(3, args.max_n + 1, 2)), measure_upto=args.measure_upto
    )
    print(f"{'n':>6}  {'length':>12}  {'bound':>12}  {'measured':>8}")
    for row in rows:
        n = "inf" if row["n"] == math.inf else row["n"]
        bound = "" if row["bound"] is None else f"{row['bound']:12.4f}"
        measured = "" if row["minind"] is None else f"{row['minind']:8d}"
        print(f"{n:>6}  {row['length']:12.6f}  {bound:>12}  {measured:>8}")


if __name__ == "__main__":
    main()
