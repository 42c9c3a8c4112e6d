"""Command-line interface.

Subcommands: trace, geodesic, distance, minind, search, shortest, ratios,
limits, diverge, figure.  Surfaces are spelled ngon:N:side=S,
ngon:N:inradius=R, or disk:R.  Angles are radians.  JSON is the canonical
interchange format; CSV is available for tabular output.  Exit codes:
0 success, 1 usage error, 2 numerical failure.

The environment variable GEOKGON_THREADS caps worker parallelism; the
current implementation evaluates queries serially, which respects any cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from fractions import Fraction

from . import asymptotics, metric, minind as minind_mod, spectra, svgfig
from .surface import DiskSurface, EdgeLocation, Face, PolygonSurface, SurfacePoint, metrics
from .tracer import (
    DiskGeodesic,
    TraceError,
    make_disk_geodesic,
    make_special,
    path_from_json,
    path_to_json,
    skip_numbers,
    trace,
)


class UsageError(Exception):
    pass


class NumericalError(Exception):
    pass


def thread_cap() -> int:
    raw = os.environ.get("GEOKGON_THREADS", "")
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        return 1


def parse_surface(text: str):
    parts = text.split(":")
    try:
        if parts[0] == "disk" and len(parts) == 2:
            return DiskSurface(float(parts[1]))
        if parts[0] == "ngon" and len(parts) == 3:
            n = int(parts[1])
            key, _, value = parts[2].partition("=")
            if key == "side":
                return PolygonSurface.with_side(n, float(value))
            if key == "inradius":
                return PolygonSurface.with_inradius(n, float(value))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad surface spec {text!r}: {exc}") from exc
    raise UsageError(
        f"bad surface spec {text!r}; expected ngon:N:side=S, ngon:N:inradius=R, or disk:R"
    )


def _parse_point(text: str) -> SurfacePoint:
    try:
        face_s, x_s, y_s = text.split(":")
        face = Face(face_s)
        return SurfacePoint(face, float(x_s), float(y_s))
    except ValueError as exc:
        raise UsageError(f"bad point spec {text!r}; expected face:x:y") from exc


def _load_geodesic(args, surface):
    """Geodesic from --geodesic: a named construction, m:q:t, or @file."""
    name = args.geodesic
    if name.startswith("@"):
        with open(name[1:], encoding="utf-8") as fh:
            return path_from_json(json.load(fh))
    if isinstance(surface, DiskSurface):
        try:
            m, q, t = (int(x) for x in name.split(":"))
        except ValueError as exc:
            raise UsageError("disk geodesics are specified as m:q:t") from exc
        return make_disk_geodesic(surface, m, q, t)
    aliases = {"overunder": "over_under", "half": "half_geodesic", "star": "midpoint_star"}
    kind = aliases.get(name, name)
    param = getattr(args, "param", None)
    return make_special(surface, kind, param)


def _emit(args, data, csv_rows=None, csv_header=None):
    out = sys.stdout
    if getattr(args, "out", None):
        out = open(args.out, "w", encoding="utf-8")
    try:
        if getattr(args, "csv", False) and csv_rows is not None:
            writer = csv.writer(out, lineterminator="\n")
            if csv_header:
                writer.writerow(csv_header)
            writer.writerows(csv_rows)
        else:
            json.dump(data, out, indent=2, sort_keys=True)
            out.write("\n")
    finally:
        if out is not sys.stdout:
            out.close()


def _jsonable(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def cmd_trace(args):
    surface = parse_surface(args.surface)
    if isinstance(surface, DiskSurface):
        raise UsageError("trace requires a polygon surface")
    try:
        edge_s, u_s = args.start.split(":")
        start = EdgeLocation(int(edge_s), float(u_s))
    except ValueError as exc:
        raise UsageError("bad --start; expected edge:u") from exc
    try:
        path = trace(surface, start, args.angle, args.bounces)
    except TraceError as exc:
        raise NumericalError(str(exc)) from exc
    if path.vertex_collision:
        raise NumericalError("trace aborted: hit within vertex tolerance")
    _emit(args, path_to_json(path))


def cmd_geodesic(args):
    surface = parse_surface(args.surface)
    path = _load_geodesic(args, surface)
    _emit(args, path_to_json(path))


def cmd_distance(args):
    surface = parse_surface(args.surface)
    a = _parse_point(args.a)
    b = _parse_point(args.b)
    result = metric.distance(surface, a, b)
    data = {
        "distance": result.distance,
        "depth": result.depth,
        "proven_optimal": result.proven_optimal,
        "vertex_grazing": result.vertex_grazing,
        "witness": [
            {"face": p.face.value, "x": p.x, "y": p.y} for p in result.witness
        ],
    }
    if result.vertex_grazing:
        print("warning: query is vertex-grazing", file=sys.stderr)
    _emit(args, data)


def cmd_minind(args):
    surface = parse_surface(args.surface)
    path = _load_geodesic(args, surface)
    report = minind_mod.minimizing_index(path, tol=args.tol, k_cap=args.kcap)
    if math.isinf(report.minind):
        raise NumericalError("no k up to the cap makes every arc minimize")
    surf_label = (
        f"disk:{surface.radius}"
        if isinstance(surface, DiskSurface)
        else f"ngon:{surface.sides}:side={surface.side_length}"
    )
    data = {
        "minind": int(report.minind),
        "s_max": report.s_max,
        "period": report.period,
        "length": path.length,
        "bounds": _jsonable(report.bounds),
        "tolerance": report.tolerance,
    }
    row = [surf_label, report.period, report.s_max, int(report.minind), _jsonable(report.bounds)]
    _emit(args, data, csv_rows=[row], csv_header=["surface", "period", "s_max", "minind", "bounds"])


def _search_config(args):
    kwargs = {}
    if args.grid is not None:
        kwargs["grid"] = args.grid
    if args.bounces is not None:
        kwargs["max_bounces"] = args.bounces
    if args.max_length is not None:
        kwargs["max_length"] = args.max_length
    return spectra.SearchConfig(**kwargs)


def _entry_data(entry):
    return {
        "length": entry.length,
        "period": entry.period,
        "skips": list(entry.skips),
        "multiplicity": entry.multiplicity,
        "path": path_to_json(entry.path),
    }


def cmd_search(args):
    surface = parse_surface(args.surface)
    if isinstance(surface, DiskSurface):
        raise UsageError("search requires a polygon surface")
    entries = spectra.find_closed_geodesics(surface, _search_config(args))
    _emit(args, [_entry_data(e) for e in entries])


def cmd_shortest(args):
    surface = parse_surface(args.surface)
    if isinstance(surface, DiskSurface):
        raise UsageError("shortest requires a polygon surface")
    try:
        entry = spectra.shortest_closed_geodesic(surface, _search_config(args))
    except RuntimeError as exc:
        raise NumericalError(str(exc)) from exc
    _emit(args, _entry_data(entry))


def cmd_ratios(args):
    try:
        n_list = [int(x) for x in args.n.split(",")]
    except ValueError as exc:
        raise UsageError("--n expects a comma-separated list of odd integers") from exc
    rows = spectra.ratio_table(n_list)
    header = ["n", "L", "diam", "doubled_area", "L_over_diam", "L_over_sqrt_area"]
    csv_rows = [[_jsonable(r[k]) for k in header] for r in rows]
    _emit(args, _jsonable(rows), csv_rows=csv_rows, csv_header=header)


def cmd_limits(args):
    try:
        parts = args.family.split(":")
        period, l = int(parts[0]), int(parts[1])
        k = tuple(int(x) for x in parts[2].split(","))
        family = asymptotics.SkipFamily(period, l, k)
    except (ValueError, IndexError) as exc:
        raise UsageError("--family expects period:l:k1,k2,...") from exc
    profile = asymptotics.vertex_ratio_limits(family)
    checks = asymptotics.check_limit_identities(profile)
    data = {
        "family": {"period": period, "l": l, "k": list(k), "d": str(family.d)},
        "v_star": [str(v) for v in profile.v_star],
        "lim0_indices": profile.lim0_indices,
        "identities": _jsonable(checks),
    }
    csv_rows = [[i, str(v)] for i, v in enumerate(profile.v_star)]
    _emit(args, data, csv_rows=csv_rows, csv_header=["i", "v_star"])


def cmd_diverge(args):
    n_list = list(range(3, args.max_n + 1, 2))
    rows = asymptotics.divergence_experiment(n_list)
    header = ["n", "length", "bound", "minind"]
    csv_rows = [[_jsonable(r[k]) for k in header] for r in rows]
    _emit(args, _jsonable(rows), csv_rows=csv_rows, csv_header=header)


def cmd_figure(args):
    surface = parse_surface(args.surface)
    spec = svgfig.RenderSpec(out_path=args.out, kind=args.kind)
    if args.kind == "development":
        path = _load_geodesic(args, surface)
        svgfig.render_svg(spec, {"path": path})
    else:
        paths = []
        if args.geodesic:
            paths.append(_load_geodesic(args, surface))
        svgfig.render_svg(spec, {"surface": surface, "paths": paths})
    print(f"wrote {args.out}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="geokgon", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **flags):
        p = sub.add_parser(name)
        p.set_defaults(fn=fn)
        return p

    p = add("trace", cmd_trace)
    p.add_argument("--surface", required=True)
    p.add_argument("--start", required=True, help="edge:u")
    p.add_argument("--angle", type=float, required=True, help="radians from the edge direction")
    p.add_argument("--bounces", type=int, default=12)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_trace)

    p = add("geodesic", cmd_geodesic)
    p.add_argument("--surface", required=True)
    p.add_argument("--geodesic", required=True)
    p.add_argument("--param", type=int)
    p.add_argument("--out")

    p = add("distance", cmd_distance)
    p.add_argument("--surface", required=True)
    p.add_argument("--a", required=True, help="face:x:y")
    p.add_argument("--b", required=True, help="face:x:y")
    p.add_argument("--out")

    p = add("minind", cmd_minind)
    p.add_argument("--surface", required=True)
    p.add_argument("--geodesic", required=True)
    p.add_argument("--param", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--kcap", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--out")

    for name, fn in (("search", cmd_search), ("shortest", cmd_shortest)):
        p = add(name, fn)
        p.add_argument("--surface", required=True)
        p.add_argument("--grid", type=int)
        p.add_argument("--bounces", type=int)
        p.add_argument("--max-length", dest="max_length", type=float)
        p.add_argument("--out")

    p = add("ratios", cmd_ratios)
    p.add_argument("--n", required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--out")

    p = add("limits", cmd_limits)
    p.add_argument("--family", required=True, help="period:l:k1,k2,...")
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--out")

    p = add("diverge", cmd_diverge)
    p.add_argument("--max-n", dest="max_n", type=int, default=201)
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--out")

    p = add("figure", cmd_figure)
    p.add_argument("--surface", required=True)
    p.add_argument("--kind", default="polygon", choices=svgfig.KINDS)
    p.add_argument("--geodesic")
    p.add_argument("--param", type=int)
    p.add_argument("--out", required=True)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (NumericalError, TraceError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
