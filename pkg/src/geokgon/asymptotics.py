"""Skip-number families, vertex-ratio recurrences, and their limits.

A combinatorial family fixes a period n, a rational divisor d = n/l, and
integer deviations k_1..k_n with zero sum; on an admissible p-gon it
instantiates skip numbers s_i = (p + k_i)/d.  As p grows the polygons tend
to the doubled disk and the vertex ratios of the instantiated geodesics
converge; the limits satisfy exact rational identities which this module
computes and checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .minind import minimizing_index, vshape_bound
from .surface import DiskSurface, PolygonSurface
from .tracer import GeodesicPath, make_disk_geodesic, make_special, skip_numbers


@dataclass(frozen=True)
class SkipFamily:
    """Skip numbers s_i(p) = (p + k_i)/d with d = period/l."""

    period: int
    l: int
    k: tuple[int, ...]

    def __post_init__(self):
        if self.period % 2 != 0 or self.period < 2:
            raise ValueError("period must be a positive even integer")
        if len(self.k) != self.period:
            raise ValueError("need one deviation per period slot")
        if sum(self.k) != 0:
            raise ValueError("deviations must sum to zero")
        d = self.d
        for i in range(self.period):
            if abs(self.k[i] - self.k[(i + 1) % self.period]) > d:
                raise ValueError("consecutive deviations may differ by at most d")

    @property
    def d(self) -> Fraction:
        return Fraction(self.period, self.l)

    def is_palindromic(self) -> bool:
        # palindromic in the 1-indexed sense k_i = k_{n+1-i}
        return all(self.k[i] == self.k[self.period - 1 - i] for i in range(self.period))

    def admissible(self, p: int) -> bool:
        return all((p + ki) * self.l % self.period == 0 for ki in self.k)

    def instantiate(self, p: int) -> list[int]:
        if not self.admissible(p):
            raise ValueError(f"p={p} is not admissible for this family")
        skips = [(p + ki) * self.l // self.period for ki in self.k]
        if any(not 0 < s < p for s in skips):
            raise ValueError(f"p={p} instantiates out-of-range skip numbers")
        return skips


VSHAPE_FAMILY = SkipFamily(4, 2, (-1, 1, 1, -1))


@dataclass
class LimitProfile:
    family: SkipFamily
    v_star: list[Fraction]
    lim0_indices: list[int] = field(default_factory=list)
    half_indices: list[int] = field(default_factory=list)

    def __post_init__(self):
        self.lim0_indices = [i for i, v in enumerate(self.v_star) if v in (0, 1)]
        self.half_indices = [i for i, v in enumerate(self.v_star) if v == Fraction(1, 2)]


def alternating_partials(skips: list[int]) -> list[int]:
    """Partial sums S_j = sum_{k<=j} (-1)^(k+1) s_k (1-indexed signs)."""
    out = []
    total = 0
    for i, s in enumerate(skips):
        total += s if i % 2 == 0 else -s
        out.append(total)
    return out


def development_angle(p: int, skips: list[int]) -> float:
    """Inclination of the closed geodesic with these skips from its start edge.

    Resultant of the unit vectors between midpoints of the unfolded
    development, with the principal branch mapped into (0, pi) to match
    traced launch angles.
    """
    S = alternating_partials(skips)
    x = sum(((-1) ** i) * math.cos(2.0 * math.pi * S[i] / p) for i in range(len(S)))
    y = sum(((-1) ** i) * math.sin(2.0 * math.pi * S[i] / p) for i in range(len(S)))
    if math.hypot(x, y) < 1e-12:
        raise ValueError("degenerate skip sequence: zero resultant")
    theta = (math.atan2(y, x) + math.pi / 2.0) % math.pi
    if theta == 0.0:
        theta = math.pi
    return theta


def vertex_ratio_step(p: int, v_i: float, s: int, theta: float) -> float:
    """Next vertex ratio along a segment of skip s leaving at angle theta.

    Side length is normalized to 1; valid inputs keep the result inside
    (0, 1), anything else means the segment cannot reach the claimed edge.
    """
    if not 0.0 < v_i < 1.0:
        raise ValueError("vertex ratio must lie in (0, 1)")
    if 2 * s == p and theta == math.pi / 2.0:
        # straight pass to the opposite edge: algebraically v -> 1 - v,
        # kept exact so the midpoint fixed point does not drift
        return 1.0 - v_i
    phi = math.pi / p
    num = (1.0 - v_i) * math.sin(theta) - (
        math.cos(theta - phi) - math.cos((2 * s - 1) * phi - theta)
    ) / (2.0 * math.sin(phi))
    v_next = num / math.sin(2 * s * phi - theta)
    if not -1e-9 < v_next < 1.0 + 1e-9:
        raise ValueError(f"inconsistent (v, s, theta) triple: got {v_next}")
    return min(max(v_next, 0.0), 1.0)


def vertex_ratio_limits(family: SkipFamily) -> LimitProfile:
    """Exact rational limits v*_i of the vertex ratios, from v*_0 = 1/2."""
    if not family.is_palindromic():
        raise ValueError("family must be canonicalized to palindromic deviations")
    n = family.period
    d = family.d
    k = family.k
    v = [Fraction(1, 2)]
    for i in range(n - 1):
        correction = 2 * sum(
            Fraction((-1) ** (j + 1) * (n - j + 1) * k[(j + i - 1) % n], 1)
            for j in range(1, n + 1)
        ) / (d * n)
        v_next = 1 - v[i] - Fraction(k[i % n], 1) / d + correction
        v.append(v_next)
    return LimitProfile(family, v)


def check_limit_identities(profile: LimitProfile) -> dict:
    """Exact checks of the three limit identities on a profile."""
    family = profile.family
    n = family.period
    d = family.d
    k = family.k
    v = profile.v_star

    # the identities below use 1-indexed deviations; k_i corresponds to k[i-1]
    neighbor_sum = all(
        v[(i - 1) % n] + v[(i + 1) % n]
        == 2 * (1 - v[i]) + Fraction(k[(i - 1) % n] - k[i % n], 1) / d
        for i in range(n)
    )

    def frac_mod1(x: Fraction) -> Fraction:
        return x - (x.numerator // x.denominator)

    arithmetic = True
    for parity in (0, 1):
        idx = list(range(parity, n, 2))
        diffs = {
            frac_mod1(v[(i + 2) % n] - v[i]) for i in idx
        }
        if len(diffs) > 1:
            arithmetic = False

    if profile.lim0_indices:
        periodicity = {"holds": None, "t": None, "applicable": False}
    else:
        occ = profile.half_indices
        holds, t = False, None
        if occ:
            gaps = [(occ[(j + 1) % len(occ)] - occ[j]) % n for j in range(len(occ))]
            gaps = [g if g > 0 else n for g in gaps]
            if len(set(gaps)) == 1:
                t = gaps[0]
                holds = t % 2 == 1 and n % t == 0
        periodicity = {"holds": holds, "t": t, "applicable": True}

    return {"neighbor_sum": neighbor_sum, "arithmetic_mod1": arithmetic, "periodicity": periodicity}


def detect_convergence(paths: list[GeodesicPath]) -> dict:
    """Does a sequence of geodesics on growing X_n converge in shape?

    Convergence requires every skip-to-side-count ratio to approach a
    common constant c > 0; c is fitted as the least-squares slope of skips
    against side counts, and deviations must stay bounded (an O(1/n)
    ratio deviation means a bounded skip deviation).
    """
    periods = {p.num_segments for p in paths}
    if len(periods) != 1:
        raise ValueError("paths must share a common period")
    if len(paths) < 2:
        raise ValueError("need at least two paths")
    ns = [p.surface.sides for p in paths]
    rows = [skip_numbers(p) for p in paths]
    # least-squares slope of s against n over all slots
    xs, ys = [], []
    for n_i, skips in zip(ns, rows):
        for s in skips:
            xs.append(n_i)
            ys.append(s)
    mean_x = sum(xs) / len(xs)
    mean_y = sum(ys) / len(ys)
    denom = sum((x - mean_x) ** 2 for x in xs)
    c = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys)) / denom if denom else 0.0
    residual = max(abs(y - c * x) for x, y in zip(xs, ys))
    converges = c > 1e-9 and residual <= max(2.0, 2.0 * abs(c) + 1.0)
    return {"converges": converges, "c": c, "max_skip_deviation": residual}


def divergence_experiment(n_list: list[int], measure_upto: int = 7) -> list[dict]:
    """Evidence table for the divergence of the V-shape minimizing index.

    Rows carry the V-shape length at inradius 1, the measured index for
    small n, the analytic bound for all n, and a final doubled-disk row
    with its period-4 doubled diameter.
    """
    rows = []
    for n in n_list:
        if n % 2 == 0:
            raise ValueError("V-shapes need odd n")
        theta = math.pi * (n - 2) / (2 * n)
        length = 4.0 * (math.sin(theta) + 1.0)
        row = {"n": n, "length": length, "bound": vshape_bound(n), "minind": None}
        if n <= measure_upto:
            surface = PolygonSurface.with_inradius(n)
            report = minimizing_index(make_special(surface, "vshape"), k_cap=400)
            row["minind"] = report.minind
        rows.append(row)
    disk = DiskSurface(1.0)
    diam2 = make_disk_geodesic(disk, 2, 1, 2)
    report = minimizing_index(diam2)
    rows.append(
        {"n": math.inf, "length": diam2.length, "bound": None, "minind": report.minind}
    )
    return rows
