"""Hypergraphs induced by geometric scenes and by graphs.

All membership decisions use exact integer or rational arithmetic. Discs and
rectangles are closed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import mpmath
import numpy as np

from .hypergraph import Graph, Hypergraph, InputError, Regime, verify

COORD_LIMIT = 2 ** 20
DISC_CAP = 64
RECT_CAP = 128
POINT_RECT_CAP = 64
PATH_CAP = 10


@dataclass(frozen=True, order=True)
class Point2:
    x: int
    y: int

    def __post_init__(self):
        for c in (self.x, self.y):
            if not isinstance(c, int) or abs(c) > COORD_LIMIT:
                raise InputError(f"coordinate {c!r} is not an integer within ±2^20")


@dataclass(frozen=True)
class Disc:
    center: Point2
    r2: int

    def __post_init__(self):
        if not isinstance(self.r2, int) or self.r2 < 1:
            raise InputError(f"squared radius must be a positive integer, got {self.r2!r}")

    def contains(self, x, y) -> bool:
        return (x - self.center.x) ** 2 + (y - self.center.y) ** 2 <= self.r2


@dataclass(frozen=True)
class Rect:
    x1: int
    y1: int
    x2: int
    y2: int
    degenerate: bool = False

    def __post_init__(self):
        for c in (self.x1, self.y1, self.x2, self.y2):
            if not isinstance(c, int) or abs(c) > COORD_LIMIT:
                raise InputError(f"coordinate {c!r} is not an integer within ±2^20")
        if self.x1 > self.x2 or self.y1 > self.y2:
            raise InputError(f"rectangle corners out of order: {self}")
        if not self.degenerate and (self.x1 == self.x2 or self.y1 == self.y2):
            raise InputError(f"degenerate rectangle {self} (pass degenerate=True to allow)")

    def contains(self, x, y) -> bool:
        return self.x1 <= x <= self.x2 and self.y1 <= y <= self.y2


def _cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise InputError(f"{what}: {n} items exceeds cap {cap}")


# --- one dimension --------------------------------------------------------------

def discrete_intervals(n: int) -> Hypergraph:
    return Hypergraph(n, tuple(range(i, j + 1) for i in range(n) for j in range(i, n)))


def _distinct(xs, what):
    if len(set(xs)) != len(xs):
        raise InputError(f"{what}: duplicate coordinates")


def points_vs_intervals(xs: Sequence) -> Hypergraph:
    """Vertices keep the input order; edges are runs in sorted order."""
    _distinct(xs, "points_vs_intervals")
    order = sorted(range(len(xs)), key=lambda i: xs[i])
    n = len(order)
    return Hypergraph(n, tuple(order[i:j + 1] for i in range(n) for j in range(i, n)))


def unit_interval_hypergraph(xs: Sequence) -> Hypergraph:
    """Subsets ``{i : t <= xs[i] <= t + 1}`` over all real ``t``."""
    _distinct(xs, "unit_interval_hypergraph")
    xs = [Fraction(x) for x in xs]
    events = sorted(set(xs) | {x - 1 for x in xs})
    probes = list(events)
    probes += [(a + b) / 2 for a, b in zip(events, events[1:])]
    edges = []
    for t in probes:
        e = [i for i, x in enumerate(xs) if t <= x <= t + 1]
        if e:
            edges.append(e)
    return Hypergraph(len(xs), tuple(edges))


# --- points with respect to discs ------------------------------------------------

def _orient(a: Point2, b: Point2, c: Point2) -> int:
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def _incircle(a: Point2, b: Point2, c: Point2, d: Point2) -> int:
    """>0 if ``d`` is strictly inside circle(a, b, c), 0 on it, <0 outside."""
    adx, ady = a.x - d.x, a.y - d.y
    bdx, bdy = b.x - d.x, b.y - d.y
    cdx, cdy = c.x - d.x, c.y - d.y
    det = ((adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
           + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy)
           + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady))
    o = _orient(a, b, c)
    return det if o > 0 else -det


def _halfplane_cuts(ps: Sequence[Point2], idx: Sequence[int]) -> set[frozenset]:
    """All subsets of points in convex position (no three collinear) cut by a half-plane."""
    cuts = {frozenset(), frozenset(idx)}
    for p in idx:
        for q in idx:
            if p == q:
                continue
            left = frozenset(r for r in idx if _orient(ps[p], ps[q], ps[r]) > 0)
            cuts.update((left, left | {p}, left | {q}, left | {p, q}))
    return cuts


def points_vs_discs(ps: Sequence[Point2], cap: int = DISC_CAP) -> Hypergraph:
    """All distinct nonempty ``P ∩ D`` over closed discs ``D``.

    Lifting ``(x, y) -> (x, y, x² + y²)`` turns closed discs into closed lower
    half-spaces. The set of planes realizing a fixed subset is a pointed
    polyhedron (unless all points are collinear), so each realizable subset
    is ``inside(C) ∪ T`` for a circle ``C`` through three of the points and
    ``T`` a half-plane cut of the points lying on ``C``.
    """
    ps = list(ps)
    _cap(len(ps), cap, "points_vs_discs")
    if len(set(ps)) != len(ps):
        raise InputError("points_vs_discs: duplicate points")
    n = len(ps)
    if n == 0:
        return Hypergraph(0)
    if n == 1:
        return Hypergraph(1, ((0,),))
    if all(_orient(ps[0], ps[1], p) == 0 for p in ps[2:]):
        # collinear: discs cut exactly the runs along the line
        a, b = ps[0], ps[1]
        return points_vs_intervals([(p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y)
                                    for p in ps])
    edges = {frozenset([i]) for i in range(n)}
    done = set()
    for i, j, k in combinations(range(n), 3):
        if (i, j, k) in done or _orient(ps[i], ps[j], ps[k]) == 0:
            continue
        inside, on = [], []
        for t in range(n):
            s = _incircle(ps[i], ps[j], ps[k], ps[t])
            if s > 0:
                inside.append(t)
            elif s == 0:
                on.append(t)
        if len(on) > 3:
            done.update(combinations(on, 3))
        base = frozenset(inside)
        for cut in _halfplane_cuts(ps, on):
            if base or cut:
                edges.add(base | cut)
    return Hypergraph(n, tuple(sorted(edges, key=lambda e: (len(e), sorted(e)))))


# --- hypergraphs induced by discs ----------------------------------------------

def _sign_quadratic(a: Fraction, b: Fraction, s: Fraction) -> int:
    """Exact sign of ``a + b·√s`` for ``s >= 0``."""
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if s == 0 or sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    lhs, rhs = a * a, b * b * s
    if lhs == rhs:
        return 0
    return sa if lhs > rhs else sb


@dataclass(frozen=True)
class _Vertex:
    """Intersection point ``m + σ·√s·u`` of two circles."""

    m: tuple
    u: tuple
    s: Fraction
    sigma: int

    def covered(self, d: Disc) -> bool:
        mx, my = self.m[0] - d.center.x, self.m[1] - d.center.y
        ux, uy = self.u
        a = mx * mx + my * my + self.s * (ux * ux + uy * uy) - d.r2
        b = 2 * self.sigma * (ux * mx + uy * my)
        return _sign_quadratic(a, b, self.s) <= 0

    def approx(self):
        t = self.sigma * mpmath.sqrt(mpmath.mpf(self.s.numerator) / self.s.denominator)
        return (mpmath.mpf(self.m[0].numerator) / self.m[0].denominator + t * self.u[0],
                mpmath.mpf(self.m[1].numerator) / self.m[1].denominator + t * self.u[1])


def _circle_vertices(a: Disc, b: Disc) -> list[_Vertex]:
    dx, dy = b.center.x - a.center.x, b.center.y - a.center.y
    dd = dx * dx + dy * dy
    if dd == 0:
        return []
    along = Fraction(dd + a.r2 - b.r2, 2 * dd)
    h2 = a.r2 - along * along * dd
    if h2 < 0:
        return []
    m = (a.center.x + along * dx, a.center.y + along * dy)
    s = h2 / dd
    u = (-dy, dx)
    if s == 0:
        return [_Vertex(m, u, s, 1)]
    return [_Vertex(m, u, s, 1), _Vertex(m, u, s, -1)]


def _mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    value = Fraction(int(man)) * (Fraction(2) ** int(exp))
    return -value if sign else value


def _to_mpf(q) -> mpmath.mpf:
    q = Fraction(q)
    return mpmath.mpf(q.numerator) / q.denominator


def disc_arrangement_probes(ds: Sequence[Disc]) -> list:
    """Sample points hitting every face, edge and vertex of the arrangement.

    Returns ``(kind, point)`` pairs: ``("vertex", _Vertex)`` for circle
    intersections and ``("point", (Fraction, Fraction))`` otherwise. Every
    face other than the unbounded one borders some arc; for each arc we probe
    just inside and just outside its midpoint, at a radial offset a quarter
    of the midpoint's distance to every other circle.
    """
    circles = sorted(set(ds), key=lambda d: (d.center.x, d.center.y, d.r2))
    probes = [("point", (Fraction(d.center.x), Fraction(d.center.y))) for d in circles]
    angles = {d: [] for d in circles}
    with mpmath.workdps(60):
        for a, b in combinations(circles, 2):
            for v in _circle_vertices(a, b):
                probes.append(("vertex", v))
                vx, vy = v.approx()
                for d in (a, b):
                    angles[d].append(mpmath.atan2(vy - d.center.y, vx - d.center.x))
        for d in circles:
            theta = sorted(angles[d])
            if not theta:
                mids = [mpmath.mpf(0)]
            elif len(theta) == 1:
                mids = [theta[0] + mpmath.pi]
            else:
                wrapped = theta + [theta[0] + 2 * mpmath.pi]
                mids = [(p + q) / 2 for p, q in zip(wrapped, wrapped[1:])]
            cx, cy = _to_mpf(d.center.x), _to_mpf(d.center.y)
            radius = mpmath.sqrt(d.r2)
            for t in mids:
                px, py = cx + radius * mpmath.cos(t), cy + radius * mpmath.sin(t)
                gap = radius
                for e in circles:
                    if e is d:
                        continue
                    dist = mpmath.sqrt((px - e.center.x) ** 2 + (py - e.center.y) ** 2)
                    gap = min(gap, abs(dist - mpmath.sqrt(e.r2)))
                if gap == 0:
                    continue
                delta = gap / 4
                for rr in (radius - delta, radius + delta):
                    probes.append(("point", (_mpf_to_fraction(cx + rr * mpmath.cos(t)),
                                             _mpf_to_fraction(cy + rr * mpmath.sin(t)))))
    return probes


def probe_cover(ds: Sequence[Disc], probe) -> frozenset:
    kind, p = probe
    if kind == "vertex":
        return frozenset(i for i, d in enumerate(ds) if p.covered(d))
    return frozenset(i for i, d in enumerate(ds) if d.contains(*p))


def discs_hypergraph(ds: Sequence[Disc], cap: int = DISC_CAP) -> Hypergraph:
    """Distinct nonempty depth sets ``{i : p in D_i}`` over points ``p`` of the plane."""
    ds = list(ds)
    _cap(len(ds), cap, "discs_hypergraph")
    edges = set()
    for probe in disc_arrangement_probes(ds):
        cover = probe_cover(ds, probe)
        if cover:
            edges.add(cover)
    return Hypergraph(len(ds), tuple(sorted(edges, key=lambda e: (len(e), sorted(e)))))


def antenna_discs() -> list[Disc]:
    """Three pairwise-overlapping discs with a common region.

    The lens of the outer two lies inside the middle disc, so the pairwise
    conflict graph is a triangle while two colors make every cover set CF.
    """
    return [Disc(Point2(-2, 0), 9), Disc(Point2(0, 0), 9), Disc(Point2(2, 0), 9)]


def collinear_discs(n: int, spacing: int = 10) -> list[Disc]:
    """Equal discs centred on a line, each pair overlapping: induces the interval hypergraph."""
    radius = spacing * max(n, 1)
    return [Disc(Point2(spacing * i, 0), radius * radius) for i in range(n)]


# --- rectangles ------------------------------------------------------------------

def rects_hypergraph(rs: Sequence[Rect], cap: int = RECT_CAP) -> Hypergraph:
    """Distinct nonempty cover sets, probing every cell, grid line and grid vertex."""
    rs = list(rs)
    _cap(len(rs), cap, "rects_hypergraph")
    if not rs:
        return Hypergraph(0)
    x1 = np.array([2 * r.x1 for r in rs], dtype=np.int64)
    x2 = np.array([2 * r.x2 for r in rs], dtype=np.int64)
    y1 = np.array([2 * r.y1 for r in rs], dtype=np.int64)
    y2 = np.array([2 * r.y2 for r in rs], dtype=np.int64)

    def grid(lo, hi):
        coords = np.unique(np.concatenate([lo, hi]))
        return np.unique(np.concatenate([coords, (coords[:-1] + coords[1:]) // 2]))

    gx, gy = grid(x1, x2), grid(y1, y2)
    in_y = (gy[:, None] >= y1[None, :]) & (gy[:, None] <= y2[None, :])
    seen = set()
    for px in gx:
        rows = in_y & ((x1 <= px) & (px <= x2))[None, :]
        for row in np.packbits(rows[rows.any(axis=1)], axis=1):
            seen.add(row.tobytes())
    edges = []
    for key in seen:
        bits = np.unpackbits(np.frombuffer(key, dtype=np.uint8))[:len(rs)]
        edges.append(tuple(int(i) for i in np.flatnonzero(bits)))
    edges.sort(key=lambda e: (len(e), e))
    return Hypergraph(len(rs), tuple(edges))


def staircase_squares(n: int) -> list[Rect]:
    """``n`` diagonal-shifted squares inducing the interval hypergraph."""
    return [Rect(i, i, i + n, i + n) for i in range(n)]


def _general_position(ps):
    if len({p.x for p in ps}) != len(ps) or len({p.y for p in ps}) != len(ps):
        raise InputError("points must have pairwise distinct x and distinct y coordinates")


def points_vs_rects(ps: Sequence[Point2], cap: int = POINT_RECT_CAP) -> Hypergraph:
    """All distinct nonempty ``P ∩ R`` over closed axis-parallel rectangles."""
    ps = list(ps)
    _cap(len(ps), cap, "points_vs_rects")
    _general_position(ps)
    by_x = sorted(range(len(ps)), key=lambda i: ps[i].x)
    edges = set()
    for a in range(len(by_x)):
        column = []
        for b in range(a, len(by_x)):
            column.append(by_x[b])
            col = sorted(column, key=lambda i: ps[i].y)
            for s in range(len(col)):
                for t in range(s, len(col)):
                    edges.add(frozenset(col[s:t + 1]))
    return Hypergraph(len(ps), tuple(sorted(edges, key=lambda e: (len(e), sorted(e)))))


def _rect_pair_violation(ps, colors, strict_above: bool) -> bool:
    """True iff some equal-colored pair has a bounding box free of "blockers".

    For proper colorings a blocker is any differently colored point; for UM it
    is any point of larger color. Any rectangle violating the property
    contains such a pair, and a pair's bounding box is itself a rectangle.
    """
    n = len(ps)
    if n < 2:
        return False
    xs = np.array([p.x for p in ps], dtype=np.int64)
    ys = np.array([p.y for p in ps], dtype=np.int64)
    cs = np.array(colors)
    for i in range(n - 1):
        js = np.flatnonzero(cs[i + 1:] == cs[i]) + i + 1
        if js.size == 0:
            continue
        lox, hix = np.minimum(xs[i], xs[js]), np.maximum(xs[i], xs[js])
        loy, hiy = np.minimum(ys[i], ys[js]), np.maximum(ys[i], ys[js])
        inside = ((xs[None, :] >= lox[:, None]) & (xs[None, :] <= hix[:, None])
                  & (ys[None, :] >= loy[:, None]) & (ys[None, :] <= hiy[:, None]))
        blockers = (cs > cs[i]) if strict_above else (cs != cs[i])
        if not (inside & blockers[None, :]).any(axis=1).all():
            return True
    return False


def rects_proper_ok(ps: Sequence[Point2], colors) -> bool:
    return not _rect_pair_violation(list(ps), colors, strict_above=False)


def rects_um_ok(ps: Sequence[Point2], colors) -> bool:
    return not _rect_pair_violation(list(ps), colors, strict_above=True)


def rect_delaunay_graph(ps: Sequence[Point2]) -> Graph:
    """Pairs whose bounding box holds no third point."""
    ps = list(ps)
    _general_position(ps)
    edges = set()
    for i, j in combinations(range(len(ps)), 2):
        lox, hix = sorted((ps[i].x, ps[j].x))
        loy, hiy = sorted((ps[i].y, ps[j].y))
        if not any(lox <= p.x <= hix and loy <= p.y <= hiy
                   for k, p in enumerate(ps) if k not in (i, j)):
            edges.add(frozenset((i, j)))
    return Graph(len(ps), frozenset(edges))


class PointRectSpace:
    """Points with respect to axis-parallel rectangles, without listing the edges.

    Stands in for a :class:`Hypergraph` in the static frameworks; proper and
    UM checks use the pairwise characterizations above.
    """

    def __init__(self, points: Sequence[Point2]):
        self.points = list(points)
        _general_position(self.points)
        self.n = len(self.points)

    def induced(self, subset) -> "PointRectSpace":
        return PointRectSpace([self.points[i] for i in sorted(set(subset))])

    def hypergraph(self, cap: int = POINT_RECT_CAP) -> Hypergraph:
        return points_vs_rects(self.points, cap)

    def verify(self, colors, regime: Regime) -> bool:
        if len(colors) != self.n:
            raise InputError(f"coloring has length {len(colors)}, space has {self.n} points")
        if regime.kind == "proper":
            return rects_proper_ok(self.points, colors)
        if regime.kind == "um":
            return rects_um_ok(self.points, colors)
        if regime.kind == "k-colorful" and regime.k == 2:
            return rects_proper_ok(self.points, colors)
        return verify(self.hypergraph(), colors, regime)


# --- graphs ------------------------------------------------------------------------

def path_hypergraph(g: Graph, cap: int = PATH_CAP) -> Hypergraph:
    """Vertex sets of simple paths (single vertices included).

    A vertex set is a path's set iff some state (end vertex, visited set) is
    reachable, so we search states rather than paths.
    """
    _cap(g.n, cap, "path_hypergraph")
    adj = g.adjacency()
    seen = set()
    stack = [(v, 1 << v) for v in range(g.n)]
    while stack:
        v, mask = stack.pop()
        if (v, mask) in seen:
            continue
        seen.add((v, mask))
        for w in adj[v]:
            if not mask >> w & 1:
                stack.append((w, mask | 1 << w))
    masks = sorted({mask for _, mask in seen}, key=lambda m: (bin(m).count("1"), m))
    return Hypergraph(g.n, tuple([v for v in range(g.n) if m >> v & 1] for m in masks))


def neighborhood_hypergraph(g: Graph, pointed: bool = False) -> Hypergraph:
    adj = g.adjacency()
    edges = []
    for v in range(g.n):
        nb = set(adj[v]) if pointed else adj[v] | {v}
        if nb:
            edges.append(sorted(nb))
    return Hypergraph(g.n, tuple(edges))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset(frozenset((i, i + 1)) for i in range(n - 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(frozenset(e) for e in combinations(range(n), 2)))


def subdivide(g: Graph, edges=None) -> Graph:
    """Replace each listed edge (default: all) by a path through a new vertex."""
    targets = sorted(sorted(e) for e in (g.edges if edges is None else edges))
    kept = {e for e in g.edges if sorted(e) not in targets}
    n = g.n
    for u, v in targets:
        kept.add(frozenset((u, n)))
        kept.add(frozenset((n, v)))
        n += 1
    return Graph(n, frozenset(kept))
