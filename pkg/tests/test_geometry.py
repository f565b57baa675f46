import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linprog

from cfcolor import geometry as geo
from cfcolor.geometry import Disc, Point2, Rect
from cfcolor.hypergraph import Graph, Hypergraph, InputError, Regime, verify
from cfcolor.oracle import exact_min
from conftest import random_graph


def disc_realizable(ps, subset) -> bool:
    """LP on the lifted points: is there a closed disc containing exactly ``subset``?

    A disc with center (a, b) is {p : |p|^2 - 2a x - 2b y + c <= 0}; maximize
    the margin t by which every other point stays outside.
    """
    A, rhs = [], []
    for i, p in enumerate(ps):
        lift = p.x * p.x + p.y * p.y
        if i in subset:
            A.append([-2 * p.x, -2 * p.y, 1, 0])
            rhs.append(-lift)
        else:
            A.append([2 * p.x, 2 * p.y, -1, 1])
            rhs.append(lift)
    res = linprog([0, 0, 0, -1], A_ub=A, b_ub=rhs,
                  bounds=[(None, None)] * 3 + [(None, 1)], method="highs")
    return res.status == 0 and -res.fun > 1e-7


def random_points(rng, n, span=12):
    cells = rng.sample([(x, y) for x in range(span) for y in range(span)], n)
    return [Point2(x, y) for x, y in cells]


@pytest.mark.parametrize("seed", range(12))
def test_points_vs_discs_matches_lp(seed):
    rng = random.Random(seed)
    ps = random_points(rng, rng.randint(2, 6))
    h = geo.points_vs_discs(ps)
    edges = set(h.edges)
    for r in range(1, len(ps) + 1):
        for s in combinations(range(len(ps)), r):
            assert (frozenset(s) in edges) == disc_realizable(ps, set(s)), s


def test_points_vs_discs_cocircular_square():
    ps = [Point2(0, 0), Point2(2, 0), Point2(2, 2), Point2(0, 2)]
    edges = set(geo.points_vs_discs(ps).edges)
    assert frozenset({0, 2}) not in edges  # a diagonal alone cannot be cut off
    assert frozenset({0, 1, 2}) in edges
    for s in range(1, 16):
        sub = {i for i in range(4) if s >> i & 1}
        assert (frozenset(sub) in edges) == disc_realizable(ps, sub)


def test_points_vs_discs_small_cases():
    tri = [Point2(0, 0), Point2(4, 0), Point2(2, 3)]
    assert geo.points_vs_discs(tri).m == 7
    assert geo.points_vs_discs([Point2(1, 1)]).canonical() == ((0,),)
    line = [Point2(3 * i, 0) for i in range(5)]
    assert geo.points_vs_discs(line).canonical() == geo.discrete_intervals(5).canonical()
    with pytest.raises(InputError):
        geo.points_vs_discs([Point2(0, 0), Point2(0, 0)])
    with pytest.raises(InputError):
        Point2(2 ** 21, 0)


def test_collinear_discs_are_intervals():
    for n in range(1, 8):
        h = geo.discs_hypergraph(geo.collinear_discs(n))
        assert h.canonical() == geo.discrete_intervals(n).canonical()


def _overlap(a, b):
    # equal radii: centres closer than two radii
    d2 = (a.center.x - b.center.x) ** 2 + (a.center.y - b.center.y) ** 2
    return a.r2 == b.r2 and d2 < 4 * a.r2


def test_antenna_scene():
    ds = geo.antenna_discs()
    h = geo.discs_hypergraph(ds)
    assert h.m == 6 and {0, 2} not in h.edges and {0, 1, 2} in h.edges
    # pairwise overlaps force a triangle in the classical conflict graph
    conflict = [(i, j) for i in range(3) for j in range(i + 1, 3) if _overlap(ds[i], ds[j])]
    assert conflict == [(0, 1), (0, 2), (1, 2)]
    assert exact_min(h, Regime("cf")).value == 2


def _sample_covers(ds, rng, count):
    xs = [d.center.x for d in ds]
    ys = [d.center.y for d in ds]
    pad = max(d.r2 for d in ds) ** 0.5 + 1
    out = set()
    for _ in range(count):
        x = Fraction(rng.uniform(min(xs) - pad, max(xs) + pad)).limit_denominator(10 ** 6)
        y = Fraction(rng.uniform(min(ys) - pad, max(ys) + pad)).limit_denominator(10 ** 6)
        cover = frozenset(i for i, d in enumerate(ds) if d.contains(x, y))
        if cover:
            out.add(cover)
    return out


@pytest.mark.parametrize("seed", range(8))
def test_discs_hypergraph_against_sampling_and_duality(seed):
    rng = random.Random(seed)
    ps = random_points(rng, rng.randint(2, 6), span=10)
    r2 = rng.randint(4, 30)
    ds = [Disc(p, r2) for p in ps]
    h = geo.discs_hypergraph(ds)
    edges = set(h.edges)
    # every sampled cell is found
    assert _sample_covers(ds, rng, 4000) <= edges
    # equal radii: a cover is the set of centers within the radius of a point,
    # so it is also cut out of the centers by a disc
    dual = set(geo.points_vs_discs(ps).edges)
    assert edges <= dual


def test_disc_tangency_point_is_an_edge():
    # externally tangent discs share exactly one point
    ds = [Disc(Point2(0, 0), 4), Disc(Point2(4, 0), 4)]
    assert frozenset({0, 1}) in set(geo.discs_hypergraph(ds).edges)
    ds = [Disc(Point2(0, 0), 4), Disc(Point2(5, 0), 4)]
    assert frozenset({0, 1}) not in set(geo.discs_hypergraph(ds).edges)


def _grid_covers(rs, step=Fraction(1, 4)):
    lo_x = min(r.x1 for r in rs) - 1
    hi_x = max(r.x2 for r in rs) + 1
    lo_y = min(r.y1 for r in rs) - 1
    hi_y = max(r.y2 for r in rs) + 1
    out = set()
    x = Fraction(lo_x)
    while x <= hi_x:
        y = Fraction(lo_y)
        while y <= hi_y:
            cover = frozenset(i for i, r in enumerate(rs) if r.contains(x, y))
            if cover:
                out.add(cover)
            y += step
        x += step
    return out


@pytest.mark.parametrize("seed", range(10))
def test_rects_hypergraph_matches_fine_grid(seed):
    rng = random.Random(seed)
    rs = []
    for _ in range(rng.randint(1, 5)):
        x1, x2 = sorted(rng.sample(range(8), 2))
        y1, y2 = sorted(rng.sample(range(8), 2))
        rs.append(Rect(x1, y1, x2, y2))
    assert set(geo.rects_hypergraph(rs).edges) == _grid_covers(rs)


def test_rect_scenes():
    for n in range(1, 7):
        h = geo.rects_hypergraph(geo.staircase_squares(n))
        assert h.canonical() == geo.discrete_intervals(n).canonical()
    assert geo.rects_hypergraph([Rect(0, 0, 1, 1), Rect(2, 2, 3, 3)]).canonical() == ((0,), (1,))
    crossing = [Rect(0, 1, 4, 2), Rect(1, 0, 2, 4)]
    assert geo.rects_hypergraph(crossing).canonical() == ((0,), (0, 1), (1,))
    with pytest.raises(InputError):
        Rect(0, 0, 0, 3)
    assert Rect(0, 0, 0, 3, degenerate=True).contains(0, 1)


def _brute_points_rects(ps):
    xs = sorted(p.x for p in ps)
    ys = sorted(p.y for p in ps)
    out = set()
    for i, j in combinations(range(len(xs) + 1), 2):
        for k, l in combinations(range(len(ys) + 1), 2):
            x1, x2, y1, y2 = xs[i], xs[j - 1], ys[k], ys[l - 1]
            e = frozenset(t for t, p in enumerate(ps) if x1 <= p.x <= x2 and y1 <= p.y <= y2)
            if e:
                out.add(e)
    return out


def _general_points(rng, n, span=40):
    xs = rng.sample(range(span), n)
    ys = rng.sample(range(span), n)
    return [Point2(x, y) for x, y in zip(xs, ys)]


@pytest.mark.parametrize("seed", range(10))
def test_points_vs_rects_brute_force(seed):
    rng = random.Random(seed)
    ps = _general_points(rng, rng.randint(1, 8))
    assert set(geo.points_vs_rects(ps).edges) == _brute_points_rects(ps)


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_point_rect_space_checks_match_hypergraph(data):
    seed = data.draw(st.integers(0, 10 ** 6))
    rng = random.Random(seed)
    ps = _general_points(rng, rng.randint(1, 7))
    colors = tuple(data.draw(st.lists(st.integers(1, 3), min_size=len(ps), max_size=len(ps))))
    space = geo.PointRectSpace(ps)
    h = geo.points_vs_rects(ps)
    for regime in (Regime("proper"), Regime("um"), Regime("cf")):
        assert space.verify(colors, regime) == verify(h, colors, regime)


def test_point_rect_delaunay_graph():
    rng = random.Random(3)
    ps = _general_points(rng, 7)
    g = geo.rect_delaunay_graph(ps)
    expected = {e for e in geo.points_vs_rects(ps).edges if len(e) == 2}
    assert set(g.edges) == expected


def test_points_vs_rects_needs_general_position():
    with pytest.raises(InputError):
        geo.points_vs_rects([Point2(0, 0), Point2(0, 1)])


def _brute_paths(g: Graph):
    adj = g.adjacency()
    out = set()
    for r in range(1, g.n + 1):
        for perm in permutations(range(g.n), r):
            if all(perm[i + 1] in adj[perm[i]] for i in range(r - 1)):
                out.add(frozenset(perm))
    return out


@pytest.mark.parametrize("seed", range(8))
def test_path_hypergraph_brute_force(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(1, 6), 0.45)
    assert set(geo.path_hypergraph(g).edges) == _brute_paths(g)


def test_graph_builders():
    assert geo.path_hypergraph(geo.path_graph(5)).canonical() == geo.discrete_intervals(5).canonical()
    assert geo.path_hypergraph(geo.complete_graph(4)).m == 15
    nb = geo.neighborhood_hypergraph(geo.path_graph(3))
    assert nb.canonical() == ((0, 1), (0, 1, 2), (1, 2))
    assert geo.neighborhood_hypergraph(geo.path_graph(3), pointed=True).canonical() == ((0, 2), (1,))
    s = geo.subdivide(geo.complete_graph(3))
    assert s.n == 6 and len(s.edges) == 6
    with pytest.raises(InputError):
        geo.path_hypergraph(geo.path_graph(11))


def test_unit_interval_hypergraph():
    h = geo.unit_interval_hypergraph([0, Fraction(3, 5), Fraction(6, 5)])
    assert h.canonical() == ((0,), (0, 1), (1,), (1, 2), (2,))
    assert geo.unit_interval_hypergraph([0, 1]).canonical() == ((0,), (0, 1), (1,))


def test_caps():
    with pytest.raises(InputError):
        geo.points_vs_discs([Point2(i, i * i) for i in range(5)], cap=4)
    with pytest.raises(InputError):
        geo.rects_hypergraph([Rect(0, 0, 1, 1)] * 3, cap=2)
