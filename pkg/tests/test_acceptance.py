"""The twelve acceptance criteria, one test each, each printing a PASS/FAIL line."""
import math
import random
import time
from fractions import Fraction

import pytest

from cfcolor import online as ol
from cfcolor.geometry import (Point2, PointRectSpace, antenna_discs, discrete_intervals,
                              discs_hypergraph, path_hypergraph, points_vs_discs, rects_hypergraph,
                              staircase_squares)
from cfcolor.hypergraph import Hypergraph, Regime, line_cf_ok, line_um_ok, two_part_triples, verify
from cfcolor.lists import potential, respects_lists, cf_choose_intervals, um_from_lists_traced
from cfcolor.oracle import exact_min
from cfcolor.static import aux_alternating, aux_greedy, monotone_chain_proper, um_framework
from conftest import ACCEPTANCE, random_graph, random_hypergraph

CF, UM = Regime("cf"), Regime("um")


def report(number: int, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    ACCEPTANCE.append(line)
    print(line)
    assert ok, line


def prefix_cf_ok(seq) -> bool:
    # unique maximum is the linear-time certificate; fall back to the direct check
    return line_um_ok(seq) or line_cf_ok(seq)


def test_01_interval_exact_values():
    t0 = time.perf_counter()
    bad = []
    for n in range(2, 17):
        h = discrete_intervals(n)
        cf = exact_min(h, CF).value
        um = exact_min(h, UM).value
        if not cf == um == math.floor(math.log2(n)) + 1:
            bad.append((n, cf, um))
    dt = time.perf_counter() - t0
    report(1, not bad and dt < 60, f"intervals n=2..16 cf=um=floor(log2 n)+1, {dt:.1f}s, mismatches={bad}")


def test_02_cf_um_gap():
    t0 = time.perf_counter()
    values = {n: (exact_min(two_part_triples(n), CF).value, exact_min(two_part_triples(n), UM).value)
              for n in (2, 3, 4)}
    dt = time.perf_counter() - t0
    ok = all(v == (2, n + 1) for n, v in values.items()) and dt < 30
    report(2, ok, f"A/B triples (cf, um) by n = {values}, {dt:.1f}s")


def test_03_framework_sweep():
    rng = random.Random(2024)
    t0 = time.perf_counter()
    valid = law = 0
    for _ in range(500):
        n = rng.randint(1, 10)
        h = random_hypergraph(rng, n, rng.randint(0, 15))
        colors, trace = um_framework(h, aux_greedy())
        valid += verify(h, colors, UM)
        L, C = trace.iterations, trace.max_aux_colors
        # L colors force n ((C-1)/C)^(L-1) >= 1
        law += L <= 1 or (C > 1 and n * Fraction(C - 1, C) ** (L - 1) >= 1)
    dt = time.perf_counter() - t0
    report(3, valid == 500 and law == 500 and dt < 60,
           f"500 random hypergraphs: {valid} UM-valid, {law} obey the pigeonhole law, {dt:.1f}s")


def test_04_unimax_replay():
    s = ol.UniMaxLine()
    for g in [0, 1, 1, 1, 2, 3, 3, 3, 4, 4, 5]:
        s.insert_at_gap(g)
    replay = s.colors()
    um = ol.UniMaxLine()
    ff = ol.FirstFitLine()
    for p in (1, 3, 2, 4, 5):
        um.insert(p)
        ff.insert(p)
    ok = (replay == (1, 2, 1, 5, 2, 6, 1, 3, 4, 3, 2) and um.colors() == (1, 3, 2, 1, 4)
          and ff.colors() == (1, 3, 2, 1, 2))
    report(4, ok, f"replay {replay}, UniMax {um.colors()}, First-Fit {ff.colors()}")


def test_05_binary_tree_sequences():
    c0 = ol.seq_c0(5, 12)
    s = ol.UniMaxLine()
    bad = []
    for t in range(1, 65):
        s.insert(t)
        if s.colors() != ol.seq_c0(1, t):
            bad.append(t)
    report(5, c0 == (1, 2, 1, 4, 1, 2, 1, 3) and not bad,
           f"C_0(5,12) = {c0}; left-to-right UniMax equals C_0(1,t) for t<=64 (mismatches {bad})")


def test_06_leveled_unimax():
    s = ol.LeveledLine()
    for g in ol.leveled_adversary_gaps(5):
        s.insert_at_gap(g)
    adversary_pairs = len(set(s.pairs))
    rng = random.Random(6)
    worst, prefix_ok = 0, True
    t0 = time.perf_counter()
    for _ in range(50):
        state = ol.LeveledLine(check=False)
        for p in rng.sample(range(10 ** 6), 1024):
            state.insert(p)
            prefix_ok = prefix_ok and prefix_cf_ok(state.pairs)
        worst = max(worst, len(state.registry))
    dt = time.perf_counter() - t0
    report(6, adversary_pairs == 15 and worst <= 120 and prefix_ok,
           f"adversary k=5 (n={len(s)}) uses {adversary_pairs} pairs; 50 random n=1024 orders: "
           f"max {worst} pairs, CF at every prefix={prefix_ok}, {dt:.1f}s")


def test_07_randomized_framework():
    n, h = 256, 3
    rng = random.Random(7)
    t0 = time.perf_counter()
    counts, prefix_ok, same = [], True, True
    for seed in range(100):
        order = rng.sample(range(10 ** 6), n)
        f = ol.OnlineFramework(ol.LineSpace(), h, seed=seed, check=False)
        for p in order:
            f.insert(p)
            prefix_ok = prefix_ok and prefix_cf_ok(f.colors())
        counts.append(max(f.colors()))
        forced = ol.OnlineFramework(ol.LineSpace(), h, f=1, check=False)
        greedy = ol.UniMaxLine(check=False)
        for p in order:
            forced.insert(p)
            greedy.insert(p)
        same = same and forced.colors() == greedy.colors()
    dt = time.perf_counter() - t0
    within = sum(c <= 40 for c in counts)
    report(7, prefix_ok and within >= 95 and same and dt < 120,
           f"h=3, n=256, 100 seeds: CF at every prefix={prefix_ok}, {within}/100 use <=40 colors "
           f"(max {max(counts)}), constant f equals UniMax={same}, {dt:.1f}s")


def test_08_pach_tardos():
    rng = random.Random(8)
    bad = []
    for _ in range(200):
        n = rng.randint(1, 8)
        h = random_hypergraph(rng, n, rng.randint(1, 20))
        cf = exact_min(h, CF).value
        if cf > math.ceil(0.5 + math.sqrt(2 * h.m + 0.25)):
            bad.append(h.to_json())
    report(8, not bad, f"200 random hypergraphs: cf <= ceil(1/2 + sqrt(2m + 1/4)) violated {len(bad)} times")


def test_09_path_hypergraphs():
    rng = random.Random(9)
    bad = []
    t0 = time.perf_counter()
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 7), rng.uniform(0.2, 0.8))
        h = path_hypergraph(g)
        cf = exact_min(h, CF).value
        um = exact_min(h, UM).value
        if um > 2 ** cf - 1:
            bad.append((g.to_json(), cf, um))
    dt = time.perf_counter() - t0
    report(9, not bad, f"100 random graphs: um <= 2^cf - 1 violated {len(bad)} times, {dt:.1f}s")


def test_10_monotone_chains():
    rng = random.Random(10)
    t0 = time.perf_counter()
    worst, valid = 0, 0
    for _ in range(20):
        ps = [Point2(x, y) for x, y in zip(rng.sample(range(10 ** 5), 400), rng.sample(range(10 ** 5), 400))]
        colors = monotone_chain_proper(ps)
        valid += PointRectSpace(ps).verify(colors, Regime("proper"))
        worst = max(worst, len(set(colors)))
    dt = time.perf_counter() - t0
    report(10, valid == 20 and worst <= 80 and dt < 60,
           f"20 sets of 400 points: {valid} proper, max {worst} colors (bound 80), {dt:.1f}s")


def test_11_list_coloring():
    rng = random.Random(11)
    h15 = discrete_intervals(15)
    cf_ok = 0
    for _ in range(100):
        lists = [set(rng.sample(range(1, 11), 4)) for _ in range(15)]
        c = cf_choose_intervals(15, lists)
        cf_ok += respects_lists(c, lists) and verify(h15, c, CF)
    um_ok = tried = 0
    while tried < 50:
        if tried % 2:
            h = discrete_intervals(rng.randint(1, 12))
            k, aux = 2, aux_alternating()
        else:
            h = random_hypergraph(rng, rng.randint(1, 7), rng.randint(1, 10))
            k, aux = max(2, h.n), aux_greedy()
        lists = [set(rng.sample(range(1, 20), rng.randint(1, 9))) for _ in range(h.n)]
        if potential((len(L) for L in lists), Fraction(k, k - 1)) >= 1:
            continue
        tried += 1
        colors, pots = um_from_lists_traced(h, lists, k, aux)
        monotone = all(a >= b for a, b in zip(pots, pots[1:]))
        um_ok += respects_lists(colors, lists) and verify(h, colors, UM) and monotone
    report(11, cf_ok == 100 and um_ok == 50,
           f"cf_choose_intervals n=15: {cf_ok}/100; um_from_lists with potential < 1: {um_ok}/50 "
           f"valid with non-increasing potential")


def test_12_geometry_cross_checks():
    intervals = {n: discrete_intervals(n).canonical() for n in range(1, 9)}
    collinear = all(points_vs_discs([Point2(3 * i, 2 * i) for i in range(n)]).canonical() == intervals[n]
                    for n in range(1, 9))
    antenna = discs_hypergraph(antenna_discs())
    antenna_cf = exact_min(antenna, CF).value
    stairs = all(rects_hypergraph(staircase_squares(n)).canonical() == intervals[n] for n in range(1, 9))
    report(12, collinear and antenna_cf == 2 and stairs,
           f"collinear points vs discs = intervals: {collinear}; antenna cf = {antenna_cf}; "
           f"staircase squares = intervals: {stairs}")


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
