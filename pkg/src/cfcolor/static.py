"""Offline coloring frameworks and the auxiliary colorers that feed them.

Each framework repeatedly asks an auxiliary colorer for a coloring of the
surviving vertices, gives the largest auxiliary class the next final color,
and removes it.
"""
from __future__ import annotations

import math
import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .hypergraph import (ContractError, Graph, Hypergraph, InputError, Regime, delaunay_graph,
                         verify)


class AuxiliaryViolation(ContractError):
    """An auxiliary colorer returned a coloring outside its declared regime."""


@dataclass(frozen=True)
class AuxColorer:
    """A colorer plus the regime its output is promised to satisfy.

    ``color`` receives the (re-indexed) induced sub-instance and returns a
    coloring of it. ``budget`` is a human-readable color bound.
    """

    name: str
    color: Callable
    regime: Regime
    budget: str = ""

    def __call__(self, h) -> tuple:
        colors = tuple(self.color(h))
        if len(colors) != h.n or not verify(h, colors, self.regime):
            raise AuxiliaryViolation(f"auxiliary colorer {self.name!r} broke {self.regime}")
        return colors


@dataclass(frozen=True)
class IterationRecord:
    iteration: int
    survivors: int
    aux_colors: int
    pruned: int


@dataclass
class FrameworkTrace:
    records: list = field(default_factory=list)

    @property
    def iterations(self) -> int:
        return len(self.records)

    @property
    def max_aux_colors(self) -> int:
        return max((r.aux_colors for r in self.records), default=0)

    def to_json(self) -> list:
        return [r.__dict__ for r in self.records]


def _largest_class(aux_colors: Sequence[int]) -> list[int]:
    classes = defaultdict(list)
    for v, c in enumerate(aux_colors):
        classes[c].append(v)
    best = min(classes, key=lambda c: (-len(classes[c]), c))
    return classes[best]


def _normal(r: Regime) -> tuple:
    # proper, 1-weak, 2-weak and 2-colorful are the same condition
    if r.kind == "proper" or (r.kind == "k-weak" and r.k <= 2) or r == Regime("k-colorful", 2):
        return ("k-weak", 2)
    return (r.kind, r.k)


def implies(stronger: Regime, weaker: Regime) -> bool:
    """Whether every coloring valid for ``stronger`` is valid for ``weaker``.

    Only covers the auxiliary regimes (proper, k-weak, k-colorful).
    """
    a, b = _normal(stronger), _normal(weaker)
    if a == b or b == ("k-colorful", 1):
        return True
    if a[0] == "k-colorful":
        return (b[0] == "k-weak" and a[1] >= 2) or (b[0] == "k-colorful" and b[1] <= a[1])
    return a[0] == b[0] == "k-weak" and a[1] <= b[1]


def _peel(h, aux: AuxColorer, expected: Regime):
    if not implies(aux.regime, expected):
        raise InputError(f"framework needs a {expected} auxiliary colorer, got {aux.regime}")
    final = [0] * h.n
    alive = list(range(h.n))
    trace = FrameworkTrace()
    color = 0
    while alive:
        color += 1
        sub = h.induced(alive)
        chi = aux(sub)
        picked = _largest_class(chi)
        for j in picked:
            final[alive[j]] = color
        trace.records.append(IterationRecord(color, len(alive), len(set(chi)), len(picked)))
        chosen = {alive[j] for j in picked}
        alive = [v for v in alive if v not in chosen]
    return tuple(final), trace


def um_framework(h, aux: AuxColorer):
    """Unique-maximum coloring from a hereditary proper auxiliary coloring."""
    return _peel(h, aux, Regime("proper"))


def kcf_framework(h, aux: AuxColorer, k: int):
    """k-CF coloring from (k+1)-weak auxiliary colorings.

    The maximum color of every edge occurs at most ``k`` times in it.
    """
    return _peel(h, aux, Regime("k-weak", k + 1))


def kscf_framework(h, aux: AuxColorer, k: int):
    """(k-1)-strong-CF coloring from k-colorful auxiliary colorings."""
    if k < 2:
        raise InputError("kscf_framework needs k >= 2")
    return _peel(h, aux, Regime("k-colorful", k))


def color_count_bound(n: int, per_iteration: int) -> int:
    """``ceil(log_{C/(C-1)} n) + 1`` for auxiliary colorings with at most C colors."""
    if n <= 1 or per_iteration <= 1:
        return min(n, 1)
    return math.ceil(math.log(n) / math.log(per_iteration / (per_iteration - 1))) + 1


# --- auxiliary colorers ---------------------------------------------------------

def greedy_proper(h: Hypergraph) -> tuple:
    """Greedy proper coloring in decreasing-degree order.

    A color is forbidden for ``v`` exactly when some edge through ``v`` has
    all its other vertices colored with that one color.
    """
    deg = h.degrees()
    inc = h.incidence()
    colors = [0] * h.n
    for v in sorted(range(h.n), key=lambda u: (-deg[u], u)):
        forbidden = set()
        for e in inc[v]:
            if len(e) < 2:
                continue
            others = {colors[u] for u in e if u != v}
            if len(others) == 1 and 0 not in others:
                forbidden |= others
        c = 1
        while c in forbidden:
            c += 1
        colors[v] = c
    return tuple(colors)


def degeneracy_order(g: Graph) -> list[int]:
    """Repeatedly remove a vertex of minimum degree (ties: smallest index)."""
    adj = g.adjacency()
    deg = [len(a) for a in adj]
    alive = set(range(g.n))
    order = []
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        order.append(v)
        alive.discard(v)
        for u in adj[v]:
            if u in alive:
                deg[u] -= 1
    return order


def degeneracy_greedy(g: Graph) -> tuple:
    """Greedy graph coloring in reverse degeneracy order (d-degenerate: <= d+1 colors)."""
    adj = g.adjacency()
    colors = [0] * g.n
    for v in reversed(degeneracy_order(g)):
        used = {colors[u] for u in adj[v]}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    return tuple(colors)


def delaunay_greedy(h: Hypergraph) -> tuple:
    """Proper coloring of ``h`` via its Delaunay graph.

    Valid whenever every edge of size >= 2 contains a size-2 edge, as for
    discs; the auxiliary check catches hypergraphs where that fails.
    """
    return degeneracy_greedy(delaunay_graph(h))


def alternating_interval_proper(n: int) -> tuple:
    return tuple(1 + i % 2 for i in range(n))


def block_weak_intervals(n: int, k: int) -> tuple:
    """Blocks of ``k`` consecutive vertices colored 1, 2, 1, 2, ..."""
    if k < 1:
        raise InputError("k must be >= 1")
    return tuple(1 + (i // k) % 2 for i in range(n))


def cyclic_colorful_intervals(n: int, k: int) -> tuple:
    if k < 1:
        raise InputError("k must be >= 1")
    return tuple(1 + i % k for i in range(n))


def _longest_monotone(seq: Sequence[int]) -> list[int]:
    """Indices of a longest strictly increasing or decreasing subsequence."""
    best: list[int] = []
    for sign in (1, -1):
        n = len(seq)
        length = [1] * n
        prev = [-1] * n
        for j in range(n):
            for i in range(j):
                if sign * seq[i] < sign * seq[j] and length[i] + 1 > length[j]:
                    length[j] = length[i] + 1
                    prev[j] = i
        if n:
            end = max(range(n), key=lambda j: (length[j], -j))
            chain = []
            while end != -1:
                chain.append(end)
                end = prev[end]
            if len(chain) > len(best):
                best = chain[::-1]
    return best


def monotone_chain_proper(points) -> tuple:
    """Proper coloring of points w.r.t. axis-parallel rectangles.

    Peel off longest monotone chains (in x-order, monotone in y). Each chain
    gets its own two colors, alternating along the chain; a singleton chain
    needs one.
    """
    pts = list(points)
    if len({p.x for p in pts}) != len(pts) or len({p.y for p in pts}) != len(pts):
        raise InputError("points must have pairwise distinct x and distinct y coordinates")
    colors = [0] * len(pts)
    remaining = sorted(range(len(pts)), key=lambda i: pts[i].x)
    next_color = 1
    while remaining:
        chain = _longest_monotone([pts[i].y for i in remaining])
        for pos, j in enumerate(chain):
            colors[remaining[j]] = next_color + pos % 2
        next_color += min(len(chain), 2)
        taken = set(chain)
        remaining = [v for j, v in enumerate(remaining) if j not in taken]
    return tuple(colors)


def aux_greedy() -> AuxColorer:
    return AuxColorer("greedy", greedy_proper, Regime("proper"), "unbounded")


def aux_delaunay() -> AuxColorer:
    return AuxColorer("delaunay", delaunay_greedy, Regime("proper"), "degeneracy + 1")


def aux_alternating() -> AuxColorer:
    return AuxColorer("alt-interval", lambda h: alternating_interval_proper(h.n),
                      Regime("proper"), "2")


def aux_chain() -> AuxColorer:
    return AuxColorer("chain", lambda space: monotone_chain_proper(space.points),
                      Regime("proper"), "O(sqrt n)")


def aux_block(k: int) -> AuxColorer:
    return AuxColorer("block", lambda h: block_weak_intervals(h.n, k), Regime("k-weak", k + 1), "2")


def aux_cyclic(k: int) -> AuxColorer:
    return AuxColorer("cyclic", lambda h: cyclic_colorful_intervals(h.n, k),
                      Regime("k-colorful", k), str(k))


# --- k-admissible layering ------------------------------------------------------

def is_k_admissible(h: Hypergraph, subset, k: int) -> bool:
    """Every edge meeting ``subset`` in more than ``k`` vertices also leaves it."""
    s = set(subset)
    return all(len(e & s) <= k or not e <= s for e in h.edges)


def find_k_admissible(h: Hypergraph, k: int, rng: random.Random | int | None = None,
                      max_attempts: int = 1000) -> frozenset:
    """Random nonempty k-admissible set.

    Each vertex is kept with probability ``((k+1) n^(d-1))^(-1/k)`` where
    ``d = ceil(log|E| / log n)`` stands in for the VC-dimension; then one
    vertex is dropped from every large edge that survived whole.
    """
    if k < 1:
        raise InputError("k must be >= 1")
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    n = h.n
    if n == 0:
        return frozenset()
    if n == 1 or not h.edges:
        return frozenset(range(n))
    d = max(1, math.ceil(math.log(max(h.m, 2)) / math.log(n)))
    p = min(1.0, ((k + 1) * n ** (d - 1)) ** (-1.0 / k))
    large = [e for e in h.edges if len(e) > k]
    for _ in range(max_attempts):
        chosen = {v for v in range(n) if rng.random() < p}
        for e in large:
            if e <= chosen:
                chosen.discard(min(e))
        if chosen:
            return frozenset(chosen)
    return frozenset([rng.randrange(n)])


def kcf_via_admissible(h: Hypergraph, k: int, seed=None) -> tuple:
    """Color successive k-admissible layers 1, 2, 3, ...

    The maximum color in an edge occurs only inside one layer, which the
    edge meets in at most ``k`` vertices.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    final = [0] * h.n
    alive = list(range(h.n))
    color = 0
    while alive:
        color += 1
        layer = find_k_admissible(h.induced(alive), k, rng)
        for j in layer:
            final[alive[j]] = color
        chosen = {alive[j] for j in layer}
        alive = [v for v in alive if v not in chosen]
    return tuple(final)
