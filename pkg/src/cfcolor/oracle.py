"""Exhaustive minimum-color search, the ground truth for every regime.

Search is iterative deepening on the palette size ``r``; for each ``r`` a
backtracking search colors vertices in decreasing-degree order and checks an
edge as soon as its last vertex is colored.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .hypergraph import Hypergraph, InputError, Regime, verify

DEFAULT_CAP = 18


@dataclass(frozen=True)
class OracleResult:
    """``value`` is the minimum, or None when the budget ran out first.

    When ``value`` is None, ``lower_bound`` is ``budget + 1``.
    """

    value: int | None
    witness: tuple | None
    lower_bound: int

    @property
    def exhausted(self) -> bool:
        return self.value is None


def _edge_ok(colors, e, regime: Regime) -> bool:
    kind, k = regime.kind, regime.k
    if kind == "proper" or kind == "k-weak":
        if len(e) < 2 or (kind == "k-weak" and len(e) < k):
            return True
        first = colors[e[0]]
        return any(colors[v] != first for v in e)
    if kind == "um":
        top = -1
        count = 0
        for v in e:
            c = colors[v]
            if c > top:
                top, count = c, 1
            elif c == top:
                count += 1
        return count == 1
    counts = Counter(colors[v] for v in e)
    if kind == "cf":
        return 1 in counts.values()
    if kind == "k-cf":
        return min(counts.values()) <= k
    if kind == "k-colorful":
        return len(counts) >= min(len(e), k)
    # k-scf
    if len(e) < k:
        return len(counts) == len(e)
    return sum(1 for c in counts.values() if c == 1) >= k


def _search_order(h: Hypergraph) -> list[int]:
    deg = h.degrees()
    return sorted(range(h.n), key=lambda v: (-deg[v], v))


def _closing_edges(h: Hypergraph, order: list[int]) -> list[list[tuple]]:
    """For each search step, the edges whose last vertex is colored there."""
    pos = {v: i for i, v in enumerate(order)}
    closing = [[] for _ in order]
    for e in h.edges:
        closing[max(pos[v] for v in e)].append(tuple(sorted(e)))
    return closing


def _find(h, order, closing, regime, palettes, break_symmetry):
    """Backtracking over ``palettes[v]`` (a sorted list of allowed colors)."""
    n = len(order)
    colors = [0] * h.n

    def rec(step, used):
        if step == n:
            return True
        v = order[step]
        for c in palettes[v]:
            if break_symmetry and c > used + 1:
                break
            colors[v] = c
            if all(_edge_ok(colors, e, regime) for e in closing[step]):
                if rec(step + 1, max(used, c)):
                    return True
        colors[v] = 0
        return False

    if rec(0, 0):
        return tuple(colors)
    return None


def _check_size(h: Hypergraph, cap: int) -> None:
    if h.n > cap:
        raise InputError(f"exact search refuses n={h.n} (cap {cap})")


def exact_min(h: Hypergraph, regime: Regime, budget: int | None = None,
              cap: int = DEFAULT_CAP) -> OracleResult:
    """Smallest ``r`` admitting a valid coloring from ``{1..r}``, with a witness.

    Colors are introduced in increasing order (a new color only once all
    smaller ones are in use) for every regime except UM, which is not
    invariant under renaming colors.
    """
    _check_size(h, cap)
    if budget is None:
        budget = max(h.n, 1)
    if budget < 1:
        raise InputError("budget must be >= 1")
    if h.n == 0:
        return OracleResult(0, (), 0)
    order = _search_order(h)
    closing = _closing_edges(h, order)
    for r in range(1, budget + 1):
        palette = list(range(1, r + 1))
        witness = _find(h, order, closing, regime, [palette] * h.n,
                        break_symmetry=regime.permutation_invariant)
        if witness is not None:
            assert verify(h, witness, regime)
            return OracleResult(r, witness, r)
    return OracleResult(None, None, budget + 1)


def exact_cf_from_lists(h: Hypergraph, lists: Sequence, cap: int = DEFAULT_CAP):
    """A CF coloring with ``colors[v] in lists[v]``, or None if none exists."""
    _check_size(h, cap)
    if len(lists) != h.n:
        raise InputError(f"{len(lists)} lists for {h.n} vertices")
    if any(len(L) == 0 for L in lists):
        raise InputError("empty color list")
    order = _search_order(h)
    closing = _closing_edges(h, order)
    palettes = [sorted(set(L)) for L in lists]
    return _find(h, order, closing, Regime("cf"), palettes, break_symmetry=False)
