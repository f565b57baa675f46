"""Coloring from per-vertex color lists."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .hypergraph import ContractError, Hypergraph, InputError, Regime, verify
from .static import AuxColorer, aux_greedy


def check_lists(lists: Sequence, n: int) -> list[frozenset]:
    if len(lists) != n:
        raise InputError(f"{len(lists)} lists for {n} vertices")
    out = []
    for i, L in enumerate(lists):
        L = frozenset(L)
        if not L:
            raise InputError(f"list of vertex {i} is empty")
        if any(not isinstance(c, int) or c < 1 for c in L):
            raise InputError(f"list of vertex {i} has a non-positive color")
        out.append(L)
    return out


def cf_choose_intervals(n: int, lists: Sequence) -> tuple:
    """CF coloring of the discrete intervals from lists of size >= floor(log2 n) + 1.

    The (lower) median of the current range takes its smallest remaining
    color, which is then struck from every other list in the range; both
    halves recurse. Every run through the median sees that color once.
    """
    lists = check_lists(lists, n)
    need = n.bit_length()
    short = [i for i, L in enumerate(lists) if len(L) < need]
    if short:
        raise InputError(f"vertex {short[0]} has fewer than {need} colors")
    avail = [set(L) for L in lists]
    colors = [0] * n
    stack = [(0, n - 1)]
    while stack:
        lo, hi = stack.pop()
        if lo > hi:
            continue
        mid = (lo + hi) // 2
        assert avail[mid], "list exhausted despite the size precondition"
        c = min(avail[mid])
        colors[mid] = c
        for v in range(lo, hi + 1):
            avail[v].discard(c)
        stack.append((lo, mid - 1))
        stack.append((mid + 1, hi))
    return tuple(colors)


def potential(sizes, lam: Fraction) -> Fraction:
    return sum((lam ** -r for r in sizes), Fraction(0))


def um_from_lists_traced(h: Hypergraph, lists: Sequence, k: int,
                         aux: AuxColorer | None = None) -> tuple[tuple, list[Fraction]]:
    """UM coloring from lists via the potential ``sum lambda^(-r(v))``, lambda = k/(k-1).

    ``aux`` must properly color every induced sub-hypergraph with at most
    ``k`` colors. Colors are handled in increasing order; at color ``c`` the
    auxiliary class of largest potential among the vertices still holding
    ``c`` receives it. Returns the coloring and the potential before each
    step (and at the end).
    """
    if k < 2:
        raise InputError("um_from_lists needs k >= 2")
    lists = check_lists(lists, h.n)
    aux = aux or aux_greedy()
    lam = Fraction(k, k - 1)
    remaining = [set(L) for L in lists]
    start = potential((len(L) for L in lists), lam)
    if start >= 1:
        raise InputError(f"list sizes too small: potential {start} >= 1")
    colors = [0] * h.n
    history = [start]
    for c in sorted(set().union(*lists)) if lists else []:
        holders = [v for v in range(h.n) if not colors[v] and c in remaining[v]]
        if not holders:
            continue
        chi = aux(h.induced(holders))
        classes: dict[int, list[int]] = {}
        for j, a in enumerate(chi):
            classes.setdefault(a, []).append(holders[j])
        if len(classes) > k:
            raise ContractError(f"auxiliary colorer used {len(classes)} > {k} colors")
        best = max(sorted(classes), key=lambda a: potential((len(remaining[v]) for v in classes[a]), lam))
        chosen = set(classes[best])
        for v in holders:
            if v in chosen:
                colors[v] = c
            else:
                remaining[v].discard(c)
                if not remaining[v]:
                    raise ContractError(f"vertex {v} ran out of colors")
        now = potential((len(remaining[v]) for v in range(h.n) if not colors[v]), lam)
        if now > history[-1]:
            raise ContractError("potential increased")
        history.append(now)
    if not all(colors):
        raise ContractError("some vertex left uncolored")
    return tuple(colors), history


def um_from_lists(h: Hypergraph, lists: Sequence, k: int, aux: AuxColorer | None = None) -> tuple:
    return um_from_lists_traced(h, lists, k, aux)[0]


def respects_lists(colors: Sequence[int], lists: Sequence) -> bool:
    return len(colors) == len(lists) and all(c in L for c, L in zip(colors, lists))


def verify_from_lists(h: Hypergraph, colors, lists, regime: Regime) -> bool:
    return respects_lists(colors, lists) and verify(h, colors, regime)
