"""Hypergraphs, graphs, and verifiers for the coloring regimes.

Vertices are the integers ``0..n-1``. A coloring is any sequence of length
``n`` whose ``i``-th entry is the color of vertex ``i``; colors are positive
integers (0 is accepted only with ``allow_zero=True``).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class InputError(ValueError):
    """Malformed input: bad indices, length mismatch, size caps, ..."""


class ContractError(RuntimeError):
    """An algorithm or one of its plug-ins broke its own contract."""


Edge = frozenset


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"negative vertex count {self.n}")
        seen = set()
        kept = []
        for e in self.edges:
            e = frozenset(e)
            if not e or e in seen:
                continue
            for v in e:
                if not isinstance(v, int) or not 0 <= v < self.n:
                    raise InputError(f"edge vertex {v!r} out of range for n={self.n}")
            seen.add(e)
            kept.append(e)
        object.__setattr__(self, "edges", tuple(kept))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def incidence(self) -> list[list[frozenset]]:
        inc = [[] for _ in range(self.n)]
        for e in self.edges:
            for v in e:
                inc[v].append(e)
        return inc

    def induced(self, subset: Iterable[int]) -> "Hypergraph":
        return induced_sub(self, subset)[0]

    def canonical(self) -> tuple:
        """Sorted edge list; equal iff the edge sets are equal."""
        return tuple(sorted(tuple(sorted(e)) for e in self.edges))

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Rename vertex ``v`` to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise InputError("relabel needs a permutation of 0..n-1")
        return Hypergraph(self.n, tuple(frozenset(perm[v] for v in e) for e in self.edges))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [sorted(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> "Hypergraph":
        try:
            return cls(int(data["n"]), tuple(tuple(int(v) for v in e) for e in data["edges"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"bad hypergraph JSON: {exc}") from exc


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default=frozenset())

    def __post_init__(self):
        pairs = set()
        for e in self.edges:
            e = frozenset(e)
            if len(e) != 2:
                raise InputError(f"graph edge {sorted(e)} is not a pair of distinct vertices")
            if any(not 0 <= v < self.n for v in e):
                raise InputError(f"graph edge {sorted(e)} out of range for n={self.n}")
            pairs.add(e)
        object.__setattr__(self, "edges", frozenset(pairs))

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for e in self.edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def to_json(self) -> dict:
        return {"n": self.n, "edges": sorted(sorted(e) for e in self.edges)}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        try:
            return cls(int(data["n"]), frozenset(frozenset(int(v) for v in e) for e in data["edges"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"bad graph JSON: {exc}") from exc


def induced_sub(h: Hypergraph, subset: Iterable[int]) -> tuple[Hypergraph, dict[int, int]]:
    """Sub-hypergraph induced by ``subset``, reindexed in increasing vertex order.

    Returns the new hypergraph and the old-to-new index map.
    """
    keep = sorted(set(subset))
    for v in keep:
        if not 0 <= v < h.n:
            raise InputError(f"subset vertex {v} out of range for n={h.n}")
    index = {v: i for i, v in enumerate(keep)}
    edges = []
    for e in h.edges:
        cut = [index[v] for v in e if v in index]
        if cut:
            edges.append(cut)
    return Hypergraph(len(keep), tuple(edges)), index


def delaunay_graph(h: Hypergraph) -> Graph:
    return Graph(h.n, frozenset(e for e in h.edges if len(e) == 2))


def two_part_triples(n: int) -> Hypergraph:
    """All triples meeting both A = {0..n-1} and B = {n..2n-1}.

    Proper/CF number 2 (color A with 1 and B with 2) but UM number n+1.
    """
    edges = []
    for a in range(2 * n):
        for b in range(a + 1, 2 * n):
            for c in range(b + 1, 2 * n):
                side = [v < n for v in (a, b, c)]
                if any(side) and not all(side):
                    edges.append((a, b, c))
    return Hypergraph(2 * n, tuple(edges))


# --- verifiers ---------------------------------------------------------------

def check_coloring(h, colors: Sequence[int], allow_zero: bool = False) -> None:
    if len(colors) != h.n:
        raise InputError(f"coloring has length {len(colors)}, hypergraph has {h.n} vertices")
    floor = 0 if allow_zero else 1
    for c in colors:
        if not isinstance(c, int) or c < floor:
            raise InputError(f"invalid color {c!r}")


def _check_k(k: int) -> None:
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")


def verify_proper(h: Hypergraph, colors, allow_zero=False) -> bool:
    check_coloring(h, colors, allow_zero)
    for e in h.edges:
        if len(e) >= 2 and len({colors[v] for v in e}) == 1:
            return False
    return True


def verify_cf(h: Hypergraph, colors, allow_zero=False) -> bool:
    check_coloring(h, colors, allow_zero)
    for e in h.edges:
        if 1 not in Counter(colors[v] for v in e).values():
            return False
    return True


def verify_um(h: Hypergraph, colors, allow_zero=False) -> bool:
    check_coloring(h, colors, allow_zero)
    for e in h.edges:
        top = max(colors[v] for v in e)
        if sum(1 for v in e if colors[v] == top) != 1:
            return False
    return True


def verify_k_weak(h: Hypergraph, colors, k: int, allow_zero=False) -> bool:
    """Every edge with at least ``k`` vertices is non-monochromatic."""
    _check_k(k)
    check_coloring(h, colors, allow_zero)
    for e in h.edges:
        if len(e) >= k and len(e) >= 2 and len({colors[v] for v in e}) == 1:
            return False
    return True


def verify_k_cf(h: Hypergraph, colors, k: int, allow_zero=False) -> bool:
    """Every edge has a color occurring between 1 and ``k`` times."""
    _check_k(k)
    check_coloring(h, colors, allow_zero)
    for e in h.edges:
        if min(Counter(colors[v] for v in e).values()) > k:
            return False
    return True


def verify_k_colorful(h: Hypergraph, colors, k: int, allow_zero=False) -> bool:
    _check_k(k)
    check_coloring(h, colors, allow_zero)
    for e in h.edges:
        if len({colors[v] for v in e}) < min(len(e), k):
            return False
    return True


def verify_k_scf(h: Hypergraph, colors, k: int, allow_zero=False) -> bool:
    """Edges of size >= k carry k uniquely-occurring colors; smaller edges are rainbow."""
    _check_k(k)
    check_coloring(h, colors, allow_zero)
    for e in h.edges:
        counts = Counter(colors[v] for v in e)
        if len(e) < k:
            if len(counts) != len(e):
                return False
        elif sum(1 for c in counts.values() if c == 1) < k:
            return False
    return True


@dataclass(frozen=True)
class Regime:
    """A coloring regime: ``proper``, ``cf``, ``um`` or a parameterized one."""

    kind: str
    k: int | None = None

    KINDS = ("proper", "cf", "um", "k-weak", "k-cf", "k-colorful", "k-scf")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise InputError(f"unknown regime {self.kind!r}")
        if self.kind.startswith("k-"):
            if self.k is None or self.k < 1:
                raise InputError(f"regime {self.kind} needs k >= 1")
        elif self.k is not None:
            raise InputError(f"regime {self.kind} takes no k")

    @property
    def permutation_invariant(self) -> bool:
        return self.kind != "um"

    def __str__(self):
        return self.kind if self.k is None else f"{self.kind}({self.k})"


def verify(h, colors, regime: Regime, allow_zero=False) -> bool:
    """Dispatch to the verifier for ``regime``.

    Objects other than :class:`Hypergraph` may supply their own ``verify``
    method (e.g. point sets whose range hypergraph is too big to list).
    """
    if not isinstance(h, Hypergraph):
        return h.verify(colors, regime)
    kind, k = regime.kind, regime.k
    if kind == "proper":
        return verify_proper(h, colors, allow_zero)
    if kind == "cf":
        return verify_cf(h, colors, allow_zero)
    if kind == "um":
        return verify_um(h, colors, allow_zero)
    if kind == "k-weak":
        return verify_k_weak(h, colors, k, allow_zero)
    if kind == "k-cf":
        return verify_k_cf(h, colors, k, allow_zero)
    if kind == "k-colorful":
        return verify_k_colorful(h, colors, k, allow_zero)
    return verify_k_scf(h, colors, k, allow_zero)


# --- colorings of a line, checked over all contiguous runs ---------------------

def line_um_ok(seq: Sequence) -> bool:
    """True iff every contiguous run of ``seq`` has a unique maximum.

    Linear scan with a strictly decreasing stack of the values visible
    looking left; meeting an equal visible value means two equal values with
    only smaller ones between them. Values need only be totally ordered.
    """
    stack = []
    for c in seq:
        while stack and stack[-1] < c:
            stack.pop()
        if stack and stack[-1] == c:
            return False
        stack.append(c)
    return True


def line_cf_ok(seq: Sequence) -> bool:
    """True iff every contiguous run of ``seq`` has a value occurring once."""
    n = len(seq)
    for i in range(n):
        counts: Counter = Counter()
        singles = 0
        for j in range(i, n):
            c = seq[j]
            counts[c] += 1
            if counts[c] == 1:
                singles += 1
            elif counts[c] == 2:
                singles -= 1
            if singles == 0:
                return False
    return True
