"""Online coloring: points inserted one at a time on a line, and the
randomized level framework for arbitrary revealed hypergraphs.

Colors, once given, never change. Positions are exact rationals so an
adversary can always insert between two existing points.
"""
from __future__ import annotations

import math
import random
from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .geometry import unit_interval_hypergraph
from .hypergraph import ContractError, Hypergraph, InputError, line_um_ok, verify_cf, verify_um


# --- complete binary tree sequences ------------------------------------------------

def binary_tree_sequence(k: int) -> tuple:
    """S_k = S_{k-1} + (k) + S_{k-1}, with S_0 empty."""
    if k < 0:
        raise InputError("k must be >= 0")
    s: tuple = ()
    for j in range(1, k + 1):
        s = s + (j,) + s
    return s


def ruler(p: int) -> int:
    """Entry ``p`` (1-based) of every S_k long enough: 1 + the 2-adic valuation of p."""
    return (p & -p).bit_length()


def seq_c0(a: int, b: int) -> tuple:
    """Entries ``a..b`` (1-based, inclusive) of the complete binary tree sequence."""
    if a < 1 or a > b:
        raise InputError(f"need 1 <= a <= b, got a={a}, b={b}")
    return tuple(ruler(p) for p in range(a, b + 1))


def is_tree_slice(seq: Sequence[int]) -> bool:
    """Whether ``seq`` is a contiguous slice of some S_k."""
    if not seq:
        return True
    m = max(seq)
    if list(seq).count(m) != 1:
        return False
    # a slice with maximum m sits inside one copy of S_m, centered on its m
    center = 1 << (m - 1)
    start = center - list(seq).index(m)
    if start < 1 or start + len(seq) - 1 > (1 << m) - 1:
        return False
    return tuple(seq) == seq_c0(start, start + len(seq) - 1)


# --- positions ------------------------------------------------------------------------

def as_position(x) -> Fraction:
    try:
        return Fraction(x)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad position {x!r}") from exc


def position_for_gap(positions: Sequence[Fraction], gap: int) -> Fraction:
    """A position with exactly ``gap`` of the (sorted) existing points to its left."""
    n = len(positions)
    if not 0 <= gap <= n:
        raise InputError(f"gap {gap} out of range for {n} points")
    if n == 0:
        return Fraction(0)
    if gap == 0:
        return positions[0] - 1
    if gap == n:
        return positions[-1] + 1
    return (positions[gap - 1] + positions[gap]) / 2


def unimax_seen(colors: Sequence, i: int) -> tuple[tuple, tuple]:
    """Colors seen from a new point inserted before index ``i``.

    A point is seen when everything strictly between is smaller; the left
    part is listed left to right, like the right part.
    """
    left, top = [], None
    for c in reversed(colors[:i]):
        if top is None or c > top:
            left.append(c)
            top = c
    right, top = [], None
    for c in colors[i:]:
        if top is None or c > top:
            right.append(c)
            top = c
    return tuple(reversed(left)), tuple(right)


def smallest_missing(used, start: int = 1) -> int:
    c = start
    while c in used:
        c += 1
    return c


# --- line algorithms ----------------------------------------------------------------

@dataclass
class StepRecord:
    position: Fraction
    color: int
    level: int = 1
    seen: tuple | None = None
    ok: bool = True

    def to_json(self) -> dict:
        out = {"position": str(self.position), "color": self.color, "level": self.level,
               "verify_ok": self.ok}
        if self.seen is not None:
            out["seen"] = [list(self.seen[0]), list(self.seen[1])]
        return out


class LineState:
    """Points on a line in sorted order, each with a color (and a level)."""

    regime = "um"

    def __init__(self, check: bool = True):
        self.pos: list[Fraction] = []
        self.col: list[int] = []
        self.check = check
        self.steps: list[StepRecord] = []

    def __len__(self):
        return len(self.pos)

    def _slot(self, position) -> tuple[Fraction, int]:
        p = as_position(position)
        i = bisect_left(self.pos, p)
        if i < len(self.pos) and self.pos[i] == p:
            raise InputError(f"duplicate position {p}")
        return p, i

    def colors(self) -> tuple:
        return tuple(self.col)

    def positions(self) -> tuple:
        return tuple(self.pos)

    def insert_at_gap(self, gap: int) -> int:
        return self.insert(position_for_gap(self.pos, gap))

    def insert(self, position) -> int:
        raise NotImplementedError

    def _ok(self) -> bool:
        return line_um_ok(self.col)


class UniMaxLine(LineState):
    """Each new point takes the smallest color it does not see."""

    def insert(self, position) -> int:
        p, i = self._slot(position)
        left, right = unimax_seen(self.col, i)
        if set(left) & set(right):
            raise ContractError(f"color seen from both sides: {left} . {right}")
        c = smallest_missing(set(left) | set(right))
        self.pos.insert(i, p)
        self.col.insert(i, c)
        ok = self._ok() if self.check else True
        if not ok:
            raise ContractError("unique-maximum property broken")
        self.steps.append(StepRecord(p, c, seen=(left, right), ok=ok))
        return c


def _cf_through(seq: Sequence[int], i: int) -> bool:
    """Every contiguous run of ``seq`` containing index ``i`` has a unique color."""
    n = len(seq)
    for a in range(i, -1, -1):
        counts = Counter(seq[a:i])
        singles = sum(1 for v in counts.values() if v == 1)
        for b in range(i, n):
            c = seq[b]
            counts[c] += 1
            if counts[c] == 1:
                singles += 1
            elif counts[c] == 2:
                singles -= 1
            if singles == 0:
                return False
    return True


class FirstFitLine(LineState):
    """Each new point takes the smallest color that keeps every interval CF."""

    regime = "cf"

    def insert(self, position) -> int:
        p, i = self._slot(position)
        c = 1
        while not _cf_through(self.col[:i] + [c] + self.col[i:], i):
            c += 1
        self.pos.insert(i, p)
        self.col.insert(i, c)
        self.steps.append(StepRecord(p, c))
        return c

    def _ok(self) -> bool:
        return all(_cf_through(self.col, i) for i in range(len(self.col)))


class LeveledLine(LineState):
    """Two-stage rule: pick a level, then UniMax among visible points of that level.

    ``col`` holds flattened pair ids; ``pairs`` the (level, color) pairs and
    ``registry`` maps each pair to its id in first-use order.
    """

    regime = "cf"

    def __init__(self, check: bool = True):
        super().__init__(check)
        self.lvl: list[int] = []
        self.inner: list[int] = []
        self.registry: dict[tuple[int, int], int] = {}

    @property
    def pairs(self) -> tuple:
        return tuple(zip(self.lvl, self.inner))

    def _first_at_least(self, i: int, level: int, step: int):
        j = i - 1 if step < 0 else i
        while 0 <= j < len(self.lvl):
            if self.lvl[j] >= level:
                return self.lvl[j]
            j += step
        return None

    def choose_level(self, i: int) -> int:
        level = 1
        while True:
            if self._first_at_least(i, level, -1) != level or self._first_at_least(i, level, 1) != level:
                return level
            level += 1

    def _visible_run(self, i: int, level: int, step: int) -> list[int]:
        out = []
        j = i - 1 if step < 0 else i
        while 0 <= j < len(self.lvl) and self.lvl[j] <= level:
            if self.lvl[j] == level:
                out.append(self.inner[j])
            j += step
        return out

    def insert(self, position) -> int:
        p, i = self._slot(position)
        level = self.choose_level(i)
        left = self._visible_run(i, level, -1)[::-1]
        right = self._visible_run(i, level, 1)
        seen_l, seen_r = unimax_seen(left + right, len(left))
        c = smallest_missing(set(seen_l) | set(seen_r))
        pair = (level, c)
        flat = self.registry.setdefault(pair, len(self.registry) + 1)
        self.pos.insert(i, p)
        self.lvl.insert(i, level)
        self.inner.insert(i, c)
        self.col.insert(i, flat)
        ok = self._ok() if self.check else True
        if not ok:
            raise ContractError("conflict-free property broken")
        self.steps.append(StepRecord(p, flat, level=level, seen=(seen_l, seen_r), ok=ok))
        return flat

    def _ok(self) -> bool:
        # the highest level of any interval carries a unique top color
        return line_um_ok(self.pairs)

    def runs(self) -> list[tuple[int, tuple]]:
        """Maximal runs per level: same-level points with only lower levels between."""
        out = []
        for level in sorted(set(self.lvl)):
            cur: list[int] = []
            for lv, c in zip(self.lvl, self.inner):
                if lv > level and cur:
                    out.append((level, tuple(cur)))
                    cur = []
                elif lv == level:
                    cur.append(c)
            if cur:
                out.append((level, tuple(cur)))
        return out


def leveled_adversary_gaps(k: int) -> list[int]:
    """Gap indices forcing k + (k-1) + ... + 1 colors on the leveled algorithm.

    Batch ``i`` has 2^(k-i) points; its j-th point goes between the
    (2j-1)-th and (2j)-th tuples of length 2^(i-1) - 1 left by earlier
    batches (j-1 points of the batch already sit to its left).
    """
    gaps = []
    for i in range(1, k + 1):
        s = (1 << (i - 1)) - 1
        for j in range(1, (1 << (k - i)) + 1):
            gaps.append((2 * j - 1) * s + (j - 1))
    return gaps


class UnitLine(LineState):
    """CF for unit-length intervals with color 0 allowed.

    Cell ``floor(x)`` holds the point; even cells use light colors 1, 3, 5, ...
    and odd cells dark colors 2, 4, 6, .... A point landing between two
    points of its cell gets 0, otherwise UniMax on the cell's points.
    """

    regime = "cf"

    def __init__(self, check: bool = True):
        super().__init__(check)
        self.cells: dict[int, UniMaxLine] = {}

    def insert(self, position) -> int:
        p, i = self._slot(position)
        cell = math.floor(p)
        line = self.cells.setdefault(cell, UniMaxLine(check=False))
        if line.pos and line.pos[0] < p < line.pos[-1]:
            c = 0
        else:
            inner = line.insert(p)
            c = 2 * inner - 1 if cell % 2 == 0 else 2 * inner
        self.pos.insert(i, p)
        self.col.insert(i, c)
        ok = self._ok() if self.check else True
        if not ok:
            raise ContractError("unit-interval CF property broken")
        self.steps.append(StepRecord(p, c, ok=ok))
        return c

    def _ok(self) -> bool:
        return verify_cf(unit_interval_hypergraph(self.pos), self.col, allow_zero=True)


# --- randomized level framework --------------------------------------------------------

class LineSpace:
    """Revealed points on a line w.r.t. intervals; proper means neighbors differ."""

    def __init__(self):
        self.pos: list[Fraction] = []

    def reveal(self, item) -> Fraction:
        p = as_position(item)
        i = bisect_left(self.pos, p)
        if i < len(self.pos) and self.pos[i] == p:
            raise InputError(f"duplicate position {p}")
        self.pos.insert(i, p)
        return p

    @staticmethod
    def fits(level: "Level", v, a: int) -> bool:
        members = level.order
        i = bisect_left(members, v)
        if i > 0 and level.aux[members[i - 1]] == a:
            return False
        if i < len(members) and level.aux[members[i]] == a:
            return False
        return True

    @staticmethod
    def add(level: "Level", v, a: int) -> None:
        level.order.insert(bisect_left(level.order, v), v)
        level.aux[v] = a

    def final_ok(self, final: dict) -> bool:
        return line_um_ok([final[p] for p in self.pos])


class HypergraphSpace:
    """A fixed hypergraph whose vertices are revealed one by one.

    The revealed hypergraph at any time is the induced one; a level's
    auxiliary coloring must be proper on the hypergraph induced by its members.
    """

    def __init__(self, h: Hypergraph):
        self.h = h
        self.inc = h.incidence()
        self.revealed: list[int] = []

    def reveal(self, item) -> int:
        v = int(item)
        if not 0 <= v < self.h.n or v in self.revealed:
            raise InputError(f"cannot reveal vertex {item!r}")
        self.revealed.append(v)
        return v

    def fits(self, level: "Level", v, a: int) -> bool:
        for e in self.inc[v]:
            others = [level.aux[u] for u in e if u != v and u in level.aux]
            if others and all(x == a for x in others):
                return False
        return True

    @staticmethod
    def add(level: "Level", v, a: int) -> None:
        level.order.append(v)
        level.aux[v] = a

    def final_ok(self, final: dict) -> bool:
        sub = self.h.induced(self.revealed)
        keep = sorted(self.revealed)
        return verify_um(sub, [final[v] for v in keep])


@dataclass
class Level:
    order: list = field(default_factory=list)
    aux: dict = field(default_factory=dict)


class OnlineFramework:
    """Level table with ``h`` auxiliary colors and representing colors f(i).

    A new vertex climbs the levels; at each it takes the first auxiliary
    color keeping that level proper, and stops at the first level where the
    color equals f(i). f is sampled lazily from ``seed`` unless ``f`` forces it.
    """

    def __init__(self, space, h: int, seed=None, f: Callable[[int], int] | int | None = None,
                 check: bool = True):
        if h < 1:
            raise InputError("h must be >= 1")
        self.space = space
        self.h = h
        self.rng = random.Random(seed)
        self.forced = f
        self.f: dict[int, int] = {}
        self.levels: list[Level] = []
        self.final: dict = {}
        self.check = check
        self.cap = 64 * h
        self.steps: list[StepRecord] = []

    def rep(self, i: int) -> int:
        if i not in self.f:
            if self.forced is None:
                self.f[i] = self.rng.randint(1, self.h)
            elif callable(self.forced):
                self.f[i] = self.forced(i)
            else:
                self.f[i] = self.forced
        return self.f[i]

    def insert(self, item) -> int:
        v = self.space.reveal(item)
        i = 1
        while True:
            if i > self.cap:
                raise ContractError(f"no final color within {self.cap} levels")
            if len(self.levels) < i:
                self.levels.append(Level())
            level = self.levels[i - 1]
            a = next((a for a in range(1, self.h + 1) if self.space.fits(level, v, a)), None)
            if a is not None:
                self.space.add(level, v, a)
                if a == self.rep(i):
                    break
            i += 1
        self.final[v] = i
        ok = self.space.final_ok(self.final) if self.check else True
        if not ok:
            raise ContractError("framework coloring lost the unique maximum")
        self.steps.append(StepRecord(v if isinstance(v, Fraction) else Fraction(v), i, ok=ok))
        return i

    def colors(self) -> tuple:
        """Final colors in line order (LineSpace) or vertex order (HypergraphSpace)."""
        if isinstance(self.space, LineSpace):
            return tuple(self.final[p] for p in self.space.pos)
        return tuple(self.final[v] for v in sorted(self.final))


# --- degeneracy -------------------------------------------------------------------------

def _prefix_degree(h: Hypergraph, prefix: frozenset, v: int) -> int:
    """Delaunay degree of ``v`` in the hypergraph induced by ``prefix``."""
    nbrs = set()
    for e in h.edges:
        if v in e:
            cut = e & prefix
            if len(cut) == 2:
                nbrs |= cut - {v}
    return len(nbrs)


def degeneracy_check(h, permutation: Sequence[int], k: int, cache: dict | None = None):
    """Partial sums of prefix-Delaunay degrees along ``permutation`` and
    whether each stays within ``k * t``.

    ``h`` is a hypergraph (revealed hypergraphs are its induced ones) or a
    builder mapping the revealed items, in order, to their hypergraph.
    """
    if cache is None:
        cache = {}
    sums, total, ok = [], 0, True
    for t in range(1, len(permutation) + 1):
        prefix = permutation[:t]
        if isinstance(h, Hypergraph):
            key = (frozenset(prefix), prefix[-1])
            if key not in cache:
                cache[key] = _prefix_degree(h, key[0], prefix[-1])
            d = cache[key]
        else:
            sub = h(prefix)
            d = _prefix_degree(sub, frozenset(range(sub.n)), t - 1)
        total += d
        sums.append(total)
        ok = ok and total <= k * t
    return ok, sums
