import random
from itertools import combinations

from hypothesis import strategies as st

from cfcolor.hypergraph import Graph, Hypergraph


@st.composite
def hypergraphs(draw, max_n=7, max_m=10):
    n = draw(st.integers(1, max_n))
    edges = draw(st.lists(st.frozensets(st.integers(0, n - 1), min_size=1), max_size=max_m))
    return Hypergraph(n, tuple(edges))


@st.composite
def colorings(draw, h, max_color=4):
    return tuple(draw(st.lists(st.integers(1, max_color), min_size=h.n, max_size=h.n)))


def random_hypergraph(rng: random.Random, n: int, m: int, max_size: int | None = None) -> Hypergraph:
    max_size = max_size or n
    edges = []
    for _ in range(m):
        size = rng.randint(1, max_size)
        edges.append(rng.sample(range(n), size))
    return Hypergraph(n, tuple(edges))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph(n, frozenset(frozenset(e) for e in combinations(range(n), 2) if rng.random() < p))


# acceptance lines, printed once more at the end of the session
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
