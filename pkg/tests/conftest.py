from __future__ import annotations

from functools import lru_cache

import networkx as nx
import pytest
from hypothesis import strategies as st

from eqdim.graph import Graph, build_graph


def path(k: int) -> Graph:
    names = [f"v{i}" for i in range(k)]
    return build_graph(f"P{k}", names, list(zip(names, names[1:])))


def cycle(k: int) -> Graph:
    names = [f"v{i}" for i in range(k)]
    return build_graph(f"C{k}", names, list(zip(names, names[1:] + names[:1])))


def star(k: int) -> Graph:
    names = ["c"] + [f"l{i}" for i in range(k)]
    return build_graph(f"K1,{k}", names, [("c", x) for x in names[1:]])


def from_nx(G, name="") -> Graph:
    return build_graph(name or str(G.name), [f"v{i}" for i in G.nodes], [(f"v{u}", f"v{v}") for u, v in G.edges])


def to_nx(g: Graph):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


@lru_cache(maxsize=None)
def atlas_corpus(max_n: int = 7) -> tuple[Graph, ...]:
    """All connected graphs on 1..max_n vertices up to isomorphism (max_n <= 7)."""
    out = []
    for G in nx.graph_atlas_g():
        if 0 < G.number_of_nodes() <= max_n and nx.is_connected(G):
            out.append(from_nx(G, f"atlas{len(out)}"))
    return tuple(out)


def named_corpus() -> list[Graph]:
    return [path(k) for k in range(2, 7)] + [cycle(k) for k in range(3, 7)] + [star(k) for k in range(3, 7)]


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    """Random connected graphs: a random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        edges.add((draw(st.integers(0, v - 1)), v))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    edges.update(extra)
    names = [f"v{i}" for i in range(n)]
    return build_graph("rand", names, [(names[u], names[v]) for u, v in edges])


@pytest.fixture(scope="session")
def corpus7():
    return atlas_corpus(7)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
