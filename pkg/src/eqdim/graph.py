"""Immutable simple graphs, BFS distance matrices and classical invariants."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    Disconnected,
    DuplicateVertex,
    SelfLoop,
    SizeCapExceeded,
    UnknownVertex,
)

DEFAULT_CLIQUE_CAP = 256


@dataclass(frozen=True)
class Graph:
    """Connected simple undirected graph with symbolic vertex names.

    Vertex ``i`` is ``vertices[i]``; ``adjacency[i]`` is the sorted tuple of
    neighbor ids. Build instances with :func:`build_graph`.
    """

    name: str
    vertices: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.vertices)}

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as integer bit-sets."""
        out = []
        for nb in self.adjacency:
            m = 0
            for j in nb:
                m |= 1 << j
            out.append(m)
        return tuple(out)

    def id_of(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise UnknownVertex(name) from None

    def ids_of(self, names: Iterable[str]) -> list[int]:
        return [self.id_of(x) for x in names]

    def names_of(self, ids: Iterable[int]) -> list[str]:
        return [self.vertices[i] for i in ids]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v]


def build_graph(name: str, vertex_names: Sequence[str], edges: Iterable[Sequence[str]]) -> Graph:
    """Validate and build a :class:`Graph`.

    Duplicate edges (in either orientation) are merged. Raises
    ``DuplicateVertex``, ``UnknownVertex``, ``SelfLoop`` or ``Disconnected``.
    """
    index: dict[str, int] = {}
    for i, v in enumerate(vertex_names):
        v = str(v)
        if v in index:
            raise DuplicateVertex(v)
        index[v] = i
    if not index:
        raise Disconnected([])

    nbrs: list[set[int]] = [set() for _ in index]
    for e in edges:
        a, b = (str(x) for x in e)
        if a not in index:
            raise UnknownVertex(a)
        if b not in index:
            raise UnknownVertex(b)
        if a == b:
            raise SelfLoop(a)
        i, j = index[a], index[b]
        nbrs[i].add(j)
        nbrs[j].add(i)

    seen = [False] * len(nbrs)
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in nbrs[u]:
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    if not all(seen):
        names = list(index)
        raise Disconnected([names[i] for i, s in enumerate(seen) if not s])

    return Graph(
        name=name,
        vertices=tuple(index),
        adjacency=tuple(tuple(sorted(s)) for s in nbrs),
    )


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances; ``d[u, v]`` is read-only."""

    d: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return self.d.shape[0]

    @property
    def diameter(self) -> int:
        return int(self.d.max()) if self.n else 0

    def __getitem__(self, uv) -> int:
        return int(self.d[uv])

    def row(self, u: int) -> np.ndarray:
        return self.d[u]


def bfs_distances(adjacency: Sequence[Sequence[int]], source: int) -> list[int]:
    dist = [-1] * len(adjacency)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adjacency[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex. Connectivity is guaranteed by :func:`build_graph`."""
    n = g.n
    dtype = np.uint8 if n < 256 else np.uint16
    d = np.empty((n, n), dtype=dtype)
    for s in range(n):
        d[s] = bfs_distances(g.adjacency, s)
    d.setflags(write=False)
    return DistanceMatrix(d)


# -- clique / independence -------------------------------------------------


def _greedy_color(P: int, masks: Sequence[int]) -> tuple[list[int], list[int]]:
    order: list[int] = []
    colors: list[int] = []
    k = 0
    uncolored = P
    while uncolored:
        k += 1
        candidates = uncolored
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            uncolored &= ~low
            candidates &= ~low & ~masks[v]
            order.append(v)
            colors.append(k)
    return order, colors


def max_clique(masks: Sequence[int]) -> list[int]:
    """Exact maximum clique over bit-set adjacency, with coloring bounds.

    Among cliques of maximum size, the first one discovered is returned;
    the search order is fixed, so the output is deterministic.
    """
    n = len(masks)
    if n == 0:
        return []
    best: list[int] = [0]
    best_set: list[list[int]] = [[0]]

    def expand(clique: list[int], P: int) -> None:
        order, colors = _greedy_color(P, masks)
        for idx in range(len(order) - 1, -1, -1):
            if len(clique) + colors[idx] <= best[0]:
                return
            v = order[idx]
            clique.append(v)
            sub = P & masks[v]
            if sub:
                expand(clique, sub)
            elif len(clique) > best[0]:
                best[0] = len(clique)
                best_set[0] = sorted(clique)
            clique.pop()
            P &= ~(1 << v)

    expand([], (1 << n) - 1)
    return best_set[0]


def clique_number(g: Graph, cap: int = DEFAULT_CLIQUE_CAP) -> int:
    if g.n > cap:
        raise SizeCapExceeded("clique number", g.n, cap)
    return len(max_clique(g.masks))


def independence_number(g: Graph, cap: int = DEFAULT_CLIQUE_CAP) -> int:
    if g.n > cap:
        raise SizeCapExceeded("independence number", g.n, cap)
    full = (1 << g.n) - 1
    complement = [full & ~m & ~(1 << v) for v, m in enumerate(g.masks)]
    return len(max_clique(complement))


@dataclass(frozen=True)
class GraphStats:
    max_degree: int
    min_degree: int
    diameter: int
    clique_number: int | None
    independence_number: int | None

    def as_dict(self) -> dict:
        return {
            "max_degree": self.max_degree,
            "min_degree": self.min_degree,
            "diameter": self.diameter,
            "clique_number": self.clique_number,
            "independence_number": self.independence_number,
        }


def graph_stats(
    g: Graph,
    d: DistanceMatrix,
    cap: int = DEFAULT_CLIQUE_CAP,
    with_alpha: bool | None = None,
) -> GraphStats:
    """Degree extremes, diameter, and exact ω / α.

    ω and α are ``None`` when the graph exceeds ``cap``. α is only searched
    when ``with_alpha`` is true, or by default when the diameter is at most 2,
    which is the only case the upper bound ``n - α`` applies to.
    """
    degrees = [len(nb) for nb in g.adjacency]
    diameter = d.diameter
    if with_alpha is None:
        with_alpha = diameter <= 2
    omega = alpha = None
    if g.n <= cap:
        omega = clique_number(g, cap)
        if with_alpha:
            alpha = independence_number(g, cap)
    return GraphStats(
        max_degree=max(degrees),
        min_degree=min(degrees),
        diameter=diameter,
        clique_number=omega,
        independence_number=alpha,
    )
