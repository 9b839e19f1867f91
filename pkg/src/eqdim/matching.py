"""Maximum cardinality matching in general graphs (Edmonds' blossom algorithm).

Forced-pair graphs are not bipartite in general, so Hopcroft-Karp does not
apply. This is the classic O(V^3) BFS formulation with blossom contraction
via base relabelling.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence


def _lca(a: int, b: int, base: list[int], match: list[int], parent: list[int]) -> int:
    seen = set()
    while True:
        a = base[a]
        seen.add(a)
        if match[a] == -1:
            break
        a = parent[match[a]]
    while True:
        b = base[b]
        if b in seen:
            return b
        b = parent[match[b]]


def _mark_path(v, b, child, base, match, parent, in_blossom):
    while base[v] != b:
        in_blossom[base[v]] = in_blossom[base[match[v]]] = True
        parent[v] = child
        child = match[v]
        v = parent[match[v]]


def _find_augmenting(root: int, adj: Sequence[Sequence[int]], match: list[int]) -> tuple[int, list[int]]:
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = _lca(v, to, base, match, parent)
                in_blossom = [False] * n
                _mark_path(v, cur, to, base, match, parent, in_blossom)
                _mark_path(to, cur, v, base, match, parent, in_blossom)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                used[match[to]] = True
                queue.append(match[to])
    return -1, parent


def maximum_matching(n: int, edges: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    """Return a maximum matching as sorted ``(u, v)`` pairs with ``u < v``.

    Deterministic and independent of edge order: a greedy pass over the
    sorted edges seeds the matching, then free vertices are augmented in
    ascending id.
    """
    adj: list[list[int]] = [[] for _ in range(n)]
    match = [-1] * n
    for u, v in sorted({(min(e), max(e)) for e in edges if e[0] != e[1]}):
        adj[u].append(v)
        adj[v].append(u)
        if match[u] == -1 and match[v] == -1:
            match[u], match[v] = v, u
    for nb in adj:
        nb.sort()

    for root in range(n):
        if match[root] != -1 or not adj[root]:
            continue
        v, parent = _find_augmenting(root, adj, match)
        while v != -1:
            pv = parent[v]
            ppv = match[pv]
            match[v], match[pv] = pv, v
            v = ppv

    return sorted((u, w) for u, w in enumerate(match) if w > u)
