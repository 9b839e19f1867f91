"""Known bounds on the equidistant dimension.

Each bound is tagged with a short ``source`` naming the result it comes from:

* ``max-degree characterization``: eqdim = 1 iff Δ = n-1, eqdim = 2 iff
  Δ = n-2; otherwise eqdim >= 3.
* ``exceptional small graphs``: eqdim = n-1 only for P2, eqdim = n-2 exactly
  for P3..P6 and C3..C5; every other graph on n >= 3 vertices has eqdim <= n-3.
* ``order at least 7``: eqdim <= n-3 when n >= 7.
* ``n - max degree``, ``n - clique number``, ``diameter formula``
  (floor((n(D-1)+1)/D)) and ``n - independence number`` (diameter 2 only).
* ``forced-pair matching``: maximum matching over pairs with empty W-set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .graph import DistanceMatrix, Graph, GraphStats, build_graph
from .hitting import forced_pair_lower_bound, forced_pairs, witness_family


@dataclass(frozen=True)
class Bound:
    kind: str  # "lower", "upper" or "exact"
    value: int
    source: str

    def as_dict(self) -> dict:
        return {"kind": self.kind, "value": self.value, "source": self.source}


@dataclass(frozen=True)
class BoundsReport:
    entries: tuple[Bound, ...]

    @property
    def exact(self) -> int | None:
        for b in self.entries:
            if b.kind == "exact":
                return b.value
        return None

    @property
    def lower(self) -> int:
        return max(b.value for b in self.entries if b.kind in ("lower", "exact"))

    @property
    def upper(self) -> int:
        return min(b.value for b in self.entries if b.kind in ("upper", "exact"))

    def lowers(self) -> list[Bound]:
        return [b for b in self.entries if b.kind == "lower"]

    def uppers(self) -> list[Bound]:
        return [b for b in self.entries if b.kind == "upper"]

    def as_list(self) -> list[dict]:
        return [b.as_dict() for b in self.entries]


def _path(k: int) -> Graph:
    names = [f"v{i}" for i in range(k)]
    return build_graph(f"P{k}", names, list(zip(names, names[1:])))


def _cycle(k: int) -> Graph:
    names = [f"v{i}" for i in range(k)]
    return build_graph(f"C{k}", names, list(zip(names, names[1:] + names[:1])))


@lru_cache(maxsize=None)
def exceptional_graphs() -> tuple[Graph, ...]:
    """The seven graphs with eqdim = n - 2."""
    return tuple([_path(k) for k in range(3, 7)] + [_cycle(k) for k in range(3, 6)])


def path_p2() -> Graph:
    return _path(2)


def _edge_set(g: Graph) -> set[frozenset[int]]:
    return {frozenset(e) for e in g.edges()}


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test by permutation search (intended for tiny graphs)."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(map(len, g.adjacency)) != sorted(map(len, h.adjacency)):
        return False
    target = _edge_set(h)
    hdeg = [len(nb) for nb in h.adjacency]
    gdeg = [len(nb) for nb in g.adjacency]
    for perm in permutations(range(h.n)):
        if any(gdeg[i] != hdeg[perm[i]] for i in range(g.n)):
            continue
        if all(frozenset((perm[u], perm[v])) in target for u, v in g.edges()):
            return True
    return False


def match_exceptional(g: Graph) -> Graph | None:
    if g.n > 6:
        return None
    for h in (path_p2(),) + exceptional_graphs():
        if is_isomorphic(g, h):
            return h
    return None


def literature_bounds(g: Graph, stats: GraphStats) -> BoundsReport:
    n = g.n
    if n < 2:
        return BoundsReport((Bound("exact", 0, "trivial"),))
    delta = stats.max_degree
    out: list[Bound] = [Bound("lower", 1, "trivial")]

    if delta == n - 1:
        out.append(Bound("exact", 1, "max-degree characterization"))
    elif delta == n - 2:
        out.append(Bound("exact", 2, "max-degree characterization"))
    else:
        out.append(Bound("lower", 3, "max-degree characterization"))

    special = match_exceptional(g)
    if special is not None:
        value = n - 1 if special.n == 2 else n - 2
        out.append(Bound("exact", value, f"exceptional small graphs ({special.name})"))
    elif n >= 4:
        out.append(Bound("upper", n - 3, "exceptional small graphs"))
    if n >= 7:
        out.append(Bound("upper", n - 3, "order at least 7"))

    out.append(Bound("upper", n - delta, "n - max degree"))
    omega = stats.clique_number
    if omega is not None and omega < n:
        out.append(Bound("upper", n - omega, "n - clique number"))
    diam = stats.diameter
    out.append(Bound("upper", (n * (diam - 1) + 1) // diam, "diameter formula"))
    if diam == 2 and stats.independence_number is not None:
        out.append(Bound("upper", n - stats.independence_number, "n - independence number"))

    return BoundsReport(tuple(out))


def full_bounds(g: Graph, d: DistanceMatrix, stats: GraphStats) -> BoundsReport:
    """Literature bounds plus the forced-pair matching lower bound."""
    report = literature_bounds(g, stats)
    if g.n < 2:
        return report
    lb = forced_pair_lower_bound(forced_pairs(witness_family(d)))
    return BoundsReport(report.entries + (Bound("lower", lb, "forced-pair matching"),))
