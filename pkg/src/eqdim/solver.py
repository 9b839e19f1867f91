"""Exact equidistant dimension by branch-and-bound over the hit-set family.

The search state is (chosen vertices, excluded vertices). A node keeps the
hit-sets not yet met by the chosen vertices, with excluded vertices removed.
Bounds come from packings of pairwise disjoint hit-sets: a maximum matching
over two-element sets, extended greedily by larger disjoint sets.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .errors import BudgetExceeded, SizeCapExceeded
from .graph import DistanceMatrix, Graph, all_pairs_distances
from .hitting import (
    EqualizerCertificate,
    WitnessFamily,
    bits,
    is_distance_equalizer,
    to_mask,
    witness_family,
)
from .matching import maximum_matching

BRUTE_FORCE_CAP = 16
ENV_TIME_LIMIT = "EQDIM_TIME_LIMIT"
ENV_NODE_LIMIT = "EQDIM_NODE_LIMIT"


def default_budget() -> tuple[float | None, int | None]:
    """Budget from ``EQDIM_TIME_LIMIT`` (seconds) and ``EQDIM_NODE_LIMIT``."""
    t = os.environ.get(ENV_TIME_LIMIT)
    k = os.environ.get(ENV_NODE_LIMIT)
    return (float(t) if t else None, int(k) if k else None)


@dataclass
class SolveResult:
    lower: int
    upper: int
    S: tuple[int, ...]
    certificate: EqualizerCertificate | None
    nodes: int = 0
    parallel: bool = False
    # False when parallel search may have returned a different optimum
    # than the sequential deterministic order would.
    canonical: bool = True
    root_lower: int = 0
    elapsed: float = field(default=0.0, compare=False)

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int | None:
        return self.upper if self.exact else None

    def to_json(self, g: Graph) -> dict:
        out = {
            "graph": g.name,
            "status": "optimal" if self.exact else "budget_exceeded",
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "set": g.names_of(self.S),
            "nodes": self.nodes,
            "parallel": self.parallel,
            "canonical": self.canonical,
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json(g)
        return out


class _OutOfBudget(Exception):
    pass


def _packing_bound(sets: list[int], use_matching: bool) -> int:
    """Number of pairwise disjoint sets found; each needs its own vertex."""
    ordered = sorted(sets, key=int.bit_count)
    used = 0
    k = 0
    if use_matching:
        pairs = []
        for s in ordered:
            if s.bit_count() > 2:
                break
            low = s & -s
            pairs.append(((low.bit_length() - 1), ((s ^ low).bit_length() - 1)))
        if pairs:
            n = max(max(p) for p in pairs) + 1
            matched = maximum_matching(n, pairs)
            k = len(matched)
            for u, v in matched:
                used |= (1 << u) | (1 << v)
    for s in ordered:
        if not s & used:
            used |= s
            k += 1
    return k


def greedy_cover(sets: list[int], n: int) -> list[int]:
    """Greedy hitting set, then drop redundant members (highest id first)."""
    if not sets:
        return []
    matrix = np.zeros((len(sets), n), dtype=bool)
    for r, s in enumerate(sets):
        matrix[r, bits(s)] = True
    alive = np.ones(len(sets), dtype=bool)
    chosen: list[int] = []
    while alive.any():
        counts = matrix[alive].sum(axis=0)
        v = int(np.argmax(counts))
        chosen.append(v)
        alive &= ~matrix[:, v]
    for v in sorted(chosen, reverse=True):
        rest = to_mask(x for x in chosen if x != v)
        if all(s & rest for s in sets):
            chosen.remove(v)
    return sorted(chosen)


class _Search:
    def __init__(self, best: int, best_mask: int, deadline: float | None, node_limit: int | None):
        self.best = best
        self.best_mask = best_mask
        self.deadline = deadline
        self.node_limit = node_limit
        self.nodes = 0

    def run(self, chosen: int, count: int, sets: list[int]) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _OutOfBudget
        if self.deadline is not None and (self.nodes & 63) == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget

        # unit propagation on single-element sets
        while True:
            forced = 0
            for s in sets:
                if s == 0:
                    return
                if s & (s - 1) == 0:
                    forced |= s
            if not forced:
                break
            chosen |= forced
            count += forced.bit_count()
            if count >= self.best:
                return
            sets = [s for s in sets if not s & forced]

        if not sets:
            if count < self.best:
                self.best = count
                self.best_mask = chosen
            return
        if count + 1 >= self.best:
            return

        sets = list(dict.fromkeys(sets))
        if count + _packing_bound(sets, False) >= self.best:
            return
        if count + _packing_bound(sets, True) >= self.best:
            return

        branch = min(sets, key=int.bit_count)
        excluded = 0
        for e in bits(branch):
            bit = 1 << e
            child = [s & ~excluded for s in sets if not s & bit]
            self.run(chosen | bit, count + 1, child)
            excluded |= bit
            if count + 1 >= self.best:
                break


def _children(sets: list[int]) -> list[tuple[int, list[int]]]:
    branch = min(sets, key=int.bit_count)
    out = []
    excluded = 0
    for e in bits(branch):
        bit = 1 << e
        out.append((bit, [s & ~excluded for s in sets if not s & bit]))
        excluded |= bit
    return out


def _solve_subtree(args):
    chosen, sets, best, best_mask, deadline, node_limit = args
    search = _Search(best, best_mask, deadline, node_limit)
    try:
        search.run(chosen, 1, sets)
        done = True
    except _OutOfBudget:
        done = False
    return search.best, search.best_mask, search.nodes, done


def eqdim_exact(
    g: Graph,
    d: DistanceMatrix | None = None,
    *,
    time_limit: float | None = None,
    node_limit: int | None = None,
    parallel: bool = False,
    workers: int | None = None,
    family: WitnessFamily | None = None,
) -> SolveResult:
    """Minimum distance-equalizer set of ``g``.

    Returns a :class:`SolveResult` with ``lower == upper``. Raises
    :class:`BudgetExceeded` carrying the partial result if the time or node
    budget runs out first.
    """
    start = time.monotonic()
    d = d if d is not None else all_pairs_distances(g)
    fam = family if family is not None else witness_family(d)
    n = g.n
    sets = list(dict.fromkeys(fam.hit_sets))

    incumbent = greedy_cover(sets, n)
    best, best_mask = len(incumbent), to_mask(incumbent)
    root_lb = _packing_bound(sets, True) if sets else 0
    deadline = start + time_limit if time_limit is not None else None
    nodes = 0
    complete = True
    canonical = True

    if root_lb < best:
        if not parallel:
            search = _Search(best, best_mask, deadline, node_limit)
            try:
                search.run(0, 0, sets)
            except _OutOfBudget:
                complete = False
            best, best_mask, nodes = search.best, search.best_mask, search.nodes
        else:
            canonical = False
            jobs = [
                (bit, child, best, best_mask, deadline, node_limit)
                for bit, child in _children(sets)
            ]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_solve_subtree, jobs))
            nodes = 1
            for b, m, k, done in results:
                nodes += k
                complete &= done
                if b < best:
                    best, best_mask = b, m

    S = tuple(bits(best_mask))
    cert = is_distance_equalizer(d, S)
    if not cert:
        raise AssertionError(f"solver produced a non-equalizer set; failing pair {cert.pair}")
    result = SolveResult(
        lower=best if complete else min(root_lb, best),
        upper=best,
        S=S,
        certificate=cert,
        nodes=nodes,
        parallel=parallel,
        canonical=canonical,
        root_lower=root_lb,
        elapsed=time.monotonic() - start,
    )
    if not complete:
        raise BudgetExceeded(result)
    return result


def brute_force_eqdim(
    g: Graph,
    d: DistanceMatrix | None = None,
    cap: int = BRUTE_FORCE_CAP,
    upper_bound: int | None = None,
) -> tuple[int, tuple[int, ...]]:
    """Smallest equalizer set by plain enumeration.

    Subsets are tried by increasing size, lexicographically within a size,
    each checked directly against distances. Graphs above ``cap`` vertices
    are refused unless ``upper_bound`` limits the enumeration to at most
    ``2**cap`` subsets.
    """
    n = g.n
    limit = n if upper_bound is None else min(n, upper_bound)
    if n > cap:
        work = sum(comb(n, k) for k in range(limit + 1))
        if upper_bound is None or work > 2**cap:
            raise SizeCapExceeded("brute-force eqdim", n, cap)
    d = d if d is not None else all_pairs_distances(g)
    for k in range(limit + 1):
        for S in combinations(range(n), k):
            if is_distance_equalizer(d, S):
                return k, S
    raise ValueError(f"no equalizer set of size <= {limit}; upper_bound is wrong")
