"""Equidistant sets, distance-equalizer certificates and the hitting-set view.

A set S is a distance-equalizer set exactly when it meets every hit-set
``H(u, v) = {u, v} | W(u, v)``, where ``W(u, v)`` holds the vertices
equidistant from u and v. Pairs with empty ``W`` are *forced*: one endpoint
must be in S. A matching of forced pairs therefore lower-bounds eqdim.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import SameVertex
from .graph import DistanceMatrix, Graph
from .matching import maximum_matching


def bits(mask: int) -> list[int]:
    """Set bit positions of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(ids: Iterable[int]) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def _rows_to_masks(rows: np.ndarray) -> list[int]:
    if rows.shape[0] == 0:
        return []
    packed = np.packbits(rows, axis=1, bitorder="little")
    return [int.from_bytes(r.tobytes(), "little") for r in packed]


@dataclass(frozen=True)
class WSet:
    pair: tuple[int, int]
    members: tuple[int, ...]

    def __len__(self):
        return len(self.members)

    def __bool__(self):
        return bool(self.members)


def w_set(d: DistanceMatrix, u: int, v: int) -> WSet:
    if u == v:
        raise SameVertex(u)
    members = np.flatnonzero(d.row(u) == d.row(v))
    return WSet((u, v), tuple(int(x) for x in members))


@dataclass(frozen=True)
class FailingPair:
    """The first pair outside S with no equidistant vertex in S."""

    pair: tuple[int, int]

    def __bool__(self):
        return False


@dataclass(frozen=True)
class EqualizerCertificate:
    """A distance-equalizer set with one witness per pair outside it.

    ``witnesses`` maps ``(u, v)`` with ``u < v`` to the smallest-id
    ``x`` in ``S`` with ``d(u, x) == d(v, x)``.
    """

    S: tuple[int, ...]
    witnesses: dict[tuple[int, int], int]

    @property
    def value(self) -> int:
        return len(self.S)

    def __bool__(self):
        return True

    def validate(self, d: DistanceMatrix) -> bool:
        """Re-check every witness and that no pair outside S is missing."""
        members = set(self.S)
        if any(not 0 <= s < d.n for s in members):
            return False
        outside = [v for v in range(d.n) if v not in members]
        expected = {(u, v) for i, u in enumerate(outside) for v in outside[i + 1:]}
        if set(self.witnesses) != expected:
            return False
        return all(
            x in members and d[u, x] == d[v, x] for (u, v), x in self.witnesses.items()
        )

    def to_json(self, g: Graph) -> dict:
        names = g.vertices
        return {
            "set": [names[s] for s in self.S],
            "witnesses": [
                {"pair": [names[u], names[v]], "x": names[x]}
                for (u, v), x in sorted(self.witnesses.items())
            ],
            "value": self.value,
        }

    @classmethod
    def from_json(cls, g: Graph, data: dict) -> "EqualizerCertificate":
        S = tuple(sorted(g.ids_of(data["set"])))
        witnesses = {}
        for w in data["witnesses"]:
            u, v = sorted(g.ids_of(w["pair"]))
            witnesses[(u, v)] = g.id_of(w["x"])
        return cls(S, witnesses)


def is_distance_equalizer(d: DistanceMatrix, S: Iterable[int]) -> EqualizerCertificate | FailingPair:
    """Check S directly against distances.

    Returns a full certificate on success, else the lexicographically first
    uncovered pair. Both results are usable in boolean context.
    """
    members = sorted(set(S))
    inside = np.zeros(d.n, dtype=bool)
    inside[members] = True
    outside = np.flatnonzero(~inside)
    witnesses: dict[tuple[int, int], int] = {}
    if len(outside) < 2:
        return EqualizerCertificate(tuple(members), witnesses)
    if not members:
        return FailingPair((int(outside[0]), int(outside[1])))

    cols = d.d[:, members]
    for k, u in enumerate(outside[:-1]):
        rest = outside[k + 1:]
        eq = cols[rest] == cols[u]
        hit = eq.any(axis=1)
        if not hit.all():
            v = rest[int(np.argmin(hit))]
            return FailingPair((int(u), int(v)))
        first = eq.argmax(axis=1)
        for v, j in zip(rest.tolist(), first.tolist()):
            witnesses[(int(u), v)] = members[j]
    return EqualizerCertificate(tuple(members), witnesses)


@dataclass(frozen=True)
class WitnessFamily:
    """Hit-sets for all unordered pairs, in lexicographic pair order."""

    n: int
    pairs: tuple[tuple[int, int], ...]
    hit_sets: tuple[int, ...]

    def hit_set(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        # index of (u, v) in the lexicographic enumeration of pairs
        k = u * (2 * self.n - u - 1) // 2 + (v - u - 1)
        return self.hit_sets[k]

    def is_hit_by(self, S: int | Iterable[int]) -> bool:
        mask = S if isinstance(S, int) else to_mask(S)
        return all(h & mask for h in self.hit_sets)


def witness_family(d: DistanceMatrix) -> WitnessFamily:
    n = d.n
    pairs: list[tuple[int, int]] = []
    hit_sets: list[int] = []
    for u in range(n - 1):
        eq = d.d[u + 1:] == d.d[u]
        masks = _rows_to_masks(eq)
        base = 1 << u
        for off, m in enumerate(masks):
            v = u + 1 + off
            pairs.append((u, v))
            hit_sets.append(m | base | (1 << v))
    return WitnessFamily(n, tuple(pairs), tuple(hit_sets))


def forced_pairs(fam: WitnessFamily) -> list[tuple[int, int]]:
    """Pairs whose W-set is empty, i.e. ``|H(u, v)| == 2``, sorted."""
    return [p for p, h in zip(fam.pairs, fam.hit_sets) if h.bit_count() == 2]


def forced_pair_matching(pairs: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    if not pairs:
        return []
    n = 1 + max(max(p) for p in pairs)
    return maximum_matching(n, pairs)


def forced_pair_lower_bound(pairs: Sequence[tuple[int, int]]) -> int:
    """Size of a maximum matching among forced pairs.

    Matched pairs are vertex-disjoint and each needs an endpoint in S, so
    this is a valid lower bound on eqdim.
    """
    return len(forced_pair_matching(pairs))
