"""Generators for the convex polytope graphs R''_n, S_n, S''_n and T_n.

Vertices are laid out block by block (``a0..a{n-1}``, then ``b``, ...), so
vertex ``x_i`` in block ``k`` has id ``k*n + i``. Every edge family is a
rule ``x_{i+p} -- y_{i+q}`` for i in 0..n-1 with indices reduced mod n.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import NTooSmall
from .graph import Graph, build_graph

MIN_N = 3
ESTABLISHED_MIN_N = 5

# tag -> (blocks, edge families (block, offset, block, offset))
FAMILIES: dict[str, tuple[str, list[tuple[str, int, str, int]]]] = {
    "R2": (
        "abcdef",
        [
            ("a", 0, "a", 1),
            ("f", 0, "f", 1),
            ("a", 0, "b", 0),
            ("c", 0, "d", 0),
            ("e", 0, "f", 0),
            ("b", 0, "c", 0),
            ("b", 1, "c", 0),
            ("d", 0, "e", 0),
            ("d", 1, "e", 0),
        ],
    ),
    "S": (
        "abcd",
        [
            ("a", 0, "a", 1),
            ("b", 0, "b", 1),
            ("c", 0, "c", 1),
            ("d", 0, "d", 1),
            ("a", 0, "b", 0),
            ("b", 0, "c", 0),
            ("c", 0, "d", 0),
            ("a", 1, "b", 0),
        ],
    ),
    "S2": (
        "abcd",
        [
            ("a", 0, "a", 1),
            ("b", 0, "b", 1),
            ("c", 0, "c", 1),
            ("d", 0, "d", 1),
            ("a", 0, "b", 0),
            ("b", 0, "c", 0),
            ("c", 0, "d", 0),
            ("b", 1, "c", 0),
        ],
    ),
    "T": (
        "abcd",
        [
            ("a", 0, "a", 1),
            ("b", 0, "b", 1),
            ("c", 0, "c", 1),
            ("d", 0, "d", 1),
            ("a", 0, "b", 0),
            ("b", 0, "c", 0),
            ("c", 0, "d", 0),
            ("a", 1, "b", 0),
            ("c", 0, "d", 1),
        ],
    ),
}

DISPLAY = {"R2": "R''", "S": "S", "S2": "S''", "T": "T"}
ALIASES = {"r2": "R2", "r''": "R2", "s": "S", "s2": "S2", "s''": "S2", "t": "T"}


def normalize_tag(tag: str) -> str:
    key = tag.strip()
    if key in FAMILIES:
        return key
    try:
        return ALIASES[key.lower()]
    except KeyError:
        raise ValueError(f"unknown polytope class {tag!r}; expected one of r2, s, s2, t") from None


class SmallNWarning(UserWarning):
    """n is accepted by the generator but below the range the results cover."""


@dataclass(frozen=True)
class PolytopeClass:
    tag: str
    n: int

    def __post_init__(self):
        object.__setattr__(self, "tag", normalize_tag(self.tag))
        if self.n < MIN_N:
            raise NTooSmall(self.n, MIN_N)

    @property
    def blocks(self) -> str:
        return FAMILIES[self.tag][0]

    @property
    def below_established_range(self) -> bool:
        return self.n < ESTABLISHED_MIN_N

    @property
    def vertex_count(self) -> int:
        return len(self.blocks) * self.n

    @property
    def edge_count(self) -> int:
        return len(FAMILIES[self.tag][1]) * self.n

    @property
    def label(self) -> str:
        return f"{DISPLAY[self.tag]}_{self.n}"

    def vid(self, block: str, i: int) -> int:
        return self.blocks.index(block) * self.n + i % self.n

    def name(self, block: str, i: int) -> str:
        return f"{block}{i % self.n}"

    def block_ids(self, blocks: str) -> list[int]:
        return sorted(self.vid(b, i) for b in blocks for i in range(self.n))

    def rotate(self, v: int, k: int = 1) -> int:
        """Image of vertex id ``v`` under ``i -> i + k`` within its block."""
        blk, i = divmod(v, self.n)
        return blk * self.n + (i + k) % self.n


def generate(tag: str, n: int) -> Graph:
    cls = PolytopeClass(tag, n)
    if cls.below_established_range:
        warnings.warn(f"{cls.label}: n < {ESTABLISHED_MIN_N}", SmallNWarning, stacklevel=2)
    blocks, families = FAMILIES[cls.tag]
    names = [cls.name(b, i) for b in blocks for i in range(n)]
    edges = [
        (cls.name(x, i + p), cls.name(y, i + q))
        for x, p, y, q in families
        for i in range(n)
    ]
    return build_graph(cls.label, names, edges)


def gen_r2(n: int) -> Graph:
    return generate("R2", n)


def gen_s(n: int) -> Graph:
    return generate("S", n)


def gen_s2(n: int) -> Graph:
    return generate("S2", n)


def gen_t(n: int) -> Graph:
    return generate("T", n)
