"""Witness tables for the four polytope families, encoded as data.

A row covers pairs ``(u_0, v_i)`` where ``u`` and ``v`` are blocks. Its
condition is a parity on i plus an optional affine window
``lo <= i <= hi`` (bounds written as ``(coef_n, const)``, i.e.
``coef_n * n + const``). The witness index is ``(ci*i + cn*n + c0) / 2``
reduced mod n. Within a ``(u, v)`` group the first matching row wins, so
rows labelled "other ..." act as the complement of the special cases
listed before them.
"""

from __future__ import annotations

from dataclasses import dataclass

Affine = tuple[int, int]


@dataclass(frozen=True)
class Cond:
    parity: str | None = None  # "odd", "even" or None
    lo: Affine | None = None
    hi: Affine | None = None

    def holds(self, i: int, n: int) -> bool:
        if self.parity == "odd" and i % 2 != 1:
            return False
        if self.parity == "even" and i % 2 != 0:
            return False
        if self.lo is not None and i < self.lo[0] * n + self.lo[1]:
            return False
        if self.hi is not None and i > self.hi[0] * n + self.hi[1]:
            return False
        return True


@dataclass(frozen=True)
class Row:
    u: str
    v: str
    key: str
    cond: Cond
    x_block: str
    x_index: tuple[int, int, int]  # (ci, cn, c0): index = (ci*i + cn*n + c0) / 2
    shown: str  # witness as printed, e.g. "b_{(i+1)/2}"

    @property
    def group(self) -> str:
        return f"{self.u}0-{self.v}i"

    @property
    def claim_suffix(self) -> str:
        return f"{self.group}:{self.key}"

    def witness_index(self, i: int, n: int) -> int:
        ci, cn, c0 = self.x_index
        num = ci * i + cn * n + c0
        if num % 2:
            raise ValueError(f"row {self.claim_suffix}: non-integer witness index at i={i}, n={n}")
        return (num // 2) % n

    def describe(self) -> str:
        return f"({self.u}0, {self.v}_i) [{self.key}] -> {self.shown}"


ODD = Cond("odd")
EVEN = Cond("even")


def _at(cn: int, c0: int) -> Cond:
    return Cond(lo=(cn, c0), hi=(cn, c0))


@dataclass(frozen=True)
class Table:
    tag: str
    parity: str | None  # n parity the table is stated for
    S_blocks: str
    rows: tuple[Row, ...]

    def applies(self, n: int) -> bool:
        return self.parity is None or (n % 2 == 1) == (self.parity == "odd")

    def groups(self) -> dict[tuple[str, str], list[Row]]:
        out: dict[tuple[str, str], list[Row]] = {}
        for r in self.rows:
            out.setdefault((r.u, r.v), []).append(r)
        return out


R2_TABLE = Table("R2", "even", "abc", (
    Row("d", "d", "i-odd", ODD, "b", (1, 0, 1), "b_{(i+1)/2}"),
    Row("d", "d", "i-even", EVEN, "c", (1, 0, 0), "c_{i/2}"),
    Row("d", "e", "i=0", _at(0, 0), "a", (0, 0, 4), "a_2"),
    Row("d", "e", "i=n-1", _at(1, -1), "c", (0, 0, 6), "c_3"),
    Row("d", "e", "other-odd", ODD, "a", (1, 1, 1), "a_{(n+i+1)/2}"),
    Row("d", "e", "other-even", EVEN, "a", (1, 0, 2), "a_{i/2+1}"),
    Row("d", "f", "i=0-or-1", Cond(lo=(0, 0), hi=(0, 1)), "b", (0, 0, 4), "b_2"),
    Row("d", "f", "i=n-1", _at(1, -1), "b", (0, 0, 6), "b_3"),
    Row("d", "f", "i=n-2", _at(1, -2), "c", (0, 0, 6), "c_3"),
    Row("d", "f", "other-odd", ODD, "a", (1, 0, 3), "a_{(i+3)/2}"),
    Row("d", "f", "other-even", EVEN, "a", (1, 1, 0), "a_{(n+i)/2}"),
    Row("e", "e", "i-odd", ODD, "c", (1, 0, 1), "c_{(i+1)/2}"),
    Row("e", "e", "i-even", EVEN, "b", (1, 0, 2), "b_{i/2+1}"),
    Row("e", "f", "i=0", _at(0, 0), "c", (0, 0, 4), "c_2"),
    Row("e", "f", "i=1", _at(0, 1), "a", (0, 0, 6), "a_3"),
    Row("e", "f", "i=n-4", _at(1, -4), "b", (0, 2, -2), "b_{n-1}"),
    Row("e", "f", "n-3<=i<=n-1", Cond(lo=(1, -3), hi=(1, -1)), "a", (0, 2, -2), "a_{n-1}"),
    Row("e", "f", "other-odd", ODD, "a", (1, 0, 3), "a_{(i+3)/2}"),
    Row("e", "f", "other-even", EVEN, "c", (1, 1, 2), "c_{(n+i)/2+1}"),
    Row("f", "f", "i-odd", ODD, "c", (1, 0, 1), "c_{(i+1)/2}"),
    Row("f", "f", "i-even", EVEN, "b", (1, 0, 2), "b_{i/2+1}"),
))

S_TABLE = Table("S", "odd", "ac", (
    Row("b", "b", "i-odd", ODD, "a", (1, 0, 1), "a_{(i+1)/2}"),
    Row("b", "b", "i-even", EVEN, "c", (1, 0, 0), "c_{i/2}"),
    Row("b", "d", "i-odd", ODD, "c", (1, 1, 0), "c_{(n+i)/2}"),
    Row("b", "d", "i-even", EVEN, "c", (1, 0, 0), "c_{i/2}"),
    Row("d", "d", "i-odd", ODD, "c", (1, 1, 0), "c_{(n+i)/2}"),
    Row("d", "d", "i-even", EVEN, "c", (1, 0, 0), "c_{i/2}"),
))

S2_TABLE = Table("S2", "even", "ac", (
    Row("b", "b", "i-odd", ODD, "c", (1, 0, -1), "c_{(i-1)/2}"),
    Row("b", "b", "i-even", EVEN, "a", (1, 0, 0), "a_{i/2}"),
    Row("b", "d", "i=n-1", _at(1, -1), "c", (0, 2, -2), "c_{n-1}"),
    Row("b", "d", "other-odd", ODD, "a", (1, 1, -1), "a_{(n+i-1)/2}"),
    Row("b", "d", "i-even", EVEN, "c", (1, 0, 0), "c_{i/2}"),
    Row("d", "d", "i-odd", ODD, "a", (1, 0, 1), "a_{(i+1)/2}"),
    Row("d", "d", "i-even", EVEN, "c", (1, 0, 0), "c_{i/2}"),
))

T_TABLE = Table("T", None, "ab", (
    Row("c", "c", "i-odd", ODD, "a", (1, 0, 1), "a_{(i+1)/2}"),
    Row("c", "c", "i-even", EVEN, "b", (1, 0, 0), "b_{i/2}"),
    Row("c", "d", "i-odd", ODD, "b", (1, 0, 1), "b_{(i+1)/2}"),
    Row("c", "d", "i-even,i>=2", Cond("even", lo=(0, 2)), "a", (1, 0, 2), "a_{i/2+1}"),
    Row("c", "d", "i=0", _at(0, 0), "b", (0, 0, 2), "b_1"),
    Row("d", "d", "i-odd", ODD, "b", (1, 0, 1), "b_{(i+1)/2}"),
    Row("d", "d", "i-even", EVEN, "a", (1, 0, 2), "a_{i/2+1}"),
))

TABLES: dict[str, Table] = {t.tag: t for t in (R2_TABLE, S_TABLE, S2_TABLE, T_TABLE)}
