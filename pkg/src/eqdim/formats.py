"""Graph JSON and DIMACS-style text serialization.

DIMACS layout::

    c graph <name>
    c name <i> <symbolic-name>      (one per vertex, 1-indexed)
    p edge <n> <m>
    e <i> <j>                       (1-indexed, i < j)

The ``c name`` comments carry vertex order and names, so a round trip is
lossless. Files without them get names ``"1".."n"``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import GraphError
from .graph import Graph, build_graph


def graph_to_dict(g: Graph) -> dict:
    return {
        "name": g.name,
        "vertices": list(g.vertices),
        "edges": [[g.vertices[u], g.vertices[v]] for u, v in g.edges()],
    }


def graph_from_dict(data: dict) -> Graph:
    try:
        return build_graph(data.get("name", ""), data["vertices"], data["edges"])
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from None


def dumps_json(g: Graph) -> str:
    return json.dumps(graph_to_dict(g), indent=2) + "\n"


def loads_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise GraphError("graph JSON must be an object")
    return graph_from_dict(data)


def dumps_dimacs(g: Graph) -> str:
    lines = [f"c graph {g.name}"]
    lines += [f"c name {i + 1} {v}" for i, v in enumerate(g.vertices)]
    lines.append(f"p edge {g.n} {g.edge_count}")
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def loads_dimacs(text: str, name: str = "") -> Graph:
    n = m = None
    names: dict[int, str] = {}
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        tok = line.split()
        try:
            if tok[0] == "c":
                if len(tok) >= 3 and tok[1] == "graph":
                    name = line.split(None, 2)[2]
                elif len(tok) == 4 and tok[1] == "name":
                    names[int(tok[2])] = tok[3]
            elif tok[0] == "p":
                if len(tok) != 4 or tok[1] != "edge":
                    raise GraphError(f"line {lineno}: expected 'p edge <n> <m>'")
                n, m = int(tok[2]), int(tok[3])
            elif tok[0] == "e":
                edges.append((int(tok[1]), int(tok[2])))
            else:
                raise GraphError(f"line {lineno}: unknown line type {tok[0]!r}")
        except (ValueError, IndexError):
            raise GraphError(f"line {lineno}: cannot parse {raw!r}") from None
    if n is None:
        raise GraphError("missing 'p edge' header")
    if m is not None and m != len(edges):
        raise GraphError(f"header declares {m} edges, found {len(edges)}")
    labels = [names.get(i, str(i)) for i in range(1, n + 1)]
    for i, j in edges:
        for k in (i, j):
            if not 1 <= k <= n:
                raise GraphError(f"edge endpoint {k} outside 1..{n}")
    return build_graph(name, labels, [(labels[i - 1], labels[j - 1]) for i, j in edges])


def detect_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix == ".json":
        return "json"
    return "dimacs"


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    fmt = fmt or detect_format(path)
    if fmt == "json":
        return loads_json(text)
    return loads_dimacs(text, name=path.stem)


def write_graph(g: Graph, path: str | Path, fmt: str = "json") -> None:
    text = dumps_json(g) if fmt == "json" else dumps_dimacs(g)
    Path(path).write_text(text, encoding="utf-8")
