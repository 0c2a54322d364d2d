"""Text formats: canonical edge lists, DOT export, layout files.

Edge list::

    # comment lines start with '#'
    n m
    u v        (m lines, 0 <= u < v < n)
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .errors import DomainError
from .graph import Graph
from .layout import LinearLayout

PathLike = Union[str, Path]


def dumps_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def loads_edgelist(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append((lineno, [int(tok) for tok in line.split()]))
        except ValueError:
            raise DomainError(f"line {lineno}: expected integers, got {line!r}") from None
    if not rows:
        raise DomainError("edge list is empty; expected an 'n m' header")
    lineno, header = rows[0]
    if len(header) != 2 or header[0] < 0 or header[1] < 0:
        raise DomainError(f"line {lineno}: header must be 'n m' with n, m >= 0")
    n, m = header
    if len(rows) - 1 != m:
        raise DomainError(f"header announces {m} edges, found {len(rows) - 1}")
    edges = set()
    for lineno, row in rows[1:]:
        if len(row) != 2:
            raise DomainError(f"line {lineno}: an edge line holds exactly two ids")
        u, v = row
        if not 0 <= u < v < n:
            raise DomainError(f"line {lineno}: edge must satisfy 0 <= u < v < n, got {u} {v}")
        if (u, v) in edges:
            raise DomainError(f"line {lineno}: duplicate edge {u} {v}")
        edges.add((u, v))
    return Graph(n, edges)


def dumps_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if g.labels and v in g.labels:
            lines.append(f'  {v} [label="{g.labels[v]}"];')
        else:
            lines.append(f"  {v};")
    lines += [f"  {u} -- {v};" for u, v in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph(path: PathLike) -> Graph:
    return loads_edgelist(Path(path).read_text())


def write_graph(g: Graph, path: PathLike) -> None:
    Path(path).write_text(dumps_edgelist(g))


def read_layout(path: PathLike, g: Graph) -> LinearLayout:
    layout = LinearLayout.parse(Path(path).read_text())
    layout.validate(g)
    return layout


def write_json(obj, path: PathLike) -> None:
    Path(path).write_text(json.dumps(obj, indent=2) + "\n")
