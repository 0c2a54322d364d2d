"""Exact linear MIM-width of trees and width-certified layouts for them.

The width rule: a tree with no edge has width 0; otherwise its width is
``1 + max{k >= 1 : some node x has three k-neighbors}``, or 1 when no such
``k`` exists.  A neighbor ``v`` of ``x`` is a k-neighbor when ``v`` has a
neighbor ``u != x`` whose side of the edge ``vu`` has width at least ``k``.

Those sides are computed recursively.  Inside a subtree they are no longer
sides of the host tree (a side seen from deep inside a subtree has the
subtree's own boundary cut away), so the recursion runs over arbitrary
connected pieces.  Every piece is identified by the AHU code of the rooted
tree it forms, and widths are memoized per code, which collapses the
isomorphic copies that dominate recursive families.  Queries are thresholds
("is the width at least k?"), so the recursion below a query for k only asks
about k - 1, and a piece too small to reach width k (see ``MIN_SIZE``) is
rejected without recursing.

Layouts follow the path pattern: pick a path ``P`` whose removal with its
neighborhood leaves pieces of width ``<= k``, then emit each path vertex,
followed for each of its off-path neighbors by the recursively laid-out
pieces hanging off that neighbor and then the neighbor itself.  Every layout
is evaluated before it is returned.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import DomainError, InternalError, ResourceError
from .graph import Graph, bfs_distances, induced_subgraph, require_tree
from .layout import DEFAULT_ORACLE_CUTOFF, LinearLayout, WidthReport, lmw_oracle, mw_of_layout
from .matching import DEFAULT_MIM_BUDGET


def _min_sizes(limit: int = 64) -> list[int]:
    """Fewest vertices a tree of width k can have.

    Width k >= 2 needs a node, three neighbors and three disjoint sides of
    width k-1 behind them.
    """
    sizes = [1, 2]
    while len(sizes) < limit:
        sizes.append(4 + 3 * sizes[-1])
    return sizes


MIN_SIZE = _min_sizes()


class _PieceSolver:
    """Width of connected pieces of trees, memoized by rooted isomorphism class.

    ``at_least(piece, k)`` asks only whether some node has three neighbors
    whose sides reach width ``k - 1``, so the recursion below one query is at
    most ``k`` levels deep no matter how large the piece is.
    """

    def __init__(self):
        self._codes: dict = {}
        self._width: dict = {}   # code -> exact width
        self._atleast: dict = {}  # (code, k) -> bool

    def _code(self, child_codes: list) -> int:
        key = tuple(sorted(child_codes))
        code = self._codes.get(key)
        if code is None:
            code = self._codes[key] = len(self._codes)
        return code

    def directed(self, adj, piece: frozenset) -> tuple[dict, dict, int]:
        """Codes and sizes of every directed side ``(v, u)`` inside ``piece``.

        Returns ``(codes, sizes, root_code)``; ``codes[(v, u)]`` is the class of
        u's side of the edge vu rooted at u.
        """
        root = min(piece)
        parent = {root: root}
        order = [root]
        for x in order:
            for y in adj[x]:
                if y in piece and y not in parent:
                    parent[y] = x
                    order.append(y)
        children = {x: [] for x in order}
        for x in order[1:]:
            children[parent[x]].append(x)
        down, size = {}, {}
        for x in reversed(order):
            down[x] = self._code([down[c] for c in children[x]])
            size[x] = 1 + sum(size[c] for c in children[x])
        up = {}  # up[c]: the parent's side of edge (c, parent(c)), rooted at the parent
        for p in order:
            around = [down[c] for c in children[p]]
            if p != root:
                around.append(up[p])
            for i, c in enumerate(children[p]):
                up[c] = self._code(around[:i] + around[i + 1:])
        codes, sizes = {}, {}
        total = len(order)
        for c in order[1:]:
            p = parent[c]
            codes[(p, c)], sizes[(p, c)] = down[c], size[c]
            codes[(c, p)], sizes[(c, p)] = up[c], total - size[c]
        return codes, sizes, down[root]

    def _side_at_least(self, adj, piece, v, u, code, size, k) -> bool:
        if k <= 0:
            return True
        if size < MIN_SIZE[k]:
            return False
        if k == 1:
            return True
        w = self._width.get(code)
        if w is not None:
            return w >= k
        hit = self._atleast.get((code, k))
        if hit is None:
            hit = self.at_least(adj, _side(adj, piece, v, u), k)
            self._atleast[(code, k)] = hit
        return hit

    def at_least(self, adj, piece: frozenset, k: int, directed=None) -> bool:
        if k <= 0:
            return True
        if len(piece) < MIN_SIZE[k]:
            return False
        if k == 1:
            return True
        codes, sizes, _ = directed if directed is not None else self.directed(adj, piece)
        for x in sorted(piece):
            count = 0
            for v in adj[x]:
                if v not in piece:
                    continue
                for u in adj[v]:
                    if u != x and u in piece and self._side_at_least(
                            adj, piece, v, u, codes[(v, u)], sizes[(v, u)], k - 1):
                        count += 1
                        break
                if count == 3:
                    return True
        return False

    def width(self, adj, piece: frozenset, directed=None) -> int:
        if len(piece) == 1:
            return 0
        directed = directed if directed is not None else self.directed(adj, piece)
        w = self._width.get(directed[2])
        if w is None:
            w = 1
            while self.at_least(adj, piece, w + 1, directed):
                w += 1
            self._width[directed[2]] = w
        return w

    def analyse(self, adj, piece: frozenset) -> tuple[int, dict]:
        """``(width(piece), {(v, u): width of u's side of vu within piece})``."""
        if len(piece) == 1:
            return 0, {}
        directed = self.directed(adj, piece)
        codes, sizes, _ = directed
        values = {}
        for (v, u), code in codes.items():
            w = self._width.get(code)
            if w is None:
                if sizes[(v, u)] == 1:
                    w = 0
                else:
                    w = self.width(adj, _side(adj, piece, v, u))
                self._width[code] = w
            values[(v, u)] = w
        return self.width(adj, piece, directed), values


def _side(adj, piece: frozenset, v: int, u: int) -> frozenset:
    """Vertices of ``piece`` reachable from ``u`` without using edge ``vu``."""
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y in piece and y not in seen and not (x == u and y == v):
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


_SOLVER = _PieceSolver()


def _with_depth(fn, *args):
    limit = sys.getrecursionlimit()
    if limit < 20000:
        sys.setrecursionlimit(20000)
    try:
        return fn(*args)
    finally:
        sys.setrecursionlimit(limit)


@dataclass(frozen=True)
class DirectedSubtreeTable:
    """``memo[(v, u)]``: width of the component of ``T - vu`` containing ``u``."""

    host: Graph
    memo: dict

    @classmethod
    def build(cls, t: Graph) -> "DirectedSubtreeTable":
        require_tree(t)
        _, values = _with_depth(_SOLVER.analyse, t.adjacency, frozenset(range(t.n)))
        return cls(t, values)

    def __getitem__(self, edge: tuple[int, int]) -> int:
        return self.memo[edge]


def k_neighbors(t: Graph, x: int, k: int, table: Optional[DirectedSubtreeTable] = None) -> frozenset:
    """Neighbors ``v`` of ``x`` having some ``u != x`` whose side of ``vu`` has width >= k."""
    require_tree(t)
    t._check(x)
    if k < 1:
        raise DomainError("k-neighbors are only used for k >= 1")
    if table is None:
        table = DirectedSubtreeTable.build(t)
    return frozenset(v for v in t.adjacency[x]
                     if any(table[(v, u)] >= k for u in t.adjacency[v] if u != x))


def tree_lmw(t: Graph) -> int:
    """Exact linear MIM-width of a tree."""
    require_tree(t)
    return _with_depth(_SOLVER.width, t.adjacency, frozenset(range(t.n)))


def piece_lmw(t: Graph, piece) -> int:
    """Width of the subtree of ``t`` induced by the connected vertex set ``piece``."""
    return _with_depth(_SOLVER.width, t.adjacency, frozenset(piece))


def canonical_form(t: Graph) -> tuple:
    """Isomorphism invariant for trees: sorted AHU codes rooted at the center(s)."""
    require_tree(t)
    if t.n == 1:
        return (0,)
    far = bfs_distances(t, [0])
    a = max(far, key=lambda v: (far[v], -v))
    da = bfs_distances(t, [a])
    b = max(da, key=lambda v: (da[v], -v))
    db = bfs_distances(t, [b])
    diam = da[b]
    centers = [v for v in range(t.n) if da[v] + db[v] == diam and abs(da[v] - db[v]) <= 1]
    return tuple(sorted(_ahu(t, c) for c in centers))


def _ahu(t: Graph, root: int) -> str:
    parent = {root: None}
    order = [root]
    for x in order:
        for y in t.adjacency[x]:
            if y not in parent:
                parent[y] = x
                order.append(y)
    label = {}
    for x in reversed(order):
        label[x] = "(" + "".join(sorted(label[y] for y in t.adjacency[x] if parent.get(y) == x)) + ")"
    return label[root]


# --------------------------------------------------------------------------
# paths and layouts


def _hanging(adj, piece, path: list) -> list[tuple[int, int]]:
    """Directed edges (v, u) whose u-side is a component of piece - N[path]."""
    on_path = set(path)
    out = []
    for p in path:
        for v in sorted(adj[p]):
            if v in piece and v not in on_path:
                out.extend((v, u) for u in sorted(adj[v]) if u in piece and u != p)
    return out


def _tree_path(adj, piece, a: int, b: int) -> list:
    parent = {a: None}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            break
        for y in sorted(adj[x]):
            if y in piece and y not in parent:
                parent[y] = x
                queue.append(y)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    return path[::-1]


def _find_path(adj, piece: frozenset, values: dict, k: int) -> Optional[list]:
    verts = sorted(piece)
    for x in verts:
        if all(values[e] <= k for e in _hanging(adj, piece, [x])):
            return [x]
    dist = {a: bfs_distances_within(adj, piece, a) for a in verts}
    pairs = sorted((dist[a][b], a, b) for a, b in combinations(verts, 2))
    for _, a, b in pairs:
        path = _tree_path(adj, piece, a, b)
        if all(values[e] <= k for e in _hanging(adj, piece, path)):
            return path
    return None


def bfs_distances_within(adj, piece, source: int) -> dict:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y in piece and y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def find_good_path(t: Graph, k: int) -> list:
    """Shortest path P (smallest endpoints first) with every piece of T - N[P] of width <= k."""
    table = DirectedSubtreeTable.build(t)
    path = _find_path(t.adjacency, frozenset(range(t.n)), table.memo, k)
    if path is None:
        raise DomainError(f"no path leaves only pieces of width <= {k}")
    return path


def _stitch(adj, piece: frozenset, oracle_host: Optional[Graph], cutoff: int, budget: int) -> list:
    if len(piece) == 1:
        return list(piece)
    if oracle_host is not None and len(piece) <= cutoff:
        h, back = induced_subgraph(oracle_host, piece)
        _, lay = lmw_oracle(h, cutoff, budget)
        return [back[i] for i in lay.order]
    width, values = _SOLVER.analyse(adj, piece)
    path = _find_path(adj, piece, values, width - 1)
    if path is None:
        raise InternalError("no qualifying path for a piece of known width")
    on_path = set(path)
    order = []
    for p in path:
        order.append(p)
        for v in sorted(adj[p]):
            if v not in piece or v in on_path:
                continue
            for u in sorted(adj[v]):
                if u in piece and u != p:
                    order.extend(_stitch(adj, _side(adj, piece, v, u), oracle_host, cutoff, budget))
            order.append(v)
    return order


def construct_tree_layout(t: Graph, cutoff: int = DEFAULT_ORACLE_CUTOFF,
                          budget: int = DEFAULT_MIM_BUDGET) -> tuple[LinearLayout, WidthReport]:
    """A layout of width exactly ``tree_lmw(t)``, certified by evaluation."""
    target = tree_lmw(t)
    piece = frozenset(range(t.n))
    order = _with_depth(_stitch, t.adjacency, piece, None, cutoff, budget)
    layout = LinearLayout(tuple(order))
    report = mw_of_layout(t, layout, budget)
    if report.width == target:
        return layout, report
    # fallback: oracle layouts for every piece within the cutoff
    order = _with_depth(_stitch, t.adjacency, piece, t, cutoff, budget)
    layout = LinearLayout(tuple(order))
    report = mw_of_layout(t, layout, budget)
    if report.width == target:
        return layout, report
    raise ResourceError(f"could not certify a width-{target} layout (best found {report.width})")
