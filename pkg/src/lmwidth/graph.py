"""Simple undirected graphs, rooted trees, and the metric primitives on them.

Vertices are the integers ``0..n-1``.  Vertex sets are passed around as
``frozenset[int]`` (any iterable of ints is accepted on input).  All
iteration that can leak into results happens in ascending id order, so
every function here is deterministic.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .errors import DomainError

VertexSet = frozenset  # frozenset[int]; alias kept for signatures

Edge = tuple  # (u, v) with u < v


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``.

    ``edges`` is normalized to a frozenset of ``(u, v)`` pairs with ``u < v``.
    Self-loops, out-of-range ids and negative ``n`` raise :class:`DomainError`.
    """

    n: int
    edges: frozenset = frozenset()
    labels: Optional[Mapping[int, str]] = None
    adjacency: tuple = field(init=False, compare=False, repr=False)
    masks: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"vertex count must be >= 0, got {self.n}")
        norm = set()
        for e in self.edges:
            u, v = e
            u, v = int(u), int(v)
            if u == v:
                raise DomainError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise DomainError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.add((u, v) if u < v else (v, u))
        adj = [set() for _ in range(self.n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        masks = []
        for nb in adj:
            m = 0
            for w in nb:
                m |= 1 << w
            masks.append(m)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adjacency", tuple(frozenset(a) for a in adj))
        object.__setattr__(self, "masks", tuple(masks))
        if self.labels is not None:
            labels = {int(k): str(v) for k, v in self.labels.items()}
            for k in labels:
                self._check(k)
            object.__setattr__(self, "labels", labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> list[int]:
        """Neighbors of ``v`` in ascending order."""
        self._check(v)
        return sorted(self.adjacency[v])

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adjacency[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise DomainError(f"vertex id {v!r} not in 0..{self.n - 1}")

    def vertex_set(self, s: Iterable[int]) -> frozenset:
        """Validate ``s`` against this graph and return it as a frozenset."""
        s = frozenset(s)
        for v in s:
            self._check(v)
        return s

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class BipartiteGraph:
    """A graph together with a recorded bipartition ``(left, V - left)``."""

    graph: Graph
    left: frozenset

    @property
    def right(self) -> frozenset:
        return frozenset(range(self.graph.n)) - self.left

    def check(self) -> None:
        for u, v in self.graph.edges:
            if (u in self.left) == (v in self.left):
                raise DomainError(f"edge ({u}, {v}) lies inside one side of the bipartition")


def mask_of(s: Iterable[int]) -> int:
    m = 0
    for v in s:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# --------------------------------------------------------------------------
# constructors


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree on ``n`` vertices via a random Pruefer sequence."""
    if n <= 0:
        return Graph(0)
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    edges.append((u, v))
    return Graph(n, edges)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p)."""
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


# --------------------------------------------------------------------------
# neighborhoods and distances


def neighborhood(g: Graph, s: Iterable[int], closed: bool = False) -> frozenset:
    """N[S] when ``closed`` else N(S) = N[S] - S."""
    s = g.vertex_set(s)
    out = set(s)
    for v in s:
        out |= g.adjacency[v]
    if not closed:
        out -= s
    return frozenset(out)


def bfs_distances(g: Graph, sources: Iterable[int], limit: Optional[int] = None,
                  allowed: Optional[frozenset] = None) -> dict[int, int]:
    """Multi-source BFS; returns ``{vertex: distance}`` for reached vertices.

    ``limit`` stops the search at that depth; ``allowed`` restricts the walk to
    an induced subgraph (sources outside it are dropped).
    """
    dist = {}
    queue = deque()
    for s in sorted(set(sources)):
        g._check(s)
        if allowed is None or s in allowed:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        d = dist[u]
        if limit is not None and d >= limit:
            continue
        for w in sorted(g.adjacency[u]):
            if w not in dist and (allowed is None or w in allowed):
                dist[w] = d + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> float:
    """Shortest-path length, ``math.inf`` when disconnected."""
    g._check(u)
    g._check(v)
    return bfs_distances(g, [u]).get(v, math.inf)


def subgraph_distance(g: Graph, a: Iterable[int], b: Iterable[int]) -> float:
    """Minimum distance between a vertex of ``a`` and a vertex of ``b``."""
    a = g.vertex_set(a)
    b = g.vertex_set(b)
    if not a or not b:
        raise DomainError("subgraph_distance needs two nonempty vertex sets")
    if a & b:
        return 0
    dist = bfs_distances(g, a)
    return min((dist[v] for v in b if v in dist), default=math.inf)


def diameter(g: Graph) -> int:
    if g.n == 0:
        raise DomainError("diameter of the empty graph is undefined")
    best = 0
    for v in range(g.n):
        dist = bfs_distances(g, [v])
        if len(dist) != g.n:
            raise DomainError("diameter requires a connected graph")
        best = max(best, max(dist.values()))
    return best


def graph_power(g: Graph, m: int) -> Graph:
    """G^m: same vertices, ``u ~ v`` iff ``1 <= dist(u, v) <= m``."""
    if m < 1:
        raise DomainError(f"power exponent must be >= 1, got {m}")
    if m == 1:
        return Graph(g.n, g.edges, g.labels)
    edges = []
    for u in range(g.n):
        for v, d in bfs_distances(g, [u], limit=m).items():
            if u < v:
                edges.append((u, v))
    return Graph(g.n, edges, g.labels)


def bipartite_cut_graph(g: Graph, s: Iterable[int]) -> BipartiteGraph:
    """G[S, V - S]: all vertices, only the edges crossing the cut."""
    s = g.vertex_set(s)
    if not s or len(s) == g.n:
        raise DomainError("cut side must be a nonempty proper subset")
    edges = [(u, v) for u, v in g.edges if (u in s) != (v in s)]
    return BipartiteGraph(Graph(g.n, edges, g.labels), s)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple]:
    """Induced subgraph on ``s`` with ids compacted in ascending order.

    Returns ``(h, back)`` where ``back[i]`` is the host id of vertex ``i`` of h.
    """
    back = tuple(sorted(g.vertex_set(s)))
    index = {v: i for i, v in enumerate(back)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    labels = None
    if g.labels is not None:
        labels = {index[v]: lab for v, lab in g.labels.items() if v in index}
    return Graph(len(back), edges, labels), back


def connected_components(g: Graph, within: Optional[Iterable[int]] = None) -> list[frozenset]:
    """Components ordered by smallest member; ``within`` restricts to G[within]."""
    allowed = frozenset(range(g.n)) if within is None else g.vertex_set(within)
    seen = set()
    comps = []
    for v in sorted(allowed):
        if v in seen:
            continue
        comp = frozenset(bfs_distances(g, [v], allowed=allowed))
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: Graph, within: Optional[Iterable[int]] = None) -> bool:
    return len(connected_components(g, within)) <= 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def require_tree(g: Graph) -> None:
    if not is_tree(g):
        raise DomainError(f"expected a tree, got {g!r}")


# --------------------------------------------------------------------------
# rooted trees


@dataclass(frozen=True)
class RootedTree:
    """A tree with a designated root; ``parent[root] == root``.

    ``origin`` optionally maps vertex ids back to a host graph (set by
    :func:`rooted_subtree`).
    """

    graph: Graph
    root: int
    parent: tuple
    origin: Optional[tuple] = None

    def __post_init__(self):
        require_tree(self.graph)
        self.graph._check(self.root)
        if len(self.parent) != self.graph.n or self.parent[self.root] != self.root:
            raise DomainError("parent map must cover every vertex and fix the root")
        for v, p in enumerate(self.parent):
            if v != self.root and not self.graph.has_edge(v, p):
                raise DomainError(f"parent[{v}] = {p} is not adjacent to {v}")
        # in a tree a parent cycle can only have length 2
        for v, p in enumerate(self.parent):
            if v != self.root and self.parent[p] == v:
                raise DomainError(f"parent cycle between {v} and {p}")

    @classmethod
    def from_graph(cls, g: Graph, root: int = 0) -> "RootedTree":
        require_tree(g)
        g._check(root)
        parent = [root] * g.n
        seen = {root}
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    parent[w] = u
                    stack.append(w)
        return cls(g, root, tuple(parent))

    def children(self, v: int) -> list[int]:
        return [w for w in self.graph.neighbors(v) if w != self.parent[v]]

    def preorder(self, v: Optional[int] = None) -> list[int]:
        """Vertices of T[v] in preorder, children visited by ascending id."""
        start = self.root if v is None else v
        out = []
        stack = [start]
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(reversed(self.children(u)))
        return out

    def depth(self, v: int) -> int:
        d = 0
        while v != self.root:
            v = self.parent[v]
            d += 1
        return d


def rooted_subtree(t: RootedTree, v: int) -> RootedTree:
    """T[v]: the descendants of ``v`` with ``v`` as root, ids compacted."""
    t.graph._check(v)
    verts = t.preorder(v)
    h, back = induced_subgraph(t.graph, verts)
    index = {w: i for i, w in enumerate(back)}
    origin = back if t.origin is None else tuple(t.origin[w] for w in back)
    sub = RootedTree.from_graph(h, index[v])
    return RootedTree(sub.graph, sub.root, sub.parent, origin)


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertex ``v`` as ``perm[v]``."""
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
