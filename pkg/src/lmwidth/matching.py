"""Maximum induced matchings.

An induced matching is a set of edges whose endpoints induce exactly those
edges: no shared endpoints and no graph edge joining two matching edges.
Computing the maximum one is NP-hard; the instances met here are cut graphs
of desk-scale layouts, which are small or very sparse.

The search (:class:`MimSearch`) branches on a vertex ``v`` of maximum degree:
either ``v`` stays unmatched, or ``v`` is matched to one of its neighbors
``w`` and the closed neighborhoods of both are discarded.  Results are
memoized on the bitmask of live vertices and the instance is split into
connected components before branching.  The same search runs on cut graphs
``G[S, V-S]`` without materializing them: the state then also carries the
left side, and a cache is shared by all cuts of one host graph.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .errors import DomainError, ResourceError
from .graph import BipartiteGraph, Graph, members

DEFAULT_MIM_BUDGET = 2_000_000

Matching = tuple  # sorted tuple of (u, v) edges, u < v


class MimSearch:
    """Memoized exact search for maximum induced matchings on one host graph.

    ``solve(live)`` works on ``G[live]``.  ``solve(live, left)`` works on the
    bipartite graph of the host's edges between ``live & left`` and
    ``live - left``.  ``budget`` caps the number of memo misses over the
    lifetime of the object.
    """

    def __init__(self, g: Graph, budget: int = DEFAULT_MIM_BUDGET):
        self.graph = g
        self.masks = g.masks
        self.budget = budget
        self.expanded = 0
        self._memo: dict = {}

    def _nbrs(self, v: int, live: int, left: Optional[int]) -> int:
        m = self.masks[v] & live
        if left is not None:
            m &= ~left if (left >> v) & 1 else left
        return m

    def _prune(self, live: int, left: Optional[int]) -> int:
        """Drop vertices without a neighbor in the instance."""
        masks = self.masks
        keep = 0
        if left is None:
            rest = live
            while rest:
                low = rest & -rest
                rest ^= low
                if masks[low.bit_length() - 1] & live:
                    keep |= low
            return keep
        right = live & ~left
        rest = live & left
        touched = 0
        while rest:
            low = rest & -rest
            rest ^= low
            m = masks[low.bit_length() - 1] & right
            if m:
                keep |= low
                touched |= m
        return keep | touched

    def _components(self, live: int, left: Optional[int]) -> list[int]:
        masks = self.masks
        comps = []
        rest = live
        while rest:
            comp = frontier = rest & -rest
            while frontier:
                nxt = 0
                while frontier:
                    low = frontier & -frontier
                    frontier ^= low
                    v = low.bit_length() - 1
                    m = masks[v] & live
                    if left is not None:
                        m &= ~left if (left >> v) & 1 else left
                    nxt |= m
                frontier = nxt & ~comp
                comp |= frontier
            comps.append(comp)
            rest &= ~comp
        return comps

    def _blocked(self, v: int, w: int, live: int, left: Optional[int]) -> int:
        """Vertices that can no longer be matched once (v, w) is taken."""
        return (1 << v) | (1 << w) | self._nbrs(v, live, left) | self._nbrs(w, live, left)

    def solve(self, live: int, left: Optional[int] = None) -> int:
        live = self._prune(live, left)
        if not live:
            return 0
        if left is not None:
            left &= live
        key = (live, left)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        self.expanded += 1
        if self.expanded > self.budget:
            raise ResourceError(f"maximum induced matching search exceeded budget of {self.budget} nodes")
        comps = self._components(live, left)
        if len(comps) > 1:
            value = sum(self.solve(c, left) for c in comps)
        else:
            best_v, best_deg = -1, -1
            rest = live
            while rest:
                low = rest & -rest
                rest ^= low
                v = low.bit_length() - 1
                d = self._nbrs(v, live, left).bit_count()
                if d > best_deg:
                    best_v, best_deg = v, d
            v = best_v
            nv = self._nbrs(v, live, left)
            size = live.bit_count()
            if size == 2:
                value = 1
            else:
                value = self.solve(live & ~(1 << v), left)
                cap = size // 2
                for w in members(nv):
                    if value >= cap:
                        break
                    value = max(value, 1 + self.solve(live & ~self._blocked(v, w, live, left), left))
        self._memo[key] = value
        return value

    def witness(self, live: int, left: Optional[int] = None) -> Matching:
        """Lexicographically smallest maximum induced matching.

        Scans edges in ascending order and keeps an edge whenever some
        maximum matching extends the current choice with it.  An edge skipped
        once can never reappear in a later completion, so the greedy result
        is the smallest sorted edge list.
        """
        target = self.solve(live, left)
        chosen = []
        avail = live
        for u, v in sorted(self.graph.edges):
            if not target:
                break
            if not (avail >> u) & 1 or not (avail >> v) & 1:
                continue
            if left is not None and ((left >> u) & 1) == ((left >> v) & 1):
                continue
            rest = avail & ~self._blocked(u, v, avail, left)
            if 1 + self.solve(rest, left) == target:
                chosen.append((u, v))
                avail = rest
                target -= 1
        return tuple(chosen)


def is_induced_matching(g: Graph, m: Iterable[tuple[int, int]]) -> bool:
    edges = []
    for u, v in m:
        if not g.has_edge(u, v):
            raise DomainError(f"({u}, {v}) is not an edge of the graph")
        edges.append((u, v))
    ends = [x for e in edges for x in e]
    if len(set(ends)) != len(ends):
        return False
    owner = {}
    for i, (u, v) in enumerate(edges):
        owner[u] = owner[v] = i
    for x in ends:
        for y in g.adjacency[x]:
            if y in owner and owner[y] != owner[x]:
                return False
    return True


def mim_exhaustive(g: Graph) -> tuple[int, Matching]:
    """Brute force over vertex subsets: U qualifies iff G[U] is a perfect matching.

    Independent of :class:`MimSearch`; used as its test oracle.
    """
    if g.n > 16:
        raise ResourceError(f"exhaustive MIM enumeration is limited to 16 vertices, got {g.n}")
    masks = g.masks
    best, best_edges = 0, ()
    for U in range(1 << g.n):
        verts = members(U)
        if len(verts) < 2 * best or len(verts) % 2:
            continue
        if all((masks[v] & U).bit_count() == 1 for v in verts):
            edges = tuple(sorted((v, (masks[v] & U).bit_length() - 1) for v in verts
                                 if v < (masks[v] & U).bit_length() - 1))
            size = len(edges)
            if size > best or (size == best and edges < best_edges):
                best, best_edges = size, edges
    return best, best_edges


def mim_exact(g: Graph, budget: int = DEFAULT_MIM_BUDGET, exhaustive: bool = False) -> tuple[int, Matching]:
    """Maximum induced matching size and its lexicographically smallest witness.

    Edgeless graphs give ``(0, ())``.  ``exhaustive=True`` switches to
    :func:`mim_exhaustive` (n <= 16 only).
    """
    if exhaustive:
        return mim_exhaustive(g)
    search = MimSearch(g, budget)
    full = (1 << g.n) - 1
    return search.solve(full), search.witness(full)


def is_bipartite_chain(bg: BipartiteGraph) -> bool:
    """True iff the left side's neighborhoods form a chain under inclusion."""
    bg.check()
    nbhds = sorted((bg.graph.adjacency[x] for x in bg.left), key=len)
    return all(a <= b for a, b in zip(nbhds, nbhds[1:]))


class CutMim:
    """MIM values of cut graphs ``G[S, V-S]`` for many ``S`` of one host.

    Cut values are cached per unordered bipartition; the underlying search
    cache is shared between cuts.
    """

    def __init__(self, g: Graph, budget: int = DEFAULT_MIM_BUDGET):
        self.graph = g
        self.full = (1 << g.n) - 1
        self.search = MimSearch(g, budget)
        self._values: dict = {}

    def value(self, left: int) -> int:
        key = min(left, self.full & ~left)
        v = self._values.get(key)
        if v is None:
            v = self.search.solve(self.full, key)
            self._values[key] = v
        return v

    def witness(self, left: int) -> Matching:
        return self.search.witness(self.full, left)
