"""Checkable lower-bound certificates for linear MIM-width.

A certificate node claims ``lmw(G[host]) >= bound`` for a vertex set ``host``
of an ambient graph ``G``.  Four node kinds exist:

``ThreeParts``
    Three connected parts inside the host, pairwise at distance >= 2, and for
    every pair a path between them that avoids the closed neighborhood of the
    third part.  Each part carries a child certificate whose host lies inside
    the part.  Claims ``1 + min(child bounds)``.
``EdgeLeaf``
    One edge of G (host = its two endpoints).  Claims 1.
``OracleLeaf``
    A host small enough for the exact oracle.  Claims the oracle value.
``InducedSubgraph``
    A host containing its single child's host.  Claims the child's bound.

All ids refer to the ambient graph.  The checker only verifies the
hypotheses listed above; it never searches for missing evidence.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .errors import CertificateError, InternalError
from .families import gen_H
from .graph import Graph, bfs_distances, graph_power, induced_subgraph, is_connected, neighborhood, require_tree
from .layout import DEFAULT_ORACLE_CUTOFF, lmw_oracle
from .matching import DEFAULT_MIM_BUDGET
from .tree import _SOLVER, _side, _with_depth

VARIANTS = ("ThreeParts", "EdgeLeaf", "OracleLeaf", "InducedSubgraph")
PATH_KEYS = ("12", "13", "23")
_PAIRS = ((0, 1, 2), (0, 2, 1), (1, 2, 0))  # (from, to, avoided) per path key


@dataclass(frozen=True)
class LowerBoundCertificate:
    variant: str
    bound: int
    host: tuple
    parts: tuple = ()
    paths: tuple = ()  # aligned with PATH_KEYS
    children: tuple = ()
    edge: tuple = ()

    def to_json(self) -> dict:
        out = {
            "variant": self.variant,
            "bound": self.bound,
            "host": list(self.host),
            "parts": [list(p) for p in self.parts],
            "paths": {key: list(p) for key, p in zip(PATH_KEYS, self.paths)},
            "children": [c.to_json() for c in self.children],
        }
        if self.variant == "EdgeLeaf":
            out["edge"] = list(self.edge)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict, node: str = "/") -> "LowerBoundCertificate":
        try:
            paths = data.get("paths") or {}
            return cls(
                variant=data["variant"],
                bound=int(data["bound"]),
                host=tuple(int(v) for v in data["host"]),
                parts=tuple(tuple(int(v) for v in p) for p in data.get("parts", [])),
                paths=tuple(tuple(int(v) for v in paths[key]) for key in PATH_KEYS) if paths else (),
                children=tuple(cls.from_json(c, f"{node.rstrip('/')}/children/{i}")
                               for i, c in enumerate(data.get("children", []))),
                edge=tuple(int(v) for v in data.get("edge", [])),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise CertificateError(node, "schema", f"malformed certificate JSON: {exc!r}") from None

    @classmethod
    def loads(cls, text: str) -> "LowerBoundCertificate":
        return cls.from_json(json.loads(text))

    def walk(self, node: str = "/"):
        """Yield ``(node_path, certificate)`` for this node and all descendants."""
        yield node, self
        for i, c in enumerate(self.children):
            yield from c.walk(f"{node.rstrip('/')}/children/{i}")


# --------------------------------------------------------------------------
# checking


class _Checker:
    def __init__(self, g: Graph, cutoff: int, budget: int):
        self.g = g
        self.cutoff = cutoff
        self.budget = budget

    def vertex_set(self, node, cond, vs) -> frozenset:
        s = frozenset(vs)
        if len(s) != len(vs):
            raise CertificateError(node, cond, "repeated vertex")
        bad = [v for v in s if not (isinstance(v, int) and 0 <= v < self.g.n)]
        if bad:
            raise CertificateError(node, cond, f"vertex ids {sorted(bad)} outside the graph")
        return s

    def check(self, cert: LowerBoundCertificate, node: str = "/") -> int:
        if cert.variant not in VARIANTS:
            raise CertificateError(node, "variant", f"unknown variant {cert.variant!r}")
        host = self.vertex_set(node, "host", cert.host)
        if not host:
            raise CertificateError(node, "host", "empty host")
        if cert.bound < 0:
            raise CertificateError(node, "bound", "negative bound")
        return getattr(self, "_" + cert.variant)(cert, host, node)

    def _EdgeLeaf(self, cert, host, node) -> int:
        if cert.bound != 1:
            raise CertificateError(node, "bound", "an edge certifies bound 1")
        if len(cert.edge) != 2 or not self.g.has_edge(*cert.edge):
            raise CertificateError(node, "edge", f"{list(cert.edge)} is not an edge")
        if not set(cert.edge) <= host:
            raise CertificateError(node, "containment", "edge endpoints outside host")
        return 1

    def _OracleLeaf(self, cert, host, node) -> int:
        h, _ = induced_subgraph(self.g, host)
        value, _ = lmw_oracle(h, self.cutoff, self.budget)
        if value != cert.bound:
            raise CertificateError(node, "oracle", f"oracle width {value} != claimed {cert.bound}")
        return value

    def _InducedSubgraph(self, cert, host, node) -> int:
        if len(cert.children) != 1:
            raise CertificateError(node, "children", "needs exactly one child")
        child = cert.children[0]
        path = f"{node.rstrip('/')}/children/0"
        if not set(child.host) <= host:
            raise CertificateError(path, "containment", "child host not inside parent host")
        b = self.check(child, path)
        if cert.bound != b:
            raise CertificateError(node, "bound", f"claimed {cert.bound}, child certifies {b}")
        return b

    def _ThreeParts(self, cert, host, node) -> int:
        g = self.g
        if len(cert.parts) != 3 or len(cert.paths) != 3 or len(cert.children) != 3:
            raise CertificateError(node, "schema", "needs three parts, three paths and three children")
        parts = []
        for i, p in enumerate(cert.parts):
            s = self.vertex_set(node, "parts", p)
            if not s:
                raise CertificateError(node, "empty-part", f"part {i + 1} is empty")
            if not s <= host:
                raise CertificateError(node, "containment", f"part {i + 1} leaves the host")
            if not is_connected(g, s):
                raise CertificateError(node, "connected", f"part {i + 1} is not connected")
            parts.append(s)
        for a, b, _ in _PAIRS:
            if parts[a] & parts[b]:
                raise CertificateError(node, "distance", f"parts {a + 1} and {b + 1} overlap")
            dist = bfs_distances(g, parts[a], limit=1, allowed=host)
            if any(v in dist for v in parts[b]):
                raise CertificateError(node, "distance", f"parts {a + 1} and {b + 1} are adjacent")
        for key, path, (a, b, c) in zip(PATH_KEYS, cert.paths, _PAIRS):
            if not path:
                raise CertificateError(node, "path", f"path {key} is empty")
            if not set(path) <= host:
                raise CertificateError(node, "path", f"path {key} leaves the host")
            if path[0] not in parts[a] or path[-1] not in parts[b]:
                raise CertificateError(node, "path", f"path {key} does not run from part {a + 1} to part {b + 1}")
            for x, y in zip(path, path[1:]):
                if not g.has_edge(x, y):
                    raise CertificateError(node, "path", f"path {key} uses non-edge ({x}, {y})")
            blocked = neighborhood(g, parts[c], closed=True) & host
            if blocked & set(path):
                raise CertificateError(node, "avoid", f"path {key} meets N[part {c + 1}]")
        bounds = []
        for i, child in enumerate(cert.children):
            path = f"{node.rstrip('/')}/children/{i}"
            if not set(child.host) <= parts[i]:
                raise CertificateError(path, "containment", f"child host not inside part {i + 1}")
            bounds.append(self.check(child, path))
        if cert.bound != 1 + min(bounds):
            raise CertificateError(node, "bound", f"claimed {cert.bound}, parts certify 1 + {min(bounds)}")
        return cert.bound


def check_certificate(g: Graph, cert: LowerBoundCertificate, cutoff: int = DEFAULT_ORACLE_CUTOFF,
                      budget: int = DEFAULT_MIM_BUDGET) -> int:
    """Validate ``cert`` against ``g`` and return the bound it proves for lmw(g).

    Raises :class:`CertificateError` naming the failing node and condition,
    or :class:`ResourceError` for an oracle leaf beyond ``cutoff``.
    """
    return _Checker(g, cutoff, budget).check(cert)


# --------------------------------------------------------------------------
# building


def _route(g: Graph, host: frozenset, src: frozenset, dst: frozenset, avoid: frozenset) -> tuple:
    """Shortest path from src to dst inside host - N[avoid]; BFS by ascending id."""
    allowed = host - neighborhood(g, avoid, closed=True)
    parent = {}
    queue = deque()
    for s in sorted(src & allowed):
        parent[s] = None
        queue.append(s)
    while queue:
        x = queue.popleft()
        if x in dst:
            path = [x]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return tuple(reversed(path))
        for y in sorted(g.adjacency[x]):
            if y in allowed and y not in parent:
                parent[y] = x
                queue.append(y)
    raise InternalError("no admissible path between certificate parts")


def three_parts(g: Graph, host, parts, children) -> LowerBoundCertificate:
    """Assemble a ThreeParts node, routing the three connecting paths."""
    host = frozenset(host)
    parts = [frozenset(p) for p in parts]
    paths = tuple(_route(g, host, parts[a], parts[b], parts[c]) for a, b, c in _PAIRS)
    return LowerBoundCertificate(
        "ThreeParts", 1 + min(c.bound for c in children), tuple(sorted(host)),
        tuple(tuple(sorted(p)) for p in parts), paths, tuple(children))


def edge_leaf(g: Graph, within) -> LowerBoundCertificate:
    """EdgeLeaf on the smallest edge of ``g[within]``."""
    within = frozenset(within)
    edge = min((e for e in g.edges if e[0] in within and e[1] in within), default=None)
    if edge is None:
        raise InternalError("no edge available for an EdgeLeaf")
    return LowerBoundCertificate("EdgeLeaf", 1, edge, edge=edge)


def oracle_leaf(host, bound: int) -> LowerBoundCertificate:
    return LowerBoundCertificate("OracleLeaf", bound, tuple(sorted(host)))


def certify_square_lower_bound(t: Graph) -> LowerBoundCertificate:
    """Certificate on ``t**2`` proving ``lmw(t**2) >= tree_lmw(t)``.

    At a piece of width ``w >= 2`` take the first node (by id) with three
    (w-1)-neighbors, use the three sides behind them as parts, and recurse.
    Width 1 ends in an EdgeLeaf, width 0 in a one-vertex OracleLeaf.
    """
    require_tree(t)
    sq = graph_power(t, 2)
    adj = t.adjacency

    def build(piece: frozenset) -> LowerBoundCertificate:
        width, values = _SOLVER.analyse(adj, piece)
        if width == 0:
            return oracle_leaf(piece, 0)
        if width == 1:
            return edge_leaf(sq, piece)
        k = width - 1
        for x in sorted(piece):
            sides = []
            for v in sorted(adj[x]):
                if v not in piece:
                    continue
                u = next((u for u in sorted(adj[v]) if u != x and u in piece and values[(v, u)] >= k), None)
                if u is not None:
                    sides.append(_side(adj, piece, v, u))
                if len(sides) == 3:
                    break
            if len(sides) == 3:
                cert = three_parts(sq, piece, sides, [build(s) for s in sides])
                if cert.bound != width:
                    raise InternalError(f"square certificate bound {cert.bound} != tree width {width}")
                return cert
        raise InternalError(f"no node with three {k}-neighbors in a piece of width {width}")

    return _with_depth(build, frozenset(range(t.n)))


def certify_H_square(k: int) -> LowerBoundCertificate:
    """Certificate on ``H(k)**2`` proving ``lmw >= 2k``.

    Drop the root; inside each middle vertex's branch (middle vertex removed)
    the three copies minus their roots are the parts of an inner ThreeParts
    node, and the three branches are the parts of the outer one.  At k = 1 the
    branches are triangles and get EdgeLeaf children.
    """
    fam = gen_H(k)
    tree = fam.tree
    sq = graph_power(fam.graph, 2)
    if k == 0:
        return oracle_leaf([tree.root], 0)

    def without_root(root: int, level: int) -> LowerBoundCertificate:
        branches = []
        inner = []
        for v in tree.children(root):
            copies = tree.children(v)
            branch = frozenset().union(*(fam.copy(c) for c in copies))
            if level == 1:
                inner.append(edge_leaf(sq, branch))
            else:
                parts = [fam.copy(c) - {c} for c in copies]
                inner.append(three_parts(sq, branch, parts, [without_root(c, level - 1) for c in copies]))
            branches.append(branch)
        return three_parts(sq, fam.copy(root) - {root}, branches, inner)

    core = without_root(tree.root, k)
    return LowerBoundCertificate("InducedSubgraph", core.bound, tuple(range(sq.n)), children=(core,))
