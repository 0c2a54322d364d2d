"""The recursive tree families L(k) and H(k) and their explicit layouts.

``L(0)`` and ``H(0)`` are single vertices.  ``L(k+1)`` is a root with three
children, each carrying one copy of ``L(k)`` below it.  ``H(k+1)`` is a root
with three children, each carrying three copies of ``H(k)``.  Ids follow
preorder with children in order, so the root is 0 and the middle vertices
``v1, v2, v3`` come in ascending id order.

Role labels name every vertex by its place in the recursion: ``u{k}`` for the
root of a level-k tree, ``v{i}`` for its middle vertices, and a copy prefix
(``S{i}.`` for L, ``S{i},{a}.`` for H) in front of the role inside a copy.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InternalError
from .graph import Graph, RootedTree
from .layout import LinearLayout, mw_of_layout


@dataclass(frozen=True)
class FamilyInstance:
    kind: str  # "L" or "H"
    k: int
    tree: RootedTree
    roles: tuple  # roles[v] is the role label of vertex v

    @property
    def graph(self) -> Graph:
        return self.tree.graph

    def middles(self) -> list[int]:
        """The root's children v1, v2, v3 (empty for k = 0)."""
        return self.tree.children(self.tree.root)

    def copy_roots(self, i: int) -> list[int]:
        """Roots of the copies hanging below the i-th middle vertex (1-based)."""
        return self.tree.children(self.middles()[i - 1])

    def copy(self, root: int) -> frozenset:
        """Vertices of the copy rooted at ``root``."""
        return frozenset(self.tree.preorder(root))

    def role_map(self) -> dict:
        return {"family": self.kind, "k": self.k, "roles": {str(v): r for v, r in enumerate(self.roles)}}


def _build(kind: str, k: int, copies_per_middle: int) -> FamilyInstance:
    if k < 0:
        raise DomainError(f"family level must be >= 0, got {k}")
    edges = []
    roles = []

    def grow(level: int, prefix: str) -> int:
        me = len(roles)
        roles.append(f"{prefix}u{level}")
        if level == 0:
            return me
        for i in range(1, 4):
            v = len(roles)
            roles.append(f"{prefix}v{i}")
            edges.append((me, v))
            for a in range(1, copies_per_middle + 1):
                tag = f"S{i}." if copies_per_middle == 1 else f"S{i},{a}."
                edges.append((v, grow(level - 1, prefix + tag)))
        return me

    grow(k, "")
    g = Graph(len(roles), edges, dict(enumerate(roles)))
    return FamilyInstance(kind, k, RootedTree.from_graph(g, 0), tuple(roles))


def family_size(kind: str, k: int) -> int:
    size = 1
    for _ in range(k):
        size = 4 + (3 if kind == "L" else 9) * size
    return size


def gen_L(k: int) -> FamilyInstance:
    return _build("L", k, 1)


def gen_H(k: int) -> FamilyInstance:
    return _build("H", k, 3)


def gen_family(kind: str, k: int) -> FamilyInstance:
    if kind == "L":
        return gen_L(k)
    if kind == "H":
        return gen_H(k)
    raise DomainError(f"unknown family {kind!r}; expected 'L' or 'H'")


def _l_order(fam: FamilyInstance, root: int) -> list[int]:
    kids = fam.tree.children(root)
    if not kids:
        return [root]
    order = [root]
    for v in kids:
        (s,) = fam.tree.children(v)
        order += _l_order(fam, s)
        order.append(v)
    return order


def l_square_layout(k: int) -> LinearLayout:
    """(u) + layout(S1) + (v1) + layout(S2) + (v2) + layout(S3) + (v3), recursively."""
    fam = gen_L(k)
    return LinearLayout(tuple(_l_order(fam, fam.tree.root)))


def _h_order(fam: FamilyInstance, root: int) -> list[int]:
    order = [root]
    for v in fam.tree.children(root):
        for s in fam.tree.children(v):
            order += _h_order(fam, s)
        order.append(v)
    return order


def h_tree_layout(k: int) -> LinearLayout:
    """Width-k layout of H(k) from the single-vertex path at the root."""
    fam = gen_H(k)
    layout = LinearLayout(tuple(_h_order(fam, fam.tree.root)))
    width = mw_of_layout(fam.graph, layout, witnesses=False).width
    if width != k:
        raise InternalError(f"h_tree_layout({k}) evaluates to width {width}")
    return layout
