"""Linear layouts, the MIM-width of a layout, and the exact subset-DP oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import DomainError, InternalError, ResourceError
from .graph import Graph, bipartite_cut_graph, diameter, graph_power, is_tree
from .matching import DEFAULT_MIM_BUDGET, CutMim, is_induced_matching

DEFAULT_ORACLE_CUTOFF = 20


@dataclass(frozen=True)
class LinearLayout:
    """A total order on the vertices; ``order[i]`` sits at position ``i + 1``."""

    order: tuple

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(int(v) for v in self.order))

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def validate(self, g: Graph) -> None:
        if sorted(self.order) != list(range(g.n)):
            raise DomainError(f"layout is not a permutation of 0..{g.n - 1}")

    def position(self, v: int) -> int:
        """1-based position of ``v``."""
        return self.order.index(v) + 1

    def reversed(self) -> "LinearLayout":
        return LinearLayout(self.order[::-1])

    @classmethod
    def identity(cls, n: int) -> "LinearLayout":
        return cls(tuple(range(n)))

    @classmethod
    def parse(cls, text: str) -> "LinearLayout":
        try:
            return cls(tuple(int(tok) for tok in text.split()))
        except ValueError as exc:
            raise DomainError(f"layout file must hold whitespace-separated integers: {exc}") from None

    def dumps(self) -> str:
        return " ".join(map(str, self.order)) + "\n"


@dataclass(frozen=True)
class Cut:
    """The partition after the first ``index`` vertices of a layout."""

    index: int
    left: frozenset


@dataclass(frozen=True)
class WidthReport:
    layout: LinearLayout
    cut_values: tuple
    width: int
    witnesses: dict = field(default_factory=dict)  # cut index -> Matching

    def to_json(self) -> dict:
        first = min(self.witnesses) if self.witnesses else None
        return {
            "width": self.width,
            "cut_values": list(self.cut_values),
            "witness_cut": first,
            "witness_edges": [list(e) for e in self.witnesses.get(first, ())],
            "layout": list(self.layout.order),
        }


def cuts(g: Graph, sigma: LinearLayout) -> list[Cut]:
    sigma.validate(g)
    out = []
    left = set()
    for i, v in enumerate(sigma.order[:-1], start=1):
        left.add(v)
        out.append(Cut(i, frozenset(left)))
    return out


def _prefix_masks(order: Sequence[int]) -> list[int]:
    masks = []
    left = 0
    for v in order[:-1]:
        left |= 1 << v
        masks.append(left)
    return masks


def mw_of_layout(g: Graph, sigma: LinearLayout, budget: int = DEFAULT_MIM_BUDGET,
                 cut_mim: Optional[CutMim] = None, witnesses: bool = True) -> WidthReport:
    """Evaluate every cut of ``sigma``; witnesses are kept for the maximal ones."""
    sigma.validate(g)
    cm = cut_mim if cut_mim is not None else CutMim(g, budget)
    prefixes = _prefix_masks(sigma.order)
    values = tuple(cm.value(s) for s in prefixes)
    width = max(values, default=0)
    wit = {}
    if witnesses and width > 0:
        for i, (s, val) in enumerate(zip(prefixes, values), start=1):
            if val == width:
                wit[i] = cm.witness(s)
    return WidthReport(sigma, values, width, wit)


def check_report(g: Graph, report: WidthReport) -> None:
    """Re-validate a report's witnesses against freshly built cut graphs."""
    if report.width != max(report.cut_values, default=0):
        raise InternalError("report width is not the maximum cut value")
    for i, m in report.witnesses.items():
        left = frozenset(report.layout.order[:i])
        bg = bipartite_cut_graph(g, left)
        if len(m) != report.cut_values[i - 1] or not is_induced_matching(bg.graph, m):
            raise InternalError(f"witness for cut {i} does not validate")


def _reachable_layers(cm: CutMim, n: int, w: int, depth: int) -> Optional[list[set]]:
    """Prefix sets of size 0..depth reachable through cuts of MIM value <= w."""
    full = (1 << n) - 1
    layers = [{0}]
    rejected = set()
    for _ in range(depth):
        nxt = set()
        for s in layers[-1]:
            rest = full & ~s
            while rest:
                low = rest & -rest
                rest ^= low
                t = s | low
                if t in nxt or t in rejected:
                    continue
                if t == full or cm.value(t) <= w:
                    nxt.add(t)
                else:
                    rejected.add(t)
        if not nxt:
            return None
        layers.append(nxt)
    return layers


def _unwind(layers: list[set], s: int, n: int) -> list[int]:
    """An order of the members of prefix set ``s`` staying inside ``layers``."""
    order = []
    for i in range(bin(s).count("1"), 0, -1):
        for v in range(n):
            if (s >> v) & 1 and (s & ~(1 << v)) in layers[i - 1]:
                order.append(v)
                s &= ~(1 << v)
                break
    return order[::-1]


def lmw_oracle(g: Graph, cutoff: int = DEFAULT_ORACLE_CUTOFF,
               budget: int = DEFAULT_MIM_BUDGET) -> tuple[int, LinearLayout]:
    """Exact linear MIM-width by dynamic programming over vertex subsets.

    Equivalent to ``f(S) = max(mim(G[S, V-S]), min_v f(S - v))`` but run as a
    decision procedure for ``w = 1, 2, ...``: a prefix set is kept only if its
    cut has MIM at most ``w`` and it extends a kept set one size smaller.
    Cuts are symmetric, so a suffix set of a good layout is itself a kept
    prefix set; the search stops at half size and joins the smallest kept
    set ``S`` whose complement is kept too.
    """
    n = g.n
    if n > cutoff:
        raise ResourceError(f"exact oracle limited to n <= {cutoff} (oracle cutoff), got n = {n}")
    if n <= 1 or not g.edges:
        return 0, LinearLayout.identity(n)
    cm = CutMim(g, budget)
    full = (1 << n) - 1
    lo, hi = n // 2, n - n // 2
    w = 1
    while True:
        layers = _reachable_layers(cm, n, w, hi)
        if layers is not None:
            joins = [s for s in layers[lo] if full & ~s in layers[hi]]
            if joins:
                break
        w += 1
    s = min(joins)
    order = _unwind(layers, s, n) + _unwind(layers, full & ~s, n)[::-1]
    return w, LinearLayout(tuple(order))


def power_layout_bound(g: Graph, sigma: LinearLayout, m: int,
                       budget: int = DEFAULT_MIM_BUDGET) -> tuple[int, int]:
    """``(mw(sigma, G), mw(sigma, G^m))``; the second never exceeds twice the first."""
    base = mw_of_layout(g, sigma, budget, witnesses=False).width
    powered = mw_of_layout(graph_power(g, m), sigma, budget, witnesses=False).width
    if powered > 2 * base:
        raise InternalError(f"power layout bound violated: {powered} > 2 * {base}")
    return base, powered


@dataclass(frozen=True)
class ProfileRow:
    m: int
    lower: int
    upper: int
    exact: bool


def _best_known_layout(g: Graph) -> LinearLayout:
    if is_tree(g):
        from .tree import construct_tree_layout

        return construct_tree_layout(g)[0]
    return LinearLayout.identity(g.n)


def power_profile(g: Graph, max_m: int, cutoff: int = DEFAULT_ORACLE_CUTOFF,
                  budget: int = DEFAULT_MIM_BUDGET) -> list[ProfileRow]:
    """lmw of G^m for m = 1..min(max_m, diam(G)), exact where the oracle reaches.

    Beyond the oracle cutoff a row is an interval: the lower end is 1, the
    upper end the evaluated width of a best-known layout of G on G^m.  For
    trees the tree solver makes m = 1 exact and lifts the m = 2 lower end to
    lmw(T), since squaring a tree never lowers its width.
    """
    diam = diameter(g)
    if g.n <= 1:
        return [ProfileRow(1, 0, 0, True)]
    rows = []
    sigma = None
    for m in range(1, min(max_m, diam) + 1):
        if m == diam:
            rows.append(ProfileRow(m, 1, 1, True))
            continue
        gm = graph_power(g, m)
        if g.n <= cutoff:
            w, _ = lmw_oracle(gm, cutoff, budget)
            rows.append(ProfileRow(m, w, w, True))
            continue
        if sigma is None:
            sigma = _best_known_layout(g)
        try:
            upper = mw_of_layout(gm, sigma, budget, witnesses=False).width
        except ResourceError:
            upper = 2 * mw_of_layout(g, sigma, budget, witnesses=False).width
        lower = 1
        if m <= 2 and is_tree(g):
            from .tree import tree_lmw

            lower = tree_lmw(g)
        rows.append(ProfileRow(m, lower, upper, lower == upper))
    return rows
