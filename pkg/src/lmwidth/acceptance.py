"""The acceptance suite: nine exact checks of the tree-square width bounds.

Each ``criterion_*`` function returns a :class:`CriterionResult`; a criterion
passes when its check holds and it finishes within its time limit.  All
random inputs come from ``random.Random(seed)`` streams derived from the
configured seed, so a run is reproducible from ``(seed, oracle_cutoff)``.
"""

from __future__ import annotations

import dataclasses
import random
import sys
import time
from dataclasses import dataclass
from typing import Callable, Optional

from .certificates import (
    VARIANTS,
    LowerBoundCertificate,
    certify_H_square,
    certify_square_lower_bound,
    check_certificate,
)
from .errors import CertificateError, DomainError, ResourceError
from .families import gen_H, gen_L, h_tree_layout, l_square_layout
from .graph import BipartiteGraph, Graph, diameter, graph_power, induced_subgraph, random_graph, random_tree
from .layout import DEFAULT_ORACLE_CUTOFF, LinearLayout, lmw_oracle, mw_of_layout, power_layout_bound
from .matching import DEFAULT_MIM_BUDGET, is_bipartite_chain, mim_exact
from .tree import canonical_form, tree_lmw

# L(2)^2 has 25 vertices; its ground truth needs an oracle run above the default cutoff
L2_SQUARE_CUTOFF = 25


@dataclass(frozen=True)
class RunConfig:
    oracle_cutoff: int = DEFAULT_ORACLE_CUTOFF
    mim_budget: int = DEFAULT_MIM_BUDGET
    seed: int = 0

    def __post_init__(self):
        if self.oracle_cutoff < 1:
            raise DomainError("oracle cutoff must be >= 1")
        if self.seed < 0:
            raise DomainError("seed must be >= 0")

    def rng(self, criterion: int) -> random.Random:
        return random.Random(self.seed * 1000 + criterion)


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    limit: float

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"[{verdict}] {self.number}. {self.name}: {self.detail} ({self.seconds:.1f}s, limit {self.limit:.0f}s)"

    def to_json(self) -> dict:
        return dataclasses.asdict(self)


def _timed(number: int, name: str, limit: float, check: Callable[[], tuple[bool, str]]) -> CriterionResult:
    start = time.perf_counter()
    try:
        ok, detail = check()
    except ResourceError as exc:
        ok, detail = False, f"resource limit hit: {exc}"
    seconds = time.perf_counter() - start
    if ok and seconds > limit:
        ok, detail = False, detail + "; over time limit"
    return CriterionResult(number, name, ok, detail, seconds, limit)


def _oracle(g: Graph, cfg: RunConfig, cutoff: Optional[int] = None) -> int:
    return lmw_oracle(g, cutoff or cfg.oracle_cutoff, cfg.mim_budget)[0]


# --------------------------------------------------------------------------
# the criteria


def criterion_1(cfg: RunConfig) -> CriterionResult:
    def check():
        rng = cfg.rng(1)
        bad = []
        for i in range(200):
            t = random_tree(rng.randint(4, 14), rng)
            a = _oracle(t, cfg)
            b = _oracle(graph_power(t, 2), cfg)
            if not a <= b <= 2 * a:
                bad.append((i, a, b))
        return not bad, f"200 trees, {len(bad)} violations of lmw(T) <= lmw(T^2) <= 2 lmw(T)"
    return _timed(1, "square sandwich on random trees", 180, check)


def criterion_2(cfg: RunConfig) -> CriterionResult:
    def check():
        rng = cfg.rng(2)
        seen = set()
        mismatches = 0
        draws = 0
        while len(seen) < 500:
            draws += 1
            if draws > 20000:
                return False, f"only {len(seen)} distinct trees found"
            t = random_tree(rng.randint(1, 15), rng)
            key = canonical_form(t)
            if key in seen:
                continue
            seen.add(key)
            if tree_lmw(t) != _oracle(t, cfg):
                mismatches += 1
        return mismatches == 0, f"{len(seen)} non-isomorphic trees, {mismatches} mismatches"
    return _timed(2, "tree solver equals oracle", 300, check)


def criterion_3(cfg: RunConfig) -> CriterionResult:
    def check():
        problems = []
        for k in range(5):
            w = tree_lmw(gen_L(k).graph)
            if w != k:
                problems.append(f"tree_lmw(L({k})) = {w}")
        for k in range(4):
            sq = graph_power(gen_L(k).graph, 2)
            w = mw_of_layout(sq, l_square_layout(k), cfg.mim_budget, witnesses=False).width
            if w != k:
                problems.append(f"layout width on L({k})^2 = {w}")
        for k in range(2):
            w = _oracle(graph_power(gen_L(k).graph, 2), cfg)
            if w != k:
                problems.append(f"oracle(L({k})^2) = {w}")
        t = gen_L(2).graph
        b = check_certificate(graph_power(t, 2), certify_square_lower_bound(t), cfg.oracle_cutoff, cfg.mim_budget)
        if b != 2:
            problems.append(f"certificate on L(2)^2 validates {b}")
        return not problems, "; ".join(problems) or "all L(k) and L(k)^2 widths equal k"
    return _timed(3, "L family keeps width under squaring", 120, check)


def criterion_4(cfg: RunConfig) -> CriterionResult:
    def check():
        problems = []
        for k in range(4):
            w = tree_lmw(gen_H(k).graph)
            if w != k:
                problems.append(f"tree_lmw(H({k})) = {w}")
        w = _oracle(graph_power(gen_H(1).graph, 2), cfg)
        if w != 2:
            problems.append(f"oracle(H(1)^2) = {w}")
        h2 = gen_H(2).graph
        b = check_certificate(graph_power(h2, 2), certify_H_square(2), cfg.oracle_cutoff, cfg.mim_budget)
        if b != 4:
            problems.append(f"certificate on H(2)^2 validates {b}")
        _, upper = power_layout_bound(h2, h_tree_layout(2), 2, cfg.mim_budget)
        if upper != 4:
            problems.append(f"layout bound on H(2)^2 = {upper}")
        return not problems, "; ".join(problems) or "H(k) width k, lmw(H(1)^2) = 2, lmw(H(2)^2) = 4"
    return _timed(4, "H family doubles width under squaring", 300, check)


def criterion_5(cfg: RunConfig) -> CriterionResult:
    def check():
        rng = cfg.rng(5)
        bad = 0
        for _ in range(100):
            n = rng.randint(1, 10)
            g = random_graph(n, rng.random(), rng)
            order = list(range(n))
            rng.shuffle(order)
            sigma = LinearLayout(tuple(order))
            base = mw_of_layout(g, sigma, cfg.mim_budget, witnesses=False).width
            for m in (2, 3):
                powered = mw_of_layout(graph_power(g, m), sigma, cfg.mim_budget, witnesses=False).width
                if powered > 2 * base:
                    bad += 1
        return bad == 0, f"100 graphs x m in (2, 3), {bad} violations of mw(G^m) <= 2 mw(G)"
    return _timed(5, "power doubling bound per layout", 60, check)


def straddle_graphs(k: int):
    """Yield ``(cut index, G'_i)`` over the cuts of the concatenation layout of L(k)^2.

    ``G'_i`` is the cut graph with the edges inside the straddling copy removed.
    """
    fam = gen_L(k)
    sq = graph_power(fam.graph, 2)
    copies = [fam.copy(c) for i in (1, 2, 3) for c in fam.copy_roots(i)]
    order = l_square_layout(k).order
    for i in range(1, len(order)):
        left = frozenset(order[:i])
        inside = next((s for s in copies if s & left and not s <= left), frozenset())
        edges = [(u, v) for u, v in sq.edges
                 if (u in left) != (v in left) and not (u in inside and v in inside)]
        yield i, BipartiteGraph(Graph(sq.n, edges), left)


def criterion_6(cfg: RunConfig) -> CriterionResult:
    def check():
        bad = []
        total = 0
        for k in range(3):
            for i, bg in straddle_graphs(k + 1):
                total += 1
                if not is_bipartite_chain(bg) or mim_exact(bg.graph, cfg.mim_budget)[0] != 1:
                    bad.append((k + 1, i))
        return not bad, f"{total} cuts of L(1..3)^2, {len(bad)} failures"
    return _timed(6, "remaining cut graphs are chains with MIM 1", 120, check)


def criterion_7(cfg: RunConfig) -> CriterionResult:
    def check():
        fam = gen_H(1)
        sq = graph_power(fam.graph, 2)
        whole = _oracle(sq, cfg)
        rest, _ = induced_subgraph(sq, set(range(sq.n)) - {fam.tree.root})
        cut = _oracle(rest, cfg)
        return whole == cut == 2, f"lmw(H(1)^2) = {whole}, without root = {cut}"
    return _timed(7, "root removal keeps the width", 60, check)


def criterion_8(cfg: RunConfig) -> CriterionResult:
    def check():
        rng = cfg.rng(8)
        bad = 0
        for _ in range(50):
            t = random_tree(rng.randint(2, 12), rng)
            if _oracle(graph_power(t, diameter(t)), cfg) != 1:
                bad += 1
        return bad == 0, f"50 trees, {bad} with lmw(T^diam) != 1"
    return _timed(8, "diameter power collapses to width 1", 60, check)


# --------------------------------------------------------------------------
# certificate corruption


def _replace_at(cert: LowerBoundCertificate, path: list, new: LowerBoundCertificate) -> LowerBoundCertificate:
    if not path:
        return new
    i = path[0]
    kids = list(cert.children)
    kids[i] = _replace_at(kids[i], path[1:], new)
    return dataclasses.replace(cert, children=tuple(kids))


def _node_path(node: str) -> list:
    parts = [p for p in node.split("/") if p]
    return [int(p) for p in parts[1::2]]


def _mutate_set(vs: tuple, n: int, rng: random.Random) -> tuple:
    vs = list(vs)
    op = rng.choice(("add", "drop", "swap"))
    if op == "drop" and vs:
        del vs[rng.randrange(len(vs))]
    elif op == "swap" and vs:
        vs[rng.randrange(len(vs))] = rng.randrange(n)
    else:
        vs.append(rng.randrange(n))
    return tuple(vs)


def corrupt(cert: LowerBoundCertificate, n: int, rng: random.Random) -> tuple[LowerBoundCertificate, str]:
    """One random single-field corruption of a random node of ``cert``."""
    nodes = list(cert.walk())
    node, target = rng.choice(nodes)
    fields = ["bound", "host", "variant", "children"]
    if target.parts:
        fields += ["parts", "paths"]
    if target.edge:
        fields.append("edge")
    name = rng.choice(fields)
    if name == "bound":
        new = dataclasses.replace(target, bound=target.bound + rng.choice((-1, 1, 2)))
    elif name == "host":
        new = dataclasses.replace(target, host=_mutate_set(target.host, n, rng))
    elif name == "variant":
        new = dataclasses.replace(target, variant=rng.choice([v for v in VARIANTS if v != target.variant]))
    elif name == "children":
        kids = list(target.children)
        if kids and rng.random() < 0.5:
            del kids[rng.randrange(len(kids))]
        elif len(kids) >= 2:
            i, j = rng.sample(range(len(kids)), 2)
            kids[i], kids[j] = kids[j], kids[i]
        else:
            kids.append(rng.choice(nodes)[1])
        new = dataclasses.replace(target, children=tuple(kids))
    elif name == "parts":
        parts = list(target.parts)
        i = rng.randrange(len(parts))
        parts[i] = _mutate_set(parts[i], n, rng)
        new = dataclasses.replace(target, parts=tuple(parts))
    elif name == "paths":
        paths = list(target.paths)
        i = rng.randrange(len(paths))
        paths[i] = _mutate_set(paths[i], n, rng)
        new = dataclasses.replace(target, paths=tuple(paths))
    else:
        edge = list(target.edge)
        edge[rng.randrange(2)] = rng.randrange(n)
        new = dataclasses.replace(target, edge=tuple(edge))
    return _replace_at(cert, _node_path(node), new), f"{node}:{name}"


def criterion_9(cfg: RunConfig) -> CriterionResult:
    def check():
        rng = cfg.rng(9)
        h1 = graph_power(gen_H(1).graph, 2)
        l2_tree = gen_L(2).graph
        l2 = graph_power(l2_tree, 2)
        cases = [
            (h1, certify_H_square(1), _oracle(h1, cfg)),
            (l2, certify_square_lower_bound(l2_tree), _oracle(l2, cfg, max(cfg.oracle_cutoff, L2_SQUARE_CUTOFF))),
        ]
        accepted = rejected = 0
        unsound = []
        for i in range(200):
            g, cert, truth = cases[i % 2]
            bad, where = corrupt(cert, g.n, rng)
            try:
                b = check_certificate(g, bad, cfg.oracle_cutoff, cfg.mim_budget)
            except (CertificateError, ResourceError):
                rejected += 1
                continue
            accepted += 1
            if b > truth:
                unsound.append(where)
        detail = f"200 corruptions, {rejected} rejected, {accepted} still valid, {len(unsound)} above the true width"
        return not unsound, detail
    return _timed(9, "corrupted certificates stay sound", 60, check)


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9)


def run_all(cfg: RunConfig = RunConfig(), only=None, stream=sys.stdout) -> list[CriterionResult]:
    """Run the selected criteria (all by default), printing one line per criterion."""
    results = []
    for number, fn in enumerate(CRITERIA, start=1):
        if only and number not in only:
            continue
        r = fn(cfg)
        if stream is not None:
            print(r.line(), file=stream, flush=True)
        results.append(r)
    return results
