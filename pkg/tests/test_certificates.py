import dataclasses
import random

import pytest
from hypothesis import given, settings

from lmwidth.certificates import (
    LowerBoundCertificate,
    certify_H_square,
    certify_square_lower_bound,
    check_certificate,
    edge_leaf,
    oracle_leaf,
    three_parts,
)
from lmwidth.errors import CertificateError, InternalError, ResourceError
from lmwidth.families import gen_H, gen_L
from lmwidth.graph import Graph, graph_power, path_graph, random_tree
from lmwidth.layout import lmw_oracle
from lmwidth.tree import tree_lmw

from strategies import trees


def _h1():
    fam = gen_H(1)
    return fam, graph_power(fam.graph, 2)


def test_edge_leaf_on_p2():
    cert = edge_leaf(path_graph(2), {0, 1})
    assert check_certificate(path_graph(2), cert) == 1
    assert cert.to_json()["edge"] == [0, 1]


def test_three_parts_on_h1_square_without_root():
    fam, sq = _h1()
    host = set(range(sq.n)) - {fam.tree.root}
    parts = [set(fam.copy_roots(i)) for i in (1, 2, 3)]
    cert = three_parts(sq, host, parts, [edge_leaf(sq, p) for p in parts])
    assert check_certificate(sq, cert) == 2
    # each connecting path runs leaf, v_a, v_b, leaf
    for path, (a, b) in zip(cert.paths, ((0, 1), (0, 2), (1, 2))):
        assert path[1:-1] == (fam.middles()[a], fam.middles()[b])
    assert lmw_oracle(sq)[0] == 2


def test_adjacent_parts_are_rejected():
    g = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])  # spider with legs of length 2
    good = three_parts(g, range(7), [{2}, {4}, {6}], [oracle_leaf({v}, 0) for v in (2, 4, 6)])
    assert check_certificate(g, good) == 1
    bad = dataclasses.replace(good, parts=((2,), (1,), (6,)))
    with pytest.raises(CertificateError) as err:
        check_certificate(g, bad)
    assert err.value.condition == "distance" and err.value.node == "/"


def test_rejections_name_node_and_condition():
    fam, sq = _h1()
    cert = certify_H_square(1)
    core = cert.children[0]
    path = list(core.paths[0])
    bad_core = dataclasses.replace(core, paths=(tuple(path[:1] + path[2:]),) + core.paths[1:])
    with pytest.raises(CertificateError) as err:
        check_certificate(sq, dataclasses.replace(cert, children=(bad_core,)))
    assert err.value.node == "/children/0" and err.value.condition == "path"
    with pytest.raises(CertificateError) as err:
        check_certificate(sq, dataclasses.replace(cert, bound=3))
    assert err.value.condition == "bound"
    with pytest.raises(CertificateError) as err:
        check_certificate(sq, dataclasses.replace(cert, variant="Nope"))
    assert err.value.condition == "variant"
    with pytest.raises(CertificateError):
        check_certificate(sq, dataclasses.replace(cert, host=(0, 0, 1)))
    empty = dataclasses.replace(core, parts=((),) + core.parts[1:])
    with pytest.raises(CertificateError) as err:
        check_certificate(sq, dataclasses.replace(cert, children=(empty,)))
    assert err.value.condition == "empty-part"


def test_oracle_leaf_over_cutoff():
    g = path_graph(30)
    with pytest.raises(ResourceError):
        check_certificate(g, oracle_leaf(range(30), 1))
    assert check_certificate(g, oracle_leaf(range(30), 1), cutoff=30) == 1


def test_square_certificates_for_small_trees():
    cert = certify_square_lower_bound(Graph(1))
    assert (cert.variant, cert.bound) == ("OracleLeaf", 0)
    assert check_certificate(Graph(1), cert) == 0
    l1 = gen_L(1).graph
    cert = certify_square_lower_bound(l1)
    assert cert.variant == "EdgeLeaf"
    assert check_certificate(graph_power(l1, 2), cert) == 1
    for k in (2, 3):
        t = gen_L(k).graph
        cert = certify_square_lower_bound(t)
        assert cert.variant == "ThreeParts"
        assert check_certificate(graph_power(t, 2), cert) == k


def test_h_certificates():
    assert certify_H_square(0).bound == 0
    assert check_certificate(Graph(1), certify_H_square(0)) == 0
    for k in (1, 2):
        sq = graph_power(gen_H(k).graph, 2)
        assert check_certificate(sq, certify_H_square(k)) == 2 * k


def test_h_inner_paths_stay_inside_their_branch():
    fam = gen_H(2)
    cert = certify_H_square(2)
    outer = cert.children[0]
    assert fam.tree.root not in outer.host
    for v, inner in zip(fam.middles(), outer.children):
        branch = set().union(*(fam.copy(c) for c in fam.copy_roots(fam.middles().index(v) + 1)))
        assert set(inner.host) == branch and v not in branch
        for path in inner.paths:
            assert set(path) <= branch


def test_checking_is_deterministic_and_json_round_trips():
    sq = graph_power(gen_H(2).graph, 2)
    cert = certify_H_square(2)
    assert check_certificate(sq, cert) == check_certificate(sq, cert) == 4
    assert LowerBoundCertificate.loads(cert.dumps()) == cert
    assert certify_H_square(2) == cert
    data = cert.to_json()
    assert set(data) == {"variant", "bound", "host", "parts", "paths", "children"}
    assert set(data["children"][0]["paths"]) == {"12", "13", "23"}
    with pytest.raises(CertificateError) as err:
        LowerBoundCertificate.from_json({"bound": 1})
    assert err.value.condition == "schema"


@settings(max_examples=60, deadline=None)
@given(trees(min_n=1, max_n=14))
def test_square_certificate_sound_against_oracle(t):
    sq = graph_power(t, 2)
    cert = certify_square_lower_bound(t)
    b = check_certificate(sq, cert)
    assert b == tree_lmw(t)
    assert b <= lmw_oracle(sq)[0]


def _hub_parts(t: Graph, rng: random.Random):
    """Three parts beyond three neighbors of a hub of ``t``, or None."""
    hubs = [x for x in range(t.n) if t.degree(x) >= 3]
    if not hubs:
        return None
    x = rng.choice(hubs)
    parts = []
    for v in rng.sample(sorted(t.adjacency[x]), 3):
        far = sorted(t.adjacency[v] - {x})
        if not far:
            return None
        deep = [w for w in far if t.adjacency[w] - {v}]
        u = rng.choice(deep or far)
        part = {u}
        beyond = sorted(t.adjacency[u] - {v})
        if beyond and rng.random() < 0.9:
            part.add(rng.choice(beyond))
        parts.append(frozenset(part))
    return parts


def test_random_three_parts_are_sound():
    # any certificate the checker accepts must respect the oracle; extra edges
    # and squaring make some of them invalid, which the checker must notice
    rng = random.Random(5)
    accepted = {1: 0, 2: 0}
    for _ in range(800):
        n = rng.randint(10, 14)
        t = random_tree(n, rng)
        parts = _hub_parts(t, rng)
        if parts is None:
            continue
        extra = {(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.02}
        g = Graph(n, set(t.edges) | extra)
        if rng.random() < 0.3:
            g = graph_power(g, 2)
        children = [edge_leaf(g, p) if len(p) == 2 else oracle_leaf(p, 0) for p in parts]
        try:
            cert = three_parts(g, range(n), parts, children)
        except InternalError:
            continue  # no admissible path
        try:
            b = check_certificate(g, cert)
        except CertificateError:
            continue
        assert b <= lmw_oracle(g)[0]
        accepted[b] += 1
    assert accepted[1] >= 50 and accepted[2] >= 3, accepted
