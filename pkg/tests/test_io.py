import pytest
from hypothesis import given

from lmwidth.errors import DomainError
from lmwidth.families import gen_L
from lmwidth.graph import path_graph
from lmwidth.io import dumps_dot, dumps_edgelist, loads_edgelist, read_graph, read_layout, write_graph
from lmwidth.layout import LinearLayout

from strategies import graphs


@given(graphs(max_n=12))
def test_edgelist_round_trip(g):
    assert loads_edgelist(dumps_edgelist(g)) == g


def test_edgelist_examples():
    assert dumps_edgelist(gen_L(0).graph) == "1 0\n"
    text = "# a path\n\n3 2\n0 1\n# middle\n1 2\n"
    assert loads_edgelist(text) == path_graph(3)


@pytest.mark.parametrize("text, fragment", [
    ("", "empty"),
    ("3\n", "header"),
    ("3 2\n0 1\n", "announces"),
    ("3 1\n1 0\n", "0 <= u < v < n"),
    ("3 1\n0 3\n", "0 <= u < v < n"),
    ("3 2\n0 1\n0 1\n", "duplicate"),
    ("3 1\n0 x\n", "integers"),
    ("3 1\n0 1 2\n", "exactly two"),
])
def test_edgelist_rejects(text, fragment):
    with pytest.raises(DomainError, match=fragment):
        loads_edgelist(text)


def test_dot_export_has_labels():
    dot = dumps_dot(gen_L(1).graph)
    assert dot.startswith("graph G {")
    assert '0 [label="u1"];' in dot and "0 -- 1;" in dot


def test_files(tmp_path):
    g = gen_L(1).graph
    write_graph(g, tmp_path / "g.txt")
    assert read_graph(tmp_path / "g.txt").edges == g.edges
    (tmp_path / "lay.txt").write_text("0 2 1 4 3 6 5\n")
    assert read_layout(tmp_path / "lay.txt", g) == LinearLayout((0, 2, 1, 4, 3, 6, 5))
    (tmp_path / "bad.txt").write_text("0 1 2\n")
    with pytest.raises(DomainError):
        read_layout(tmp_path / "bad.txt", g)
