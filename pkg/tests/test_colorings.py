import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arlab.colorings import (
    EdgeColoring,
    all_rainbow,
    color_classes,
    coloring_clique_plus_C,
    coloring_k2_star,
    coloring_lower_friendship,
    coloring_two_cliques,
    colors_used,
    edge_index,
    monochromatic,
    normalize,
    representative_rainbow_subgraph,
)
from arlab.errors import InvalidParameter
from arlab.graph_core import Graph, complete, is_isomorphic, strip_isolated, union
from arlab.matching import matching_number


@st.composite
def colorings(draw, max_n=8, max_colors=None):
    n = draw(st.integers(2, max_n))
    m = n * (n - 1) // 2
    top = max_colors or m
    labels = draw(st.lists(st.integers(1, top), min_size=m, max_size=m))
    return normalize(labels, n)


def test_edge_index_is_lex_order():
    n = 6
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    assert [edge_index(n, u, v) for u, v in pairs] == list(range(len(pairs)))
    assert edge_index(n, 4, 1) == edge_index(n, 1, 4)


def test_k2_star():
    c = coloring_k2_star(7)
    assert colors_used(c) == 3 == c.r
    assert c.color(0, 1) == 1
    assert all(c.color(0, j) == 2 for j in range(2, 7))
    assert all(c.color(i, j) == 3 for i in range(1, 7) for j in range(i + 1, 7))
    with pytest.raises(InvalidParameter):
        coloring_k2_star(3)


def test_two_cliques():
    c = coloring_two_cliques(27, 3)
    assert c.r == 7
    assert coloring_two_cliques(75, 5).r == 21
    with pytest.raises(InvalidParameter):
        coloring_two_cliques(27, 4)
    with pytest.raises(InvalidParameter):
        coloring_two_cliques(5, 3)


def test_two_cliques_representative_shape():
    c = coloring_two_cliques(27, 3)
    rep = representative_rainbow_subgraph(c)
    # two triangles plus the smallest filler edge (0, 3)
    assert rep.edges() == [(0, 1), (0, 2), (0, 3), (1, 2), (3, 4), (3, 5), (4, 5)]
    support = [e for cls in color_classes(c) if len(cls) == 1 for e in cls]
    assert is_isomorphic(strip_isolated(Graph.from_edges(27, support)), union(complete(3), complete(3)))
    last = representative_rainbow_subgraph(c, pick=lambda col, es: max(es))
    assert last.num_edges() == 7 and last.has_edge(25, 26)


def test_clique_plus_c():
    c = coloring_clique_plus_C(48, 4)
    assert c.r == 11
    support = Graph.from_edges(48, [cls[0] for cls in color_classes(c) if len(cls) == 1])
    assert support.num_edges() == 10 and matching_number(support) == 3
    with pytest.raises(InvalidParameter):
        coloring_clique_plus_C(48, 3)


def test_lower_friendship():
    assert coloring_lower_friendship(30, 2).r == 227
    assert coloring_lower_friendship(20, 2).r == 102
    assert coloring_lower_friendship(10, 1).r == 26


def test_json_is_bit_exact():
    c = coloring_k2_star(4)
    assert c.to_json() == (
        '{"n": 4, "r": 3, "edges": [[0, 1, 1], [0, 2, 2], [0, 3, 2], [1, 2, 3], [1, 3, 3], [2, 3, 3]]}'
    )
    assert EdgeColoring.from_json(c.to_json()) == c
    with pytest.raises(InvalidParameter):
        EdgeColoring.from_dict({"n": 3, "r": 2, "edges": [[0, 1, 5], [0, 2, 5], [1, 2, 5]]})


def test_coloring_validation():
    with pytest.raises(InvalidParameter):
        EdgeColoring(3, (1, 2))
    with pytest.raises(InvalidParameter):
        EdgeColoring(3, (1, 3, 3))
    with pytest.raises(InvalidParameter):
        normalize({(0, 1): "a"}, 3)


def test_normalize_by_rank():
    c = normalize({(0, 1): 10, (0, 2): 0, (1, 2): 10})
    assert c.colors == (2, 1, 2)
    assert normalize(["b", "a", "b"], 3).colors == (2, 1, 2)


@given(colorings())
@settings(max_examples=200, deadline=None)
def test_normalize_idempotent_and_classes_partition(c):
    assert normalize(c) == c
    assert normalize(list(c.colors), c.n) == c
    classes = color_classes(c)
    assert sum(len(x) for x in classes) == c.n * (c.n - 1) // 2
    assert all(classes) and len(classes) == colors_used(c)


@given(colorings())
@settings(max_examples=200, deadline=None)
def test_representative_is_rainbow(c):
    rep = representative_rainbow_subgraph(c)
    assert rep.num_edges() == colors_used(c)
    assert len({c.color(u, v) for u, v in rep.edges()}) == rep.num_edges()


def test_representative_trivial_cases():
    assert representative_rainbow_subgraph(all_rainbow(4)) == complete(4)
    assert representative_rainbow_subgraph(monochromatic(5)).num_edges() == 1
    with pytest.raises(InvalidParameter):
        representative_rainbow_subgraph(monochromatic(4), pick=lambda col, es: (0, 9))


def test_random_relabel_keeps_counts():
    rng = random.Random(1)
    for _ in range(20):
        n = rng.randint(2, 9)
        labels = [rng.randint(1, 5) for _ in range(n * (n - 1) // 2)]
        c = normalize(labels, n)
        assert c.r == len(set(labels))
