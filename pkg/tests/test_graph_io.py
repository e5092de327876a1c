import networkx as nx
import pytest
from hypothesis import given, settings

from arlab.errors import InvalidParameter
from arlab.graph_core import Graph, complete, empty, friendship
from arlab.graph_io import from_graph6, from_json, graph_from_dict, to_graph6, to_json
from test_graph_core import graphs


def test_known_strings():
    assert to_graph6(friendship(2)) == "D{c"
    assert to_graph6(complete(3)) == "Bw"
    assert to_graph6(empty(0)) == "?"
    assert from_graph6(">>graph6<<Bw") == complete(3)


@given(graphs(10))
@settings(max_examples=200, deadline=None)
def test_graph6_round_trip_and_networkx(g):
    s = to_graph6(g)
    assert from_graph6(s) == g
    h = nx.from_graph6_bytes(s.encode())
    assert sorted(tuple(sorted(e)) for e in h.edges()) == g.edges()


def test_large_n_header():
    g = Graph.from_edges(70, [(0, 69)])
    assert from_graph6(to_graph6(g)) == g
    h = nx.empty_graph(70)
    h.add_edge(0, 69)
    assert to_graph6(g) == nx.to_graph6_bytes(h, header=False).decode().strip()


def test_graph6_rejects_garbage():
    with pytest.raises(InvalidParameter):
        from_graph6("Bww")
    with pytest.raises(InvalidParameter):
        from_graph6("")


def test_json_round_trip():
    g = friendship(2)
    assert from_json(to_json(g)) == g
    assert to_json(complete(2)) == '{"n": 2, "edges": [[0, 1]]}'
    with pytest.raises(InvalidParameter):
        graph_from_dict({"edges": []})
