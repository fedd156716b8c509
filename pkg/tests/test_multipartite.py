import itertools

import pytest

from extremalkit.graphs import GraphError, build_complete_multipartite, contains_clique, turan_edge_count
from extremalkit.multipartite import HostSpec, ex_multipartite, merged_witness_graph
from extremalkit.oracle import max_edges_clique_free_subgraph
from extremalkit.partition import IndexPartition
from extremalkit.weighted import VertexWeighting, ex_prod


def test_examples():
    value, part = ex_multipartite(HostSpec((2, 2, 2), 3))
    assert value == 8 and part.as_lists() == [[0], [1, 2]]
    assert ex_multipartite(HostSpec((3, 2, 2, 1), 3))[0] == 16
    for r in range(1, 8):
        for clique in (3, 4, 5):
            assert ex_multipartite(HostSpec((1,) * r, clique))[0] == turan_edge_count(r, clique - 1)


def test_merged_witness_examples():
    g = merged_witness_graph(HostSpec((2, 2, 2), 3), IndexPartition(((0,), (1, 2)), 2))
    assert g.m == 8 and sorted(g.degrees()) == [2, 2, 2, 2, 4, 4]
    k3 = merged_witness_graph(HostSpec((1, 1, 1), 4), IndexPartition(((0,), (1,), (2,)), 3))
    assert k3.m == 3
    assert merged_witness_graph(HostSpec((2, 3), 3), IndexPartition(((0, 1),), 2)).m == 0


def test_reduction_matches_oracle_and_witness():
    for r in range(1, 5):
        for sizes in itertools.product(range(1, 4), repeat=r):
            if sum(sizes) > 8:
                continue
            for clique in (3, 4):
                spec = HostSpec(sizes, clique)
                value, part = ex_multipartite(spec)
                assert value == ex_prod(VertexWeighting(sizes), clique)[0]
                assert value == max_edges_clique_free_subgraph(build_complete_multipartite(*sizes), clique)[0]
                g = merged_witness_graph(spec, part)
                assert g.m == value
                assert not contains_clique(g, clique)
                assert g.is_subgraph_of(build_complete_multipartite(*sizes))


def test_large_clique_gives_full_host():
    sizes = (3, 1, 2)
    assert ex_multipartite(HostSpec(sizes, 5))[0] == build_complete_multipartite(*sizes).m


def test_validation():
    with pytest.raises(GraphError):
        HostSpec((2, 0), 3)
    with pytest.raises(GraphError):
        HostSpec((2, 2), 2)
    with pytest.raises(ValueError):
        merged_witness_graph(HostSpec((1, 1, 1), 3), IndexPartition(((0,), (1,), (2,)), 3))
