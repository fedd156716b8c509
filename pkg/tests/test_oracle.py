import random

import pytest

from extremalkit.graphs import build_complete_multipartite, complete_graph, contains_clique, turan_edge_count
from extremalkit.oracle import (
    CapExceeded,
    Infeasible,
    max_edges_clique_free_subgraph,
    max_weight_clique_free,
    max_weight_clique_free_with_t_edges,
)
from extremalkit.weighted import VertexWeighting, min_weight, product_weight, weight_of


def test_weighted_examples():
    assert max_weight_clique_free(3, min_weight(VertexWeighting.of(2, 1, 1)), 3)[0] == 2
    assert max_weight_clique_free(4, min_weight(VertexWeighting.of(1, 1, 1, 1)), 3)[0] == 4
    assert max_weight_clique_free(5, min_weight(VertexWeighting.of(5, 4, 3, 2, 1)), 3)[0] == 13


def test_t_edge_examples():
    W = VertexWeighting.of(2, 1, 1)
    assert max_weight_clique_free_with_t_edges(3, W, 3, 0) == 0
    assert max_weight_clique_free_with_t_edges(3, W, 3, 2) == 2
    with pytest.raises(Infeasible):
        max_weight_clique_free_with_t_edges(4, VertexWeighting.of(1, 1, 1, 1), 3, 5)


def test_host_examples():
    assert max_edges_clique_free_subgraph(complete_graph(4), 3)[0] == 4
    assert max_edges_clique_free_subgraph(build_complete_multipartite(2, 2, 2), 3)[0] == 8
    assert max_edges_clique_free_subgraph(build_complete_multipartite(1, 1, 1), 4)[0] == 3


def test_unit_weights_give_turan():
    for n in range(1, 9):
        W = VertexWeighting((1,) * n)
        for clique in (3, 4):
            value, g = max_weight_clique_free(n, min_weight(W), clique)
            assert value == turan_edge_count(n, clique - 1)
            assert not contains_clique(g, clique)


def test_feasibility_threshold():
    for n in range(2, 7):
        W = VertexWeighting((1,) * n)
        for clique in (3, 4):
            cap = turan_edge_count(n, clique - 1)
            for t in range(n * (n - 1) // 2 + 1):
                if t <= cap:
                    assert max_weight_clique_free_with_t_edges(n, W, clique, t) == t
                else:
                    with pytest.raises(Infeasible):
                        max_weight_clique_free_with_t_edges(n, W, clique, t)


def test_witness_is_valid_and_weighs_the_value():
    rng = random.Random(8)
    for _ in range(60):
        n = rng.randint(2, 7)
        W = VertexWeighting(tuple(rng.randint(0, 9) for _ in range(n)))
        for w in (min_weight(W), product_weight(W)):
            value, g = max_weight_clique_free(n, w, 3)
            assert not contains_clique(g, 3)
            assert weight_of(g, w) == value


def test_relabel_and_equal_weight_invariance():
    rng = random.Random(9)
    for _ in range(30):
        n = rng.randint(3, 6)
        ws = [rng.randint(0, 5) for _ in range(n)]
        perm = list(range(n))
        rng.shuffle(perm)
        permuted = [0] * n
        for v in range(n):
            permuted[perm[v]] = ws[v]
        a = max_weight_clique_free(n, product_weight(VertexWeighting(tuple(ws))), 4)[0]
        b = max_weight_clique_free(n, product_weight(VertexWeighting(tuple(permuted))), 4)[0]
        assert a == b
    host = build_complete_multipartite(3, 2, 1)
    perm = [5, 0, 3, 1, 4, 2]
    assert max_edges_clique_free_subgraph(host.relabel(perm), 3)[0] == max_edges_clique_free_subgraph(host, 3)[0]


def test_caps_are_hard_errors():
    W = VertexWeighting((1,) * 9)
    with pytest.raises(CapExceeded):
        max_weight_clique_free(9, min_weight(W), 3)
    with pytest.raises(CapExceeded):
        max_weight_clique_free_with_t_edges(8, VertexWeighting((1,) * 8), 3, 3)
    with pytest.raises(CapExceeded):
        max_edges_clique_free_subgraph(complete_graph(8), 3)
