"""Graph container: adjacency, masks, distances, subset enumeration."""

import math

import numpy as np
import pytest

from gtcentrality.errors import GraphError
from gtcentrality.fixtures import chain5, sample9, simple5, spider9
from gtcentrality.graph import Graph, mask_nodes, nodes_mask, popcount

from conftest import random_connected_graph, random_graph


def test_mask_helpers_round_trip():
    rng = np.random.default_rng(0)
    for _ in range(100):
        nodes = sorted(rng.choice(40, size=rng.integers(0, 12), replace=False).tolist())
        mask = nodes_mask(nodes)
        assert list(mask_nodes(mask)) == nodes
        assert popcount(mask) == len(nodes)


def test_undirected_edges_symmetric():
    g = simple5()
    assert g.n == 5 and g.m == 5
    assert sorted(g.neighbors(1)) == [0, 2, 3]
    assert g.neighbors(1) == g.in_neighbors(1)
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert g.degrees().tolist() == [2, 3, 1, 3, 1]


def test_directed_adjacency_split():
    g = chain5()
    assert g.directed
    assert g.neighbors(2) == [3]
    assert sorted(g.in_neighbors(2)) == [1, 4]
    assert g.has_edge(1, 2) and not g.has_edge(2, 1)


def test_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 5)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1, -1.0)])
    # antiparallel arcs are fine when directed
    g = Graph(3, [(0, 1), (1, 0)], directed=True)
    assert g.m == 2


def test_components_and_connectivity():
    g = Graph(6, [(0, 1), (1, 2), (3, 4)])
    comps = g.components()
    assert sorted(popcount(c) for c in comps) == [1, 2, 3]
    assert not g.is_connected()
    assert g.is_connected(nodes_mask([0, 1, 2]))
    assert not g.is_connected(nodes_mask([0, 2, 3]))
    assert g.is_connected(nodes_mask([4]))
    assert simple5().is_connected()


def test_components_respect_coalition_restriction():
    g = simple5()
    # dropping b splits c off; a-d-e stay together through the a-d edge
    comps = g.components(nodes_mask([0, 2, 3, 4]))
    sizes = sorted(popcount(c) for c in comps)
    assert sizes == [1, 3]


def test_shortest_distances_unweighted_bfs():
    g = sample9()
    d = g.shortest_distances(0)
    assert d[0] == 0 and d[2] == 1 and d[3] == 2 and d[7] == 5
    total = g.distance_matrix().sum(axis=1)
    assert sorted(total.tolist()) == [15, 16, 16, 21, 21, 23, 23, 23, 26]


def test_shortest_distances_weighted_dijkstra():
    g = Graph(4, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 2.5), (2, 3, 1.0)])
    d = g.shortest_distances(0)
    assert d.tolist() == [0.0, 1.0, 2.0, 3.0]


def test_unreachable_distance_is_inf():
    g = Graph(3, [(0, 1)])
    d = g.shortest_distances(0)
    assert d[2] == math.inf


def test_directed_distances_follow_arcs():
    g = chain5()
    d = g.shortest_distances(0)
    assert d.tolist() == [0.0, 1.0, 2.0, 3.0, math.inf]
    assert g.shortest_distances(4)[2] == 1.0


def test_random_distances_match_brute_force():
    rng = np.random.default_rng(7)
    for _ in range(20):
        g = random_graph(rng, 7, 0.35, weighted=bool(rng.integers(0, 2)))
        dm = g.distance_matrix()
        # Floyd-Warshall as the independent oracle
        n = g.n
        ref = np.full((n, n), math.inf)
        np.fill_diagonal(ref, 0.0)
        for u, v in g.edges():
            w = g.weight(u, v)
            ref[u][v] = min(ref[u][v], w)
            ref[v][u] = min(ref[v][u], w)
        for k in range(n):
            for i in range(n):
                for j in range(n):
                    ref[i][j] = min(ref[i][j], ref[i][k] + ref[k][j])
        assert np.allclose(dm, ref)


def test_neighbor_set_of_coalition():
    g = spider9()
    # legs: 0-1-2, 0-3-4, 0-5-6, 0-7-8
    assert g.neighbor_set(nodes_mask([1, 2])) == nodes_mask([0])
    assert g.neighbor_set(nodes_mask([0])) == nodes_mask([1, 3, 5, 7])


def test_enumerate_connected_subsets_counts():
    g = simple5()
    subsets = list(g.enumerate_connected_subsets())
    masks = [s for s, _ in subsets]
    assert len(masks) == len(set(masks))
    # ground truth: filter all non-empty subsets by connectivity
    expected = [m for m in range(1, 32) if g.is_connected(m)]
    assert sorted(masks) == sorted(expected)
    for s_mask, x_mask in subsets:
        assert x_mask == g.neighbor_set(s_mask)
        assert not (s_mask & x_mask)


def test_enumerate_connected_subsets_random():
    rng = np.random.default_rng(3)
    for _ in range(10):
        g = random_graph(rng, rng.integers(2, 8), 0.3)
        got = sorted(s for s, _ in g.enumerate_connected_subsets())
        want = sorted(m for m in range(1, 1 << g.n) if g.is_connected(m))
        assert got == want


def test_simple_path_enumeration():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    paths = list(g.enumerate_simple_paths())
    # cycle C4: paths of length 1,2,3 in each direction
    lengths = sorted(len(p) for p in paths)
    assert lengths.count(2) == 8      # one per arc direction
    assert all(len(set(p)) == len(p) for p in paths)
    rev = {tuple(reversed(p)) for p in map(tuple, paths)}
    assert rev == set(map(tuple, paths))


def test_labels_and_index_of():
    g = simple5()
    assert g.labels == list("abcde")
    assert g.index_of("d") == 3
    with pytest.raises(GraphError):
        g.index_of("z")


def test_random_connected_builder_is_connected():
    rng = np.random.default_rng(11)
    for _ in range(25):
        g = random_connected_graph(rng, int(rng.integers(2, 9)))
        assert g.is_connected()
