import itertools
import random

import numpy as np
import pytest

from expminors.errors import InputError, NotConnectedError
from expminors.graph import (INFINITY, Graph, ball, bfs, connected_components, diameter, distance,
                             external_neighborhood, format_edge_list, induced_subgraph, is_connected,
                             parse_edge_list, read_edge_list, shortest_path, spanning_tree, write_edge_list)
from expminors.generators import gen_gnp

import oracles

C8 = Graph.cycle(8)
K4 = Graph.complete(4)


def test_graph_rejects_loops_and_duplicates():
    with pytest.raises(InputError):
        Graph(3, [(0, 0)])
    with pytest.raises(InputError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        Graph(3, [(0, 3)])
    assert Graph(3, [(0, 1), (1, 0)], dedupe=True).edge_count == 1


def test_adjacency_sorted_and_symmetric():
    g = gen_gnp(40, 0.2, 5)
    for u in range(g.n):
        nb = list(g.adj(u))
        assert nb == sorted(nb)
        for v in nb:
            assert u in g.adj(v)


def test_external_neighborhood_examples():
    assert external_neighborhood(K4, {0}) == {1, 2, 3}
    assert external_neighborhood(C8, set()) == frozenset()
    assert external_neighborhood(C8, {0, 1}) == {2, 7}
    with pytest.raises(InputError):
        external_neighborhood(C8, {8})


def test_ball_examples():
    assert ball(C8, {0}, 0) == {0}
    assert ball(C8, {0}, 2) == {6, 7, 0, 1, 2}
    with pytest.raises(InputError):
        ball(C8, set(), 1)


def test_ball_recurrence():
    g = gen_gnp(60, 0.06, 2)
    U = {3, 17}
    for z in range(5):
        inner = ball(g, U, z)
        assert ball(g, U, z + 1) == inner | external_neighborhood(g, inner)


def test_distance_examples():
    assert distance(C8, {1, 2}, {2, 5}) == 0
    assert distance(C8, {0}, {4}) == 4
    two = Graph(4, [(0, 1), (2, 3)])
    assert distance(two, {0}, {3}) is INFINITY
    assert distance(two, {0}, {3}) > 10 ** 9
    with pytest.raises(TypeError):
        distance(two, {0}, {3}) + 1
    with pytest.raises(InputError):
        distance(C8, set(), {1})


def test_distance_triangle_inequality():
    g = gen_gnp(30, 0.1, 11)
    for a, b, c in itertools.combinations(range(0, 30, 3), 3):
        ab, bc, ac = distance(g, {a}, {b}), distance(g, {b}, {c}), distance(g, {a}, {c})
        if ab is not INFINITY and bc is not INFINITY:
            assert ac <= ab + bc


def test_shortest_path_examples():
    assert shortest_path(C8, {3}, {3, 5}) == [3]
    assert shortest_path(C8, {0}, {2}) == [0, 1, 2]
    # the tie between both directions goes to the smaller-id parent
    assert shortest_path(C8, {0}, {4}) == [0, 1, 2, 3, 4]
    with pytest.raises(NotConnectedError):
        shortest_path(Graph(4, [(0, 1), (2, 3)]), {0}, {3})


def test_shortest_path_length_matches_independent_bfs():
    rnd = random.Random(0)
    for seed in range(10):
        g = gen_gnp(80, 0.04, seed)
        edges = g.edges()
        for _ in range(1000):
            s, t = rnd.randrange(80), rnd.randrange(80)
            ref = oracles.bfs_dist(80, edges, [s]).get(t)
            if ref is None:
                with pytest.raises(NotConnectedError):
                    shortest_path(g, {s}, {t})
                continue
            path = shortest_path(g, {s}, {t})
            assert len(path) - 1 == ref
            assert all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


def test_induced_subgraph_examples():
    sub, ids = induced_subgraph(C8, range(8))
    assert sub == C8 and list(ids) == list(range(8))
    sub, _ = induced_subgraph(K4, {0, 1})
    assert sub.edges() == [(0, 1)]
    sub, ids = induced_subgraph(C8, {0, 1, 4, 5})
    assert sub.edges() == [(0, 1), (2, 3)] and list(ids) == [0, 1, 4, 5]


def test_induced_subgraph_composes():
    g = gen_gnp(50, 0.1, 3)
    X = set(range(0, 50, 2))
    sub, ids = induced_subgraph(g, X)
    inner, inner_ids = induced_subgraph(sub, range(0, sub.n, 3))
    direct, direct_ids = induced_subgraph(g, ids[inner_ids])
    assert inner == direct
    assert list(ids[inner_ids]) == list(direct_ids)


def test_spanning_tree_examples():
    tree = Graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    assert sorted(spanning_tree(tree)) == tree.edges()
    t8 = spanning_tree(C8)
    assert len(t8) == 7 and len(set(C8.edges()) - set(t8)) == 1
    assert sorted(spanning_tree(K4)) == [(0, 1), (0, 2), (0, 3)]
    with pytest.raises(NotConnectedError):
        spanning_tree(Graph(4, [(0, 1), (2, 3)]))


def test_components_partition_vertices():
    g = gen_gnp(60, 0.02, 8)
    comps = connected_components(g)
    assert sorted(v for c in comps for v in c) == list(range(60))
    ref = oracles.bfs_dist(60, g.edges(), [0])
    assert next(c for c in comps if 0 in c) == set(ref)
    assert is_connected(g) == (len(comps) == 1)


def test_diameter_matches_oracle():
    for seed in range(5):
        g = gen_gnp(40, 0.15, seed)
        assert diameter(g) == oracles.naive_diameter(40, g.edges())


def test_bfs_parent_is_smallest_previous_level_vertex():
    dist, parent = bfs(C8, np.array([0]))
    assert dist.tolist() == [0, 1, 2, 3, 4, 3, 2, 1]
    assert parent[4] == 3


def test_edge_list_round_trip(tmp_path):
    g = gen_gnp(30, 0.2, 1)
    text = format_edge_list(g)
    assert text.splitlines()[0] == f"30 {g.edge_count}"
    assert parse_edge_list(text) == g
    path = tmp_path / "g.txt"
    write_edge_list(g, path)
    assert read_edge_list(path) == g


@pytest.mark.parametrize("text", ["3 1\n0 0\n", "3 2\n0 1\n1 0\n", "3 2\n0 1\n", "2 1\n0 5\n", "x\n"])
def test_edge_list_reader_rejects_bad_input(text):
    with pytest.raises(InputError):
        parse_edge_list(text)
