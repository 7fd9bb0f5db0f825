"""Centrality examples plus brute-force oracles.

The betweenness oracle enumerates every shortest path explicitly (DFS over
the BFS predecessor structure) and tallies interior nodes; the closeness
oracle uses Floyd-Warshall distances.  Both are independent of the Brandes
implementation under test.
"""

import itertools
import math

import pytest

from snacap.netprobe import (
    Graph,
    betweenness_centrality,
    centrality,
    closeness_centrality,
    degree_centrality,
    eigenvector_centrality,
    pagerank,
)
from snacap.netprobe.centrality import edge_betweenness

from conftest import complete_graph, cycle_graph, path_graph, random_graph, star_graph


def floyd_warshall(g: Graph):
    INF = math.inf
    dist = [[INF] * g.n for _ in range(g.n)]
    for v in range(g.n):
        dist[v][v] = 0
    for u, v in g.edges():
        dist[u][v] = dist[v][u] = 1
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if dist[i][k] + dist[k][j] < dist[i][j]:
                    dist[i][j] = dist[i][k] + dist[k][j]
    return dist


def enumerate_shortest_paths(g: Graph, s: int, t: int, dist):
    """All shortest s-t paths as node tuples, by DFS over distance layers."""
    if math.isinf(dist[s][t]):
        return []
    paths = []

    def walk(node, path):
        if node == t:
            paths.append(tuple(path))
            return
        for w in g.neighbors(node):
            if dist[s][w] == dist[s][node] + 1 and dist[w][t] == dist[s][t] - dist[s][w]:
                walk(w, path + [w])

    walk(s, [s])
    return paths


def betweenness_oracle(g: Graph):
    dist = floyd_warshall(g)
    scores = {v: 0.0 for v in range(g.n)}
    for s, t in itertools.combinations(range(g.n), 2):
        paths = enumerate_shortest_paths(g, s, t, dist)
        if not paths:
            continue
        for path in paths:
            for interior in path[1:-1]:
                scores[interior] += 1.0 / len(paths)
    return scores


def closeness_oracle(g: Graph):
    dist = floyd_warshall(g)
    out = {}
    for v in range(g.n):
        reachable = [dist[v][t] for t in range(g.n) if t != v and not math.isinf(dist[v][t])]
        out[v] = len(reachable) / sum(reachable) if reachable and sum(reachable) else 0.0
    return out


class TestDegree:
    def test_star(self):
        values = degree_centrality(star_graph(5))
        assert values[0] == 5.0
        assert all(values[v] == 1.0 for v in range(1, 6))


class TestCloseness:
    def test_path_middle_is_most_central(self):
        values = closeness_centrality(path_graph(3))
        assert values[1] == pytest.approx(2 / 2)
        assert values[0] == pytest.approx(2 / 3)

    def test_disconnected_uses_components(self):
        g = Graph(4, [(0, 1), (2, 3)])
        values = closeness_centrality(g)
        assert values == {0: 1.0, 1: 1.0, 2: 1.0, 3: 1.0}

    def test_matches_floyd_warshall_oracle(self, rng):
        for trial in range(30):
            g = random_graph(rng.randint(4, 14), 0.3, rng)
            expected = closeness_oracle(g)
            actual = closeness_centrality(g)
            for v in range(g.n):
                assert actual[v] == pytest.approx(expected[v], abs=1e-9)

    def test_isolated_node_zero(self):
        assert closeness_centrality(Graph(2))[0] == 0.0


class TestBetweenness:
    def test_p3_middle(self):
        values = betweenness_centrality(path_graph(3))
        assert values == {0: 0.0, 1: 1.0, 2: 0.0}

    def test_star_center_collects_all_pairs(self):
        values = betweenness_centrality(star_graph(5))
        assert values[0] == pytest.approx(math.comb(5, 2))

    def test_cycle_splits_credit(self):
        values = betweenness_centrality(cycle_graph(4))
        # the two paths between opposite corners each credit 1/2
        assert all(v == pytest.approx(0.5) for v in values.values())

    def test_matches_path_enumeration_oracle(self, rng):
        for trial in range(30):
            g = random_graph(rng.randint(4, 14), 0.3, rng)
            expected = betweenness_oracle(g)
            actual = betweenness_centrality(g)
            for v in range(g.n):
                assert actual[v] == pytest.approx(expected[v], abs=1e-9)

    def test_edge_betweenness_bridge_is_heaviest(self):
        from conftest import two_k4_bridge

        scores = edge_betweenness(two_k4_bridge())
        assert max(scores, key=scores.get) == (3, 4)
        assert scores[(3, 4)] == pytest.approx(16.0)  # all 4x4 cross pairs


class TestEigenvector:
    def test_star_center_dominates(self):
        values = eigenvector_centrality(star_graph(4))
        assert values[0] > values[1] > 0

    def test_unit_norm(self):
        values = eigenvector_centrality(complete_graph(5))
        assert math.sqrt(sum(v * v for v in values.values())) == pytest.approx(1.0)
        assert all(v == pytest.approx(1 / math.sqrt(5)) for v in values.values())

    def test_path_converges_despite_bipartite_spectrum(self):
        values = eigenvector_centrality(path_graph(3))
        # dominant eigenvector of P3 is (1, sqrt(2), 1) normalized
        expected = 1 / math.sqrt(4)
        assert values[1] == pytest.approx(math.sqrt(2) / 2, abs=1e-6)
        assert values[0] == pytest.approx(expected, abs=1e-6)


class TestPagerank:
    def test_cycle_is_uniform(self):
        values = pagerank(cycle_graph(4))
        assert all(v == pytest.approx(0.25, abs=1e-9) for v in values.values())

    def test_scores_sum_to_one(self, rng):
        for _ in range(10):
            g = random_graph(15, 0.2, rng)
            assert sum(pagerank(g).values()) == pytest.approx(1.0, abs=1e-6)

    def test_directed_sink_accumulates(self):
        g = Graph(3, [(0, 2), (1, 2)], directed=True)
        values = pagerank(g)
        assert values[2] > values[0]
        assert values[0] == pytest.approx(values[1])

    def test_damping_validated(self):
        with pytest.raises(ValueError):
            pagerank(cycle_graph(4), damping=0.0)


class TestDispatcher:
    def test_connected_flag(self):
        result = centrality(Graph(4, [(0, 1), (2, 3)]), "degree")
        assert not result.connected
        assert centrality(cycle_graph(4), "degree").connected

    def test_unknown_measure(self):
        with pytest.raises(ValueError, match="unknown measure"):
            centrality(cycle_graph(4), "fame")
