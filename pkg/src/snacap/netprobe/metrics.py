"""Whole-graph metrics: degrees, clustering, paths, components, balance."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph


@dataclass(frozen=True)
class GraphReport:
    n: int
    m: int
    density: float
    mean_degree: float
    degree_histogram: dict[int, int]
    triangle_count: int
    global_clustering: float
    component_count: int
    largest_component_size: int
    disconnected: bool
    # Path metrics refer to the largest component when disconnected.
    average_path_length: float
    diameter: int


@dataclass(frozen=True)
class BalanceReport:
    balanced_triangles: int
    unbalanced_triangles: int
    is_balanced: bool


def _require_undirected(g: Graph) -> None:
    if g.directed:
        raise ValueError("metric defined for undirected graphs")


def bfs_distances(adj: Sequence[set[int]] | Sequence[tuple[int, ...]], source: int) -> dict[int, int]:
    """Hop distances from ``source`` to every reachable node."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted node lists, largest first (ties by smallest node)."""
    _require_undirected(g)
    seen: set[int] = set()
    components = []
    adj = [g.neighbors(v) for v in range(g.n)]
    for start in range(g.n):
        if start in seen:
            continue
        nodes = sorted(bfs_distances(adj, start))
        seen.update(nodes)
        components.append(nodes)
    components.sort(key=lambda c: (-len(c), c[0]))
    return components


def triangle_count(g: Graph) -> int:
    _require_undirected(g)
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    count = 0
    for u, v in g.edges():
        count += sum(1 for w in adj[u] & adj[v] if w > v)
    return count


def connected_triples(g: Graph) -> int:
    """Paths of length two (the clustering denominator)."""
    return sum(d * (d - 1) // 2 for d in (g.degree(v) for v in range(g.n)))


def global_clustering(g: Graph) -> float:
    """Transitivity: 3 * triangles / connected triples (0 when no triples)."""
    triples = connected_triples(g)
    if triples == 0:
        return 0.0
    return 3.0 * triangle_count(g) / triples


def local_clustering(g: Graph, v: int) -> float:
    """Edge density among the neighbors of ``v`` (0 for degree < 2)."""
    _require_undirected(g)
    neighbors = g.neighbors(v)
    d = len(neighbors)
    if d < 2:
        return 0.0
    links = sum(
        1
        for i, a in enumerate(neighbors)
        for b in neighbors[i + 1 :]
        if g.has_edge(a, b)
    )
    return 2.0 * links / (d * (d - 1))


def path_metrics(g: Graph, nodes: Sequence[int]) -> tuple[float, int]:
    """(average shortest path length, diameter) over one connected node set."""
    if len(nodes) < 2:
        return 0.0, 0
    adj = [g.neighbors(v) for v in range(g.n)]
    node_set = set(nodes)
    total = 0
    pairs = 0
    diameter = 0
    for s in nodes:
        dist = bfs_distances(adj, s)
        for t, d in dist.items():
            if t in node_set and t > s:
                total += d
                pairs += 1
                diameter = max(diameter, d)
    return total / pairs, diameter


def basic_metrics(g: Graph) -> GraphReport:
    """One-shot structural report; path metrics use the largest component."""
    _require_undirected(g)
    if g.n < 1:
        raise ValueError("graph must have at least one node")
    degrees = [g.degree(v) for v in range(g.n)]
    histogram: dict[int, int] = {}
    for d in degrees:
        histogram[d] = histogram.get(d, 0) + 1
    components = connected_components(g)
    largest = components[0]
    apl, diameter = path_metrics(g, largest)
    return GraphReport(
        n=g.n,
        m=g.m,
        density=2.0 * g.m / (g.n * (g.n - 1)) if g.n > 1 else 0.0,
        mean_degree=sum(degrees) / g.n,
        degree_histogram=dict(sorted(histogram.items())),
        triangle_count=triangle_count(g),
        global_clustering=global_clustering(g),
        component_count=len(components),
        largest_component_size=len(largest),
        disconnected=len(components) > 1,
        average_path_length=apl,
        diameter=diameter,
    )


def triad_balance(g: Graph) -> BalanceReport:
    """Classify every triangle of a signed graph.

    A triangle is balanced iff it carries an even number of negative edges;
    the graph is balanced iff no unbalanced triangle exists.  Every edge must
    be signed.
    """
    _require_undirected(g)
    unsigned = [e for e in g.edges() if e not in g.signs]
    if unsigned:
        raise ValueError(f"unsigned edges present, e.g. {unsigned[0]}")
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    balanced = 0
    unbalanced = 0
    for u, v in g.edges():
        for w in adj[u] & adj[v]:
            if w <= v:
                continue
            negatives = sum(1 for s in (g.sign(u, v), g.sign(u, w), g.sign(v, w)) if s < 0)
            if negatives % 2 == 0:
                balanced += 1
            else:
                unbalanced += 1
    return BalanceReport(balanced, unbalanced, unbalanced == 0)
