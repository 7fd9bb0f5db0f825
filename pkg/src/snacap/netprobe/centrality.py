"""Node centrality measures.

Conventions: betweenness counts unordered pairs, excludes endpoints, splits
credit across equal-length shortest paths and is not normalized.  Closeness
is computed within a node's component as (|C|-1) / sum of distances.
Eigenvector centrality power-iterates A+I (the shift avoids oscillation on
bipartite graphs) to the dominant eigenvector at unit 2-norm.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .graph import Graph
from .metrics import connected_components

PAGERANK_TOL = 1e-9
PAGERANK_MAX_ITER = 200
EIGEN_TOL = 1e-10
EIGEN_MAX_ITER = 1000


@dataclass(frozen=True)
class CentralityResult:
    measure: str
    values: dict[int, float]
    connected: bool


def degree_centrality(g: Graph) -> dict[int, float]:
    return {v: float(g.degree(v)) for v in range(g.n)}


def closeness_centrality(g: Graph) -> dict[int, float]:
    """(|C|-1) / sum-of-distances within each component; isolated nodes get 0."""
    adj = [g.neighbors(v) for v in range(g.n)]
    out = {}
    for component in connected_components(g):
        members = set(component)
        for s in component:
            if len(component) == 1:
                out[s] = 0.0
                continue
            dist = _bfs(adj, s)
            total = sum(d for t, d in dist.items() if t in members)
            out[s] = (len(component) - 1) / total
    return out


def _bfs(adj, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def _brandes(g: Graph, *, on_edges: bool = False) -> dict:
    """Brandes' accumulation; returns node or edge betweenness (undirected)."""
    adj = [g.neighbors(v) for v in range(g.n)]
    scores: dict = {}
    if on_edges:
        scores = {e: 0.0 for e in g.edges()}
    else:
        scores = {v: 0.0 for v in range(g.n)}

    for s in range(g.n):
        stack: list[int] = []
        preds: list[list[int]] = [[] for _ in range(g.n)]
        sigma = [0.0] * g.n
        sigma[s] = 1.0
        dist = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            stack.append(u)
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
                if dist[w] == dist[u] + 1:
                    sigma[w] += sigma[u]
                    preds[w].append(u)
        delta = [0.0] * g.n
        while stack:
            w = stack.pop()
            for u in preds[w]:
                credit = sigma[u] / sigma[w] * (1.0 + delta[w])
                if on_edges:
                    scores[g.edge_key(u, w)] += credit
                delta[u] += credit
            if w != s and not on_edges:
                scores[w] += delta[w]
    # Each unordered pair was visited from both endpoints.
    return {k: v / 2.0 for k, v in scores.items()}


def betweenness_centrality(g: Graph) -> dict[int, float]:
    if g.directed:
        raise ValueError("betweenness implemented for undirected graphs")
    return _brandes(g)


def edge_betweenness(g: Graph) -> dict[tuple[int, int], float]:
    if g.directed:
        raise ValueError("edge betweenness implemented for undirected graphs")
    return _brandes(g, on_edges=True)


def eigenvector_centrality(
    g: Graph,
    tol: float = EIGEN_TOL,
    max_iter: int = EIGEN_MAX_ITER,
) -> dict[int, float]:
    """Dominant eigenvector per component, unit 2-norm over each component."""
    if g.directed:
        raise ValueError("eigenvector centrality implemented for undirected graphs")
    out: dict[int, float] = {}
    for component in connected_components(g):
        x = {v: 1.0 / math.sqrt(len(component)) for v in component}
        for _ in range(max_iter):
            # One step of (A + I) x, then renormalize.
            new = {v: x[v] + sum(x[w] for w in g.neighbors(v)) for v in component}
            norm = math.sqrt(sum(val * val for val in new.values()))
            new = {v: val / norm for v, val in new.items()}
            if max(abs(new[v] - x[v]) for v in component) < tol:
                x = new
                break
            x = new
        out.update(x)
    return out


def pagerank(
    g: Graph,
    damping: float = 0.85,
    tol: float = PAGERANK_TOL,
    max_iter: int = PAGERANK_MAX_ITER,
) -> dict[int, float]:
    """Damped random-surfer scores with uniform teleport.

    Works on directed and undirected graphs; dangling mass is spread
    uniformly.  Stops when the largest per-node change drops below ``tol``.
    """
    if not 0.0 < damping < 1.0:
        raise ValueError("damping must be in (0, 1)")
    n = g.n
    if n == 0:
        return {}
    out_degree = [len(g.neighbors(v)) for v in range(n)]
    incoming = [g.in_neighbors(v) for v in range(n)]
    rank = [1.0 / n] * n
    for _ in range(max_iter):
        dangling = sum(rank[v] for v in range(n) if out_degree[v] == 0)
        base = (1.0 - damping) / n + damping * dangling / n
        new = [
            base + damping * sum(rank[u] / out_degree[u] for u in incoming[v])
            for v in range(n)
        ]
        if max(abs(new[v] - rank[v]) for v in range(n)) < tol:
            rank = new
            break
        rank = new
    return {v: rank[v] for v in range(n)}


def centrality(g: Graph, measure: str, **params) -> CentralityResult:
    """Dispatch by measure name; flags whether the graph was connected."""
    measures = {
        "degree": degree_centrality,
        "closeness": closeness_centrality,
        "betweenness": betweenness_centrality,
        "eigenvector": eigenvector_centrality,
        "pagerank": pagerank,
    }
    if measure not in measures:
        raise ValueError(f"unknown measure {measure!r}; expected one of {', '.join(sorted(measures))}")
    values = measures[measure](g, **params)
    if g.directed:
        connected = True  # component analysis is undirected-only
    else:
        connected = len(connected_components(g)) <= 1
    return CentralityResult(measure, values, connected)
