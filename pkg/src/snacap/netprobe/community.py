"""Community structure: modularity, agglomerative and divisive clustering,
k-cores and quasi-cliques."""

from __future__ import annotations

from collections import Counter, deque
from typing import Iterable, Mapping, Optional

from .centrality import edge_betweenness
from .graph import Graph
from .metrics import connected_components


def modularity(g: Graph, membership: Mapping[int, int]) -> float:
    """Partition quality against the degree-preserving random baseline.

    Equals ``(1/2m) * sum_ij [A_ij - d_i d_j / 2m] delta(s_i, s_j)`` over all
    ordered node pairs, evaluated community-by-community.
    """
    if g.directed:
        raise ValueError("modularity implemented for undirected graphs")
    if g.m == 0:
        raise ValueError("modularity undefined for an empty edge set")
    missing = [v for v in range(g.n) if v not in membership]
    if missing:
        raise ValueError(f"partition must cover every node; missing {missing[:5]}")

    m = g.m
    internal: Counter = Counter()
    degree_mass: Counter = Counter()
    for v in range(g.n):
        degree_mass[membership[v]] += g.degree(v)
    for u, v in g.edges():
        if membership[u] == membership[v]:
            internal[membership[u]] += 1
    return sum(
        internal[c] / m - (degree_mass[c] / (2.0 * m)) ** 2
        for c in degree_mass
    )


def greedy_modularity(g: Graph) -> dict[int, int]:
    """Agglomerative modularity clustering from singletons.

    Repeatedly merges the connected community pair with the largest positive
    modularity gain (ties: smallest community-id pair, ids being the smallest
    member node) and stops when no merge improves modularity.
    """
    if g.directed:
        raise ValueError("community detection implemented for undirected graphs")
    if g.m == 0:
        raise ValueError("community detection undefined for an empty edge set")

    m = float(g.m)
    community = {v: v for v in range(g.n)}
    degree_mass = {v: float(g.degree(v)) for v in range(g.n)}
    # between[a][b] = number of edges between communities a and b
    between: dict[int, Counter] = {v: Counter() for v in range(g.n)}
    for u, v in g.edges():
        between[u][v] += 1
        between[v][u] += 1

    def gain(a: int, b: int) -> float:
        return between[a][b] / m - degree_mass[a] * degree_mass[b] / (2.0 * m * m)

    while True:
        best: Optional[tuple[float, int, int]] = None
        for a in between:
            for b in between[a]:
                if a >= b:
                    continue
                dq = gain(a, b)
                if best is None or dq > best[0] + 1e-15 or (
                    abs(dq - best[0]) <= 1e-15 and (a, b) < (best[1], best[2])
                ):
                    best = (dq, a, b)
        if best is None or best[0] <= 0.0:
            break
        _, a, b = best
        # Merge b into a (a < b keeps ids at the smallest member).
        degree_mass[a] += degree_mass.pop(b)
        links = between.pop(b)
        del between[a][b]
        for c, count in links.items():
            if c == a:
                continue
            between[a][c] += count
            other = between[c]
            other[a] += count
            del other[b]
        for v, c in community.items():
            if c == b:
                community[v] = a
    return community


def girvan_newman(g: Graph, target_components: int) -> dict[int, int]:
    """Divisive clustering: cut the highest-betweenness edge until the graph
    splits into ``target_components`` pieces.

    Betweenness is recomputed after each removal; ties cut the
    lexicographically smallest edge.  Unreachable targets (fewer than the
    current component count, or more than n) are rejected.
    """
    partition, _ = _girvan_newman_run(g, target_components=target_components)
    return partition


def girvan_newman_max_modularity(g: Graph) -> dict[int, int]:
    """Run the full removal sequence and keep the best-modularity cut."""
    _, best = _girvan_newman_run(g, target_components=None)
    return best


def _components_to_membership(components: list[list[int]]) -> dict[int, int]:
    membership = {}
    for nodes in components:
        label = min(nodes)
        for v in nodes:
            membership[v] = label
    return membership


def _girvan_newman_run(
    g: Graph,
    target_components: Optional[int],
) -> tuple[dict[int, int], dict[int, int]]:
    if g.directed:
        raise ValueError("community detection implemented for undirected graphs")
    if g.n < 1:
        raise ValueError("graph must have at least one node")

    work = Graph(g.n, g.edges())
    components = connected_components(work)
    if target_components is not None:
        if not len(components) <= target_components <= g.n:
            raise ValueError(
                f"target {target_components} unreachable (between {len(components)} and {g.n})"
            )

    best_membership = _components_to_membership(components)
    best_q = modularity(g, best_membership) if g.m else 0.0
    while work.m > 0:
        if target_components is not None and len(components) >= target_components:
            break
        scores = edge_betweenness(work)
        top = max(scores.values())
        cut = min(e for e, s in scores.items() if s >= top - 1e-12)
        work = Graph(g.n, [e for e in work.edges() if e != cut])
        components = connected_components(work)
        membership = _components_to_membership(components)
        q = modularity(g, membership)
        if q > best_q + 1e-12:
            best_q = q
            best_membership = membership
    return _components_to_membership(components), best_membership


def k_core(g: Graph) -> dict[int, int]:
    """Core number of every node by iterative pruning."""
    if g.directed:
        raise ValueError("k-core implemented for undirected graphs")
    degree = {v: g.degree(v) for v in range(g.n)}
    alive = set(range(g.n))
    core: dict[int, int] = {}
    k = 0
    while alive:
        queue = deque(sorted(v for v in alive if degree[v] <= k))
        while queue:
            v = queue.popleft()
            if v not in alive:
                continue
            alive.discard(v)
            core[v] = k
            for w in g.neighbors(v):
                if w in alive:
                    degree[w] -= 1
                    if degree[w] <= k:
                        queue.append(w)
        k += 1
    return core


def quasi_clique_density(g: Graph, nodes: Iterable[int]) -> float:
    """Internal edge density of a node set (|E_S| over all pairs)."""
    members = sorted(set(nodes))
    if len(members) < 2:
        raise ValueError("density needs at least two nodes")
    internal = sum(
        1 for i, u in enumerate(members) for v in members[i + 1 :] if g.has_edge(u, v)
    )
    return internal / (len(members) * (len(members) - 1) / 2.0)


def is_gamma_dense(g: Graph, nodes: Iterable[int], gamma: float) -> bool:
    return quasi_clique_density(g, nodes) >= gamma


def greedy_quasi_clique(g: Graph, gamma: float) -> set[int]:
    """Grow a gamma-dense set from the highest-degree vertex.

    At each step the neighbor of the current set giving the highest resulting
    density is added (ties: lowest node id), as long as the result stays
    gamma-dense.
    """
    if not 0.0 < gamma <= 1.0:
        raise ValueError("gamma must be in (0, 1]")
    if g.n == 0:
        raise ValueError("graph is empty")
    if g.directed:
        raise ValueError("quasi-clique search implemented for undirected graphs")

    seed = max(range(g.n), key=lambda v: (g.degree(v), -v))
    members = {seed}
    internal = 0
    while True:
        frontier = sorted({w for v in members for w in g.neighbors(v)} - members)
        best: Optional[tuple[float, int, int]] = None  # (density, node, gained)
        for w in frontier:
            gained = sum(1 for v in members if g.has_edge(v, w))
            size = len(members) + 1
            density = (internal + gained) / (size * (size - 1) / 2.0)
            if density < gamma:
                continue
            if best is None or density > best[0] + 1e-15:
                best = (density, w, gained)
        if best is None:
            return members
        _, w, gained = best
        members.add(w)
        internal += gained
