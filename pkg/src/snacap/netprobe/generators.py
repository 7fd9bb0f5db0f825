"""Random graph generators, deterministic for a fixed seed."""

from __future__ import annotations

import random
from typing import Optional

from .graph import Graph


def er_gnm(n: int, m: int, seed: int) -> Graph:
    """Uniform random graph with exactly ``m`` edges (G(n, m))."""
    if n < 1:
        raise ValueError("n must be at least 1")
    max_edges = n * (n - 1) // 2
    if not 0 <= m <= max_edges:
        raise ValueError(f"m must be in [0, {max_edges}] for n={n}")
    rng = random.Random(seed)
    chosen: set[tuple[int, int]] = set()
    while len(chosen) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        chosen.add((u, v) if u < v else (v, u))
    return Graph(n, sorted(chosen))


def gilbert_gnp(n: int, p: float, seed: int) -> Graph:
    """Random graph with an independent inclusion trial per pair (G(n, p))."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def watts_strogatz(n: int, k: int, rewire_p: float, seed: int) -> Graph:
    """Ring lattice of degree ``k`` with each edge rewired with prob ``rewire_p``."""
    if k < 2 or k % 2 != 0:
        raise ValueError("k must be an even integer >= 2")
    if n <= k:
        raise ValueError("n must exceed k")
    if not 0.0 <= rewire_p <= 1.0:
        raise ValueError("rewire_p must be in [0, 1]")
    rng = random.Random(seed)
    adj: list[set[int]] = [set() for _ in range(n)]
    for u in range(n):
        for offset in range(1, k // 2 + 1):
            v = (u + offset) % n
            adj[u].add(v)
            adj[v].add(u)
    # Rewire the right-hand lattice edges in construction order.
    for offset in range(1, k // 2 + 1):
        for u in range(n):
            v = (u + offset) % n
            if v not in adj[u]:
                continue  # already rewired away
            if rng.random() >= rewire_p:
                continue
            if len(adj[u]) >= n - 1:
                continue  # u saturated, nothing to rewire to
            w = rng.randrange(n)
            while w == u or w in adj[u]:
                w = rng.randrange(n)
            adj[u].discard(v)
            adj[v].discard(u)
            adj[u].add(w)
            adj[w].add(u)
    edges = sorted((u, v) for u in range(n) for v in adj[u] if u < v)
    return Graph(n, edges)


def barabasi_albert(n: int, m: int, seed: int, m0: Optional[int] = None) -> Graph:
    """Preferential attachment: new nodes link to ``m`` degree-biased targets.

    Starts from a complete seed of ``m0`` nodes (default ``m``).  When the
    seed carries no edges (``m0 == 1``) the first attachment falls back to a
    uniform choice, the degree+1 smoothing of the empty start.
    """
    if m0 is None:
        m0 = max(m, 1)
    if m < 1:
        raise ValueError("m must be at least 1")
    if not m <= m0 <= n:
        raise ValueError("need m <= m0 <= n")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(m0) for v in range(u + 1, m0)]
    # Attachment sampling uses the endpoint multiset: each entry is one unit
    # of degree, so a uniform draw is degree-proportional.
    endpoints: list[int] = [x for e in edges for x in e]
    for new in range(m0, n):
        targets: set[int] = set()
        while len(targets) < m:
            if endpoints:
                targets.add(endpoints[rng.randrange(len(endpoints))])
            else:
                targets.add(rng.randrange(new))
        for t in sorted(targets):
            edges.append((t, new))
            endpoints.extend((t, new))
    return Graph(n, edges)


def generate(model: str, seed: int, **params) -> Graph:
    """Dispatch by model name; see the individual generators for params."""
    builders = {
        "er_gnm": er_gnm,
        "gilbert_gnp": gilbert_gnp,
        "watts_strogatz": watts_strogatz,
        "barabasi_albert": barabasi_albert,
    }
    if model not in builders:
        raise ValueError(f"unknown model {model!r}; expected one of {', '.join(sorted(builders))}")
    try:
        return builders[model](seed=seed, **params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {model}: {exc}") from None
