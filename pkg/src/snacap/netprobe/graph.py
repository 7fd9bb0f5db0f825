"""Simple graph container and the edge-list file format.

Nodes are integers ``0..n-1``.  Graphs are undirected by default and always
simple: no self-loops, no duplicate edges.  Edges may carry an optional
weight and an optional sign (+1/-1).  The container is immutable once
built; algorithms that remove edges work on adjacency copies.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional

Edge = tuple[int, int]


class Graph:
    __slots__ = ("n", "directed", "_adj", "_in", "_edges", "weights", "signs")

    def __init__(
        self,
        n: int,
        edges: Iterable[Edge] = (),
        *,
        directed: bool = False,
        weights: Optional[Mapping[Edge, float]] = None,
        signs: Optional[Mapping[Edge, int]] = None,
    ):
        if n < 0:
            raise ValueError("node count must be non-negative")
        self.n = n
        self.directed = directed
        self._adj: list[set[int]] = [set() for _ in range(n)]
        self._in: list[set[int]] = [set() for _ in range(n)] if directed else self._adj
        edge_list: list[Edge] = []
        for u, v in edges:
            key = self.edge_key(u, v)
            self._check_node(u)
            self._check_node(v)
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if v in self._adj[u]:
                raise ValueError(f"duplicate edge {key}")
            self._adj[u].add(v)
            if directed:
                self._in[v].add(u)
            else:
                self._adj[v].add(u)
            edge_list.append(key)
        self._edges: tuple[Edge, ...] = tuple(sorted(edge_list))

        self.weights: dict[Edge, float] = {}
        self.signs: dict[Edge, int] = {}
        for mapping, store, what in ((weights, self.weights, "weight"), (signs, self.signs, "sign")):
            if not mapping:
                continue
            for (u, v), value in mapping.items():
                key = self.edge_key(u, v)
                if not self.has_edge(u, v):
                    raise ValueError(f"{what} given for missing edge {key}")
                store[key] = value
        for key, sign in self.signs.items():
            if sign not in (1, -1):
                raise ValueError(f"sign of edge {key} must be +1 or -1, got {sign}")

    def _check_node(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"node {v} out of range [0, {self.n})")

    def edge_key(self, u: int, v: int) -> Edge:
        if self.directed:
            return (u, v)
        return (u, v) if u <= v else (v, u)

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Out-neighbors in sorted order (sorted keeps runs deterministic)."""
        self._check_node(v)
        return tuple(sorted(self._adj[v]))

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        self._check_node(v)
        return tuple(sorted(self._in[v]))

    def degree(self, v: int) -> int:
        self._check_node(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_node(u)
        self._check_node(v)
        return v in self._adj[u]

    def sign(self, u: int, v: int) -> Optional[int]:
        return self.signs.get(self.edge_key(u, v))

    def weight(self, u: int, v: int) -> Optional[float]:
        return self.weights.get(self.edge_key(u, v))

    def adjacency_copy(self) -> list[set[int]]:
        """Mutable adjacency sets for edge-removal algorithms."""
        return [set(s) for s in self._adj]

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"Graph(n={self.n}, m={self.m}, {kind})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.directed == other.directed
            and self._edges == other._edges
            and self.weights == other.weights
            and self.signs == other.signs
        )

    def __hash__(self) -> int:
        return hash((self.n, self.directed, self._edges))


def parse_edge_list(text: str, *, directed: bool = False) -> Graph:
    """Parse the ``u v [weight] [sign]`` format.

    ``#`` starts a comment; a ``# nodes N`` comment pins the node count so
    trailing isolated nodes survive a round trip.
    """
    edges: list[Edge] = []
    weights: dict[Edge, float] = {}
    signs: dict[Edge, int] = {}
    declared_n: Optional[int] = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            fields = line[1:].split()
            if len(fields) == 2 and fields[0] == "nodes" and fields[1].isdigit():
                declared_n = int(fields[1])
            continue
        if not line:
            continue
        parts = line.split()
        if len(parts) < 2 or len(parts) > 4:
            raise ValueError(f"line {lineno}: expected 'u v [weight] [sign]', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: node ids must be integers, got {raw!r}") from None
        edge = (u, v)
        if len(parts) >= 3:
            try:
                weights[edge] = float(parts[2])
            except ValueError:
                raise ValueError(f"line {lineno}: weight must be a number, got {parts[2]!r}") from None
        if len(parts) == 4:
            if parts[3] not in ("+1", "1", "-1"):
                raise ValueError(f"line {lineno}: sign must be +1 or -1, got {parts[3]!r}")
            signs[edge] = 1 if parts[3] in ("+1", "1") else -1
        edges.append(edge)

    max_node = max((max(u, v) for u, v in edges), default=-1)
    n = max_node + 1 if declared_n is None else declared_n
    if declared_n is not None and max_node >= declared_n:
        raise ValueError(f"edge references node {max_node} but only {declared_n} nodes declared")
    return Graph(n, edges, directed=directed, weights=weights, signs=signs)


def format_edge_list(g: Graph) -> str:
    """Inverse of :func:`parse_edge_list` (canonical edge order)."""
    lines = [f"# nodes {g.n}"]
    for u, v in g.edges():
        parts = [str(u), str(v)]
        weight = g.weight(u, v)
        sign = g.sign(u, v)
        if weight is not None or sign is not None:
            parts.append(repr(weight if weight is not None else 1.0))
        if sign is not None:
            parts.append("+1" if sign > 0 else "-1")
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"
