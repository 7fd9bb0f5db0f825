"""Shared builders for graphs and rubrics used across the suite."""

from __future__ import annotations

import random

import pytest

from snacap.capability import (
    CommunityDetectionFlags,
    Rubric,
    ValueFeatures,
    VarietyFeatures,
    VisualFeatures,
    VolumeFeatures,
    INTERACTIONS,
    TOPOLOGY_MEASURES,
    VISUAL_VARIABLES,
)
from snacap.netprobe import Graph


def complete_graph(k: int, offset: int = 0, n: int | None = None) -> Graph:
    nodes = range(offset, offset + k)
    edges = [(u, v) for u in nodes for v in nodes if u < v]
    return Graph(n if n is not None else offset + k, edges)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def two_triangles() -> Graph:
    """Two disjoint K3s on nodes 0-2 and 3-5."""
    return Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])


def two_k4_bridge() -> Graph:
    """Two K4s (0-3, 4-7) joined by the bridge (3, 4)."""
    edges = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    edges += [(u, v) for u in range(4, 8) for v in range(u + 1, 8)]
    edges.append((3, 4))
    return Graph(8, edges)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def make_rubric(
    name: str = "tool",
    license: str = "open_source",
    topology: int = 5,
    link: int = 2,
    static_non: bool = True,
    static_over: bool = True,
    temporal: bool = False,
    topic: bool = True,
    sentiment: bool = False,
    homophily: bool = False,
    virality: bool = True,
    link_prediction: bool = False,
    bands: tuple[str, str, str, str] = ("medium", "low", "medium", "low"),
    data_types: int = 1,
    osns: int = 2,
    representation: str = "intermediate",
    n_variables: int = 6,
    n_interactions: int = 5,
) -> Rubric:
    return Rubric(
        tool_name=name,
        license=license,
        value=ValueFeatures(
            topology_measures=frozenset(sorted(TOPOLOGY_MEASURES)[:topology]),
            link_analysis=frozenset(f"alg{i}" for i in range(link)),
            community_detection=CommunityDetectionFlags(static_non, static_over, temporal),
            topic_detection=topic,
            sentiment_analysis=sentiment,
            homophily=homophily,
            virality=virality,
            link_prediction=link_prediction,
        ),
        volume=VolumeFeatures(*bands),
        variety=VarietyFeatures(data_types, osns, representation),
        visual=VisualFeatures(
            visual_variables=frozenset(VISUAL_VARIABLES[:n_variables]),
            interactions=frozenset(INTERACTIONS[:n_interactions]),
        ),
    )


def random_rubric(rng: random.Random, name: str = "tool") -> Rubric:
    """A structurally valid random rubric (counts >= 1 as scoring requires)."""
    bands = ("low", "medium", "large")
    levels = ("basic", "intermediate", "advanced")
    return Rubric(
        tool_name=name,
        license=rng.choice(("open_source", "proprietary")),
        value=ValueFeatures(
            topology_measures=frozenset(
                rng.sample(sorted(TOPOLOGY_MEASURES), rng.randint(0, len(TOPOLOGY_MEASURES)))
            ),
            link_analysis=frozenset(f"alg{i}" for i in range(rng.randint(0, 6))),
            community_detection=CommunityDetectionFlags(
                rng.random() < 0.5, rng.random() < 0.5, rng.random() < 0.5
            ),
            topic_detection=rng.random() < 0.5,
            sentiment_analysis=rng.random() < 0.5,
            homophily=rng.random() < 0.5,
            virality=rng.random() < 0.5,
            link_prediction=rng.random() < 0.5,
        ),
        volume=VolumeFeatures(*(rng.choice(bands) for _ in range(4))),
        variety=VarietyFeatures(rng.randint(1, 6), rng.randint(1, 6), rng.choice(levels)),
        visual=VisualFeatures(
            visual_variables=frozenset(
                rng.sample(VISUAL_VARIABLES, rng.randint(0, len(VISUAL_VARIABLES)))
            ),
            interactions=frozenset(rng.sample(INTERACTIONS, rng.randint(0, len(INTERACTIONS)))),
        ),
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
