"""Ranking, per-dimension leaderboards, Pareto fronts and score distributions.

All operations take a :class:`~snacap.catalog.ToolCatalog`; raw rubric
entries are scored on the fly, published entries use their stored degrees.
Tools without the degrees an operation needs are never guessed at: they are
reported separately (ranking) or left out of the relevant column
(leaderboards, distributions).
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from typing import Optional

from .capability import (
    CapabilityScore,
    Degeneracy,
    DimensionScores,
    Rubric,
    Weights,
    DEFAULT_WEIGHTS,
    capability_c4,
    score_rubric,
)
from .catalog import PublishedScores, ToolCatalog

DIMENSIONS = ("d_value", "d_volume", "d_variety", "d_visual")

# The survey names each dimension after its research question; accept both.
DIMENSION_ALIASES = {
    "value": "d_value",
    "volume": "d_volume",
    "variety": "d_variety",
    "visual": "d_visual",
    "knowledge_discovery": "d_value",
    "scalability": "d_volume",
    "information_fusion": "d_variety",
    "visualization": "d_visual",
}


def canonical_dimension(name: str) -> str:
    key = name.strip().lower().replace("-", "_").replace(" ", "_")
    if key in DIMENSIONS:
        return key
    try:
        return DIMENSION_ALIASES[key]
    except KeyError:
        raise ValueError(f"unknown dimension {name!r}") from None


@dataclass(frozen=True)
class ScoredTool:
    """One catalog entry with whatever degrees are known for it."""

    name: str
    license: str
    degrees: dict[str, Optional[float]]

    @property
    def complete(self) -> bool:
        return all(v is not None for v in self.degrees.values())

    def dimension_scores(self) -> DimensionScores:
        if not self.complete:
            raise ValueError(f"{self.name} is not fully assessed")
        return DimensionScores(
            d_value=self.degrees["d_value"],
            d_volume=self.degrees["d_volume"],
            d_variety=self.degrees["d_variety"],
            d_visual=self.degrees["d_visual"],
        )


@dataclass(frozen=True)
class RankedTool:
    name: str
    license: str
    scores: DimensionScores
    capability: CapabilityScore


@dataclass(frozen=True)
class RankedList:
    ranked: tuple[RankedTool, ...]
    excluded: tuple[tuple[str, str], ...] = ()  # (tool name, reason)


@dataclass(frozen=True)
class ParetoResult:
    axis_x: str
    axis_y: str
    front: frozenset[str]
    dominated: frozenset[str]
    points: tuple[tuple[str, float, float], ...]
    unplaced: tuple[str, ...] = ()


@dataclass(frozen=True)
class DimensionStats:
    minimum: float
    q1: float
    median: float
    q3: float
    maximum: float
    mean: float
    count: int


@dataclass(frozen=True)
class DistributionStats:
    per_dimension: dict[str, DimensionStats]


def score_catalog(catalog: ToolCatalog, weights: Weights = DEFAULT_WEIGHTS) -> list[ScoredTool]:
    """Attach degrees to every entry (scoring rubrics, copying published)."""
    out = []
    for entry in catalog:
        if isinstance(entry, Rubric):
            scores = score_rubric(entry, weights)
            degrees: dict[str, Optional[float]] = dict(scores.as_dict())
        elif isinstance(entry, PublishedScores):
            degrees = {dim: entry.degrees()[dim] for dim in DIMENSIONS}
        else:  # pragma: no cover - catalog construction prevents this
            raise TypeError(f"unexpected catalog entry {type(entry).__name__}")
        out.append(ScoredTool(entry.tool_name, entry.license, degrees))
    return out


def rank(
    catalog: ToolCatalog,
    license_filter: Optional[str] = None,
    weights: Weights = DEFAULT_WEIGHTS,
) -> RankedList:
    """Rank fully assessed tools by normalized C4, descending.

    Ties break on ascending tool name.  Tools missing a degree, and tools
    whose scores are degenerate (no normalized C4 exists), are listed in
    ``excluded`` with a reason instead of being ranked.
    """
    if license_filter not in (None, "all", *("open_source", "proprietary")):
        raise ValueError(f"unknown license filter {license_filter!r}")

    ranked = []
    excluded = []
    for tool in score_catalog(catalog, weights):
        if license_filter not in (None, "all") and tool.license != license_filter:
            continue
        if not tool.complete:
            missing = sorted(k for k, v in tool.degrees.items() if v is None)
            excluded.append((tool.name, f"unassessed: missing {', '.join(missing)}"))
            continue
        scores = tool.dimension_scores()
        capability = capability_c4(scores)
        if capability.degeneracy is not Degeneracy.FULL_4D:
            excluded.append((tool.name, f"degenerate scores ({capability.degeneracy.value})"))
            continue
        ranked.append(RankedTool(tool.name, tool.license, scores, capability))

    ranked.sort(key=lambda t: (-t.capability.normalized, t.name))
    return RankedList(tuple(ranked), tuple(excluded))


def top_k_by_dimension(
    catalog: ToolCatalog,
    dimension: str,
    k: int,
    weights: Weights = DEFAULT_WEIGHTS,
) -> list[tuple[str, float]]:
    """The k highest-scoring tools on one dimension, ties alphabetical."""
    if k < 1:
        raise ValueError("k must be at least 1")
    dim = canonical_dimension(dimension)
    scored = [
        (tool.name, tool.degrees[dim])
        for tool in score_catalog(catalog, weights)
        if tool.degrees[dim] is not None
    ]
    scored.sort(key=lambda item: (-item[1], item[0]))
    return scored[:k]


def pareto_front(
    catalog: ToolCatalog,
    axis_x: str,
    axis_y: str,
    weights: Weights = DEFAULT_WEIGHTS,
) -> ParetoResult:
    """Two-objective maximization front over a pair of dimensions.

    ``a`` dominates ``b`` iff ``a >= b`` on both axes and ``a > b`` on at
    least one.  Tools lacking either axis score are reported as unplaced.
    """
    x = canonical_dimension(axis_x)
    y = canonical_dimension(axis_y)
    if x == y:
        raise ValueError("pareto axes must differ")

    points = []
    unplaced = []
    for tool in score_catalog(catalog, weights):
        px, py = tool.degrees[x], tool.degrees[y]
        if px is None or py is None:
            unplaced.append(tool.name)
        else:
            points.append((tool.name, px, py))
    points.sort(key=lambda p: p[0])

    def dominates(a: tuple[str, float, float], b: tuple[str, float, float]) -> bool:
        return a[1] >= b[1] and a[2] >= b[2] and (a[1] > b[1] or a[2] > b[2])

    front = frozenset(
        name
        for name, px, py in points
        if not any(dominates(other, (name, px, py)) for other in points)
    )
    dominated = frozenset(name for name, _, _ in points) - front
    return ParetoResult(x, y, front, dominated, tuple(points), tuple(unplaced))


def distribution_stats(catalog: ToolCatalog, weights: Weights = DEFAULT_WEIGHTS) -> DistributionStats:
    """Five-number summary plus mean per dimension (inclusive quartiles)."""
    scored = score_catalog(catalog, weights)
    per_dimension = {}
    for dim in DIMENSIONS:
        values = sorted(t.degrees[dim] for t in scored if t.degrees[dim] is not None)
        if not values:
            continue
        if len(values) == 1:
            q1 = median = q3 = values[0]
        else:
            q1, median, q3 = statistics.quantiles(values, n=4, method="inclusive")
        per_dimension[dim] = DimensionStats(
            minimum=values[0],
            q1=q1,
            median=median,
            q3=q3,
            maximum=values[-1],
            mean=statistics.fmean(values),
            count=len(values),
        )
    if not per_dimension:
        raise ValueError("no scored tools in catalog")
    return DistributionStats(per_dimension)
