"""Dimension scoring and the C4 capability metric for SNA software.

Four degrees, each in [0, 1], summarise what a tool can do:

* ``d_value``   -- knowledge/pattern discovery features
* ``d_volume``  -- scalability (banded 1/3, 2/3, 1 scales)
* ``d_variety`` -- information fusion / integration
* ``d_visual``  -- visual variables and interactions

The global capability score C4 is the area of the quadrilateral obtained by
plotting the degrees on two orthogonal axes (value/volume on one axis pair,
variety/visual on the other): ``raw = 0.5 * (d_value + d_volume) *
(d_variety + d_visual)``, which lives in [0, 2].  Published comparison
tables use ``normalized = raw / 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum
from typing import Iterable, Optional

TOPOLOGY_MEASURES = frozenset(
    {
        "diameter",
        "mean_degree",
        "degree_distribution",
        "clustering_coefficient",
        "connected_components",
        "transitivity",
        "triangle_count",
        "density",
        "centrality_suite",
    }
)

VISUAL_VARIABLES = (
    "position",
    "size",
    "shape",
    "orientation",
    "color",
    "saturation",
    "texture",
)

INTERACTIONS = ("zoom", "filter", "highlight", "grouping", "multiview")

BANDS = {"low": 1.0 / 3.0, "medium": 2.0 / 3.0, "large": 1.0}
REPRESENTATION_LEVELS = {"basic": 1.0 / 3.0, "intermediate": 2.0 / 3.0, "advanced": 1.0}

# Scoring steps are +1/5 per topology measure and +1/4 per link-analysis
# algorithm, saturating at 1.
TOPOLOGY_CAP = 5
LINK_ANALYSIS_CAP = 4


def round_score(x: float, places: int = 2) -> float:
    """Round half-up (0.665 -> 0.67), matching how scores are reported."""
    q = Decimal(1).scaleb(-places)
    return float(Decimal(repr(x)).quantize(q, rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class CommunityDetectionFlags:
    static_non_overlapping: bool = False
    static_overlapping: bool = False
    temporal: bool = False


@dataclass(frozen=True)
class ValueFeatures:
    """Knowledge-discovery feature checklist for one tool."""

    topology_measures: frozenset[str] = frozenset()
    link_analysis: frozenset[str] = frozenset()
    community_detection: CommunityDetectionFlags = CommunityDetectionFlags()
    topic_detection: bool = False
    sentiment_analysis: bool = False
    homophily: bool = False
    virality: bool = False
    link_prediction: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "topology_measures", frozenset(self.topology_measures))
        object.__setattr__(self, "link_analysis", frozenset(self.link_analysis))


@dataclass(frozen=True)
class VolumeFeatures:
    """Scalability bands; each must be one of low / medium / large."""

    space_time: str
    parallelism: str
    functional: str
    heterogeneous_integration: str

    def bands(self) -> tuple[str, str, str, str]:
        return (
            self.space_time,
            self.parallelism,
            self.functional,
            self.heterogeneous_integration,
        )


@dataclass(frozen=True)
class VarietyFeatures:
    """Information-fusion counts and the data-model representation level."""

    data_type_count: int
    osn_count: int
    representation: str


@dataclass(frozen=True)
class VisualFeatures:
    visual_variables: frozenset[str] = frozenset()
    interactions: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "visual_variables", frozenset(self.visual_variables))
        object.__setattr__(self, "interactions", frozenset(self.interactions))


@dataclass(frozen=True)
class Rubric:
    """Raw per-feature assessment of one SNA software tool."""

    tool_name: str
    license: str
    value: ValueFeatures
    volume: VolumeFeatures
    variety: VarietyFeatures
    visual: VisualFeatures


@dataclass(frozen=True)
class Weights:
    """Aggregation weights; the defaults are the uniform published choice."""

    value_alpha: float = 1.0 / 3.0
    value_beta: float = 1.0 / 3.0
    value_gamma: float = 1.0 / 3.0
    visual_alpha: float = 0.5
    visual_beta: float = 0.5
    visual_variable_weights: tuple[float, ...] = (1.0,) * 7
    interaction_weights: tuple[float, ...] = (1.0,) * 5

    def __post_init__(self) -> None:
        values = (
            self.value_alpha,
            self.value_beta,
            self.value_gamma,
            self.visual_alpha,
            self.visual_beta,
            *self.visual_variable_weights,
            *self.interaction_weights,
        )
        if any(w < 0 for w in values):
            raise ValueError("weights must be non-negative")
        if len(self.visual_variable_weights) != len(VISUAL_VARIABLES):
            raise ValueError("expected one weight per visual variable")
        if len(self.interaction_weights) != len(INTERACTIONS):
            raise ValueError("expected one weight per interaction")


DEFAULT_WEIGHTS = Weights()


@dataclass(frozen=True)
class DimensionScores:
    d_value: float
    d_volume: float
    d_variety: float
    d_visual: float

    def __post_init__(self) -> None:
        for name, value in self.as_dict().items():
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {value}")

    def as_dict(self) -> dict[str, float]:
        return {
            "d_value": self.d_value,
            "d_volume": self.d_volume,
            "d_variety": self.d_variety,
            "d_visual": self.d_visual,
        }


class Degeneracy(str, Enum):
    FULL_4D = "full_4d"
    PROJECTED_2D = "projected_2d"
    SINGLE_DIMENSION = "single_dimension"


@dataclass(frozen=True)
class CapabilityScore:
    """Raw C4 in [0, 2]; normalized (raw / 2) only exists in the 4-D case."""

    raw: float
    normalized: Optional[float]
    degeneracy: Degeneracy


def _require_vocabulary(names: Iterable[str], vocabulary: frozenset[str], what: str) -> None:
    unknown = sorted(set(names) - vocabulary)
    if unknown:
        raise ValueError(f"unknown {what}: {', '.join(unknown)}")


def _band_value(band: str, what: str) -> float:
    try:
        return BANDS[band]
    except KeyError:
        raise ValueError(f"{what} must be one of low/medium/large, got {band!r}") from None


def _count_band(count: int, what: str) -> float:
    if count < 1:
        raise ValueError(f"{what} must be at least 1 (0 means the tool was not assessed)")
    if count == 1:
        return 1.0 / 3.0
    if count <= 3:
        return 2.0 / 3.0
    return 1.0


def score_value(features: ValueFeatures, weights: Weights = DEFAULT_WEIGHTS) -> float:
    """Degree of value: weighted mean of the three feature-group means.

    Group 1 averages the topology-measure scale (+1/5 each, capped at 1) and
    the link-analysis scale (+1/4 each, capped at 1).  Group 2 averages
    community detection (cumulative thirds: any kind, both static kinds,
    temporal), opinion mining (topic and sentiment half each) and homophily.
    Group 3 averages virality and link prediction.
    """
    _require_vocabulary(features.topology_measures, TOPOLOGY_MEASURES, "topology measures")

    f11 = min(len(features.topology_measures), TOPOLOGY_CAP) / TOPOLOGY_CAP
    f12 = min(len(features.link_analysis), LINK_ANALYSIS_CAP) / LINK_ANALYSIS_CAP

    cd = features.community_detection
    any_kind = cd.static_non_overlapping or cd.static_overlapping or cd.temporal
    both_static = cd.static_non_overlapping and cd.static_overlapping
    f21 = (any_kind + both_static + cd.temporal) / 3.0
    f22 = features.topic_detection / 2.0 + features.sentiment_analysis / 2.0
    f23 = float(features.homophily)

    f31 = float(features.virality)
    f32 = float(features.link_prediction)

    return (
        weights.value_alpha * (f11 + f12) / 2.0
        + weights.value_beta * (f21 + f22 + f23) / 3.0
        + weights.value_gamma * (f31 + f32) / 2.0
    )


def score_volume(features: VolumeFeatures) -> float:
    """Degree of volume: mean of the four scalability bands, in [1/3, 1]."""
    names = ("space_time", "parallelism", "functional", "heterogeneous_integration")
    return sum(_band_value(b, n) for b, n in zip(features.bands(), names)) / 4.0


def score_variety(features: VarietyFeatures) -> float:
    """Degree of variety: mean of the banded counts and the model level."""
    if features.representation not in REPRESENTATION_LEVELS:
        raise ValueError(
            "representation must be one of basic/intermediate/advanced, "
            f"got {features.representation!r}"
        )
    return (
        _count_band(features.data_type_count, "data_type_count")
        + _count_band(features.osn_count, "osn_count")
        + REPRESENTATION_LEVELS[features.representation]
    ) / 3.0


def score_visual(features: VisualFeatures, weights: Weights = DEFAULT_WEIGHTS) -> float:
    """Degree of visualization from visual variables and interactions."""
    _require_vocabulary(features.visual_variables, frozenset(VISUAL_VARIABLES), "visual variables")
    _require_vocabulary(features.interactions, frozenset(INTERACTIONS), "interactions")

    var_sum = sum(
        w
        for name, w in zip(VISUAL_VARIABLES, weights.visual_variable_weights)
        if name in features.visual_variables
    )
    inter_sum = sum(
        w
        for name, w in zip(INTERACTIONS, weights.interaction_weights)
        if name in features.interactions
    )
    return (
        weights.visual_alpha * var_sum / len(VISUAL_VARIABLES)
        + weights.visual_beta * inter_sum / len(INTERACTIONS)
    )


def score_rubric(rubric: Rubric, weights: Weights = DEFAULT_WEIGHTS) -> DimensionScores:
    """Score all four dimensions of a complete rubric."""
    return DimensionScores(
        d_value=score_value(rubric.value, weights),
        d_volume=score_volume(rubric.volume),
        d_variety=score_variety(rubric.variety),
        d_visual=score_visual(rubric.visual, weights),
    )


def capability_c4(scores: DimensionScores) -> CapabilityScore:
    """Compute C4 from the four degrees, handling the degenerate cases.

    * ``full_4d``: both axis pairs contain a nonzero degree; ``raw`` is the
      quadrilateral area and ``normalized = raw / 2``.
    * ``projected_2d``: one axis pair is entirely zero but two degrees remain;
      the survivors are projected onto separate axes and ``raw`` is the
      triangle area ``0.5 * di * dj``.  No normalization is defined.
    * ``single_dimension``: at most one nonzero degree; ``raw`` is that degree
      itself (0.0 when every dimension is zero).
    """
    pair_a = scores.d_value + scores.d_volume
    pair_b = scores.d_variety + scores.d_visual
    if pair_a > 0.0 and pair_b > 0.0:
        raw = 0.5 * pair_a * pair_b
        return CapabilityScore(raw=raw, normalized=raw / 2.0, degeneracy=Degeneracy.FULL_4D)

    nonzero = [d for d in scores.as_dict().values() if d > 0.0]
    if len(nonzero) == 2:
        raw = 0.5 * nonzero[0] * nonzero[1]
        return CapabilityScore(raw=raw, normalized=None, degeneracy=Degeneracy.PROJECTED_2D)
    raw = nonzero[0] if nonzero else 0.0
    return CapabilityScore(raw=raw, normalized=None, degeneracy=Degeneracy.SINGLE_DIMENSION)


def usl_throughput(gamma: float, alpha: float, beta: float, n: int | float) -> float:
    """Universal Scalability Law throughput at load ``n``.

    ``gamma`` is throughput at unit load, ``alpha`` the contention ratio and
    ``beta`` the coherency-delay ratio: ``gamma*n / (1 + alpha*(n-1) +
    beta*n*(n-1))``.
    """
    if n < 1:
        raise ValueError("load must be at least 1")
    if gamma < 0 or alpha < 0 or beta < 0:
        raise ValueError("gamma, alpha and beta must be non-negative")
    return gamma * n / (1.0 + alpha * (n - 1.0) + beta * n * (n - 1.0))


def power_metric(gamma: float, t: float) -> float:
    """Throughput per unit of mean delay time (the classic power ratio)."""
    if t <= 0:
        raise ValueError("mean delay time must be positive")
    return gamma / t
