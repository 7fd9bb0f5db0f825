"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Any, Literal, Optional

from pydantic import BaseModel, Field

LicenseFilter = Literal["all", "open_source", "proprietary"]
OutputFormat = Literal["json", "csv"]


class CatalogRequest(BaseModel):
    """Base for requests that read a catalog; omitted = bundled dataset."""

    catalog: Optional[dict[str, Any]] = None


class ScoreRequest(CatalogRequest):
    rank: bool = False


class RankRequest(CatalogRequest):
    license: LicenseFilter = "all"


class TopRequest(CatalogRequest):
    dimension: str
    k: int = Field(5, ge=1)


class ParetoRequest(CatalogRequest):
    axis_x: str
    axis_y: str


class RadarRequest(CatalogRequest):
    tool: Optional[str] = None
    scores: Optional[DimensionScoresModel] = None
    size: int = 500
    label: Optional[str] = None


class CitationRecordIn(BaseModel):
    citing_year: int
    cited_years: list[int]


class RpysRequest(BaseModel):
    records: list[CitationRecordIn]
    year_range: Optional[tuple[int, int]] = None


class MultiRpysRequest(BaseModel):
    records: list[CitationRecordIn]
    citing_range: tuple[int, int]
    referenced_range: tuple[int, int]


class GraphIn(BaseModel):
    """Graph payload in the ``u v [weight] [sign]`` edge-list format."""

    edge_list: str
    directed: bool = False


class GenerateRequest(BaseModel):
    model: Literal["er_gnm", "gilbert_gnp", "watts_strogatz", "barabasi_albert"]
    seed: int = 0
    n: int
    m: Optional[int] = None
    p: Optional[float] = None
    k: Optional[int] = None
    rewire: Optional[float] = None
    m0: Optional[int] = None


class MetricsRequest(BaseModel):
    graph: GraphIn


class CentralityRequest(BaseModel):
    graph: GraphIn
    measure: Literal["degree", "closeness", "betweenness", "eigenvector", "pagerank"]
    damping: float = 0.85


class CommunityRequest(BaseModel):
    graph: GraphIn
    method: Literal[
        "greedy_modularity",
        "girvan_newman",
        "girvan_newman_best",
        "k_core",
        "quasi_clique",
    ]
    target: Optional[int] = None
    gamma: Optional[float] = None


class DiffuseRequest(BaseModel):
    graph: GraphIn
    model: Literal["sis", "sir", "sirs", "icm", "ltm"]
    seeds: list[int]
    steps: int = Field(50, ge=0)
    rng_seed: int = 0
    beta: Optional[float] = None
    mu: Optional[float] = None
    xi: Optional[float] = None
    p: Optional[float] = None
    threshold: Optional[float] = None
    thresholds: Optional[dict[int, float]] = None


class ValidateRequest(BaseModel):
    catalog: dict[str, Any]


# -- responses ---------------------------------------------------------------


class DimensionScoresModel(BaseModel):
    d_value: float
    d_volume: float
    d_variety: float
    d_visual: float


class CapabilityModel(BaseModel):
    raw: float
    normalized: Optional[float]
    degeneracy: str


class ScoredToolModel(BaseModel):
    name: str
    license: str
    degrees: dict[str, Optional[float]]
    capability: Optional[CapabilityModel] = None


class ScoreResponse(BaseModel):
    tools: list[ScoredToolModel]


class RankedToolModel(BaseModel):
    rank: int
    name: str
    license: str
    scores: DimensionScoresModel
    capability: CapabilityModel
    c4: float  # normalized, rounded to 2 decimals for display


class RankResponse(BaseModel):
    ranked: list[RankedToolModel]
    excluded: list[ExcludedToolModel]


class ExcludedToolModel(BaseModel):
    name: str
    reason: str


class TopEntryModel(BaseModel):
    name: str
    score: float
    rounded: float


class TopResponse(BaseModel):
    dimension: str
    entries: list[TopEntryModel]


class ParetoPointModel(BaseModel):
    name: str
    x: float
    y: float


class ParetoResponse(BaseModel):
    axis_x: str
    axis_y: str
    front: list[str]
    dominated: list[str]
    unplaced: list[str]
    points: list[ParetoPointModel]


class DimensionStatsModel(BaseModel):
    count: int
    minimum: float
    q1: float
    median: float
    q3: float
    maximum: float
    mean: float


class DistResponse(BaseModel):
    per_dimension: dict[str, DimensionStatsModel]


class SpectrogramResponse(BaseModel):
    years: list[int]
    counts: list[int]
    deviations: list[float]


class MultiRpysResponse(BaseModel):
    citing_years: list[int]
    referenced_years: list[int]
    values: list[list[float]]
    empty_rows: list[int]


class GraphOut(BaseModel):
    n: int
    m: int
    edge_list: str


class MetricsResponse(BaseModel):
    n: int
    m: int
    density: float
    mean_degree: float
    degree_histogram: dict[str, int]
    triangle_count: int
    global_clustering: float
    component_count: int
    largest_component_size: int
    disconnected: bool
    average_path_length: float
    diameter: int


class CentralityResponse(BaseModel):
    measure: str
    connected: bool
    values: dict[str, float]


class CommunityResponse(BaseModel):
    method: str
    membership: Optional[dict[str, int]] = None
    communities: Optional[list[list[int]]] = None
    modularity: Optional[float] = None
    core_numbers: Optional[dict[str, int]] = None
    members: Optional[list[int]] = None
    density: Optional[float] = None
    gamma_dense: Optional[bool] = None


class TrajectoryResponse(BaseModel):
    model: str
    params: dict[str, float]
    seeds: list[int]
    rng_seed: int
    steps: int
    states: list[list[str]]


class DiagnosticModel(BaseModel):
    path: str
    message: str
    severity: str


class ValidateResponse(BaseModel):
    valid: bool
    diagnostics: list[DiagnosticModel]


class HealthResponse(BaseModel):
    status: str
    version: str


RadarRequest.model_rebuild()
RankResponse.model_rebuild()
