"""snacap: capability scoring and network analytics for SNA software."""

from .capability import (
    CapabilityScore,
    Degeneracy,
    DimensionScores,
    Rubric,
    Weights,
    capability_c4,
    power_metric,
    round_score,
    score_rubric,
    score_value,
    score_variety,
    score_visual,
    score_volume,
    usl_throughput,
)
from .catalog import (
    CatalogError,
    Diagnostic,
    PublishedScores,
    ToolCatalog,
    bundled_catalog,
    parse_catalog,
    serialize_catalog,
    validate_rubric,
)
from .analysis import (
    DistributionStats,
    ParetoResult,
    RankedList,
    distribution_stats,
    pareto_front,
    rank,
    top_k_by_dimension,
)
from .scientometrics import (
    CitationRecord,
    MultiRpysGrid,
    Spectrogram,
    multi_rpys,
    rpys,
    term_frequency,
)
from .radar import RadarSpec, render_radar

__version__ = "0.1.0"
