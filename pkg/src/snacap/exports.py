"""CSV/JSON exports for every tabular result type.

Score columns appear rounded half-up to 2 decimals next to a ``*_exact``
column carrying full precision, so exported tables read like the published
ones without losing information.  All writers are deterministic.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Mapping, Union

from .analysis import DistributionStats, ParetoResult, RankedList, RankedTool
from .capability import CapabilityScore, Degeneracy, DimensionScores, round_score
from .netprobe.centrality import CentralityResult
from .netprobe.diffusion import Trajectory
from .netprobe.metrics import BalanceReport, GraphReport
from .scientometrics import MultiRpysGrid, Spectrogram

Exportable = Union[
    RankedList,
    DistributionStats,
    ParetoResult,
    Spectrogram,
    MultiRpysGrid,
    GraphReport,
    BalanceReport,
    CentralityResult,
    Trajectory,
]


def _csv_buffer() -> tuple[io.StringIO, Any]:
    buf = io.StringIO()
    return buf, csv.writer(buf, lineterminator="\n")


def _dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def export_table(result: Exportable, format: str = "csv") -> str:
    """Serialize a result to ``csv`` or ``json`` text."""
    if format not in ("csv", "json"):
        raise ValueError(f"format must be csv or json, got {format!r}")
    writers = {
        RankedList: (_ranked_csv, _ranked_json),
        DistributionStats: (_dist_csv, _dist_json),
        ParetoResult: (_pareto_csv, _pareto_json),
        Spectrogram: (_spectrogram_csv, _spectrogram_json),
        MultiRpysGrid: (_grid_csv, _grid_json),
        GraphReport: (_report_csv, _report_json),
        BalanceReport: (_balance_csv, _balance_json),
        CentralityResult: (_centrality_csv, _centrality_json),
        Trajectory: (_trajectory_csv, _trajectory_json),
    }
    for kind, (to_csv, to_json) in writers.items():
        if isinstance(result, kind):
            return to_csv(result) if format == "csv" else _dumps(to_json(result))
    raise TypeError(f"no exporter for {type(result).__name__}")


def mapping_csv(mapping: Mapping[int, Any], key_header: str, value_header: str) -> str:
    buf, writer = _csv_buffer()
    writer.writerow([key_header, value_header])
    for key in sorted(mapping):
        writer.writerow([key, mapping[key]])
    return buf.getvalue()


def scored_tools_csv(rows: list) -> str:
    """CSV for (ScoredTool, CapabilityScore-or-None) pairs from /score."""
    buf, writer = _csv_buffer()
    header = ["tool", "license", "c4", "c4_exact"]
    for dim in _SCORE_COLUMNS:
        header += [dim, f"{dim}_exact"]
    writer.writerow(header)
    for tool, capability in rows:
        normalized = capability.normalized if capability else None
        row = [
            tool.name,
            tool.license,
            "" if normalized is None else f"{round_score(normalized):.2f}",
            "" if normalized is None else repr(normalized),
        ]
        for dim in _SCORE_COLUMNS:
            value = tool.degrees[dim]
            row += ["" if value is None else f"{round_score(value):.2f}",
                    "" if value is None else repr(value)]
        writer.writerow(row)
    return buf.getvalue()


def top_csv(dimension: str, entries: list[tuple[str, float]]) -> str:
    buf, writer = _csv_buffer()
    writer.writerow(["rank", "tool", dimension, f"{dimension}_exact"])
    for position, (name, score) in enumerate(entries, start=1):
        writer.writerow([position, name, f"{round_score(score):.2f}", repr(score)])
    return buf.getvalue()


# -- rankings ---------------------------------------------------------------

_SCORE_COLUMNS = ("d_value", "d_volume", "d_variety", "d_visual")


def _ranked_csv(result: RankedList) -> str:
    buf, writer = _csv_buffer()
    header = ["rank", "tool", "license", "c4", "c4_exact"]
    for dim in _SCORE_COLUMNS:
        header += [dim, f"{dim}_exact"]
    writer.writerow(header)
    for position, tool in enumerate(result.ranked, start=1):
        row = [
            position,
            tool.name,
            tool.license,
            f"{round_score(tool.capability.normalized):.2f}",
            repr(tool.capability.normalized),
        ]
        for dim, value in tool.scores.as_dict().items():
            row += [f"{round_score(value):.2f}", repr(value)]
        writer.writerow(row)
    return buf.getvalue()


def _ranked_json(result: RankedList) -> dict:
    return {
        "ranked": [
            {
                "rank": position,
                "tool": tool.name,
                "license": tool.license,
                "c4": round_score(tool.capability.normalized),
                "capability": {
                    "raw": tool.capability.raw,
                    "normalized": tool.capability.normalized,
                    "degeneracy": tool.capability.degeneracy.value,
                },
                "scores": tool.scores.as_dict(),
            }
            for position, tool in enumerate(result.ranked, start=1)
        ],
        "excluded": [
            {"tool": name, "reason": reason} for name, reason in result.excluded
        ],
    }


def ranked_list_from_json(text: str) -> RankedList:
    """Inverse of the JSON export (exact values, not the rounded columns)."""
    doc = json.loads(text)
    ranked = tuple(
        RankedTool(
            name=item["tool"],
            license=item["license"],
            scores=DimensionScores(**item["scores"]),
            capability=CapabilityScore(
                raw=item["capability"]["raw"],
                normalized=item["capability"]["normalized"],
                degeneracy=Degeneracy(item["capability"]["degeneracy"]),
            ),
        )
        for item in doc["ranked"]
    )
    excluded = tuple((item["tool"], item["reason"]) for item in doc["excluded"])
    return RankedList(ranked, excluded)


# -- distributions ----------------------------------------------------------

_STAT_FIELDS = ("minimum", "q1", "median", "q3", "maximum", "mean")


def _dist_csv(result: DistributionStats) -> str:
    buf, writer = _csv_buffer()
    header = ["dimension", "count"]
    for name in _STAT_FIELDS:
        header += [name, f"{name}_exact"]
    writer.writerow(header)
    for dim, stats in result.per_dimension.items():
        row: list = [dim, stats.count]
        for name in _STAT_FIELDS:
            value = getattr(stats, name)
            row += [f"{round_score(value):.2f}", repr(value)]
        writer.writerow(row)
    return buf.getvalue()


def _dist_json(result: DistributionStats) -> dict:
    return {
        "per_dimension": {
            dim: {"count": stats.count, **{name: getattr(stats, name) for name in _STAT_FIELDS}}
            for dim, stats in result.per_dimension.items()
        }
    }


# -- pareto -----------------------------------------------------------------

def _check_front(result: ParetoResult) -> None:
    if result.points and not result.front:
        raise AssertionError("non-empty point set must have a non-empty Pareto front")


def _pareto_csv(result: ParetoResult) -> str:
    _check_front(result)
    buf, writer = _csv_buffer()
    writer.writerow(
        ["tool", result.axis_x, f"{result.axis_x}_exact", result.axis_y, f"{result.axis_y}_exact", "in_front"]
    )
    for name, x, y in result.points:
        writer.writerow(
            [
                name,
                f"{round_score(x):.2f}",
                repr(x),
                f"{round_score(y):.2f}",
                repr(y),
                str(name in result.front).lower(),
            ]
        )
    return buf.getvalue()


def _pareto_json(result: ParetoResult) -> dict:
    _check_front(result)
    return {
        "axis_x": result.axis_x,
        "axis_y": result.axis_y,
        "front": sorted(result.front),
        "dominated": sorted(result.dominated),
        "unplaced": list(result.unplaced),
        "points": [{"tool": name, "x": x, "y": y} for name, x, y in result.points],
    }


# -- scientometrics ----------------------------------------------------------

def _spectrogram_csv(result: Spectrogram) -> str:
    buf, writer = _csv_buffer()
    writer.writerow(["year", "count", "deviation"])
    for year, count, deviation in zip(result.years, result.counts, result.deviations):
        writer.writerow([year, count, repr(deviation)])
    return buf.getvalue()


def _spectrogram_json(result: Spectrogram) -> dict:
    return {
        "years": list(result.years),
        "counts": list(result.counts),
        "deviations": list(result.deviations),
    }


def _grid_csv(result: MultiRpysGrid) -> str:
    buf, writer = _csv_buffer()
    writer.writerow(["citing_year", "empty", *result.referenced_years])
    for citing, row in zip(result.citing_years, result.values):
        writer.writerow(
            [citing, str(citing in result.empty_rows).lower(), *(repr(v) for v in row)]
        )
    return buf.getvalue()


def _grid_json(result: MultiRpysGrid) -> dict:
    return {
        "citing_years": list(result.citing_years),
        "referenced_years": list(result.referenced_years),
        "values": [list(row) for row in result.values],
        "empty_rows": sorted(result.empty_rows),
    }


# -- graphs -------------------------------------------------------------------

def _report_csv(result: GraphReport) -> str:
    buf, writer = _csv_buffer()
    writer.writerow(["metric", "value"])
    writer.writerow(["nodes", result.n])
    writer.writerow(["edges", result.m])
    writer.writerow(["density", repr(result.density)])
    writer.writerow(["mean_degree", repr(result.mean_degree)])
    writer.writerow(["triangle_count", result.triangle_count])
    writer.writerow(["global_clustering", repr(result.global_clustering)])
    writer.writerow(["component_count", result.component_count])
    writer.writerow(["largest_component_size", result.largest_component_size])
    writer.writerow(["disconnected", str(result.disconnected).lower()])
    writer.writerow(["average_path_length", repr(result.average_path_length)])
    writer.writerow(["diameter", result.diameter])
    for degree, count in result.degree_histogram.items():
        writer.writerow([f"degree_count_{degree}", count])
    return buf.getvalue()


def _report_json(result: GraphReport) -> dict:
    return {
        "n": result.n,
        "m": result.m,
        "density": result.density,
        "mean_degree": result.mean_degree,
        "degree_histogram": {str(k): v for k, v in result.degree_histogram.items()},
        "triangle_count": result.triangle_count,
        "global_clustering": result.global_clustering,
        "component_count": result.component_count,
        "largest_component_size": result.largest_component_size,
        "disconnected": result.disconnected,
        "average_path_length": result.average_path_length,
        "diameter": result.diameter,
    }


def _balance_csv(result: BalanceReport) -> str:
    buf, writer = _csv_buffer()
    writer.writerow(["metric", "value"])
    writer.writerow(["balanced_triangles", result.balanced_triangles])
    writer.writerow(["unbalanced_triangles", result.unbalanced_triangles])
    writer.writerow(["is_balanced", str(result.is_balanced).lower()])
    return buf.getvalue()


def _balance_json(result: BalanceReport) -> dict:
    return {
        "balanced_triangles": result.balanced_triangles,
        "unbalanced_triangles": result.unbalanced_triangles,
        "is_balanced": result.is_balanced,
    }


def _centrality_csv(result: CentralityResult) -> str:
    buf, writer = _csv_buffer()
    writer.writerow(["node", result.measure])
    for node in sorted(result.values):
        writer.writerow([node, repr(result.values[node])])
    return buf.getvalue()


def _centrality_json(result: CentralityResult) -> dict:
    return {
        "measure": result.measure,
        "connected": result.connected,
        "values": {str(node): value for node, value in sorted(result.values.items())},
    }


def _trajectory_csv(result: Trajectory) -> str:
    buf, writer = _csv_buffer()
    n = len(result.states[0])
    writer.writerow(["step", *(f"node_{v}" for v in range(n))])
    for t, state in enumerate(result.states):
        writer.writerow([t, *state])
    return buf.getvalue()


def _trajectory_json(result: Trajectory) -> dict:
    return {
        "model": result.model,
        "params": dict(result.params),
        "seeds": list(result.seeds),
        "rng_seed": result.rng_seed,
        "states": [list(state) for state in result.states],
    }
