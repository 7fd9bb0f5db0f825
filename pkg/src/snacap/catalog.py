"""Tool-catalog parsing, validation and serialization.

A catalog is a JSON document ``{"tools": [...]}`` whose entries are either
raw rubrics (full feature checklists, scored by :mod:`snacap.capability`) or
published dimension scores copied from the source survey's tables.  Parsing
is total: any input yields either a catalog or a list of diagnostics with
paths to the offending fields, never an unhandled crash.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Any, Iterator, Optional, Union

from .capability import (
    INTERACTIONS,
    LINK_ANALYSIS_CAP,
    TOPOLOGY_CAP,
    TOPOLOGY_MEASURES,
    VISUAL_VARIABLES,
    CommunityDetectionFlags,
    Rubric,
    ValueFeatures,
    VarietyFeatures,
    VisualFeatures,
    VolumeFeatures,
)

LICENSES = ("proprietary", "open_source")

BUNDLED_CATALOG = "paper_tools.json"


@dataclass(frozen=True)
class Diagnostic:
    path: str
    message: str
    severity: str = "error"  # "error" or "warning"

    def __str__(self) -> str:
        return f"{self.severity}: {self.path}: {self.message}"


class CatalogError(ValueError):
    """Raised when a catalog document fails validation."""

    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = diagnostics
        super().__init__("; ".join(str(d) for d in diagnostics))


@dataclass(frozen=True)
class PublishedScores:
    """Dimension scores as printed in the source survey (possibly partial)."""

    tool_name: str
    license: str
    d_value: Optional[float] = None
    d_variety: Optional[float] = None
    d_volume: Optional[float] = None
    d_visual: Optional[float] = None
    source: str = ""

    def degrees(self) -> dict[str, Optional[float]]:
        return {
            "d_value": self.d_value,
            "d_variety": self.d_variety,
            "d_volume": self.d_volume,
            "d_visual": self.d_visual,
        }

    @property
    def complete(self) -> bool:
        return all(v is not None for v in self.degrees().values())


CatalogEntry = Union[Rubric, PublishedScores]


@dataclass(frozen=True)
class ToolCatalog:
    tools: tuple[CatalogEntry, ...] = ()

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self.tools)

    def __len__(self) -> int:
        return len(self.tools)

    def names(self) -> list[str]:
        return [t.tool_name for t in self.tools]

    def get(self, name: str) -> CatalogEntry:
        for tool in self.tools:
            if tool.tool_name == name:
                return tool
        raise KeyError(name)


class _Walker:
    """Accumulates diagnostics while pulling typed fields out of raw JSON."""

    def __init__(self) -> None:
        self.diagnostics: list[Diagnostic] = []

    def error(self, path: str, message: str) -> None:
        self.diagnostics.append(Diagnostic(path, message, "error"))

    def warning(self, path: str, message: str) -> None:
        self.diagnostics.append(Diagnostic(path, message, "warning"))

    @property
    def failed(self) -> bool:
        return any(d.severity == "error" for d in self.diagnostics)

    def mapping(self, value: Any, path: str) -> Optional[dict]:
        if not isinstance(value, dict):
            self.error(path, f"expected an object, got {type(value).__name__}")
            return None
        return value

    def text(self, obj: dict, key: str, path: str, choices: tuple[str, ...] = ()) -> Optional[str]:
        if key not in obj:
            self.error(f"{path}.{key}", "missing required field")
            return None
        value = obj[key]
        if not isinstance(value, str):
            self.error(f"{path}.{key}", f"expected a string, got {type(value).__name__}")
            return None
        if choices and value not in choices:
            self.error(f"{path}.{key}", f"must be one of {', '.join(choices)}; got {value!r}")
            return None
        return value

    def flag(self, obj: dict, key: str, path: str) -> bool:
        value = obj.get(key, False)
        if not isinstance(value, bool):
            self.error(f"{path}.{key}", f"expected a boolean, got {type(value).__name__}")
            return False
        return value

    def count(self, obj: dict, key: str, path: str) -> int:
        if key not in obj:
            self.error(f"{path}.{key}", "missing required field")
            return 0
        value = obj[key]
        if isinstance(value, bool) or not isinstance(value, int):
            self.error(f"{path}.{key}", f"expected an integer, got {type(value).__name__}")
            return 0
        if value < 0:
            self.error(f"{path}.{key}", f"must be non-negative, got {value}")
            return 0
        return value

    def names(self, obj: dict, key: str, path: str, vocabulary: Optional[frozenset[str]]) -> frozenset[str]:
        value = obj.get(key, [])
        if not isinstance(value, list):
            self.error(f"{path}.{key}", f"expected an array, got {type(value).__name__}")
            return frozenset()
        out = set()
        for i, item in enumerate(value):
            here = f"{path}.{key}[{i}]"
            if not isinstance(item, str):
                self.error(here, f"expected a string, got {type(item).__name__}")
                continue
            if vocabulary is not None and item not in vocabulary:
                self.error(here, f"unknown name {item!r}")
                continue
            if item in out:
                self.error(here, f"duplicate name {item!r}")
                continue
            out.add(item)
        return frozenset(out)

    def degree(self, obj: dict, key: str, path: str) -> Optional[float]:
        if key not in obj or obj[key] is None:
            return None
        value = obj[key]
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            self.error(f"{path}.{key}", f"expected a number, got {type(value).__name__}")
            return None
        if not 0.0 <= value <= 1.0:
            self.error(f"{path}.{key}", f"degree must be in [0, 1], got {value}")
            return None
        return float(value)


def _parse_rubric(walker: _Walker, obj: dict, path: str, name: str, license_: str) -> Optional[Rubric]:
    before = len([d for d in walker.diagnostics if d.severity == "error"])
    value_obj = walker.mapping(obj.get("value"), f"{path}.value")
    volume_obj = walker.mapping(obj.get("volume"), f"{path}.volume")
    variety_obj = walker.mapping(obj.get("variety"), f"{path}.variety")
    visual_obj = walker.mapping(obj.get("visual"), f"{path}.visual")
    if None in (value_obj, volume_obj, variety_obj, visual_obj):
        return None

    vpath = f"{path}.value"
    topology = walker.names(value_obj, "topology_measures", vpath, TOPOLOGY_MEASURES)
    link = walker.names(value_obj, "link_analysis", vpath, None)
    cd_obj = walker.mapping(value_obj.get("community_detection", {}), f"{vpath}.community_detection")
    if cd_obj is None:
        cd_obj = {}
    cd = CommunityDetectionFlags(
        static_non_overlapping=walker.flag(cd_obj, "static_non_overlapping", f"{vpath}.community_detection"),
        static_overlapping=walker.flag(cd_obj, "static_overlapping", f"{vpath}.community_detection"),
        temporal=walker.flag(cd_obj, "temporal", f"{vpath}.community_detection"),
    )
    value = ValueFeatures(
        topology_measures=topology,
        link_analysis=link,
        community_detection=cd,
        topic_detection=walker.flag(value_obj, "topic_detection", vpath),
        sentiment_analysis=walker.flag(value_obj, "sentiment_analysis", vpath),
        homophily=walker.flag(value_obj, "homophily", vpath),
        virality=walker.flag(value_obj, "virality", vpath),
        link_prediction=walker.flag(value_obj, "link_prediction", vpath),
    )

    opath = f"{path}.volume"
    band_values = [
        walker.text(volume_obj, key, opath, choices=("low", "medium", "large"))
        for key in BANDS_KEYS
    ]
    tpath = f"{path}.variety"
    data_types = walker.count(variety_obj, "data_type_count", tpath)
    osns = walker.count(variety_obj, "osn_count", tpath)
    representation = walker.text(
        variety_obj, "representation", tpath, choices=("basic", "intermediate", "advanced")
    )
    ipath = f"{path}.visual"
    variables = walker.names(visual_obj, "variables", ipath, frozenset(VISUAL_VARIABLES))
    interactions = walker.names(visual_obj, "interactions", ipath, frozenset(INTERACTIONS))

    errors_here = len([d for d in walker.diagnostics if d.severity == "error"]) - before
    if errors_here:
        return None

    rubric = Rubric(
        tool_name=name,
        license=license_,
        value=value,
        volume=VolumeFeatures(*band_values),
        variety=VarietyFeatures(data_types, osns, representation),
        visual=VisualFeatures(variables, interactions),
    )
    ok = True
    for diag in validate_rubric(rubric):
        prefixed = f"{path}.{diag.path}" if diag.path else path
        walker.diagnostics.append(Diagnostic(prefixed, diag.message, diag.severity))
        ok = ok and diag.severity != "error"
    return rubric if ok else None


BANDS_KEYS = ("space_time", "parallelism", "functional", "heterogeneous")


def catalog_diagnostics(data: Union[bytes, str]) -> list[Diagnostic]:
    """Validate a catalog document, returning every problem found."""
    _, diagnostics = _parse(data)
    return diagnostics


def parse_catalog(data: Union[bytes, str]) -> ToolCatalog:
    """Parse and validate a catalog document.

    Raises :class:`CatalogError` carrying per-field diagnostics when the
    document has error-level problems; warnings alone do not block parsing.
    """
    catalog, diagnostics = _parse(data)
    if catalog is None:
        raise CatalogError([d for d in diagnostics if d.severity == "error"] or diagnostics)
    return catalog


def _parse(data: Union[bytes, str]) -> tuple[Optional[ToolCatalog], list[Diagnostic]]:
    walker = _Walker()
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            walker.error("$", f"not valid UTF-8: {exc}")
            return None, walker.diagnostics
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        walker.error("$", f"not valid JSON: {exc}")
        return None, walker.diagnostics

    root = walker.mapping(doc, "$")
    if root is None:
        return None, walker.diagnostics
    tools = root.get("tools")
    if not isinstance(tools, list):
        walker.error("$.tools", "missing or not an array")
        return None, walker.diagnostics

    entries: list[CatalogEntry] = []
    seen: set[str] = set()
    for i, obj in enumerate(tools):
        path = f"$.tools[{i}]"
        entry_obj = walker.mapping(obj, path)
        if entry_obj is None:
            continue
        name = walker.text(entry_obj, "name", path)
        license_ = walker.text(entry_obj, "license", path, choices=LICENSES)
        if name is not None:
            if not name:
                walker.error(f"{path}.name", "tool name must be non-empty")
            elif name in seen:
                walker.error(f"{path}.name", f"duplicate tool name {name!r}")
            seen.add(name)
        if name is None or license_ is None:
            continue

        if "scores" in entry_obj:
            scores_obj = walker.mapping(entry_obj["scores"], f"{path}.scores")
            if scores_obj is None:
                continue
            source = entry_obj.get("source", "")
            if not isinstance(source, str):
                walker.error(f"{path}.source", "expected a string")
                source = ""
            entries.append(
                PublishedScores(
                    tool_name=name,
                    license=license_,
                    d_value=walker.degree(scores_obj, "d_value", f"{path}.scores"),
                    d_variety=walker.degree(scores_obj, "d_variety", f"{path}.scores"),
                    d_volume=walker.degree(scores_obj, "d_volume", f"{path}.scores"),
                    d_visual=walker.degree(scores_obj, "d_visual", f"{path}.scores"),
                    source=source,
                )
            )
        else:
            rubric = _parse_rubric(walker, entry_obj, path, name, license_)
            if rubric is not None:
                entries.append(rubric)

    if walker.failed:
        return None, walker.diagnostics
    return ToolCatalog(tuple(entries)), walker.diagnostics


def validate_rubric(rubric: Rubric) -> list[Diagnostic]:
    """Check a rubric against the scoring invariants.

    Error-level diagnostics mean the rubric cannot be scored; warnings note
    features beyond the saturation caps.  Paths are relative to the rubric.
    """
    out: list[Diagnostic] = []
    if not rubric.tool_name:
        out.append(Diagnostic("", "tool name must be non-empty"))
    if rubric.license not in LICENSES:
        out.append(Diagnostic("license", f"must be one of {', '.join(LICENSES)}"))

    unknown = sorted(rubric.value.topology_measures - TOPOLOGY_MEASURES)
    for name in unknown:
        out.append(Diagnostic("value.topology_measures", f"unknown name {name!r}"))
    if len(rubric.value.topology_measures) > TOPOLOGY_CAP:
        out.append(
            Diagnostic(
                "value.topology_measures",
                f"count capped at {TOPOLOGY_CAP} when scoring",
                "warning",
            )
        )
    if len(rubric.value.link_analysis) > LINK_ANALYSIS_CAP:
        out.append(
            Diagnostic(
                "value.link_analysis",
                f"count capped at {LINK_ANALYSIS_CAP} when scoring",
                "warning",
            )
        )

    for key, band in zip(BANDS_KEYS, rubric.volume.bands()):
        if band not in ("low", "medium", "large"):
            out.append(Diagnostic(f"volume.{key}", f"invalid band {band!r}"))

    if rubric.variety.data_type_count < 1:
        out.append(Diagnostic("variety.data_type_count", "must be at least 1 (0 means unassessed)"))
    if rubric.variety.osn_count < 1:
        out.append(Diagnostic("variety.osn_count", "must be at least 1 (0 means unassessed)"))
    if rubric.variety.representation not in ("basic", "intermediate", "advanced"):
        out.append(Diagnostic("variety.representation", f"invalid level {rubric.variety.representation!r}"))

    for name in sorted(rubric.visual.visual_variables - frozenset(VISUAL_VARIABLES)):
        out.append(Diagnostic("visual.variables", f"unknown name {name!r}"))
    for name in sorted(rubric.visual.interactions - frozenset(INTERACTIONS)):
        out.append(Diagnostic("visual.interactions", f"unknown name {name!r}"))
    return out


def _rubric_to_obj(rubric: Rubric) -> dict[str, Any]:
    cd = rubric.value.community_detection
    return {
        "name": rubric.tool_name,
        "license": rubric.license,
        "value": {
            "topology_measures": sorted(rubric.value.topology_measures),
            "link_analysis": sorted(rubric.value.link_analysis),
            "community_detection": {
                "static_non_overlapping": cd.static_non_overlapping,
                "static_overlapping": cd.static_overlapping,
                "temporal": cd.temporal,
            },
            "topic_detection": rubric.value.topic_detection,
            "sentiment_analysis": rubric.value.sentiment_analysis,
            "homophily": rubric.value.homophily,
            "virality": rubric.value.virality,
            "link_prediction": rubric.value.link_prediction,
        },
        "volume": dict(zip(BANDS_KEYS, rubric.volume.bands())),
        "variety": {
            "data_type_count": rubric.variety.data_type_count,
            "osn_count": rubric.variety.osn_count,
            "representation": rubric.variety.representation,
        },
        "visual": {
            "variables": sorted(rubric.visual.visual_variables),
            "interactions": sorted(rubric.visual.interactions),
        },
    }


def _published_to_obj(entry: PublishedScores) -> dict[str, Any]:
    scores = {k: v for k, v in entry.degrees().items() if v is not None}
    return {
        "name": entry.tool_name,
        "license": entry.license,
        "scores": scores,
        "source": entry.source,
    }


def serialize_catalog(catalog: ToolCatalog) -> str:
    """Serialize a catalog back to its JSON document form."""
    tools = [
        _rubric_to_obj(t) if isinstance(t, Rubric) else _published_to_obj(t)
        for t in catalog.tools
    ]
    return json.dumps({"tools": tools}, indent=2) + "\n"


def bundled_catalog() -> ToolCatalog:
    """The catalog of the 20 surveyed tools shipped with the package."""
    data = resources.files("snacap.data").joinpath(BUNDLED_CATALOG).read_text("utf-8")
    return parse_catalog(data)
