import json

import pytest
from hypothesis import given, settings, strategies as st

from snacap.capability import Rubric
from snacap.catalog import (
    CatalogError,
    PublishedScores,
    ToolCatalog,
    bundled_catalog,
    catalog_diagnostics,
    parse_catalog,
    serialize_catalog,
    validate_rubric,
)

from conftest import make_rubric


RAW_ENTRY = {
    "name": "demo",
    "license": "open_source",
    "value": {
        "topology_measures": ["diameter", "density"],
        "link_analysis": ["pagerank"],
        "community_detection": {
            "static_non_overlapping": True,
            "static_overlapping": False,
            "temporal": False,
        },
        "topic_detection": True,
        "sentiment_analysis": False,
        "homophily": False,
        "virality": False,
        "link_prediction": False,
    },
    "volume": {
        "space_time": "medium",
        "parallelism": "low",
        "functional": "large",
        "heterogeneous": "medium",
    },
    "variety": {"data_type_count": 2, "osn_count": 1, "representation": "basic"},
    "visual": {"variables": ["position", "color"], "interactions": ["zoom"]},
}


def doc(*entries) -> str:
    return json.dumps({"tools": list(entries)})


class TestParse:
    def test_bundled_dataset(self):
        catalog = bundled_catalog()
        assert len(catalog) == 20
        published = [t for t in catalog if isinstance(t, PublishedScores)]
        assert len(published) == 20
        assert sum(1 for t in published if t.complete) == 8
        graphistry = catalog.get("Graphistry")
        assert graphistry.d_variety == 1.0
        assert catalog.get("SNAP").d_value == 0.67
        assert catalog.get("AllegroGraph").d_volume == 1.0
        assert catalog.get("Network Workbench").d_variety == 0.67

    def test_empty_catalog(self):
        assert len(parse_catalog(doc())) == 0

    def test_raw_entry(self):
        catalog = parse_catalog(doc(RAW_ENTRY))
        rubric = catalog.get("demo")
        assert isinstance(rubric, Rubric)
        assert rubric.value.topology_measures == frozenset({"diameter", "density"})
        assert rubric.volume.functional == "large"

    def test_unknown_topology_measure_named_in_diagnostic(self):
        entry = json.loads(json.dumps(RAW_ENTRY))
        entry["value"]["topology_measures"].append("telepathy")
        with pytest.raises(CatalogError) as excinfo:
            parse_catalog(doc(entry))
        (diag,) = excinfo.value.diagnostics
        assert "telepathy" in diag.message
        assert "topology_measures" in diag.path

    def test_duplicate_tool_names_rejected(self):
        entry = {"name": "x", "license": "open_source", "scores": {}}
        with pytest.raises(CatalogError, match="duplicate"):
            parse_catalog(doc(entry, dict(entry)))

    def test_out_of_range_degree_rejected(self):
        entry = {"name": "x", "license": "open_source", "scores": {"d_value": 1.5}}
        with pytest.raises(CatalogError, match=r"\[0, 1\]"):
            parse_catalog(doc(entry))

    def test_malformed_json_rejected_with_path(self):
        with pytest.raises(CatalogError):
            parse_catalog(b"{nope")

    def test_unknown_band_has_field_path(self):
        entry = json.loads(json.dumps(RAW_ENTRY))
        entry["volume"]["parallelism"] = "huge"
        diagnostics = catalog_diagnostics(doc(entry))
        assert any("parallelism" in d.path and d.severity == "error" for d in diagnostics)

    def test_partial_scores_parse_as_unassessed(self):
        entry = {"name": "x", "license": "proprietary", "scores": {"d_visual": 0.5}}
        catalog = parse_catalog(doc(entry))
        tool = catalog.get("x")
        assert tool.d_visual == 0.5
        assert tool.d_value is None
        assert not tool.complete

    @given(st.binary(max_size=300))
    @settings(max_examples=300)
    def test_parsing_is_total(self, data):
        # Any byte soup gives a catalog or diagnostics, never another error.
        diagnostics = catalog_diagnostics(data)
        try:
            parse_catalog(data)
        except CatalogError:
            assert any(d.severity == "error" for d in diagnostics)
        else:
            assert not any(d.severity == "error" for d in diagnostics)


class TestRoundTrip:
    def test_bundled_round_trip(self):
        catalog = bundled_catalog()
        assert parse_catalog(serialize_catalog(catalog)) == catalog

    def test_serialize_empty(self):
        assert parse_catalog(serialize_catalog(ToolCatalog())) == ToolCatalog()

    def test_raw_rubric_round_trip_preserves_band_words(self):
        catalog = parse_catalog(doc(RAW_ENTRY))
        text = serialize_catalog(catalog)
        assert '"medium"' in text and '"large"' in text
        assert parse_catalog(text) == catalog

    def test_serialize_then_parse_is_identity_on_random_rubrics(self, rng):
        from conftest import random_rubric

        catalog = ToolCatalog(tuple(random_rubric(rng, f"tool{i}") for i in range(10)))
        assert parse_catalog(serialize_catalog(catalog)) == catalog


class TestValidateRubric:
    def test_valid_rubric_has_no_diagnostics(self):
        assert validate_rubric(make_rubric()) == []

    def test_zero_osn_count_flagged(self):
        diagnostics = validate_rubric(make_rubric(osns=0))
        assert len(diagnostics) == 1
        assert diagnostics[0].path == "variety.osn_count"
        assert diagnostics[0].severity == "error"

    def test_topology_cap_warning(self):
        diagnostics = validate_rubric(make_rubric(topology=9))
        assert [d.severity for d in diagnostics] == ["warning"]
        assert "capped at 5" in diagnostics[0].message

    def test_warning_does_not_block_parse(self):
        entry = json.loads(json.dumps(RAW_ENTRY))
        entry["value"]["topology_measures"] = sorted(
            {"diameter", "density", "mean_degree", "degree_distribution",
             "clustering_coefficient", "connected_components", "transitivity",
             "triangle_count", "centrality_suite"}
        )
        catalog = parse_catalog(doc(entry))
        assert isinstance(catalog.get("demo"), Rubric)
        diagnostics = catalog_diagnostics(doc(entry))
        assert any(d.severity == "warning" for d in diagnostics)
        assert not any(d.severity == "error" for d in diagnostics)
