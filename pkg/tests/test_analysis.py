import pytest

from snacap.analysis import (
    canonical_dimension,
    distribution_stats,
    pareto_front,
    rank,
    top_k_by_dimension,
)
from snacap.catalog import ToolCatalog, PublishedScores, bundled_catalog

from conftest import make_rubric


def published(name, license="open_source", **scores):
    return PublishedScores(tool_name=name, license=license, **scores)


def catalog_of_points(points):
    """(name -> (x, y)) as a catalog scored on d_value/d_volume."""
    return ToolCatalog(
        tuple(
            published(name, d_value=x, d_volume=y, d_variety=1.0, d_visual=1.0)
            for name, (x, y) in sorted(points.items())
        )
    )


def pareto_oracle(points):
    """Exhaustive pairwise dominance: front = everything nobody dominates."""
    dominated = set()
    for a, (ax, ay) in points.items():
        for b, (bx, by) in points.items():
            if a == b:
                continue
            if ax >= bx and ay >= by and (ax > bx or ay > by):
                dominated.add(b)
    return set(points) - dominated


class TestRank:
    def test_published_combined_top5(self):
        result = rank(bundled_catalog())
        top5 = [(t.name, round(t.capability.normalized, 2)) for t in result.ranked[:5]]
        assert [name for name, _ in top5] == [
            "Graphistry", "Neo4j", "ORA-LITE/PRO", "NetMiner", "Cytoscape",
        ]

    def test_published_open_source_top5(self):
        result = rank(bundled_catalog(), license_filter="open_source")
        assert [t.name for t in result.ranked[:5]] == [
            "Neo4j", "Cytoscape", "Gephi", "Pajek", "JUNG",
        ]

    def test_partial_tools_reported_separately(self):
        result = rank(bundled_catalog())
        excluded = dict(result.excluded)
        assert "SNAP" in excluded
        assert "missing" in excluded["SNAP"]
        assert len(result.ranked) + len(result.excluded) == 20

    def test_rank_is_permutation_of_complete_tools(self):
        catalog = bundled_catalog()
        complete = {t.tool_name for t in catalog if t.complete}
        result = rank(catalog)
        assert {t.name for t in result.ranked} == complete

    def test_ties_break_alphabetically(self):
        catalog = ToolCatalog(
            (
                published("zeta", d_value=0.5, d_volume=0.5, d_variety=0.5, d_visual=0.5),
                published("alpha", d_value=0.5, d_volume=0.5, d_variety=0.5, d_visual=0.5),
            )
        )
        assert [t.name for t in rank(catalog).ranked] == ["alpha", "zeta"]

    def test_degenerate_scores_not_ranked(self):
        catalog = ToolCatalog(
            (published("flat", d_value=0.8, d_volume=0.0, d_variety=0.0, d_visual=0.0),)
        )
        result = rank(catalog)
        assert result.ranked == ()
        assert "degenerate" in result.excluded[0][1]

    def test_rubrics_are_scored_then_ranked(self):
        catalog = ToolCatalog((make_rubric("self-assessed"),))
        result = rank(catalog)
        assert result.ranked[0].scores.d_variety == pytest.approx(5 / 9)

    def test_unknown_license_filter(self):
        with pytest.raises(ValueError):
            rank(bundled_catalog(), license_filter="gpl")


class TestTopK:
    def test_knowledge_discovery_top5(self):
        entries = top_k_by_dimension(bundled_catalog(), "knowledge_discovery", 5)
        assert entries == [
            ("ORA-LITE/PRO", 0.84),
            ("Cytoscape", 0.67),
            ("SNAP", 0.67),
            ("NetMiner", 0.65),
            ("NetworkX", 0.52),
        ]

    def test_scalability_top3_all_tied_at_one(self):
        entries = top_k_by_dimension(bundled_catalog(), "scalability", 3)
        assert entries == [("AllegroGraph", 1.0), ("Graphistry", 1.0), ("Neo4j", 1.0)]

    def test_k_larger_than_catalog(self):
        entries = top_k_by_dimension(bundled_catalog(), "d_visual", 50)
        assert len(entries) == 8  # only tools with a published d_visual

    def test_aliases(self):
        assert canonical_dimension("Information Fusion") == "d_variety"
        assert canonical_dimension("visualization") == "d_visual"
        assert canonical_dimension("d_value") == "d_value"

    def test_unknown_dimension(self):
        with pytest.raises(ValueError):
            top_k_by_dimension(bundled_catalog(), "velocity", 3)

    def test_k_must_be_positive(self):
        with pytest.raises(ValueError):
            top_k_by_dimension(bundled_catalog(), "d_value", 0)


class TestPareto:
    def test_strict_dominance(self):
        result = pareto_front(catalog_of_points({"a": (1, 1), "b": (0, 0)}), "value", "volume")
        assert result.front == frozenset({"a"})
        assert result.dominated == frozenset({"b"})

    def test_graphistry_dominates_scalability_vs_fusion(self):
        result = pareto_front(bundled_catalog(), "scalability", "information_fusion")
        assert "Graphistry" in result.front
        others = {name for name, _, _ in result.points} - {"Graphistry"}
        assert result.dominated == frozenset(others)

    def test_equal_points_are_mutually_nondominated(self):
        result = pareto_front(catalog_of_points({"a": (0.5, 0.5), "b": (0.5, 0.5)}), "value", "volume")
        assert result.front == frozenset({"a", "b"})

    def test_same_axis_rejected(self):
        with pytest.raises(ValueError):
            pareto_front(bundled_catalog(), "d_value", "value")

    def test_matches_exhaustive_oracle_on_random_sets(self, rng):
        for trial in range(200):
            count = rng.randint(1, 6)
            points = {
                f"t{i}": (rng.choice((0.0, 0.25, 0.5, 0.75, 1.0)), rng.random())
                for i in range(count)
            }
            result = pareto_front(catalog_of_points(points), "value", "volume")
            assert set(result.front) == pareto_oracle(points), points

    def test_every_dominated_tool_has_a_dominator_in_front(self, rng):
        for trial in range(50):
            points = {f"t{i}": (rng.random(), rng.random()) for i in range(8)}
            result = pareto_front(catalog_of_points(points), "value", "volume")
            for name in result.dominated:
                x, y = points[name]
                assert any(
                    points[f][0] >= x and points[f][1] >= y
                    and (points[f][0] > x or points[f][1] > y)
                    for f in result.front
                )

    def test_adding_tool_only_removes_members_it_dominates(self, rng):
        for trial in range(50):
            points = {f"t{i}": (rng.random(), rng.random()) for i in range(6)}
            before = pareto_front(catalog_of_points(points), "value", "volume")
            new = (rng.random(), rng.random())
            points["zz_new"] = new
            after = pareto_front(catalog_of_points(points), "value", "volume")
            for lost in set(before.front) - set(after.front):
                x, y = points[lost]
                assert new[0] >= x and new[1] >= y and (new[0] > x or new[1] > y)


class TestDistribution:
    def test_single_tool_collapses(self):
        catalog = ToolCatalog(
            (published("only", d_value=0.4, d_volume=0.5, d_variety=0.6, d_visual=0.7),)
        )
        stats = distribution_stats(catalog).per_dimension["d_value"]
        assert stats.minimum == stats.q1 == stats.median == stats.q3 == stats.maximum == 0.4

    def test_three_point_median_and_mean(self):
        catalog = ToolCatalog(
            tuple(
                published(f"t{i}", d_value=v, d_volume=0.5, d_variety=0.5, d_visual=0.5)
                for i, v in enumerate((0.0, 0.5, 1.0))
            )
        )
        stats = distribution_stats(catalog).per_dimension["d_value"]
        assert stats.median == 0.5
        assert stats.mean == pytest.approx(0.5)

    def test_published_d_value_column_matches_hand_computation(self):
        # Ten published d_value numbers, quartiles interpolated by hand
        # (inclusive method): sorted values are
        # [0.33, 0.35, 0.41, 0.48, 0.48, 0.52, 0.65, 0.67, 0.67, 0.84];
        # q1 at index 2.25 -> 0.41 + 0.25*0.07, median at 4.5 -> 0.50,
        # q3 at 6.75 -> 0.65 + 0.75*0.02, mean = 5.40 / 10.
        stats = distribution_stats(bundled_catalog()).per_dimension["d_value"]
        assert stats.count == 10
        assert stats.minimum == 0.33
        assert stats.maximum == 0.84
        assert stats.q1 == pytest.approx(0.4275)
        assert stats.median == pytest.approx(0.50)
        assert stats.q3 == pytest.approx(0.665)
        assert stats.mean == pytest.approx(0.54)
        assert stats.minimum <= stats.q1 <= stats.median <= stats.q3 <= stats.maximum

    def test_empty_catalog_rejected(self):
        with pytest.raises(ValueError):
            distribution_stats(ToolCatalog())
