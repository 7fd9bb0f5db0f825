import random
import re

import pytest

from snacap.capability import DimensionScores, capability_c4
from snacap.radar import RadarSpec, render_radar, shoelace_area

POLYGON_RE = re.compile(r'<polygon class="score" points="([^"]+)"')
SPOKE_RE = re.compile(r'<line class="score"')


def score_polygon_vertices(svg: str) -> list[tuple[float, float]]:
    match = POLYGON_RE.search(svg)
    assert match, "no score polygon in SVG"
    return [
        (float(pair.split(",")[0]), float(pair.split(",")[1]))
        for pair in match.group(1).split()
    ]


def unit_scaled(vertices, spec: RadarSpec):
    c, s = spec.center, spec.scale
    return [((x - c) / s, (y - c) / s) for x, y in vertices]


class TestRenderRadar:
    def test_maximal_square_has_area_two(self):
        spec = RadarSpec(DimensionScores(1.0, 1.0, 1.0, 1.0))
        vertices = unit_scaled(score_polygon_vertices(render_radar(spec)), spec)
        assert shoelace_area(vertices) == pytest.approx(2.0, abs=1e-9)

    def test_graphistry_polygon_area_is_raw_c4(self):
        scores = DimensionScores(d_value=0.33, d_volume=1.0, d_variety=1.0, d_visual=1.0)
        spec = RadarSpec(scores)
        vertices = unit_scaled(score_polygon_vertices(render_radar(spec)), spec)
        assert shoelace_area(vertices) == pytest.approx(1.33, abs=1e-9)

    def test_area_identity_random_tuples(self):
        rng = random.Random(99)
        for _ in range(200):
            scores = DimensionScores(*(rng.uniform(0.01, 1.0) for _ in range(4)))
            spec = RadarSpec(scores)
            vertices = unit_scaled(score_polygon_vertices(render_radar(spec)), spec)
            assert shoelace_area(vertices) == pytest.approx(
                capability_c4(scores).raw, abs=1e-9
            )

    def test_vertices_lie_on_axes_at_degree_distances(self):
        scores = DimensionScores(0.2, 0.4, 0.6, 0.8)
        spec = RadarSpec(scores)
        (vx, vy), (ax, ay), (ox, oy), (ix, iy) = unit_scaled(spec.vertices(), spec)
        assert (vx, vy) == pytest.approx((0.2, 0.0))      # value on +x
        assert (ax, ay) == pytest.approx((0.0, -0.6))     # variety up (SVG -y)
        assert (ox, oy) == pytest.approx((-0.4, 0.0))     # volume on -x
        assert (ix, iy) == pytest.approx((0.0, 0.8))      # visual down

    def test_byte_stability(self):
        spec = RadarSpec(DimensionScores(0.37, 0.91, 0.18, 0.64), label="demo")
        assert render_radar(spec) == render_radar(spec)
        assert render_radar(spec).encode() == render_radar(spec).encode()

    def test_all_zero_renders_axes_only_with_flag(self):
        svg = render_radar(RadarSpec(DimensionScores(0.0, 0.0, 0.0, 0.0)))
        assert POLYGON_RE.search(svg) is None
        assert SPOKE_RE.search(svg) is None
        assert "degeneracy=single_dimension" in svg
        assert svg.count("<line") == 4  # the four axes

    def test_degenerate_draws_nonzero_spokes(self):
        svg = render_radar(RadarSpec(DimensionScores(0.8, 0.5, 0.0, 0.0)))
        assert POLYGON_RE.search(svg) is None
        assert len(SPOKE_RE.findall(svg)) == 2
        assert "degeneracy=projected_2d" in svg

    def test_gridlines_at_quarter_steps(self):
        svg = render_radar(RadarSpec(DimensionScores(1.0, 1.0, 1.0, 1.0)))
        gridlines = [line for line in svg.splitlines() if 'stroke="#cccccc"' in line]
        assert len(gridlines) == 4

    def test_out_of_range_scores_rejected(self):
        with pytest.raises(ValueError):
            RadarSpec(DimensionScores(1.0, 1.0, 1.3, 1.0))

    def test_bad_canvas_rejected(self):
        with pytest.raises(ValueError):
            RadarSpec(DimensionScores(0.5, 0.5, 0.5, 0.5), size=10)
