"""Deterministic SVG radar (spider) charts for dimension scores.

Axis placement puts the value/volume pair on the horizontal axis (+x/-x)
and the variety/visual pair on the vertical axis (+y/-y).  With that
layout the shaded quadrilateral's area, in unit coordinates, is exactly the
raw C4 capability score: 0.5 * (d_value + d_volume) * (d_variety +
d_visual).  Output is a pure function of its inputs, so re-rendering is
byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .capability import CapabilityScore, Degeneracy, DimensionScores, capability_c4

AXES = (
    # (dimension, label, x direction, y direction); SVG y grows downward.
    ("d_value", "value", 1.0, 0.0),
    ("d_variety", "variety", 0.0, -1.0),
    ("d_volume", "volume", -1.0, 0.0),
    ("d_visual", "visual", 0.0, 1.0),
)

GRID_LEVELS = (0.25, 0.5, 0.75, 1.0)


@dataclass(frozen=True)
class RadarSpec:
    scores: DimensionScores
    size: int = 500
    margin: float = 40.0
    label: str = ""

    def __post_init__(self) -> None:
        if self.size < 100:
            raise ValueError("canvas size must be at least 100")
        if not 0 < self.margin < self.size / 2:
            raise ValueError("margin must leave room for the chart")

    @property
    def center(self) -> float:
        return self.size / 2.0

    @property
    def scale(self) -> float:
        return self.size / 2.0 - self.margin

    def vertices(self) -> list[tuple[float, float]]:
        """Polygon corners in pixel coordinates, one per axis in order."""
        degrees = self.scores.as_dict()
        return [
            (self.center + degrees[dim] * self.scale * dx,
             self.center + degrees[dim] * self.scale * dy)
            for dim, _, dx, dy in AXES
        ]


def _fmt(x: float) -> str:
    return f"{x:.8f}"


def render_radar(spec: RadarSpec) -> str:
    """Render the chart; returns a standalone SVG document."""
    c = spec.center
    scale = spec.scale
    capability: CapabilityScore = capability_c4(spec.scores)
    degrees = spec.scores.as_dict()

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.size}" height="{spec.size}" '
        f'viewBox="0 0 {spec.size} {spec.size}">',
        f"  <desc>degeneracy={capability.degeneracy.value} raw_c4={capability.raw!r}</desc>",
    ]
    if spec.label:
        parts.append(
            f'  <text x="{_fmt(c)}" y="{_fmt(spec.margin / 2.0)}" text-anchor="middle" '
            f'font-size="16" font-family="sans-serif">{spec.label}</text>'
        )

    # Diamond gridlines every 0.25.
    for level in GRID_LEVELS:
        ring = " ".join(
            f"{_fmt(c + level * scale * dx)},{_fmt(c + level * scale * dy)}"
            for _, _, dx, dy in AXES
        )
        parts.append(
            f'  <polygon points="{ring}" fill="none" stroke="#cccccc" stroke-width="1"/>'
        )

    # Axes with labels just beyond the unit mark.
    for dim, label, dx, dy in AXES:
        x2, y2 = c + scale * dx, c + scale * dy
        lx, ly = c + (scale + 18.0) * dx, c + (scale + 18.0) * dy + 4.0
        parts.append(
            f'  <line x1="{_fmt(c)}" y1="{_fmt(c)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="#666666" stroke-width="1"/>'
        )
        parts.append(
            f'  <text x="{_fmt(lx)}" y="{_fmt(ly)}" text-anchor="middle" font-size="12" '
            f'font-family="sans-serif">{label}</text>'
        )

    if capability.degeneracy is Degeneracy.FULL_4D:
        points = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in spec.vertices())
        parts.append(
            f'  <polygon class="score" points="{points}" fill="#4477aa" '
            f'fill-opacity="0.45" stroke="#224466" stroke-width="2"/>'
        )
    else:
        # Degenerate scores have no area: draw the nonzero spokes instead.
        for (dim, _, dx, dy), (x, y) in zip(AXES, spec.vertices()):
            if degrees[dim] > 0.0:
                parts.append(
                    f'  <line class="score" x1="{_fmt(c)}" y1="{_fmt(c)}" '
                    f'x2="{_fmt(x)}" y2="{_fmt(y)}" stroke="#224466" stroke-width="3"/>'
                )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def shoelace_area(vertices: list[tuple[float, float]]) -> float:
    """Polygon area by the surveyor's formula (vertices in traversal order)."""
    n = len(vertices)
    acc = 0.0
    for i in range(n):
        x1, y1 = vertices[i]
        x2, y2 = vertices[(i + 1) % n]
        acc += x1 * y2 - x2 * y1
    return abs(acc) / 2.0
