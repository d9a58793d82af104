"""Standalone SVG renderers for the two interval-PCA plots.

``render_circle`` draws the symbolic correlation circle: a unit circle with
one axis-aligned rectangle per variable spanning its correlation intervals
on the two chosen components. ``render_plane`` draws the symbolic principal
plane: one rectangle per object spanning its score intervals.

Geometry contract (documented so output can be inverted exactly):

* circle: center (width/2, height/2), radius 0.42 * min(width, height);
  a correlation point (cx, cy) maps to
  ``svg_x = center_x + radius * cx``, ``svg_y = center_y - radius * cy``.
* plane: the score bounding box, padded by 5% of its span per axis, maps
  affinely onto the full viewport (y inverted, SVG grows downward).

Coordinates are emitted at full float precision, so mapping rectangle
corners back through the inverse affine transform reproduces the input
intervals to machine accuracy. Output is deterministic: identical input
produces byte-identical SVG.
"""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .errors import DataError
from .intervals import IntervalMatrix

__all__ = ["PlotSpec", "render_circle", "render_plane", "PALETTE"]

CIRCLE_RADIUS_FRACTION = 0.42
PLANE_PADDING_FRACTION = 0.05

# Fixed qualitative palette; row i uses PALETTE[i % 12].
PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
    "#bcbd22", "#7f7f7f", "#aec7e8", "#98df8a",
)

_FONT = 'font-family="sans-serif" font-size="12"'


@dataclass(frozen=True)
class PlotSpec:
    """Which components to plot and how big the canvas is.

    Component indices are 1-based, matching the PC1, PC2, ... labels.
    """

    axis_x: int = 1
    axis_y: int = 2
    width: int = 600
    height: int = 600
    labels: bool = True
    title: str = ""

    def __post_init__(self) -> None:
        if self.axis_x == self.axis_y:
            raise DataError("axis_x and axis_y must differ")
        if self.axis_x < 1 or self.axis_y < 1:
            raise DataError("component indices are 1-based and positive")
        if self.width <= 0 or self.height <= 0:
            raise DataError("viewport dimensions must be positive")


def _fmt(x: float) -> str:
    return repr(float(x))


def _axis_columns(table: IntervalMatrix, spec: PlotSpec) -> tuple[int, int]:
    q = len(table.cols)
    if spec.axis_x > q or spec.axis_y > q:
        raise DataError(
            f"axis out of range: requested ({spec.axis_x}, {spec.axis_y}) "
            f"of {q} components"
        )
    return spec.axis_x - 1, spec.axis_y - 1


def _svg_open(spec: PlotSpec) -> list[str]:
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
    ]
    if spec.title:
        parts.append(
            f'<text x="{_fmt(spec.width / 2)}" y="16" text-anchor="middle" '
            f'{_FONT}>{escape(spec.title)}</text>'
        )
    return parts


def _rect(x: float, y: float, w: float, h: float, color: str) -> str:
    return (
        f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(w)}" '
        f'height="{_fmt(h)}" fill="none" stroke="{color}" stroke-width="1.5"/>'
    )


def _line(x1: float, y1: float, x2: float, y2: float) -> str:
    return (
        f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" '
        f'y2="{_fmt(y2)}" stroke="#999999" stroke-width="1"/>'
    )


def _text(x: float, y: float, anchor: str, content: str, color: str) -> str:
    return (
        f'<text x="{_fmt(x)}" y="{_fmt(y)}" text-anchor="{anchor}" '
        f'{_FONT} fill="{color}">{escape(content)}</text>'
    )


def render_circle(correlations: IntervalMatrix, spec: PlotSpec) -> str:
    """Render the correlation circle; input must already be clamped to
    [-1, 1] (which keeps all geometry inside the viewport)."""
    jx, jy = _axis_columns(correlations, spec)
    if correlations.lo.size and (
        correlations.lo.min() < -1.0 or correlations.hi.max() > 1.0
    ):
        raise DataError(
            "correlation intervals must be clamped to [-1, 1] before rendering"
        )
    cx = spec.width / 2.0
    cy = spec.height / 2.0
    radius = CIRCLE_RADIUS_FRACTION * min(spec.width, spec.height)

    def sx(value: float) -> float:
        return cx + radius * value

    def sy(value: float) -> float:
        return cy - radius * value

    parts = _svg_open(spec)
    parts.append(_line(0.0, cy, float(spec.width), cy))
    parts.append(_line(cx, 0.0, cx, float(spec.height)))
    parts.append(
        f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(radius)}" '
        f'fill="none" stroke="#444444" stroke-width="1"/>'
    )
    parts.append(
        _text(float(spec.width) - 4.0, cy - 6.0, "end",
              correlations.cols[jx], "#444444")
    )
    parts.append(
        _text(cx + 6.0, 14.0, "start", correlations.cols[jy], "#444444")
    )
    for i, name in enumerate(correlations.rows):
        color = PALETTE[i % len(PALETTE)]
        x_lo, x_hi = correlations.lo[i, jx], correlations.hi[i, jx]
        y_lo, y_hi = correlations.lo[i, jy], correlations.hi[i, jy]
        parts.append(
            _rect(sx(x_lo), sy(y_hi), radius * (x_hi - x_lo),
                  radius * (y_hi - y_lo), color)
        )
        if spec.labels:
            parts.append(
                _text(sx((x_lo + x_hi) / 2.0), sy((y_lo + y_hi) / 2.0),
                      "middle", name, color)
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_plane(scores: IntervalMatrix, spec: PlotSpec) -> str:
    """Render objects as rectangles over their score intervals on two
    components; the data box is padded 5% per axis, axes cross at zero."""
    jx, jy = _axis_columns(scores, spec)
    if len(scores.rows) == 0:
        raise DataError("cannot render an empty table")
    x_min, x_max = float(scores.lo[:, jx].min()), float(scores.hi[:, jx].max())
    y_min, y_max = float(scores.lo[:, jy].min()), float(scores.hi[:, jy].max())
    # A degenerate span would collapse the affine map; give it unit room.
    x_pad = PLANE_PADDING_FRACTION * (x_max - x_min) if x_max > x_min else 0.5
    y_pad = PLANE_PADDING_FRACTION * (y_max - y_min) if y_max > y_min else 0.5
    x0, x1 = x_min - x_pad, x_max + x_pad
    y0, y1 = y_min - y_pad, y_max + y_pad

    def sx(value: float) -> float:
        return (value - x0) * spec.width / (x1 - x0)

    def sy(value: float) -> float:
        return (y1 - value) * spec.height / (y1 - y0)

    parts = _svg_open(spec)
    parts.append(_line(0.0, sy(0.0), float(spec.width), sy(0.0)))
    parts.append(_line(sx(0.0), 0.0, sx(0.0), float(spec.height)))
    parts.append(
        _text(float(spec.width) - 4.0, sy(0.0) - 6.0, "end",
              scores.cols[jx], "#444444")
    )
    parts.append(_text(sx(0.0) + 6.0, 14.0, "start", scores.cols[jy], "#444444"))
    for i, name in enumerate(scores.rows):
        color = PALETTE[i % len(PALETTE)]
        x_lo, x_hi = scores.lo[i, jx], scores.hi[i, jx]
        y_lo, y_hi = scores.lo[i, jy], scores.hi[i, jy]
        if x_lo == x_hi and y_lo == y_hi:
            # degenerate score: 2-px marker centered on the point
            parts.append(
                _rect(sx(x_lo) - 1.0, sy(y_lo) - 1.0, 2.0, 2.0, color)
            )
        else:
            parts.append(
                _rect(sx(x_lo), sy(y_hi), sx(x_hi) - sx(x_lo),
                      sy(y_lo) - sy(y_hi), color)
            )
        if spec.labels:
            parts.append(_text(sx(x_hi) + 3.0, sy(y_hi) - 3.0, "start", name, color))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
