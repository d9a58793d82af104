"""
Rendering the symbolic correlation circle and principal plane
=============================================================

Variables become rectangles inside the unit circle (their interval
correlations with two components); objects become rectangles in the
principal plane (their interval scores). Both renderers emit standalone
deterministic SVG.
"""

from pathlib import Path

from sympca import (
    PlotSpec,
    clamp_correlations,
    load_oils_table,
    pca_auto,
    render_circle,
    render_plane,
)

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

result = pca_auto(load_oils_table())

# The circle requires clamped correlations: rectangles then never leave
# the unit disk's bounding box.
circle_svg = render_circle(
    clamp_correlations(result.correlations),
    PlotSpec(axis_x=1, axis_y=2, title="oils: correlation circle (PC1 vs PC2)"),
)
circle_path = out_dir / "oils_correlation_circle.svg"
circle_path.write_text(circle_svg, encoding="utf-8")
print(f"wrote {circle_path}")

plane_svg = render_plane(
    result.scores,
    PlotSpec(axis_x=1, axis_y=2, title="oils: principal plane (PC1 vs PC2)"),
)
plane_path = out_dir / "oils_principal_plane.svg"
plane_path.write_text(plane_svg, encoding="utf-8")
print(f"wrote {plane_path}")

# Identical inputs produce byte-identical SVG, so plots are safe to diff
# in golden-file tests.
assert circle_svg == render_circle(
    clamp_correlations(result.correlations),
    PlotSpec(axis_x=1, axis_y=2, title="oils: correlation circle (PC1 vs PC2)"),
)
print("byte-identical on re-render: True")
