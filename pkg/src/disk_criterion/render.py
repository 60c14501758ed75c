"""SVG rendering of a shape, its Jordan split and the boundary parameter."""

from fractions import Fraction
from pathlib import Path
from typing import Any

from jinja2 import Environment, FileSystemLoader, select_autoescape

from .arcs import JordanSplit
from .config import RenderConfig
from .cubical import CubicalSet
from .parameterize import Parameterization
from .types import UNIT, CriterionReport, Point
from .utils.logger import logger


def get_templates_dir() -> Path:
    """Get templates directory path."""
    return Path(__file__).parent / "templates"


def color_ramp(value: Fraction | float) -> str:
    """Hue ramp over [0, 1) for parameter values."""
    return f"hsl({round(300 * float(value))},80%,45%)"


class _Canvas:
    def __init__(self, cubical: CubicalSet, config: RenderConfig):
        self.scale = config.scale
        self.offset = config.margin + 1
        cells_wide = cubical.width + 2 * self.offset
        cells_high = cubical.height + 2 * self.offset
        self.width = cells_wide * self.scale
        self.height = cells_high * self.scale

    def lattice(self, x: float, y: float) -> tuple[float, float]:
        """Lattice coordinates to pixels."""
        return ((x + self.offset) * self.scale, (y + self.offset) * self.scale)

    def fixed(self, p: Point) -> tuple[float, float]:
        """Fixed-point coordinates to pixels."""
        return self.lattice(p[0] / UNIT, p[1] / UNIT)

    def path(self, points: tuple[Point, ...]) -> str:
        parts = []
        for i, p in enumerate(points):
            x, y = self.fixed(p)
            parts.append(f"{'M' if i == 0 else 'L'}{x:g},{y:g}")
        return " ".join(parts)


def emit_svg(
    cubical: CubicalSet,
    split: JordanSplit | None = None,
    circle: Parameterization | None = None,
    criterion: CriterionReport | None = None,
    config: RenderConfig | None = None,
) -> str:
    """
    Render cells, gamma and the parameterized boundary as SVG.

    Without a split, the criterion's failure witnesses are marked and the
    failed conditions annotated instead.

    Args:
        cubical: Shape to draw
        split: Jordan split, when the pipeline ran
        circle: Cyclic boundary parameter, when the pipeline ran
        criterion: Criterion report, used for failure annotations
        config: Render settings

    Returns:
        SVG document text
    """
    config = config or RenderConfig()
    canvas = _Canvas(cubical, config)

    cells = []
    for c, r in sorted(cubical.cells):
        x, y = canvas.lattice(c, r)
        cells.append({"x": x, "y": y})
    extra_edges = []
    for (x1, y1), (x2, y2) in sorted(cubical.extra_edges):
        (px1, py1), (px2, py2) = canvas.lattice(x1, y1), canvas.lattice(x2, y2)
        extra_edges.append({"x1": px1, "y1": py1, "x2": px2, "y2": py2})
    extra_vertices = []
    for vx, vy in sorted(cubical.extra_vertices):
        px, py = canvas.lattice(vx, vy)
        extra_vertices.append({"x": px, "y": py})

    arcs: list[dict[str, Any]] = []
    if split is not None:
        arcs.append(
            {
                "region": "interior",
                "d": canvas.path(split.interior_arc.points),
                "stroke": "#5e81ac",
                "dashed": False,
            }
        )
        arcs.append(
            {
                "region": "complement",
                "d": canvas.path(split.complement_arc.points),
                "stroke": "#d08770",
                "dashed": True,
            }
        )

    marks: list[dict[str, Any]] = []
    if circle is not None:
        for element in circle.ordered():
            value = circle[element]
            (x1, y1), *rest = [canvas.fixed(p) for p in element.closure_points]
            x2, y2 = rest[0] if rest else (x1, y1)
            tx, ty = canvas.fixed(element.representative)
            marks.append(
                {
                    "vertex": element.is_vertex,
                    "x1": x1,
                    "y1": y1,
                    "x2": x2,
                    "y2": y2,
                    "tx": tx + 3,
                    "ty": ty - 3,
                    "color": color_ramp(value),
                    "label": element.label,
                    "value": str(value),
                }
            )

    failures: list[dict[str, Any]] = []
    annotations: list[str] = []
    if split is None and criterion is not None:
        for condition, witnesses in (
            (3, criterion.cond3_failures),
            (4, criterion.cond4_failures),
        ):
            for element in witnesses:
                x, y = canvas.fixed(element.representative)
                failures.append(
                    {"x": x, "y": y, "note": f"{element.label} fails condition {condition}"}
                )
        if not criterion.nonempty_interior:
            annotations.append("empty interior")
        if not criterion.cond1_interior_connected and criterion.nonempty_interior:
            annotations.append(
                f"condition 1 fails: interior has {criterion.cond1_components} components"
            )
        if not criterion.cond2_complement_connected:
            annotations.append(
                f"condition 2 fails: complement has {criterion.cond2_components} components"
            )
        if criterion.cond3_failures:
            annotations.append(
                f"condition 3 fails at {len(criterion.cond3_failures)} boundary elements"
            )
        if criterion.cond4_failures:
            annotations.append(
                f"condition 4 fails at {len(criterion.cond4_failures)} boundary elements"
            )

    env = Environment(
        loader=FileSystemLoader(get_templates_dir()),
        autoescape=select_autoescape(["j2", "svg"]),
    )
    template = env.get_template("shape.svg.j2")
    svg = template.render(
        title=f"{cubical.width}x{cubical.height} shape",
        width=canvas.width,
        height=canvas.height,
        scale=config.scale,
        cells=cells,
        extra_edges=extra_edges,
        extra_vertices=extra_vertices,
        arcs=arcs,
        marks=marks,
        show_labels=config.show_labels,
        failures=failures,
        annotations=annotations,
    )
    logger.debug(f"Rendered SVG with {len(cells)} cells and {len(marks)} boundary marks")
    return svg


def write_svg(svg: str, output_path: Path) -> Path:
    """Write rendered SVG to a file."""
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(svg, encoding="utf-8")
    logger.info(f"Wrote SVG: {output_path}")
    return output_path
