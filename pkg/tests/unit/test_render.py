"""Tests for SVG rendering."""

from fractions import Fraction

from disk_criterion.config import RenderConfig
from disk_criterion.criterion import evaluate
from disk_criterion.parameterize import parameterize_boundary
from disk_criterion.render import color_ramp, emit_svg, get_templates_dir, write_svg


def test_templates_dir():
    """Test that the SVG template ships with the package."""
    assert (get_templates_dir() / "shape.svg.j2").exists()


def test_color_ramp():
    """Test hue endpoints."""
    assert color_ramp(Fraction(0)) == "hsl(0,80%,45%)"
    assert color_ramp(0.5) == "hsl(150,80%,45%)"


def test_render_plain_shape(lone_square):
    """Test cells only, with canvas size from scale and margin."""
    svg = emit_svg(lone_square)

    assert svg.startswith("<svg")
    assert 'width="200"' in svg
    assert svg.count('class="cell"') == 1
    assert '<rect class="cell" x="80" y="80"' in svg
    assert "class=\"arc " not in svg


def test_render_parameterized_square(lone_square):
    """Test gamma and one mark per boundary element."""
    result = parameterize_boundary(lone_square)
    svg = emit_svg(lone_square, result.split, result.circle)

    assert svg.count('class="arc ') == 2
    assert 'class="arc arc-complement"' in svg
    assert svg.count('class="mark"') == 8
    assert "V(0,0) = 0" in svg
    assert 'class="label"' not in svg


def test_render_labels(block3):
    """Test that labels follow the config."""
    result = parameterize_boundary(block3)
    svg = emit_svg(block3, result.split, result.circle, config=RenderConfig(show_labels=True))

    assert svg.count('class="mark"') == 24
    assert svg.count('class="label"') == 24


def test_render_failures(shape):
    """Test that failure witnesses and conditions are annotated."""
    cubical = shape("square_dangling")
    svg = emit_svg(cubical, criterion=evaluate(cubical))

    assert svg.count('class="failure"') == 2
    assert svg.count('class="extra-edge"') == 1
    assert "condition 3 fails at 2 boundary elements" in svg
    assert "E(1,0)-(2,0) fails condition 3" in svg


def test_render_annulus_annotation(annulus):
    """Test the complement annotation on a ring."""
    svg = emit_svg(annulus, criterion=evaluate(annulus))

    assert "condition 2 fails: complement has 2 components" in svg
    assert 'class="failure"' not in svg


def test_write_svg(lone_square, temp_output_dir):
    """Test writing into a new directory."""
    path = write_svg(emit_svg(lone_square), temp_output_dir / "svg" / "square.svg")

    assert path.exists()
    assert path.read_text(encoding="utf-8").rstrip().endswith("</svg>")
