"""Tests for dyadic nets and the boundary parameterization."""

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from disk_criterion.arcs import jordan_split
from disk_criterion.criterion import evaluate
from disk_criterion.cubical import build_cubical_set, region_components
from disk_criterion.errors import ContractViolation, IncompleteNetError, InternalInvariantViolation
from disk_criterion.oracle import boundary_cycle
from disk_criterion.order import OrderedArc, audit_metric, sort_boundary
from disk_criterion.parameterize import (
    DyadicNet,
    Parameterization,
    assemble_circle,
    build_net,
    parameter_function,
    parameterize_boundary,
    refinement_decay,
)
from disk_criterion.surd import Surd
from disk_criterion.types import ArcSide, Region, Verdict
from tests.helpers import random_disks, same_cycle


@pytest.fixture
def square_arc(lone_square) -> OrderedArc:
    return OrderedArc(jordan_split(lone_square), ArcSide.K1)


def test_build_net_on_square(square_arc):
    """Test midpoints and level diameters on one cell."""
    net = build_net(square_arc)
    ordered = sort_boundary(square_arc)

    assert net.depth == 2
    assert sorted(net.assignments) == [Fraction(k, 4) for k in range(5)]
    assert [net.assignments[Fraction(k, 4)] for k in range(5)] == ordered
    assert net.level_diameters == [Surd.sqrt(2), Surd.rational(1), Surd.rational(1)]
    assert net.terminal == 1


def test_parameter_function(square_arc):
    """Test that values increase along the arc."""
    params = parameter_function(square_arc, build_net(square_arc))
    ordered = sort_boundary(square_arc)

    assert [params[e] for e in ordered] == [Fraction(k, 4) for k in range(5)]
    assert params.ordered() == ordered
    assert params.side is ArcSide.K1


def test_parameter_function_needs_full_net(square_arc):
    """Test that a net missing elements is refused."""
    ordered = sort_boundary(square_arc)
    partial = DyadicNet({Fraction(0): ordered[0], Fraction(1): ordered[-1]}, depth=0)

    with pytest.raises(IncompleteNetError):
        parameter_function(square_arc, partial)


def test_assemble_circle(lone_square):
    """Test gluing two arcs of one cell into eighths."""
    result = parameterize_boundary(lone_square)
    values = sorted(result.circle.values.values())

    assert values == [Fraction(k, 8) for k in range(8)]
    assert result.circle.cyclic
    assert result.circle[result.split.z1] == 0
    assert result.circle[result.split.z2] == Fraction(1, 2)


def test_assemble_circle_rejects_bad_ends(lone_square):
    """Test that both arcs must run from z1 to z2."""
    split = jordan_split(lone_square)
    bad = Parameterization({split.z1: Fraction(1), split.z2: Fraction(0)})

    with pytest.raises(ContractViolation):
        assemble_circle(split, bad, bad)


@pytest.mark.parametrize("name", ["lone_square", "domino", "row3", "l_tromino", "block3"])
def test_circle_order_is_boundary_cycle(shape, name):
    """Test that increasing parameter walks the boundary."""
    cubical = shape(name)
    result = parameterize_boundary(cubical)

    assert same_cycle(result.circle.ordered(), boundary_cycle(cubical))


def test_parameterize_requires_disk(annulus):
    """Test that a non-disk is refused."""
    with pytest.raises(ContractViolation):
        parameterize_boundary(annulus)


def test_to_report(lone_square):
    """Test the report summary of a single cell."""
    report = parameterize_boundary(lone_square).to_report()

    assert report.z1 == "V(0,0)" and report.z2 == "V(1,1)"
    assert report.k1_size == 5 and report.k2_size == 5
    assert report.k1_depth == 2 and report.k2_depth == 2
    assert [p.value for p in report.parameters] == [
        "0", "1/8", "1/4", "3/8", "1/2", "5/8", "3/4", "7/8"
    ]
    assert report.cyclic_order[0] == "V(0,0)"
    assert report.parameters[3].approx == pytest.approx(0.375)


def test_refinement_decay(lone_square):
    """Test that the terminal diameter halves under subdivision."""
    report = refinement_decay(lone_square, ArcSide.K1, levels=1)

    assert [level.subdivision for level in report.levels] == [0, 1]
    assert [level.terminal for level in report.levels] == pytest.approx([1.0, 0.5])
    assert report.ratios == pytest.approx([0.5])
    assert report.levels[0].level_diameters[0] == pytest.approx(2**0.5)


def test_refinement_decay_window(lone_square):
    """Test that a decay outside the window is an invariant failure."""
    with pytest.raises(InternalInvariantViolation, match="ratio"):
        refinement_decay(lone_square, ArcSide.K1, levels=1, decay_low=0.6, decay_high=0.7)


@pytest.mark.slow
def test_refinement_decay_two_levels(shape):
    """Test two rounds of subdivision on a domino."""
    report = refinement_decay(shape("domino"), ArcSide.K2, levels=2)

    assert len(report.levels) == 3
    assert all(0.375 <= r <= 0.625 for r in report.ratios)


@st.composite
def polyomino_disks(draw):
    """Random edge-connected polyominoes grown from one cell."""
    width = draw(st.integers(1, 4))
    height = draw(st.integers(1, 4))
    cells = {(draw(st.integers(0, width - 1)), draw(st.integers(0, height - 1)))}
    for _ in range(draw(st.integers(0, 6))):
        c, r = draw(st.sampled_from(sorted(cells)))
        dc, dr = draw(st.sampled_from([(1, 0), (-1, 0), (0, 1), (0, -1)]))
        if 0 <= c + dc < width and 0 <= r + dr < height:
            cells.add((c + dc, r + dr))
    return build_cubical_set(width, height, cells)


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(polyomino_disks())
def test_random_disks_parameterize(cubical):
    """Test that every criterion disk gets a parameterization along its boundary."""
    verdict = evaluate(cubical).verdict
    holes = len(region_components(cubical, Region.COMPLEMENT)) > 1
    if holes:
        assert verdict is not Verdict.DISK
        return
    if verdict is not Verdict.DISK:
        return

    result = parameterize_boundary(cubical)
    assert same_cycle(result.circle.ordered(), boundary_cycle(cubical))
    for side in ArcSide:
        assert audit_metric(result.arcs[side]).ok
        diameters = result.nets[side].level_diameters
        assert all(b <= a for a, b in zip(diameters, diameters[1:], strict=False))


@pytest.mark.slow
def test_cyclic_suite():
    """Test 500 random disks up to 6x6 against the boundary walk."""
    for cubical in random_disks(seed=500, count=500, max_side=6):
        result = parameterize_boundary(cubical)

        assert same_cycle(result.circle.ordered(), boundary_cycle(cubical))
        for side in ArcSide:
            ordered = sort_boundary(result.arcs[side])
            values = [result.parameterizations[side][e] for e in ordered]
            assert values[0] == 0 and values[-1] == 1
            assert all(p < q for p, q in zip(values, values[1:], strict=False))
            assert all(v.denominator & (v.denominator - 1) == 0 for v in values)
