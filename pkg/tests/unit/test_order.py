"""Tests for arc order, interval sets and the diameter metric."""

import pytest

from disk_criterion.arcs import jordan_split
from disk_criterion.errors import ContractViolation
from disk_criterion.oracle import boundary_cycle
from disk_criterion.order import (
    OrderedArc,
    audit_crosscut_pairs,
    audit_metric,
    compare,
    interval_w,
    midpoint,
    rho,
    signed_f,
    sort_boundary,
)
from disk_criterion.surd import Surd
from disk_criterion.types import ArcSide, BoundaryElement, ElementKind, Ordering
from tests.helpers import arc_matches_cycle, random_disks


@pytest.fixture
def square_arc(lone_square) -> OrderedArc:
    return OrderedArc(jordan_split(lone_square), ArcSide.K1)


def test_sort_square_arc(square_arc):
    """Test that a single-cell arc runs vertex, edge, vertex, edge, vertex."""
    ordered = sort_boundary(square_arc)

    assert ordered[0] == square_arc.a and ordered[-1] == square_arc.b
    assert [e.kind for e in ordered] == [
        ElementKind.VERTEX,
        ElementKind.EDGE,
        ElementKind.VERTEX,
        ElementKind.EDGE,
        ElementKind.VERTEX,
    ]
    for prev, nxt in zip(ordered, ordered[1:], strict=False):
        assert set(prev.lattice_vertices) & set(nxt.lattice_vertices)


def test_compare_endpoints_fixed(square_arc):
    """Test that z1 precedes and z2 follows every element."""
    ordered = sort_boundary(square_arc)
    a, b = square_arc.a, square_arc.b

    for x in ordered[1:]:
        assert compare(square_arc, a, x) is Ordering.LESS
        assert compare(square_arc, x, a) is Ordering.GREATER
    for x in ordered[:-1]:
        assert compare(square_arc, x, b) is Ordering.LESS
    assert compare(square_arc, a, a) is Ordering.EQUAL


def test_compare_via_either_crosscut(square_arc):
    """Test that both crosscuts decide a middle pair the same way."""
    _, x, y, z, _ = sort_boundary(square_arc)

    assert compare(square_arc, x, z) is Ordering.LESS
    assert compare(square_arc, x, z, via="y") is Ordering.LESS
    assert compare(square_arc, z, y, via="y") is Ordering.GREATER


def test_compare_rejects_foreign_element(lone_square):
    """Test that an element of the other arc is refused."""
    split = jordan_split(lone_square)
    arc = OrderedArc(split, ArcSide.K1)
    foreign = next(iter(split.k2 - split.k1))

    with pytest.raises(ContractViolation):
        compare(arc, arc.a, foreign)


def test_lower_side_separates_endpoints(square_arc):
    """Test that the crosscut side fill holds z1 and not z2."""
    middle = sort_boundary(square_arc)[2]
    lower = square_arc.lower_side(middle)

    assert square_arc.pieces_of(square_arc.a) & lower
    assert not square_arc.pieces_of(square_arc.b) & lower


def test_interval_w(lone_square):
    """Test interval sets before and after sorting."""
    split = jordan_split(lone_square)
    fresh = OrderedArc(split, ArcSide.K1)
    middle = next(e for e in split.k1 if e.is_vertex and e not in (split.z1, split.z2))

    unsorted_result = interval_w(fresh, split.z2, middle)
    assert not fresh.is_sorted

    ordered = sort_boundary(fresh)
    assert unsorted_result == ordered[2:]
    assert interval_w(fresh, middle, split.z2) == ordered[2:]
    assert interval_w(fresh, split.z1, split.z1) == [split.z1]


def test_rho_and_signed_f(square_arc):
    """Test diameters and the signed distance sum on a single cell."""
    a, e, c, _, b = sort_boundary(square_arc)

    assert rho(square_arc, a, a) == 0
    assert rho(square_arc, a, e) == 1
    assert rho(square_arc, a, c) == 1
    assert rho(square_arc, a, b) == Surd.sqrt(2)
    assert rho(square_arc, c, a) == rho(square_arc, a, c)
    assert signed_f(square_arc, a, b, c) == 0
    assert signed_f(square_arc, a, b, e) == 1 - Surd.sqrt(2)


def test_midpoint(square_arc):
    """Test recursive midpoints on a single cell."""
    a, e, c, _, b = sort_boundary(square_arc)

    assert midpoint(square_arc, a, b) == c
    assert midpoint(square_arc, a, c) == e
    assert midpoint(square_arc, a, e) is None
    with pytest.raises(ContractViolation):
        midpoint(square_arc, b, a)


@pytest.mark.parametrize("side", list(ArcSide))
def test_block_order_follows_boundary_cycle(block3, side):
    """Test that the crosscut order agrees with walking the boundary."""
    arc = OrderedArc(jordan_split(block3), side)

    assert arc_matches_cycle(sort_boundary(arc), boundary_cycle(block3))


@pytest.mark.parametrize("name", ["lone_square", "l_tromino", "block3"])
def test_audit_metric(shape, name):
    """Test that the diameter metric passes every exhaustive check."""
    arc = OrderedArc(jordan_split(shape(name)), ArcSide.K1)
    audit = audit_metric(arc)

    assert audit.ok
    assert audit.triples_checked == len(arc) ** 3


def test_audit_crosscut_pairs(square_arc):
    """Test that neighbouring crosscuts can be made disjoint."""
    assert audit_crosscut_pairs(square_arc) == 2


def test_audit_metric_edges_at_distance_zero(square_arc):
    """Test that an edge is at distance 0 from itself although its closure has length 1."""
    ordered = sort_boundary(square_arc)
    edge = ordered[1]

    assert square_arc.diameter2(1, 1) > 0
    assert rho(square_arc, edge, edge) == 0

    audit = audit_metric(square_arc)
    assert audit.identity_violations == 0
    assert audit.triangle_violations == 0
    assert audit.nesting_violations == 0


@pytest.mark.parametrize("name", ["lone_square", "l_tromino", "block3"])
@pytest.mark.parametrize("side", list(ArcSide))
def test_signed_f_nondecreasing(shape, name, side):
    """Test that the signed distance sum grows along the arc."""
    arc = OrderedArc(jordan_split(shape(name)), side)
    ordered = sort_boundary(arc)
    values = [signed_f(arc, arc.a, arc.b, z) for z in ordered]

    assert all(u <= v for u, v in zip(values, values[1:], strict=False))
    assert values[0] == -rho(arc, arc.a, arc.b)
    assert values[-1] == rho(arc, arc.a, arc.b)


def _check_order_relation(arc: OrderedArc) -> None:
    """Totality, antisymmetry, transitivity and crosscut independence on every pair."""
    elements = sorted(arc.elements)
    after: dict[BoundaryElement, set[BoundaryElement]] = {}
    for x in elements:
        after[x] = set()
        for y in elements:
            result = compare(arc, x, y)
            assert result is compare(arc, x, y, via="y")
            assert (result is Ordering.EQUAL) == (x == y)
            if result is Ordering.LESS:
                after[x].add(y)
    for x in elements:
        for y in after[x]:
            assert after[y] <= after[x]


@pytest.mark.slow
def test_random_arcs_metric_and_order():
    """Test the metric, the order relation and the potential on 20 random disks up to 8x8."""
    shapes = random_disks(seed=20, count=20, max_side=8, max_cells=12)

    for cubical in shapes:
        split = jordan_split(cubical)
        cycle = boundary_cycle(cubical)
        for side in ArcSide:
            arc = OrderedArc(split, side)
            assert len(arc) <= 60

            _check_order_relation(arc)
            ordered = sort_boundary(arc)
            assert arc_matches_cycle(ordered, cycle)

            audit = audit_metric(arc)
            assert audit.ok
            assert audit.triples_checked == len(arc) ** 3

            values = [signed_f(arc, arc.a, arc.b, z) for z in ordered]
            assert all(u <= v for u, v in zip(values, values[1:], strict=False))
