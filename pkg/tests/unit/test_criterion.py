"""Tests for the four-condition criterion."""

import pytest

from disk_criterion.criterion import check_accessibility, check_connectivity, evaluate
from disk_criterion.crosscheck import shape_from_mask
from disk_criterion.cubical import CubicalSet, build_cubical_set
from disk_criterion.errors import ContractViolation
from disk_criterion.types import BoundaryElement, Edge, Region, Verdict


@pytest.mark.parametrize("name", ["lone_square", "domino", "row3", "block3", "l_tromino"])
def test_disks(shape, name):
    """Test shapes that are closed disks."""
    report = evaluate(shape(name))

    assert report.verdict is Verdict.DISK
    assert report.failed_conditions == []


def test_annulus_fails_complement_only(annulus):
    """Test that a ring fails only complement connectivity."""
    report = evaluate(annulus)

    assert report.verdict is Verdict.NOT_DISK
    assert report.failed_conditions == [2]
    assert report.cond2_components == 2


def test_diagonal_pair_fails_interior_only(shape):
    """Test two cells meeting at a corner."""
    report = evaluate(shape("diagonal_pair"))

    assert report.failed_conditions == [1]
    assert report.cond1_components == 2


def test_dangling_edge_fails_interior_access(shape):
    """Test that a dangling edge is inaccessible from the interior."""
    report = evaluate(shape("square_dangling"))

    assert report.failed_conditions == [3]
    assert report.cond3_failures == [
        BoundaryElement.edge((1, 0), (2, 0)),
        BoundaryElement.vertex((2, 0)),
    ]


def test_empty_interior():
    """Test that a set with no cells fails the precondition."""
    s = build_cubical_set(2, 2, extra_edges=[((0, 0), (1, 0))])
    report = evaluate(s)

    assert report.verdict is Verdict.PRECONDITION_FAILED
    assert not report.nonempty_interior
    assert check_connectivity(s, Region.INTERIOR) == (False, 0)


def test_check_accessibility(lone_square):
    """Test accessibility of a boundary vertex from both regions."""
    v = BoundaryElement.vertex((1, 1))

    assert check_accessibility(lone_square, v, Region.INTERIOR)
    assert check_accessibility(lone_square, v, Region.COMPLEMENT)


def test_check_accessibility_rejects_interior_element(block3):
    """Test that interior elements are refused."""
    with pytest.raises(ContractViolation):
        check_accessibility(block3, BoundaryElement.vertex((1, 1)), Region.INTERIOR)


def test_report_serializes_labels(shape):
    """Test that failure witnesses serialize as labels."""
    data = evaluate(shape("square_dangling")).model_dump(mode="json")

    assert data["cond3_failures"] == ["E(1,0)-(2,0)", "V(2,0)"]
    assert data["verdict"] == "not-disk"


def _dangling_edges(cubical: CubicalSet) -> list[Edge]:
    """Uncovered unit edges of the grid lattice leaving a vertex of the set."""
    found: set[Edge] = set()
    for x, y in cubical.vertices:
        for nx, ny in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if 0 <= nx <= cubical.width and 0 <= ny <= cubical.height:
                edge = ((x, y), (nx, ny)) if (x, y) <= (nx, ny) else ((nx, ny), (x, y))
                if edge not in cubical.edges:
                    found.add(edge)
    return sorted(found)


def _assert_dangling_edges_fail_cond3(cubical: CubicalSet) -> int:
    checked = 0
    for edge in _dangling_edges(cubical):
        report = evaluate(
            build_cubical_set(cubical.width, cubical.height, cubical.cells, extra_edges=[edge])
        )
        assert not report.cond3_accessible_from_interior
        assert BoundaryElement.edge(*edge) in report.cond3_failures
        assert report.verdict is Verdict.NOT_DISK
        checked += 1
    return checked


@pytest.mark.parametrize("name", ["lone_square", "domino", "l_tromino"])
def test_dangling_edge_flips_cond3(shape, name):
    """Test every dangling edge on small disks."""
    cubical = shape(name)
    grown = build_cubical_set(cubical.width + 1, cubical.height + 1, cubical.cells)

    assert evaluate(grown).verdict is Verdict.DISK
    assert _assert_dangling_edges_fail_cond3(grown) > 0


@pytest.mark.slow
def test_dangling_edge_flips_cond3_exhaustive():
    """Test every dangling edge on every disk of a 3x3 grid."""
    disks = 0
    for mask in range(1, 1 << 9):
        cubical = shape_from_mask(3, 3, mask)
        if evaluate(cubical).verdict is not Verdict.DISK:
            continue
        disks += 1
        _assert_dangling_edges_fail_cond3(cubical)
    assert disks > 0
