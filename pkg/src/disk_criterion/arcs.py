"""Injective arcs through open regions, the Jordan split, and crosscuts."""

from collections import deque
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .criterion import evaluate
from .cubical import (
    Classification,
    CubicalSet,
    cell_center,
    cell_neighbors,
    classify,
    edge_midpoint,
    incident_cells,
    region_cells,
    region_passable,
    shared_edge,
)
from .errors import ContractViolation, InternalInvariantViolation, NoArcError
from .geometry import (
    Segment,
    audit_polyline,
    crossing_parity,
    elementary_sides,
    is_left,
    point_on_polyline,
    polyline_segments,
    polylines_meet,
)
from .subdivision import INFINITY, Piece, Subdivision, subdivision_for
from .types import HALF, UNIT, ArcSide, BoundaryElement, Cell, Point, Region, Verdict
from .utils.logger import log_structured, logger

# Step of the fine lattice used when a crosscut must dodge another one.
FINE = HALF // 2


@dataclass(frozen=True)
class Arc:
    """Injective polyline in fixed-point units."""

    points: tuple[Point, ...]
    region: Region
    start: BoundaryElement | None = None
    end: BoundaryElement | None = None
    through: BoundaryElement | None = None

    @property
    def segments(self) -> list[Segment]:
        return polyline_segments(self.points)

    def sides(self, step: int = HALF) -> frozenset[Segment]:
        """Elementary sides covering the arc on the given lattice."""
        found: set[Segment] = set()
        for a, b in self.segments:
            found.update(elementary_sides(a, b, step))
        return frozenset(found)

    def reversed(self) -> "Arc":
        return Arc(tuple(reversed(self.points)), self.region, self.end, self.start, self.through)

    def in_cell_units(self) -> list[tuple[float, float]]:
        return [(x / UNIT, y / UNIT) for x, y in self.points]


def _incident_region_cells(
    cubical: CubicalSet, element: BoundaryElement, region: Region
) -> list[Cell]:
    members = region_cells(cubical, region)
    return sorted(c for c in incident_cells(element) if c in members)


def _path_points(path: Sequence[Cell]) -> list[Point]:
    points = [cell_center(path[0])]
    for a, b in zip(path, path[1:], strict=False):
        points.append(edge_midpoint(shared_edge(a, b)))
        points.append(cell_center(b))
    return points


def _cell_bfs(
    cubical: CubicalSet,
    region: Region,
    sources: Iterable[Cell],
    is_target: Callable[[Cell], bool],
    allowed: Callable[[Cell], bool],
) -> list[Cell] | None:
    """Shortest path of region cells from any source to the first target."""
    members = region_cells(cubical, region)
    parents: dict[Cell, Cell | None] = {}
    queue: deque[Cell] = deque()
    for s in sources:
        if s not in parents:
            parents[s] = None
            queue.append(s)
    while queue:
        current = queue.popleft()
        if is_target(current):
            path = [current]
            while (prev := parents[path[-1]]) is not None:
                path.append(prev)
            return path[::-1]
        for nxt in cell_neighbors(current):
            if nxt in parents or nxt not in members:
                continue
            if not region_passable(cubical, region, current, nxt):
                continue
            if not (is_target(nxt) or allowed(nxt)):
                continue
            parents[nxt] = current
            queue.append(nxt)
    return None


def _audit_in_region(
    cubical: CubicalSet,
    points: Sequence[Point],
    region_of: Callable[[int], Region],
    exempt: set[Point],
    what: str,
) -> None:
    """Every non-exempt vertex and every segment midpoint lies in its open region."""
    for i, p in enumerate(points):
        if p not in exempt and not cubical.point_in_region(p, region_of(i)):
            raise InternalInvariantViolation(f"{what} leaves its region at {p}")
    for i, (a, b) in enumerate(polyline_segments(points)):
        mid = ((a[0] + b[0]) // 2, (a[1] + b[1]) // 2)
        if not cubical.point_in_region(mid, region_of(i)):
            raise InternalInvariantViolation(f"{what} leaves its region near {mid}")


def region_arc(
    cubical: CubicalSet,
    region: Region,
    x1: BoundaryElement,
    x2: BoundaryElement,
) -> Arc:
    """
    Build an injective arc from x1 to x2 whose interior lies in an open region.

    The arc enters an incident region cell, follows a BFS shortest path
    through cell centres and shared-edge midpoints, and leaves through an
    incident cell of x2. Legs at vertex elements are slope +-1.

    Args:
        cubical: Set the region belongs to
        region: INTERIOR or COMPLEMENT
        x1: Start element
        x2: End element

    Returns:
        Audited Arc tagged with the region

    Raises:
        ContractViolation: If x1 == x2 or an endpoint is not accessible
        NoArcError: If the endpoints lie in different region components
    """
    if x1 == x2:
        raise ContractViolation("arc endpoints must differ")
    sources = _incident_region_cells(cubical, x1, region)
    targets = set(_incident_region_cells(cubical, x2, region))
    if not sources or not targets:
        missing = x1 if not sources else x2
        raise ContractViolation(f"{missing.label} is not accessible from {region.value}")

    path = _cell_bfs(cubical, region, sources, targets.__contains__, lambda _c: True)
    if path is None:
        raise NoArcError(f"{x1.label} and {x2.label} lie in different {region.value} components")

    points = [x1.representative, *_path_points(path), x2.representative]
    audit_polyline(points, what=f"{region.value} arc")
    _audit_in_region(
        cubical, points, lambda _i: region, {points[0], points[-1]}, f"{region.value} arc"
    )
    logger.debug(f"{region.value} arc {x1.label} -> {x2.label} through {len(path)} cells")
    return Arc(tuple(points), region, start=x1, end=x2)


def accessibility_witness(
    cubical: CubicalSet, element: BoundaryElement, region: Region
) -> Arc:
    """
    The injective arc realizing accessibility of a boundary element.

    Raises:
        ContractViolation: If the element has no incident region cell
    """
    cells = _incident_region_cells(cubical, element, region)
    if not cells:
        raise ContractViolation(f"{element.label} is not accessible from {region.value}")
    return Arc(
        (cell_center(cells[0]), element.representative), region, end=element
    )


def select_endpoints(
    classification: Classification,
) -> tuple[BoundaryElement, BoundaryElement]:
    """
    Boundary vertices at maximal Euclidean distance, ties broken lexicographically.

    Raises:
        ContractViolation: If there are fewer than two boundary vertices
    """
    vertices = sorted(e.start for e in classification.boundary_vertices)
    if len(vertices) < 2:
        raise ContractViolation("need at least two boundary vertices")
    best: tuple[int, tuple[int, int], tuple[int, int]] | None = None
    for i, a in enumerate(vertices):
        for b in vertices[i + 1 :]:
            d = (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2
            if best is None or d > best[0]:
                best = (d, a, b)
    assert best is not None
    return BoundaryElement.vertex(best[1]), BoundaryElement.vertex(best[2])


@dataclass(frozen=True)
class JordanSplit:
    """The curve gamma through z1, z2 and everything it separates."""

    cubical: CubicalSet
    z1: BoundaryElement
    z2: BoundaryElement
    interior_arc: Arc
    complement_arc: Arc
    gamma: tuple[Point, ...]
    inside: frozenset[Piece]
    outside: frozenset[Piece]
    k1: frozenset[BoundaryElement]
    k2: frozenset[BoundaryElement]
    d1: frozenset[Piece] = field(repr=False)
    d2: frozenset[Piece] = field(repr=False)
    outer_d1: frozenset[Piece] = field(repr=False)
    outer_d2: frozenset[Piece] = field(repr=False)

    @cached_property
    def gamma_sides(self) -> frozenset[Segment]:
        return self.interior_arc.sides() | self.complement_arc.sides()

    @property
    def subdivision(self) -> Subdivision:
        return subdivision_for(self.cubical)

    def on_gamma(self, p: Point) -> bool:
        return point_on_polyline(p, self.gamma, closed=True)

    def inside_test(self, p: Point) -> bool:
        """Membership in the closed disk B1 bounded by gamma."""
        if self.on_gamma(p):
            return True
        return crossing_parity(p, self.gamma) == 1

    def arc_elements(self, side: ArcSide) -> frozenset[BoundaryElement]:
        return self.k1 if side is ArcSide.K1 else self.k2

    def side_pieces(self, side: ArcSide) -> frozenset[Piece]:
        """Pieces on the processed side: inside B1 for K1, outside for K2."""
        return self.inside if side is ArcSide.K1 else self.outside

    def region_arc_of(self, region: Region) -> Arc:
        return self.interior_arc if region is Region.INTERIOR else self.complement_arc


def _query_point(sub: Subdivision, piece: Piece, gamma: Sequence[Point]) -> Point:
    """A sample point strictly inside the piece and off gamma."""
    a, b, _ = piece
    tri = sub.corners[piece]
    candidates = [sub.sample(piece)] + [
        (a + i, b + j) for i in range(1, HALF, 2) for j in range(1, HALF, 2)
    ]
    for p in candidates:
        strictly_inside = all(
            is_left(tri[k], tri[(k + 1) % 3], p) * is_left(tri[k], tri[(k + 1) % 3], tri[(k + 2) % 3])
            > 0
            for k in range(3)
        )
        if strictly_inside and not point_on_polyline(p, gamma, closed=True):
            return p
    raise InternalInvariantViolation(f"no query point off gamma in piece {piece}")


def jordan_split(
    cubical: CubicalSet,
    z1: BoundaryElement | None = None,
    z2: BoundaryElement | None = None,
) -> JordanSplit:
    """
    Split the frame by gamma = interior arc z1->z2 followed by complement arc z2->z1.

    Inside/outside of gamma is decided by exact crossing parity and checked
    against a flood fill over frame pieces; the outside is completed by one
    node beyond the frame.

    Args:
        cubical: A set that passes all four conditions
        z1: First endpoint (default: from select_endpoints)
        z2: Second endpoint (default: from select_endpoints)

    Returns:
        JordanSplit

    Raises:
        ContractViolation: If the set is not a disk by the criterion, or z1/z2 are invalid
        InternalInvariantViolation: If gamma is not simple or parity disagrees with flood fill
    """
    if evaluate(cubical).verdict is not Verdict.DISK:
        raise ContractViolation("jordan_split needs a set passing all four conditions")
    classification = classify(cubical)
    if z1 is None or z2 is None:
        z1, z2 = select_endpoints(classification)
    if z1 == z2:
        raise ContractViolation("z1 and z2 must differ")
    for z in (z1, z2):
        if z not in classification.boundary_set:
            raise ContractViolation(f"{z.label} is not a boundary element")

    interior = region_arc(cubical, Region.INTERIOR, z1, z2)
    complement = region_arc(cubical, Region.COMPLEMENT, z2, z1)
    gamma = interior.points + complement.points[1:-1]
    audit_polyline(gamma, closed=True, what="gamma")

    sub = subdivision_for(cubical)
    blocked = interior.sides() | complement.sides()
    everything = set(sub.pieces) | {INFINITY}
    comps = sub.components(everything, blocked=blocked, infinity=True)
    if len(comps) != 2:
        raise InternalInvariantViolation(f"gamma leaves {len(comps)} regions, expected 2")
    outside = next(c for c in comps if INFINITY in c)
    inside = next(c for c in comps if INFINITY not in c)

    sample_in = _query_point(sub, min(inside), gamma)
    sample_out = _query_point(sub, min(outside - {INFINITY}), gamma)
    if crossing_parity(sample_in, gamma) != 1 or crossing_parity(sample_out, gamma) != 0:
        raise InternalInvariantViolation("crossing parity disagrees with flood fill")

    k1 = {z1, z2}
    k2 = {z1, z2}
    for e in classification.boundary_elements:
        if e in (z1, z2):
            continue
        (k1 if crossing_parity(e.representative, gamma) == 1 else k2).add(e)

    def by_region(pieces: set[Piece], region: Region) -> frozenset[Piece]:
        return frozenset(p for p in pieces if sub.region(p) is region)

    split = JordanSplit(
        cubical=cubical,
        z1=z1,
        z2=z2,
        interior_arc=interior,
        complement_arc=complement,
        gamma=gamma,
        inside=frozenset(inside),
        outside=frozenset(outside),
        k1=frozenset(k1),
        k2=frozenset(k2),
        d1=by_region(inside, Region.INTERIOR),
        d2=by_region(inside, Region.COMPLEMENT),
        outer_d1=by_region(outside, Region.INTERIOR),
        outer_d2=by_region(outside, Region.COMPLEMENT),
    )
    log_structured(
        logger,
        "debug",
        "Jordan split",
        z1=z1.label,
        z2=z2.label,
        gamma=len(gamma),
        k1=len(k1),
        k2=len(k2),
    )
    return split


def split_components(split: JordanSplit) -> dict[str, int]:
    """Component counts of the four open pieces cut out by gamma and the boundary."""
    sub = split.subdivision
    blocked = split.gamma_sides
    counts = {}
    for name, members, region in (
        ("d1", split.d1, Region.INTERIOR),
        ("d2", split.d2, Region.COMPLEMENT),
        ("outer_d1", split.outer_d1, Region.INTERIOR),
        ("outer_d2", split.outer_d2, Region.COMPLEMENT),
    ):
        counts[name] = len(sub.components(members, blocked, region, infinity=True))
    return counts


def _gamma_cells(split: JordanSplit, region: Region) -> set[Cell]:
    centres = set(split.region_arc_of(region).points)
    return {c for c in region_cells(split.cubical, region) if cell_center(c) in centres}


def _coarse_half(
    split: JordanSplit, region: Region, x: BoundaryElement, want_inside: bool
) -> list[Point] | None:
    """Half crosscut from x to gamma's region arc along cell centres."""
    cubical = split.cubical
    on_gamma = _gamma_cells(split, region)
    sources = _incident_region_cells(cubical, x, region)

    def allowed(cell: Cell) -> bool:
        return cell not in on_gamma and split.inside_test(cell_center(cell)) == want_inside

    path = _cell_bfs(cubical, region, sources, on_gamma.__contains__, allowed)
    if path is None:
        return None
    return [x.representative, *_path_points(path)]


def _fine_half(
    split: JordanSplit,
    region: Region,
    x: BoundaryElement,
    want_inside: bool,
    avoid: Sequence[Point],
) -> list[Point] | None:
    """Half crosscut on the fine lattice, kept off ``avoid``."""
    cubical = split.cubical
    target_arc = split.region_arc_of(region).points
    ends = {split.z1.representative, split.z2.representative}
    (x0, y0), (x1, y1) = cubical.frame.bounds

    def terminal(p: Point) -> bool:
        return p not in ends and point_on_polyline(p, target_arc)

    def usable(p: Point) -> bool:
        if not (x0 < p[0] < x1 and y0 < p[1] < y1):
            return False
        if not cubical.point_in_region(p, region) or point_on_polyline(p, avoid):
            return False
        if terminal(p):
            return True
        return not split.on_gamma(p) and split.inside_test(p) == want_inside

    def passable(p: Point, q: Point) -> bool:
        mid = ((p[0] + q[0]) // 2, (p[1] + q[1]) // 2)
        return cubical.point_in_region(mid, region) and not point_on_polyline(mid, avoid)

    start = x.representative
    first: list[Point] = []
    for cell in _incident_region_cells(cubical, x, region):
        cx, cy = cell_center(cell)
        step = (
            (FINE if cx > start[0] else -FINE if cx < start[0] else 0),
            (FINE if cy > start[1] else -FINE if cy < start[1] else 0),
        )
        first.append((start[0] + step[0], start[1] + step[1]))

    parents: dict[Point, Point] = {}
    queue: deque[Point] = deque()
    for p in first:
        if p not in parents and usable(p) and passable(start, p):
            parents[p] = start
            queue.append(p)
    while queue:
        current = queue.popleft()
        if terminal(current):
            path = [current]
            while path[-1] != start:
                path.append(parents[path[-1]])
            return path[::-1]
        cx, cy = current
        for nxt in ((cx + FINE, cy), (cx - FINE, cy), (cx, cy + FINE), (cx, cy - FINE)):
            if nxt in parents or nxt == start:
                continue
            if usable(nxt) and passable(current, nxt):
                parents[nxt] = current
                queue.append(nxt)
    return None


def _audit_crosscut(split: JordanSplit, points: Sequence[Point], x: BoundaryElement) -> None:
    cubical = split.cubical
    rep = x.representative
    if points.count(rep) != 1:
        raise InternalInvariantViolation(f"crosscut does not pass through {x.label}")
    k = points.index(rep)

    def region_of(i: int) -> Region:
        return Region.INTERIOR if i < k else Region.COMPLEMENT

    _audit_in_region(cubical, points, region_of, {rep}, f"crosscut through {x.label}")
    for p in points[1:-1]:
        if split.on_gamma(p):
            raise InternalInvariantViolation(f"crosscut through {x.label} touches gamma at {p}")
    for end in (points[0], points[-1]):
        if not split.on_gamma(end):
            raise InternalInvariantViolation(f"crosscut through {x.label} does not end on gamma")


def crosscut(
    split: JordanSplit,
    arc_side: ArcSide,
    x: BoundaryElement,
    avoid: Arc | None = None,
) -> Arc:
    """
    Crosscut through a boundary element of K1 or K2.

    The result runs from a point of gamma's interior arc through D1 to x,
    then through D2 to a point of gamma's complement arc (the outer pieces
    for K2). It touches the boundary of D only at x. With ``avoid`` the
    result is disjoint from that arc, rerouted on a finer lattice if needed.

    Args:
        split: Jordan split
        arc_side: K1 or K2
        x: Element of the chosen arc other than z1, z2
        avoid: Optional arc to stay disjoint from

    Returns:
        Audited Arc tagged MIXED, with ``through`` set to x

    Raises:
        ContractViolation: If x is not a middle element of the arc
        InternalInvariantViolation: If no valid crosscut can be routed
    """
    if x not in split.arc_elements(arc_side) or x in (split.z1, split.z2):
        raise ContractViolation(f"{x.label} is not a middle element of {arc_side.value}")
    for region in (Region.INTERIOR, Region.COMPLEMENT):
        if not _incident_region_cells(split.cubical, x, region):
            raise ContractViolation(f"{x.label} is not accessible from {region.value}")

    want_inside = arc_side is ArcSide.K1
    inner = _coarse_half(split, Region.INTERIOR, x, want_inside)
    outer = _coarse_half(split, Region.COMPLEMENT, x, want_inside)
    if inner is None or outer is None:
        raise InternalInvariantViolation(f"no crosscut through {x.label}")
    points = inner[::-1] + outer[1:]

    if avoid is not None and polylines_meet(points, avoid.points):
        fine_inner = _fine_half(split, Region.INTERIOR, x, want_inside, avoid.points)
        fine_outer = _fine_half(split, Region.COMPLEMENT, x, want_inside, avoid.points)
        if fine_inner is None or fine_outer is None:
            raise InternalInvariantViolation(
                f"cannot route a crosscut through {x.label} clear of the given arc"
            )
        points = fine_inner[::-1] + fine_outer[1:]
        if polylines_meet(points, avoid.points):
            raise InternalInvariantViolation(f"crosscut through {x.label} meets the avoided arc")
        logger.debug(f"Rerouted crosscut through {x.label} on the fine lattice")

    audit_polyline(points, what=f"crosscut through {x.label}")
    _audit_crosscut(split, points, x)
    return Arc(tuple(points), Region.MIXED, through=x)
