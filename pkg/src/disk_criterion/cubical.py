"""Cubical model: the compact set D as cells plus lower-dimensional extras."""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .errors import InputError
from .types import (
    UNIT,
    BoundaryElement,
    Cell,
    Edge,
    Point,
    Region,
    Vertex,
    normalize_edge,
)
from .utils.logger import logger


def cell_vertices(cell: Cell) -> tuple[Vertex, Vertex, Vertex, Vertex]:
    c, r = cell
    return ((c, r), (c + 1, r), (c, r + 1), (c + 1, r + 1))


def cell_edges(cell: Cell) -> tuple[Edge, Edge, Edge, Edge]:
    c, r = cell
    return (
        ((c, r), (c + 1, r)),
        ((c, r + 1), (c + 1, r + 1)),
        ((c, r), (c, r + 1)),
        ((c + 1, r), (c + 1, r + 1)),
    )


def edge_cells(edge: Edge) -> tuple[Cell, Cell]:
    """The two cells sharing a unit edge."""
    (x1, y1), (x2, y2) = edge
    if y1 == y2:
        x = min(x1, x2)
        return ((x, y1 - 1), (x, y1))
    y = min(y1, y2)
    return ((x1 - 1, y), (x1, y))


def vertex_cells(v: Vertex) -> tuple[Cell, Cell, Cell, Cell]:
    x, y = v
    return ((x - 1, y - 1), (x, y - 1), (x - 1, y), (x, y))


def shared_edge(a: Cell, b: Cell) -> Edge:
    """Edge between two 4-adjacent cells."""
    (c1, r1), (c2, r2) = sorted((a, b))
    if r1 == r2:
        return ((c2, r1), (c2, r1 + 1))
    return ((c1, r2), (c1 + 1, r2))


def cell_neighbors(cell: Cell) -> tuple[Cell, Cell, Cell, Cell]:
    c, r = cell
    return ((c + 1, r), (c - 1, r), (c, r + 1), (c, r - 1))


def incident_cells(element: BoundaryElement) -> tuple[Cell, ...]:
    if element.is_vertex:
        return vertex_cells(element.start)
    return edge_cells((element.start, element.end))


def cell_center(cell: Cell) -> Point:
    return (cell[0] * UNIT + UNIT // 2, cell[1] * UNIT + UNIT // 2)


def edge_midpoint(edge: Edge) -> Point:
    (x1, y1), (x2, y2) = edge
    return ((x1 + x2) * UNIT // 2, (y1 + y2) * UNIT // 2)


@dataclass(frozen=True)
class Frame:
    """Cell box padded by one ring: columns -1..width, rows -1..height."""

    width: int
    height: int

    def contains(self, cell: Cell) -> bool:
        return -1 <= cell[0] <= self.width and -1 <= cell[1] <= self.height

    def on_ring(self, cell: Cell) -> bool:
        c, r = cell
        return c in (-1, self.width) or r in (-1, self.height)

    def cells(self) -> Iterator[Cell]:
        for r in range(-1, self.height + 1):
            for c in range(-1, self.width + 1):
                yield (c, r)

    @property
    def bounds(self) -> tuple[Point, Point]:
        """Lower-left and upper-right corners in fixed-point units."""
        return ((-UNIT, -UNIT), ((self.width + 1) * UNIT, (self.height + 1) * UNIT))


@dataclass(frozen=True)
class CubicalSet:
    """Cells plus dangling edges and vertices on a width x height grid."""

    width: int
    height: int
    cells: frozenset[Cell] = field(default_factory=frozenset)
    extra_edges: frozenset[Edge] = field(default_factory=frozenset)
    extra_vertices: frozenset[Vertex] = field(default_factory=frozenset)

    @cached_property
    def edges(self) -> frozenset[Edge]:
        """Every unit edge contained in D."""
        found = set(self.extra_edges)
        for cell in self.cells:
            found.update(cell_edges(cell))
        return frozenset(found)

    @cached_property
    def vertices(self) -> frozenset[Vertex]:
        """Every lattice vertex contained in D."""
        found = set(self.extra_vertices)
        for a, b in self.edges:
            found.add(a)
            found.add(b)
        return frozenset(found)

    @property
    def frame(self) -> Frame:
        return Frame(self.width, self.height)

    def is_occupied(self, cell: Cell) -> bool:
        return cell in self.cells

    def edge_is_interior(self, edge: Edge) -> bool:
        a, b = edge_cells(edge)
        return a in self.cells and b in self.cells

    def vertex_is_interior(self, v: Vertex) -> bool:
        return all(c in self.cells for c in vertex_cells(v))

    def contains_point(self, p: Point) -> bool:
        """Whether the fixed-point location p lies in D."""
        dim, key = locate(p)
        if dim == 2:
            return key in self.cells
        if dim == 1:
            return key in self.edges
        return key in self.vertices

    def point_in_region(self, p: Point, region: Region) -> bool:
        """Whether p lies in the open interior of D, or in the open complement."""
        dim, key = locate(p)
        if region is Region.INTERIOR:
            if dim == 2:
                return key in self.cells
            if dim == 1:
                return self.edge_is_interior(key)
            return self.vertex_is_interior(key)
        return not self.contains_point(p)


def locate(p: Point) -> tuple[int, Cell | Edge | Vertex]:
    """Return (dimension, key) of the open face of the lattice containing p."""
    x, y = p
    on_x = x % UNIT == 0
    on_y = y % UNIT == 0
    if on_x and on_y:
        return 0, (x // UNIT, y // UNIT)
    if on_x:
        j = y // UNIT
        return 1, ((x // UNIT, j), (x // UNIT, j + 1))
    if on_y:
        i = x // UNIT
        return 1, ((i, y // UNIT), (i + 1, y // UNIT))
    return 2, (x // UNIT, y // UNIT)


def _is_unit_edge(a: Vertex, b: Vertex) -> bool:
    return abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1


def build_cubical_set(
    width: int,
    height: int,
    cells: Iterable[Cell] = (),
    extra_edges: Iterable[Edge] = (),
    extra_vertices: Iterable[Vertex] = (),
) -> CubicalSet:
    """
    Build a normalized cubical set.

    Duplicates are dropped silently; extras already covered by the closure of
    a cell (or, for vertices, of an extra edge) are absorbed.

    Args:
        width: Grid width in cells
        height: Grid height in cells
        cells: Occupied cells (col, row)
        extra_edges: Unit lattice edges as vertex pairs
        extra_vertices: Lattice vertices

    Returns:
        Normalized CubicalSet

    Raises:
        InputError: If a dimension is not positive or a coordinate is out of bounds
    """
    if width < 1 or height < 1:
        raise InputError(f"grid must be at least 1x1, got {width}x{height}")

    cell_set: set[Cell] = set()
    for c, r in cells:
        if not (0 <= c < width and 0 <= r < height):
            raise InputError(f"cell ({c},{r}) outside {width}x{height} grid")
        cell_set.add((c, r))

    def check_vertex(v: Vertex) -> None:
        if not (0 <= v[0] <= width and 0 <= v[1] <= height):
            raise InputError(f"vertex ({v[0]},{v[1]}) outside {width}x{height} grid")

    covered_edges: set[Edge] = set()
    for cell in cell_set:
        covered_edges.update(cell_edges(cell))

    edge_set: set[Edge] = set()
    for a, b in extra_edges:
        check_vertex(a)
        check_vertex(b)
        if not _is_unit_edge(a, b):
            raise InputError(f"edge ({a[0]},{a[1]})-({b[0]},{b[1]}) is not a unit lattice edge")
        edge = normalize_edge(a, b)
        if edge not in covered_edges:
            edge_set.add(edge)

    covered_vertices = {v for edge in covered_edges | edge_set for v in edge}
    vertex_set: set[Vertex] = set()
    for v in extra_vertices:
        check_vertex(v)
        if v not in covered_vertices:
            vertex_set.add(v)

    result = CubicalSet(
        width=width,
        height=height,
        cells=frozenset(cell_set),
        extra_edges=frozenset(edge_set),
        extra_vertices=frozenset(vertex_set),
    )
    logger.debug(
        f"Built cubical set {width}x{height}: {len(cell_set)} cells, "
        f"{len(edge_set)} extra edges, {len(vertex_set)} extra vertices"
    )
    return result


@dataclass(frozen=True)
class Classification:
    """Interior/boundary classification of a cubical set inside its frame."""

    interior_cells: frozenset[Cell]
    interior_edges: frozenset[Edge]
    interior_vertices: frozenset[Vertex]
    boundary_elements: tuple[BoundaryElement, ...]
    frame: Frame

    @cached_property
    def boundary_set(self) -> frozenset[BoundaryElement]:
        return frozenset(self.boundary_elements)

    @property
    def boundary_vertices(self) -> list[BoundaryElement]:
        return [e for e in self.boundary_elements if e.is_vertex]

    @property
    def nonempty_interior(self) -> bool:
        return bool(self.interior_cells)


@lru_cache(maxsize=512)
def classify(cubical: CubicalSet) -> Classification:
    """
    Classify every element of D as interior or boundary.

    An edge is interior iff both incident cells are occupied; a vertex is
    interior iff all four incident cells are occupied. Everything in the frame
    outside D is exterior.

    Args:
        cubical: Set to classify

    Returns:
        Classification with boundary elements in representative order
    """
    interior_edges = frozenset(e for e in cubical.edges if cubical.edge_is_interior(e))
    interior_vertices = frozenset(
        v for v in cubical.vertices if cubical.vertex_is_interior(v)
    )
    boundary = [
        BoundaryElement.edge(*e) for e in cubical.edges if e not in interior_edges
    ]
    boundary.extend(
        BoundaryElement.vertex(v) for v in cubical.vertices if v not in interior_vertices
    )
    boundary.sort()
    return Classification(
        interior_cells=cubical.cells,
        interior_edges=interior_edges,
        interior_vertices=interior_vertices,
        boundary_elements=tuple(boundary),
        frame=cubical.frame,
    )


class UnionFind:
    """Union-find over hashable keys with path compression."""

    def __init__(self, keys: Iterable[Cell] = ()):
        self.parents: dict[Cell, Cell] = {k: k for k in keys}
        self.num_components = len(self.parents)

    def add(self, key: Cell) -> None:
        if key not in self.parents:
            self.parents[key] = key
            self.num_components += 1

    def find_parent(self, key: Cell) -> Cell:
        root = key
        while root != self.parents[root]:
            root = self.parents[root]
        # compress path so every visited key points at the root
        while key != root:
            self.parents[key], key = root, self.parents[key]
        return root

    def union(self, a: Cell, b: Cell) -> None:
        p1, p2 = self.find_parent(a), self.find_parent(b)
        if p1 == p2:
            return
        if p2 < p1:
            p1, p2 = p2, p1
        self.parents[p2] = p1
        self.num_components -= 1

    def retrieve_components(self) -> list[frozenset[Cell]]:
        groups: dict[Cell, set[Cell]] = {}
        for key in self.parents:
            groups.setdefault(self.find_parent(key), set()).add(key)
        return sorted((frozenset(g) for g in groups.values()), key=min)


def region_cells(cubical: CubicalSet, region: Region) -> frozenset[Cell]:
    """Cells forming an open region: occupied cells, or unoccupied frame cells."""
    if region is Region.INTERIOR:
        return cubical.cells
    if region is Region.COMPLEMENT:
        return frozenset(c for c in cubical.frame.cells() if c not in cubical.cells)
    raise ValueError(f"no cells for region {region.value}")


def region_passable(cubical: CubicalSet, region: Region, a: Cell, b: Cell) -> bool:
    """Whether the open shared edge of two adjacent region cells lies in the region."""
    edge = shared_edge(a, b)
    if region is Region.INTERIOR:
        return cubical.edge_is_interior(edge)
    return edge not in cubical.edges


def region_components(cubical: CubicalSet, region: Region) -> list[frozenset[Cell]]:
    """
    Connected components of an open region under edge adjacency.

    The complement is taken inside the padded frame with the whole frame ring
    pre-merged into one outside component.

    Args:
        cubical: Set to analyze
        region: INTERIOR or COMPLEMENT

    Returns:
        Components as cell sets, ordered by their smallest cell
    """
    members = region_cells(cubical, region)
    uf = UnionFind(members)
    if region is Region.COMPLEMENT:
        ring = [c for c in members if cubical.frame.on_ring(c)]
        for c in ring[1:]:
            uf.union(ring[0], c)
    for cell in members:
        for other in ((cell[0] + 1, cell[1]), (cell[0], cell[1] + 1)):
            if other in members and region_passable(cubical, region, cell, other):
                uf.union(cell, other)
    return uf.retrieve_components()


def subdivide(cubical: CubicalSet) -> CubicalSet:
    """Global 2x2 refinement: every cell becomes four, every edge two."""
    cells = [
        (2 * c + dc, 2 * r + dr) for c, r in cubical.cells for dc in (0, 1) for dr in (0, 1)
    ]
    edges: list[Edge] = []
    for (x1, y1), (x2, y2) in cubical.extra_edges:
        mid = (x1 + x2, y1 + y2)
        edges.append(((2 * x1, 2 * y1), mid))
        edges.append((mid, (2 * x2, 2 * y2)))
    vertices = [(2 * x, 2 * y) for x, y in cubical.extra_vertices]
    return build_cubical_set(2 * cubical.width, 2 * cubical.height, cells, edges, vertices)
