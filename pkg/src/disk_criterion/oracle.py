"""Independent combinatorial disk test: Euler characteristic, vertex links, boundary walk.

Nothing here goes through the criterion's classification or union-find; the
complex is rebuilt from the raw cells and extras.
"""

from collections import deque

from .cubical import CubicalSet
from .errors import NoCycleError
from .types import BoundaryElement, Edge, OracleReport, Vertex
from .utils.logger import log_structured, logger


def _cell_edges(c: int, r: int) -> list[Edge]:
    return [
        ((c, r), (c + 1, r)),
        ((c, r + 1), (c + 1, r + 1)),
        ((c, r), (c, r + 1)),
        ((c + 1, r), (c + 1, r + 1)),
    ]


def _complex(cubical: CubicalSet) -> tuple[set[Vertex], dict[Edge, int]]:
    """Vertices and edges of the complex; each edge with its number of cells."""
    edge_cells: dict[Edge, int] = {}
    for c, r in cubical.cells:
        for e in _cell_edges(c, r):
            edge_cells[e] = edge_cells.get(e, 0) + 1
    for a, b in cubical.extra_edges:
        edge_cells.setdefault((min(a, b), max(a, b)), 0)
    vertices = {v for e in edge_cells for v in e} | set(cubical.extra_vertices)
    return vertices, edge_cells


def _connected(vertices: set[Vertex], edges: dict[Edge, int]) -> bool:
    if not vertices:
        return False
    adjacent: dict[Vertex, list[Vertex]] = {v: [] for v in vertices}
    for a, b in edges:
        adjacent[a].append(b)
        adjacent[b].append(a)
    start = min(vertices)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adjacent[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(vertices)


def _link_is_arc_or_cycle(cubical: CubicalSet, v: Vertex) -> bool:
    """Occupied cells around v form one contiguous run, or all four."""
    x, y = v
    ring = [(x, y), (x - 1, y), (x - 1, y - 1), (x, y - 1)]
    occupied = [c in cubical.cells for c in ring]
    if all(occupied):
        return True
    starts = sum(1 for i in range(4) if occupied[i] and not occupied[i - 1])
    return starts == 1


def _is_manifold(cubical: CubicalSet, vertices: set[Vertex], edges: dict[Edge, int]) -> bool:
    if any(count == 0 for count in edges.values()):
        return False
    return all(_link_is_arc_or_cycle(cubical, v) for v in vertices)


def boundary_cycle(cubical: CubicalSet) -> list[BoundaryElement]:
    """
    Walk the boundary edges into one alternating vertex/edge cycle.

    Starts at the smallest boundary vertex and leaves along its smaller edge.

    Raises:
        NoCycleError: If the boundary branches, is empty, or has several cycles
    """
    _, edges = _complex(cubical)
    boundary = [e for e, count in edges.items() if count == 1]
    if not boundary:
        raise NoCycleError("boundary is empty")
    at: dict[Vertex, list[Edge]] = {}
    for e in boundary:
        for v in e:
            at.setdefault(v, []).append(e)
    for v, incident in at.items():
        if len(incident) != 2:
            raise NoCycleError(f"boundary branches at ({v[0]},{v[1]})")

    start = min(at)
    cycle: list[BoundaryElement] = []
    used: set[Edge] = set()
    v = start
    edge = min(at[start])
    while edge not in used:
        used.add(edge)
        cycle.append(BoundaryElement.vertex(v))
        cycle.append(BoundaryElement.edge(*edge))
        v = edge[1] if edge[0] == v else edge[0]
        edge = next(e for e in at[v] if e != edge)
    if len(used) != len(boundary):
        raise NoCycleError(
            f"boundary splits into several cycles ({len(used)} of {len(boundary)} edges walked)"
        )
    return cycle


def is_disk_oracle(cubical: CubicalSet) -> OracleReport:
    """
    Decide whether the set is a closed disk without using the criterion.

    A disk is connected, a manifold with nonempty boundary, and has Euler
    characteristic 1.
    """
    vertices, edges = _complex(cubical)
    n_v, n_e, n_f = len(vertices), len(edges), len(cubical.cells)
    connected = _connected(vertices, edges)
    manifold = _is_manifold(cubical, vertices, edges)
    cycle = None
    if manifold and cubical.cells:
        try:
            cycle = boundary_cycle(cubical)
        except NoCycleError as e:
            logger.debug(f"No boundary cycle: {e}")
    chi = n_v - n_e + n_f
    report = OracleReport(
        connected=connected,
        vertices=n_v,
        edges=n_e,
        faces=n_f,
        euler_characteristic=chi,
        manifold_with_boundary=manifold,
        boundary_cycle=cycle,
        is_disk=connected and manifold and chi == 1 and bool(cycle),
    )
    log_structured(
        logger, "debug", "Oracle decided", chi=chi, manifold=manifold, disk=report.is_disk
    )
    return report
