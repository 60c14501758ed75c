"""Exhaustive agreement check between the criterion and the oracle."""

import functools
import multiprocessing as mp

from .criterion import evaluate
from .cubical import CubicalSet, build_cubical_set, cell_edges, cell_vertices
from .errors import ContractViolation
from .oracle import is_disk_oracle
from .shapefile import format_shape
from .types import CrosscheckReport, Disagreement, Edge, Verdict, Vertex
from .utils.logger import log_structured, logger


def shape_from_mask(width: int, height: int, mask: int) -> CubicalSet:
    """Bit i of the mask occupies cell (i % width, i // width)."""
    cells = [(i % width, i // width) for i in range(width * height) if mask >> i & 1]
    return build_cubical_set(width, height, cells)


def _compare(cubical: CubicalSet) -> tuple[bool, Disagreement | None]:
    verdict = evaluate(cubical).verdict
    oracle_disk = is_disk_oracle(cubical).is_disk
    if (verdict is Verdict.DISK) != oracle_disk:
        return False, Disagreement(
            shape=format_shape(cubical), criterion_verdict=verdict, oracle_is_disk=oracle_disk
        )
    return oracle_disk, None


def _check_range(
    width: int, height: int, bounds: tuple[int, int]
) -> tuple[int, int, list[Disagreement]]:
    """Pool worker: check masks in [start, stop)."""
    start, stop = bounds
    disks = 0
    found: list[Disagreement] = []
    for mask in range(start, stop):
        is_disk, disagreement = _compare(shape_from_mask(width, height, mask))
        disks += is_disk
        if disagreement is not None:
            found.append(disagreement)
    return stop - start, disks, found


def _lattice(width: int, height: int) -> tuple[list[Edge], list[Vertex]]:
    vertices = [(x, y) for y in range(height + 1) for x in range(width + 1)]
    edges = [((x, y), (x + 1, y)) for y in range(height + 1) for x in range(width)]
    edges += [((x, y), (x, y + 1)) for y in range(height) for x in range(width + 1)]
    return edges, vertices


def extras_suite() -> list[CubicalSet]:
    """
    Small shapes with one dangling edge or one stray vertex each.

    Every uncovered lattice edge and vertex of the grid is tried once per
    base shape, in a fixed order.
    """
    bases = [
        (2, 2, [(0, 0)]),
        (3, 2, [(0, 0), (1, 0)]),
        (2, 2, [(0, 0), (1, 0), (0, 1)]),
        (3, 3, [(1, 1)]),
    ]
    shapes: list[CubicalSet] = []
    for width, height, cells in bases:
        covered_edges = {e for c in cells for e in cell_edges(c)}
        covered_vertices = {v for c in cells for v in cell_vertices(c)}
        edges, vertices = _lattice(width, height)
        shapes.extend(
            build_cubical_set(width, height, cells, extra_edges=[e])
            for e in edges
            if e not in covered_edges
        )
        shapes.extend(
            build_cubical_set(width, height, cells, extra_vertices=[v])
            for v in vertices
            if v not in covered_vertices
        )
    return shapes


def enumerate_crosscheck(
    width: int,
    height: int,
    include_extras: bool = False,
    jobs: int = 1,
    chunk_size: int = 4096,
    max_cells: int = 20,
) -> CrosscheckReport:
    """
    Run criterion and oracle on every nonempty cell subset of a grid.

    Args:
        width: Grid width
        height: Grid height
        include_extras: Also run the dangling edge/vertex suite
        jobs: Worker processes; 1 runs inline
        chunk_size: Masks per worker task
        max_cells: Largest grid allowed

    Returns:
        CrosscheckReport; disagreements sorted by shape text

    Raises:
        ContractViolation: If the grid has more than max_cells cells
    """
    cells = width * height
    if width < 1 or height < 1 or cells > max_cells:
        raise ContractViolation(f"{width}x{height} grid is outside 1..{max_cells} cells")
    total = 1 << cells
    ranges = [(s, min(s + chunk_size, total)) for s in range(1, total, chunk_size)]
    worker = functools.partial(_check_range, width, height)

    if jobs > 1 and len(ranges) > 1:
        with mp.Pool(jobs) as pool:
            results = list(pool.imap_unordered(worker, ranges))
    else:
        results = [worker(r) for r in ranges]

    shapes = sum(r[0] for r in results)
    disks = sum(r[1] for r in results)
    disagreements = [d for r in results for d in r[2]]

    if include_extras:
        for cubical in extras_suite():
            shapes += 1
            is_disk, disagreement = _compare(cubical)
            disks += is_disk
            if disagreement is not None:
                disagreements.append(disagreement)

    disagreements.sort(key=lambda d: d.shape)
    log_structured(
        logger,
        "info",
        "Crosscheck finished",
        grid=f"{width}x{height}",
        shapes=shapes,
        disks=disks,
        disagreements=len(disagreements),
    )
    return CrosscheckReport(
        width=width,
        height=height,
        include_extras=include_extras,
        shapes=shapes,
        disks=disks,
        disagreements=disagreements,
    )
