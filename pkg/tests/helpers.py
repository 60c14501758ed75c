"""Named shapes, random shape generators and cycle comparison helpers shared by tests."""

import random

from disk_criterion.criterion import evaluate
from disk_criterion.cubical import CubicalSet, build_cubical_set
from disk_criterion.types import BoundaryElement, Cell, Verdict

SHAPES = {
    "lone_square": "1 1\n#\n",
    "domino": "2 1\n##\n",
    "row3": "3 1\n###\n",
    "block3": "3 3\n###\n###\n###\n",
    "l_tromino": "2 2\n##\n#.\n",
    "annulus": "3 3\n###\n#.#\n###\n",
    "diagonal_pair": "2 2\n#.\n.#\n",
    "square_dangling": "3 1\n#..\nE 1 0 2 0\n",
}


def arc_matches_cycle(
    ordered: list[BoundaryElement], cycle: list[BoundaryElement]
) -> bool:
    """Whether an arc order is the cycle restricted to the arc, walked either way from its start."""
    members = set(ordered)
    start = cycle.index(ordered[0])
    rotated = cycle[start:] + cycle[:start]
    restricted = [e for e in rotated if e in members]
    return ordered in (restricted, [restricted[0], *restricted[1:][::-1]])


def same_cycle(seq: list[BoundaryElement], cycle: list[BoundaryElement]) -> bool:
    """Whether two cyclic sequences agree up to rotation and reflection."""
    if len(seq) != len(cycle) or set(seq) != set(cycle):
        return False
    start = cycle.index(seq[0])
    rotated = cycle[start:] + cycle[:start]
    reflected = [rotated[0], *rotated[1:][::-1]]
    return seq in (rotated, reflected)


def grow_cells(rng: random.Random, width: int, height: int, count: int) -> set[Cell]:
    """An edge-connected cell set grown from one cell by random neighbour additions."""
    count = min(count, width * height)
    cells = {(rng.randrange(width), rng.randrange(height))}
    while len(cells) < count:
        c, r = rng.choice(sorted(cells))
        dc, dr = rng.choice(((1, 0), (-1, 0), (0, 1), (0, -1)))
        if 0 <= c + dc < width and 0 <= r + dr < height:
            cells.add((c + dc, r + dr))
    return cells


def random_disks(
    seed: int, count: int, max_side: int, max_cells: int | None = None
) -> list[CubicalSet]:
    """Seeded disk-verdict shapes on grids up to max_side x max_side."""
    rng = random.Random(seed)
    found: list[CubicalSet] = []
    while len(found) < count:
        width, height = rng.randint(1, max_side), rng.randint(1, max_side)
        limit = width * height if max_cells is None else min(width * height, max_cells)
        cubical = build_cubical_set(
            width, height, grow_cells(rng, width, height, rng.randint(1, limit))
        )
        if evaluate(cubical).verdict is Verdict.DISK:
            found.append(cubical)
    return found
